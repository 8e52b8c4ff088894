# src/cli/verify.py
"""
Verification harness for the vanishing bound: hypothesis checks, iterated power
intersections, the S0 case split and a verdict that is only ever CONSISTENT or INCONCLUSIVE.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from src.errors import FactorizationError, ParameterError, UnfilteredRingError
from src.gb import quotient_dim
from src.ideal import IdealHandle, IterationRound, iterate_powint, iteration_status, slice_s0, vanishing_index
from src.invariant import UniPoly, invariant_factorization, restrict_derivations
from src.lie import (
    LieAlgebraSpec,
    derived_is_nilpotent,
    is_completely_solvable,
    is_nilpotent,
    is_solvable,
)
from src.ring import Poly, RingSpec
from .documents import ReportDocument, RoundDocument, field_to_doc

logger = logging.getLogger(__name__)

CONSISTENT = "CONSISTENT"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class VerifyReport:
    ring: Dict[str, Any]
    params: Dict[str, Any]
    hypotheses: Dict[str, Any]
    ideal: Dict[str, Any]
    rounds: List[IterationRound]
    m_obs: Optional[int]
    bound: Optional[int]
    verdict: str
    case_split: Optional[Dict[str, Any]] = None
    notes: List[str] = field(default_factory=list)

    def to_document(self, command: str = "verify") -> ReportDocument:
        return ReportDocument(
            command=command,
            params={**self.params, "ring": self.ring},
            hypotheses=self.hypotheses,
            ideal=self.ideal,
            rounds=[round_document(r) for r in self.rounds],
            status=iteration_status(self.rounds).value,
            case_split=self.case_split,
            m_obs=self.m_obs,
            bound=self.bound,
            verdict=self.verdict,
            notes=self.notes,
        )


def round_document(r: IterationRound) -> RoundDocument:
    report = r.report
    return RoundDocument(
        index=r.index,
        exact=r.exact,
        status=r.status.value,
        seed=[str(g) for g in r.seed.gb.elements],
        k_dims=report.dims if report else [],
        stable_index=report.stable_index if report else None,
        candidate=[str(row) for row in report.candidate.rows] if report and report.candidate else None,
        certificate=r.certificate.justification if r.certificate else None,
        cert_failure=r.cert_failure.value if r.cert_failure else None,
        notes=list(r.notes),
    )


def ring_summary(spec: RingSpec) -> Dict[str, Any]:
    return {
        "field": field_to_doc(spec.field),
        "vars": list(spec.names),
        "delta": {f"{i},{j}": str(p) for (i, j), p in sorted(spec.table_entries().items())},
    }


def _hypotheses(spec: RingSpec, lie: Optional[LieAlgebraSpec]) -> Dict[str, Any]:
    checks: Dict[str, Any] = {
        "table_valid": spec.validation().ok,
        "filtered": spec.filtered,
        "t2_shape": spec.t2_shape,
        "field": field_to_doc(spec.field),
    }
    if lie is not None:
        checks.update({
            "solvable": is_solvable(lie),
            "completely_solvable": is_completely_solvable(lie),
            "nilpotent": is_nilpotent(lie),
            "derived_nilpotent": derived_is_nilpotent(lie),
        })
    return checks


def _case_split(I: IdealHandle, d: int) -> Dict[str, Any]:
    """J = I ∩ F[x1]: either J ∩ S_{<=d} = 0, or the factorization of its monic generator."""
    spec = I.ring
    generator = slice_s0(I, d)
    if generator is None:
        return {"J": "0", "note": f"no nonzero element of I ∩ F[x1] up to degree {d}"}
    split: Dict[str, Any] = {"J": f"({generator})"}
    if spec.n < 2:
        return split
    f = UniPoly.from_poly(generator)
    derivations = restrict_derivations(spec)
    split["derivations"] = [str(delta) for delta in derivations]
    try:
        factorization = invariant_factorization(f, derivations)
    except FactorizationError as e:
        split["note"] = f"invariant factorization unavailable: {e.message}"
        return split
    split["sigma_m"] = [h.format(spec.names[0]) for h in factorization.sigma_m]
    split["exponents"] = list(factorization.exponents)
    split["complete"] = factorization.complete
    if factorization.notes:
        split["notes"] = list(factorization.notes)
    return split


def verify_theorem(spec: RingSpec, gens: Sequence[Poly], d: int, kmax: int, mmax: int,
                   lie: Optional[LieAlgebraSpec] = None) -> VerifyReport:
    """Check hypotheses, iterate power intersections and compare m_obs with the bound."""
    if not gens:
        raise ParameterError("verify needs a nonempty generator list")
    spec.require_valid()
    if not spec.filtered:
        raise UnfilteredRingError("verify needs a filtered ring: some δ_i(x_j) has degree > 1")

    hypotheses = _hypotheses(spec, lie)
    params = {"deg": d, "maxpow": kmax, "iters": mmax}
    I = IdealHandle(spec, gens)
    notes: List[str] = []

    proper = I.is_proper()
    qdim = quotient_dim(I.gb)
    ideal = {
        "basis": [str(g) for g in I.gb.elements],
        "proper": proper,
        "quotient_dim": "infinite" if qdim == math.inf else qdim,
    }

    rounds = iterate_powint(I, d, kmax, mmax)
    m_obs = vanishing_index(rounds)

    bound = spec.n
    if lie is not None and hypotheses["derived_nilpotent"] and qdim != math.inf:
        bound = min(spec.n, 2)
        notes.append("bound 2 applies: finite codimension and [L,L] nilpotent")

    if not proper:
        logger.warning("⚠️ verify: unit ideal, verdict INCONCLUSIVE")
        notes.append("the ideal is not proper (unit ideal); the vanishing statement does not apply")
        return VerifyReport(ring_summary(spec), params, hypotheses, ideal, rounds, m_obs, bound,
                            INCONCLUSIVE, None, notes)

    final_zero = bool(rounds) and rounds[-1].status.is_zero
    if m_obs is not None and m_obs <= bound and final_zero:
        verdict = CONSISTENT
    else:
        verdict = INCONCLUSIVE
        if m_obs is None:
            notes.append(f"no zero round within {mmax} round(s) at d={d}, kmax={kmax}; "
                         "raise --deg, --maxpow or --iters")
        elif m_obs > bound:
            notes.append(f"observed index {m_obs} exceeds the bound {bound} only on truncated data; "
                         "heuristic rounds may need more generators")

    case_split = _case_split(I, d)
    logger.info("verify: m_obs=%s bound=%s -> %s", m_obs, bound, verdict)
    return VerifyReport(ring_summary(spec), params, hypotheses, ideal, rounds, m_obs, bound,
                        verdict, case_split, notes)
