# src/ideal/powint.py
"""
Truncated power intersections.

For a fixed degree bound d the truncations I^k ∩ S_{<=d} are computed exactly and are
nested, so the intersection over k <= kmax is the last one. The last truncation always
contains I(1) ∩ S_{<=d}; a zero truncation is an observation, a certificate is a proof.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Union

from src.errors import ParameterError
from src.gb import EchelonBasis, truncated_basis
from .certificate import CertFailure, ZeroCertificate, cert_zero_principal
from .handle import IdealHandle, equals, product

logger = logging.getLogger(__name__)


class PowIntStatus(Enum):
    CERTIFIED_ZERO = "CERTIFIED_ZERO"
    OBSERVED_ZERO = "OBSERVED_ZERO"
    CANDIDATE_NONZERO = "CANDIDATE_NONZERO"
    INCONCLUSIVE = "INCONCLUSIVE"

    @property
    def is_zero(self) -> bool:
        return self in (PowIntStatus.CERTIFIED_ZERO, PowIntStatus.OBSERVED_ZERO)


@dataclass
class PowerRecord:
    k: int
    dim: int
    basis: EchelonBasis


@dataclass
class PowIntReport:
    degree: int
    kmax: int
    records: List[PowerRecord]
    status: PowIntStatus
    stable_index: Optional[int] = None
    candidate: Optional[EchelonBasis] = None
    ideal_stable_at: Optional[int] = None  # I^k = I^(k-1) as ideals from this k on

    @property
    def dims(self) -> List[int]:
        return [r.dim for r in self.records]

    @property
    def final(self) -> EchelonBasis:
        return self.records[-1].basis


def _classify(records: List[PowerRecord]):
    dims = [r.dim for r in records]
    if dims[-1] == 0:
        return PowIntStatus.OBSERVED_ZERO, dims.index(0) + 1
    if len(dims) >= 2 and dims[-1] == dims[-2]:
        k_star = len(dims)
        while k_star > 1 and dims[k_star - 2] == dims[-1]:
            k_star -= 1
        return PowIntStatus.CANDIDATE_NONZERO, k_star
    return PowIntStatus.INCONCLUSIVE, None


def powint(I: IdealHandle, d: int, kmax: int) -> PowIntReport:
    """Truncations I^k ∩ S_{<=d} for k = 1..kmax.

    Stops early once a truncation is 0 (all later ones are 0 too). When two consecutive
    powers coincide as ideals the remaining truncations are copied.
    """
    if d < 1:
        raise ParameterError(f"degree bound must be >= 1, got {d}")
    if kmax < 2:
        raise ParameterError(f"kmax must be >= 2, got {kmax}")

    records: List[PowerRecord] = []
    current = I
    ideal_stable_at = None
    for k in range(1, kmax + 1):
        if ideal_stable_at is None and k > 1:
            previous = current
            current = product(current, I)
            if current.gb.elements == previous.gb.elements:
                ideal_stable_at = k
        if ideal_stable_at is not None and records:
            basis = records[-1].basis
        else:
            basis = truncated_basis(current.gb, d)
        records.append(PowerRecord(k, basis.dim, basis))
        logger.debug("powint: k=%d |GB|=%d dim=%d", k, len(current.gb), basis.dim)
        if basis.dim == 0:
            break

    status, stable_index = _classify(records)
    candidate = records[-1].basis if status is PowIntStatus.CANDIDATE_NONZERO else None
    logger.info("powint(d=%d, kmax=%d): dims=%s -> %s", d, kmax, [r.dim for r in records], status.value)
    return PowIntReport(d, kmax, records, status, stable_index, candidate, ideal_stable_at)


@dataclass
class IterationRound:
    index: int
    seed: IdealHandle
    exact: bool
    status: PowIntStatus
    report: Optional[PowIntReport] = None
    certificate: Optional[ZeroCertificate] = None
    cert_failure: Optional[CertFailure] = None
    notes: List[str] = field(default_factory=list)


def iterate_powint(I: IdealHandle, d: int, kmax: int, mmax: int) -> List[IterationRound]:
    """Approximate I(1), I(2), ... : each round tries a principal certificate, then powint.

    Round 1 is exact. Later rounds are seeded by lifting the previous candidate (the
    two-sided ideal of its echelon rows), which may miss generators above degree d, so
    they are flagged heuristic.
    """
    if mmax < 1:
        raise ParameterError(f"mmax must be >= 1, got {mmax}")
    rounds: List[IterationRound] = []
    seed, exact = I, True
    for m in range(1, mmax + 1):
        certificate = cert_zero_principal(seed)
        if isinstance(certificate, ZeroCertificate):
            rounds.append(IterationRound(m, seed, exact, PowIntStatus.CERTIFIED_ZERO, certificate=certificate))
            break

        report = powint(seed, d, kmax)
        current = IterationRound(m, seed, exact, report.status, report=report, cert_failure=certificate)
        rounds.append(current)

        if not seed.is_proper():
            logger.warning("⚠️ round %d: the ideal is the unit ideal (is_proper = false); stopping", m)
            current.notes.append("is_proper = false: unit ideal, no vanishing expected")
            break
        if report.status is not PowIntStatus.CANDIDATE_NONZERO:
            break

        lifted = IdealHandle(seed.ring, report.candidate.rows)
        if equals(lifted, seed):
            current.notes.append("candidate equals the seed ideal; iteration reached a fixed point")
            break
        current.notes.append(f"candidate lifted to {len(lifted.gb)} two-sided generator(s)")
        seed, exact = lifted, False
    return rounds


def vanishing_index(rounds: List[IterationRound]) -> Optional[int]:
    """Index m of the first round whose status is zero (certified or observed)."""
    return next((r.index for r in rounds if r.status.is_zero), None)


def iteration_status(rounds: List[IterationRound]) -> PowIntStatus:
    """Overall outcome of an iteration: the status of the first zero round, else INCONCLUSIVE.

    A run that stopped on the unit ideal, on a fixed point or without reaching zero
    within mmax rounds is INCONCLUSIVE.
    """
    zero = next((r for r in rounds if r.status.is_zero), None)
    return zero.status if zero is not None else PowIntStatus.INCONCLUSIVE
