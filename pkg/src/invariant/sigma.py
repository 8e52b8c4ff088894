# src/invariant/sigma.py
"""
Maximal Δ-invariant ideals over a principal invariant ideal (f) of F[x1], and the
factorization (f) = M1^e1 ... Mk^ek into them.

Ideals containing (f) are (h) for monic divisors h of f; (h) ⊇ (h') iff h | h'.
Maximal proper invariant ideals are therefore the minimal nonconstant invariant divisors.
"""
import logging
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import List, Optional, Sequence, Tuple

from config import settings
from src.errors import DivisorLimitError, FactorizationError
from .derivation import UnivariateDerivation, invariant_check
from .factor import Factorization, irreducible_factors
from .unipoly import UniPoly, product

logger = logging.getLogger(__name__)


@dataclass
class InvariantFactorReport:
    """f = Π f_M^e_M over Σ_m; ``complete`` means the factorization was certain and the product check passed."""
    input: UniPoly
    sigma_m: List[UniPoly]
    exponents: List[int]
    complete: bool
    irreducible: Factorization = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def pairs(self) -> List[Tuple[UniPoly, int]]:
        return list(zip(self.sigma_m, self.exponents))


def _divisors(factors: Factorization) -> List[UniPoly]:
    if len(factors) > settings.MAX_DIVISOR_FACTORS:
        raise DivisorLimitError(
            f"{len(factors)} distinct irreducible factors exceed the divisor enumeration cap "
            f"of {settings.MAX_DIVISOR_FACTORS}"
        )
    found = []
    for exps in cartesian(*(range(e + 1) for _, e in factors)):
        if any(exps):
            found.append(product([(q, a) for (q, _), a in zip(factors, exps)], factors[0][0].field))
    return sorted(found, key=lambda h: h.sort_key())


def _check_input(f: UniPoly, derivations: Sequence[UnivariateDerivation]) -> None:
    if not f.is_monic() or f.degree < 1:
        raise FactorizationError(f"expected a monic polynomial of degree >= 1, got {f}")
    if not invariant_check(f, derivations):
        raise FactorizationError(f"({f}) is not invariant under the given derivations")


def _maximal(f: UniPoly, derivations, factors: Factorization) -> List[UniPoly]:
    invariant = [h for h in _divisors(factors) if invariant_check(h, derivations)]
    minimal = [h for h in invariant
               if not any(g != h and g.divides(h) for g in invariant)]
    return sorted(minimal, key=lambda h: h.sort_key())


def maximal_invariant(f: UniPoly, derivations: Sequence[UnivariateDerivation]) -> List[UniPoly]:
    """Σ_m: monic generators of the maximal Δ-invariant ideals containing (f), ascending."""
    _check_input(f, derivations)
    factors, _ = irreducible_factors(f)
    return _maximal(f, derivations, factors)


def _peel(f: UniPoly, sigma_m: List[UniPoly], derivations) -> Optional[List[int]]:
    exponents = [0] * len(sigma_m)
    rest = f
    while rest.degree > 0:
        for index, h in enumerate(sigma_m):
            if not h.divides(rest):
                continue
            quotient = rest // h
            if quotient.degree == 0 or invariant_check(quotient, derivations):
                exponents[index] += 1
                rest = quotient
                break
        else:
            return None
    return exponents


def invariant_factorization(f: UniPoly, derivations: Sequence[UnivariateDerivation]) -> InvariantFactorReport:
    """Σ_m of (f) with exponents, peeling the smallest admissible f_M first."""
    _check_input(f, derivations)
    factors, certain = irreducible_factors(f)
    notes = []
    if not certain:
        notes.append("over ℚ a cofactor of degree >= 4 without rational roots was kept unsplit; "
                     "Σ_m may miss finer invariant divisors")
    sigma_m = _maximal(f, derivations, factors)
    exponents = _peel(f, sigma_m, derivations)
    if exponents is None:
        logger.error("peeling (%s) over Σ_m = %s got stuck", f, [str(h) for h in sigma_m])
        notes.append("peeling got stuck: no f_M divides the cofactor with an invariant quotient")
        return InvariantFactorReport(f, sigma_m, [0] * len(sigma_m), False, factors, notes)
    reconstructed = product(list(zip(sigma_m, exponents)), f.field)
    verified = reconstructed == f
    if not verified:
        logger.error("product check failed for (%s): got %s", f, reconstructed)
        notes.append(f"product check failed: Π f_M^e_M = {reconstructed}")
    return InvariantFactorReport(f, sigma_m, exponents, certain and verified, factors, notes)
