# src/invariant/derivation.py
import logging
from dataclasses import dataclass
from typing import List, Sequence

from src.errors import InvalidSpecError, ZeroPolynomialError
from src.ring import RingSpec
from .unipoly import UniPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnivariateDerivation:
    """Derivation of F[x1] fixed by δ(x1) = image: δ(f) = f'·image."""
    image: UniPoly
    index: int = 0  # ring derivation it was restricted from, 0 when standalone

    def __call__(self, f: UniPoly) -> UniPoly:
        return f.derivative() * self.image

    def __str__(self) -> str:
        label = f"δ{self.index}" if self.index else "δ"
        return f"{label}(x1) = {self.image}"


def restrict_derivations(spec: RingSpec) -> List[UnivariateDerivation]:
    """δ2,...,δn restricted to S0 = F[x1]."""
    derivations = []
    for i in range(2, spec.n + 1):
        entry = spec.delta(i, 1)
        if entry.max_var() > 1:
            raise InvalidSpecError(f"δ{i}(x1) = {entry} does not lie in F[x1]")
        derivations.append(UnivariateDerivation(UniPoly.from_poly(entry), i))
    return derivations


def invariant_check(f: UniPoly, derivations: Sequence[UnivariateDerivation]) -> bool:
    """(f) is Δ-invariant iff f divides δ(f) for every δ in Δ."""
    if f.is_zero():
        raise ZeroPolynomialError("invariant_check of the zero polynomial")
    return all((delta(f) % f).is_zero() for delta in derivations)
