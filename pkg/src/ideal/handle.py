# src/ideal/handle.py
"""Two-sided ideals of a filtered ring and their basic algebra."""
import logging
from typing import Iterable, List, Optional

from src.errors import ParameterError, RingMismatchError
from src.gb import GBasis, member, twosided_gb
from src.ring import Poly, RingSpec, mul

logger = logging.getLogger(__name__)


class IdealHandle:
    """Generators plus a lazily computed reduced two-sided Groebner basis (write-once)."""

    def __init__(self, ring: RingSpec, generators: Iterable[Poly]):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring is not ring and g.ring != ring:
                raise RingMismatchError("ideal generators belong to different rings")
            if not g.is_zero():
                gens.append(g)
        self.generators: List[Poly] = gens
        self._gb: Optional[GBasis] = None

    @classmethod
    def from_basis(cls, G: GBasis) -> "IdealHandle":
        handle = cls(G.ring, G.elements)
        handle._gb = G
        return handle

    @property
    def gb(self) -> GBasis:
        if self._gb is None:
            self._gb = twosided_gb(self.generators, self.ring)
        return self._gb

    def is_zero(self) -> bool:
        return not self.generators

    def is_proper(self) -> bool:
        return not self.gb.is_unit()

    def __contains__(self, f: Poly) -> bool:
        return member(f, self.gb)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self) -> str:
        return f"IdealHandle{self}"


def _same_ring(I: IdealHandle, J: IdealHandle) -> None:
    if I.ring is not J.ring and I.ring != J.ring:
        raise RingMismatchError("ideals belong to different rings")


def product(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I·J, left-generated by g·h for g in the two-sided basis of I and h a generator of J."""
    _same_ring(I, J)
    gens = [mul(g, h) for g in I.gb.elements for h in J.generators]
    return IdealHandle(I.ring, gens)


def power(I: IdealHandle, k: int) -> IdealHandle:
    if k < 1:
        raise ParameterError(f"ideal power needs k >= 1, got {k}")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def ideal_sum(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    _same_ring(I, J)
    return IdealHandle(I.ring, I.generators + J.generators)


def equals(I: IdealHandle, J: IdealHandle) -> bool:
    """Mutual membership of generators in each other's basis."""
    _same_ring(I, J)
    return all(member(g, J.gb) for g in I.generators) and all(member(h, I.gb) for h in J.generators)


def is_proper(I: IdealHandle) -> bool:
    return I.is_proper()
