# src/ring/poly.py
"""
Normal-form elements of S = F[x1,δ1,...,xn,δn].

A Poly is a finite map PBW monomial -> nonzero Scalar, bound to its RingSpec.
Products are delegated to the ring (``RingSpec.multiply``); sums and scalar
multiples are computed here.
"""
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from src.coeff import Scalar
from src.errors import RingMismatchError, ZeroPolynomialError
from .monomial import Monomial, deglex_key, mono_degree, mono_max_var

ScalarLike = Union[Scalar, int, Fraction]


class Poly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.ring = ring
        self.terms: Dict[Monomial, Scalar] = {m: c for m, c in (terms or {}).items() if not c.is_zero()}
        self._hash = None

    # --- structure ---

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> List[Tuple[Monomial, Scalar]]:
        """Terms in descending deglex order."""
        return sorted(self.terms.items(), key=lambda item: deglex_key(item[0]), reverse=True)

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        return max(self.terms, key=deglex_key)

    @property
    def lc(self) -> Scalar:
        return self.terms[self.lm]

    def total_degree(self):
        if not self.terms:
            return float("-inf")
        return max(mono_degree(m) for m in self.terms)

    def max_var(self) -> int:
        """1-based index of the largest variable in the support, 0 for scalars."""
        return max((mono_max_var(m) + 1 for m in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def is_one(self) -> bool:
        one = self.ring.one_monomial
        return len(self.terms) == 1 and one in self.terms and self.terms[one].is_one()

    def constant_coeff(self) -> Scalar:
        return self.terms.get(self.ring.one_monomial, self.ring.field.zero())

    def monic(self) -> "Poly":
        return self.scale(self.lc.inverse())

    # --- arithmetic ---

    def _same_ring(self, other: "Poly") -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError("polynomials belong to different rings")

    def _lift(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            self._same_ring(other)
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c: ScalarLike) -> "Poly":
        c = self.ring.field(c)
        if c.is_zero():
            return Poly(self.ring)
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            return self.ring.multiply(self, other)
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # --- comparison ---

    def __eq__(self, other) -> bool:
        if isinstance(other, (Scalar, int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.ring is other.ring or self.ring == other.ring) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Text form in descending deglex, e.g. ``x1*x2^2 + 2*x1*x2 + x1``.

    A leading ``-x^k`` with k >= 2 is written ``-1*x^k`` so it re-parses to the same element
    (unary minus binds to the base, below ``^``).
    """
    if f.is_zero():
        return "0"
    names = f.ring.names
    pieces = []
    for index, (m, c) in enumerate(f.sorted_terms()):
        negative = f.ring.field.is_rational and c.value < 0
        magnitude = -c if negative else c
        mono = format_monomial(m, names)
        if not mono:
            body = str(magnitude)
        elif magnitude.is_one():
            body = mono
            first_exp = next(e for e in m if e)
            if index == 0 and negative and first_exp >= 2:
                body = "1*" + mono
        else:
            body = f"{magnitude}*{mono}"
        if index == 0:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)
