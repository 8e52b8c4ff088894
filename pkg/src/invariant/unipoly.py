# src/invariant/unipoly.py
"""
Dense univariate polynomials over ℚ or 𝔽_p, the commutative subring S0 = F[x1].

Coefficients are stored lowest degree first, ``coeffs[k]`` multiplying x^k, without
trailing zeros; the zero polynomial has no coefficients and degree -1.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from src.coeff import FieldSpec, Scalar
from src.errors import FieldMismatchError, InvalidSpecError, ZeroDivisionFieldError
from src.ring import Poly, RingSpec, format_poly


@lru_cache(maxsize=64)
def _line(field: FieldSpec, name: str) -> RingSpec:
    return RingSpec(field, (name,))


@dataclass(frozen=True)
class UniPoly:
    field: FieldSpec
    coeffs: Tuple[Scalar, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # --- constructors ---

    @classmethod
    def of(cls, field: FieldSpec, values: Sequence[Union[int, Fraction, Scalar]]) -> "UniPoly":
        """From coefficients, lowest degree first."""
        return cls(field, tuple(field(v) for v in values))

    @classmethod
    def x(cls, field: FieldSpec) -> "UniPoly":
        return cls.of(field, [0, 1])

    @classmethod
    def const(cls, field: FieldSpec, c) -> "UniPoly":
        return cls.of(field, [c])

    @classmethod
    def from_poly(cls, f: Poly) -> "UniPoly":
        """Element of F[x1] inside a ring; any other variable is an error."""
        if f.max_var() > 1:
            raise InvalidSpecError(f"{f} is not a polynomial in the first variable only")
        top = max((m[0] for m in f.terms), default=-1)
        values = [f.ring.field.zero()] * (top + 1)
        for m, c in f.terms.items():
            values[m[0]] = c
        return cls(f.ring.field, tuple(values))

    def to_poly(self, ring: RingSpec) -> Poly:
        n = ring.n
        return Poly(ring, {(k,) + (0,) * (n - 1): c for k, c in enumerate(self.coeffs)})

    # --- structure ---

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(self.lc.inverse())

    def sort_key(self):
        """Ascending order: degree first, then coefficients from the top down."""
        return (self.degree, tuple(c.sort_key() for c in reversed(self.coeffs)))

    def __call__(self, value) -> Scalar:
        value = self.field(value)
        result = self.field.zero()
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    # --- arithmetic ---

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return UniPoly.const(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero()
        a = self.coeffs + (zero,) * (size - len(self.coeffs))
        b = other.coeffs + (zero,) * (size - len(other.coeffs))
        return UniPoly(self.field, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def scale(self, c) -> "UniPoly":
        c = self.field(c)
        return UniPoly(self.field, tuple(v * c for v in self.coeffs))

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return UniPoly(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        result = UniPoly.const(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionFieldError("polynomial division by zero")
        rest = list(self.coeffs)
        dq = other.degree
        inv = other.lc.inverse()
        quotient = [self.field.zero()] * max(len(rest) - dq, 0)
        for k in range(len(rest) - 1, dq - 1, -1):
            c = rest[k]
            if c.is_zero():
                continue
            q = c * inv
            quotient[k - dq] = q
            for j, b in enumerate(other.coeffs):
                rest[k - dq + j] = rest[k - dq + j] - q * b
        return UniPoly(self.field, tuple(quotient)), UniPoly(self.field, tuple(rest[:dq]))

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def divides(self, other: "UniPoly") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "UniPoly":
        return UniPoly(self.field, tuple(c * k for k, c in enumerate(self.coeffs))[1:])

    def __str__(self) -> str:
        return self.format()

    def format(self, name: str = "x1") -> str:
        return format_poly(self.to_poly(_line(self.field, name)))


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (0 when both are 0)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def product(factors: Sequence[Tuple[UniPoly, int]], field: FieldSpec) -> UniPoly:
    result = UniPoly.const(field, 1)
    for f, e in factors:
        result = result * f ** e
    return result
