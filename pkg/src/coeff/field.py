# src/coeff/field.py
"""
Exact scalars over the rationals and over prime fields.

Rationals are kept as ``fractions.Fraction`` (always reduced, positive denominator),
residues as Python ints in ``[0, p)``. Both are arbitrary precision.
"""
import re
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from sympy import isprime

from config import settings
from src.errors import FieldMismatchError, ScalarSyntaxError, ZeroDivisionFieldError, InvalidSpecError

logger = logging.getLogger(__name__)

# number := '-'? digits ('/' digits)?
NUMBER_PATTERN = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


class FieldKind(Enum):
    RATIONALS = "Q"
    PRIME_FIELD = "Fp"


class ArithOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def is_prime(n: int) -> bool:
    return bool(isprime(n))


@dataclass(frozen=True)
class FieldSpec:
    """The base field: ℚ or 𝔽_p."""
    kind: FieldKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind is FieldKind.RATIONALS:
            if self.p is not None:
                raise InvalidSpecError("the rational field takes no modulus")
            return
        if self.p is None or not isinstance(self.p, int):
            raise InvalidSpecError("a prime field needs an integer modulus p")
        if not 2 <= self.p < settings.MAX_PRIME:
            raise InvalidSpecError(f"modulus {self.p} outside [2, 2^31)")
        if not is_prime(self.p):
            raise InvalidSpecError(f"modulus {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME_FIELD, p)

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.p

    def normalize(self, value: Union[int, Fraction]) -> Union[int, Fraction]:
        """Canonical raw value for this field."""
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionFieldError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def __call__(self, value: Union[int, Fraction, "Scalar"]) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar over {value.field} used over {self}")
            return value
        return Scalar(self, self.normalize(value))

    def zero(self) -> "Scalar":
        return self(0)

    def one(self) -> "Scalar":
        return self(1)

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"F{self.p}"


@dataclass(frozen=True)
class Scalar:
    """A field element in canonical form. Build it through ``FieldSpec.__call__``."""
    field: FieldSpec
    value: Union[int, Fraction]

    def _check(self, other: "Scalar") -> None:
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatchError(f"cannot combine scalars over {self.field} and {other.field}")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field.normalize(self.value + other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field.normalize(self.value - other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field.normalize(self.value * other.value))

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, self.field.normalize(-self.value))

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionFieldError("division by zero")
        if self.field.is_rational:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        if self.field.is_rational:
            return Scalar(self.field, self.value ** k)
        return Scalar(self.field, pow(self.value, k, self.field.p))

    def sort_key(self):
        return self.value

    def __str__(self) -> str:
        if self.field.is_rational:
            v = self.value
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field})"


def field_arith(a: Scalar, b: Scalar, op: Union[ArithOp, str]) -> Scalar:
    """Exact field operation ``a op b`` in canonical form."""
    op = ArithOp(op)
    a._check(b)
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    if op is ArithOp.MUL:
        return a * b
    return a / b


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse ``'-'? digits ('/' digits)?``; fractions are legal over ℚ only."""
    match = NUMBER_PATTERN.match(text.strip())
    if not match:
        raise ScalarSyntaxError(f"malformed number literal: {text!r}")
    sign, num, den = match.groups()
    numerator = -int(num) if sign else int(num)
    if den is None:
        return field(numerator)
    if not field.is_rational:
        raise ScalarSyntaxError(f"fraction literal {text!r} is not allowed over {field}")
    if int(den) == 0:
        raise ScalarSyntaxError(f"zero denominator in {text!r}")
    return field(Fraction(numerator, int(den)))
