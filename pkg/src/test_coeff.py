"""Tests for exact scalars over Q and F_p."""
import random
from fractions import Fraction

import pytest

from src.coeff import ArithOp, FieldSpec, field_arith, is_prime, parse_scalar
from src.errors import (
    FieldMismatchError,
    InvalidSpecError,
    ScalarSyntaxError,
    ZeroDivisionFieldError,
)

Q = FieldSpec.rationals()
F7 = FieldSpec.prime(7)


def test_rational_arithmetic_is_exact():
    a, b = Q(Fraction(1, 3)), Q(Fraction(1, 6))
    assert field_arith(a, b, ArithOp.ADD) == Q(Fraction(1, 2))
    assert field_arith(a, b, "sub") == Q(Fraction(1, 6))
    assert field_arith(a, b, "mul") == Q(Fraction(1, 18))
    assert field_arith(a, b, "div") == Q(2)


def test_prime_field_inverse():
    assert field_arith(F7(3), F7(5), "div") == F7(2)
    assert F7(3).inverse() == F7(5)
    assert F7(-1) == F7(6)
    assert F7(3) ** 6 == F7.one()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionFieldError):
        field_arith(F7(1), F7(0), "div")
    with pytest.raises(ZeroDivisionFieldError):
        Q(0).inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        field_arith(F7(1), FieldSpec.prime(5)(1), "add")
    with pytest.raises(FieldMismatchError):
        Q(1) + F7(1)


def test_invalid_modulus():
    with pytest.raises(InvalidSpecError):
        FieldSpec.prime(9)
    with pytest.raises(InvalidSpecError):
        FieldSpec.prime(1)
    assert is_prime(2_147_483_647)
    assert not is_prime(91)


def test_parse_scalar():
    assert parse_scalar("-3/4", Q) == Q(Fraction(-3, 4))
    assert parse_scalar("10", F7) == F7(3)
    assert str(parse_scalar("6/4", Q)) == "3/2"
    assert str(parse_scalar("-1", F7)) == "6"


def test_parse_scalar_errors():
    with pytest.raises(ScalarSyntaxError):
        parse_scalar("1/2", F7)
    with pytest.raises(ScalarSyntaxError):
        parse_scalar("1.5", Q)
    with pytest.raises(ScalarSyntaxError):
        parse_scalar("1/0", Q)


def test_fraction_reduced_mod_p():
    assert F7(Fraction(1, 2)) == F7(4)
    with pytest.raises(ZeroDivisionFieldError):
        F7(Fraction(1, 7))


def _random_scalar(field, rng):
    if field.is_rational:
        return field(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    return field(rng.randrange(field.p))


@pytest.mark.parametrize("field", [Q, F7, FieldSpec.prime(2), FieldSpec.prime(2_147_483_647)])
def test_field_axioms_on_random_triples(field):
    rng = random.Random(31)
    zero, one = field.zero(), field.one()
    for _ in range(200):
        a, b, c = (_random_scalar(field, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        assert a - b == a + (-b)
        if not a.is_zero():
            assert a * a.inverse() == one
            assert field_arith(b, a, "div") * a == b


@pytest.mark.parametrize("field", [Q, F7, FieldSpec.prime(101)])
def test_printed_scalar_reparses(field):
    rng = random.Random(5)
    for _ in range(100):
        a = _random_scalar(field, rng)
        assert parse_scalar(str(a), field) == a


@pytest.mark.parametrize("p", [2, 3, 7, 101])
def test_characteristic(p):
    field = FieldSpec.prime(p)
    total = field.zero()
    for k in range(1, p + 1):
        total = total + field.one()
        assert total.is_zero() == (k == p)
    total = Q.zero()
    for _ in range(p):
        total = total + Q.one()
        assert not total.is_zero()
