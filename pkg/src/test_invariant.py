"""Tests for univariate factorization and Δ-invariant factorization in F[x1]."""
from fractions import Fraction

import pytest
import sympy

from src.coeff import FieldSpec
from src.errors import DivisorLimitError, FactorizationError, FieldMismatchError, ZeroPolynomialError
from src.ideal import IdealHandle, is_invariant
from src.invariant import (
    UniPoly,
    UnivariateDerivation,
    factor_berlekamp,
    factor_squarefree,
    gcd,
    invariant_check,
    invariant_factorization,
    irreducible_factors,
    maximal_invariant,
    rational_roots,
    restrict_derivations,
)
from src.ring import RingSpec

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)


def poly(field, *coeffs):
    """Coefficients highest degree first, as written."""
    return UniPoly.of(field, list(reversed(coeffs)))


def test_unipoly_arithmetic():
    x = UniPoly.x(Q)
    f = (x - 1) * (x + 2)
    assert f == poly(Q, 1, 1, -2)
    q, r = divmod(f, x - 1)
    assert q == x + 2 and r.is_zero()
    assert gcd(f, (x - 1) * (x - 3)) == x - 1
    assert f.derivative() == poly(Q, 2, 1)
    assert f(1).is_zero()
    assert str(poly(Q, 1, 0, -1)) == "x1^2 - 1"
    assert poly(Q, 1, 0, 0).format("t") == "t^2"


def test_squarefree_decomposition():
    x = UniPoly.x(Q)
    f = x ** 2 * (x + 1) ** 3
    assert factor_squarefree(f) == [(x + 1, 3), (x, 2)]
    F3 = FieldSpec.prime(3)
    y = UniPoly.x(F3)
    # (y + 1)^3 = y^3 + 1 has zero derivative in characteristic 3
    assert factor_squarefree(y ** 3 + 1) == [(y + 1, 3)]


def test_rational_roots():
    x = UniPoly.x(Q)
    assert rational_roots(x ** 3 - x) == [Fraction(-1), Fraction(0), Fraction(1)]
    assert rational_roots(x ** 2 - Fraction(1, 4)) == [Fraction(-1, 2), Fraction(1, 2)]
    assert rational_roots(x ** 2 + 1) == []


def test_irreducible_factors_over_rationals():
    x = UniPoly.x(Q)
    factors, complete = irreducible_factors(x ** 3 - 2)
    assert factors == [(x ** 3 - 2, 1)] and complete
    factors, complete = irreducible_factors(x ** 4 + 1)
    assert factors == [(x ** 4 + 1, 1)] and not complete
    factors, complete = irreducible_factors((x - 1) ** 2 * (x ** 2 + 1))
    assert complete
    assert factors == [(x - 1, 2), (x ** 2 + 1, 1)]


def test_berlekamp_x4_plus_1_mod_5():
    x = UniPoly.x(F5)
    assert factor_berlekamp(x ** 4 + 1, 5) == [x ** 2 + 2, x ** 2 + 3]


def _sympy_factors(expr, symbol, p):
    field = FieldSpec.prime(p)
    found = []
    for factor, multiplicity in sympy.Poly(expr, symbol, modulus=p).factor_list()[1]:
        coeffs = [int(c) % p for c in reversed(factor.all_coeffs())]
        found.extend([UniPoly.of(field, coeffs).monic()] * multiplicity)
    return sorted(found, key=lambda q: q.sort_key())


@pytest.mark.parametrize("p", [2, 7, 13, 1009])
def test_berlekamp_matches_sympy(p):
    t = sympy.symbols("t")
    exprs = [
        t ** 6 + t + 1,
        (t ** 2 + t + 1) ** 2 * (t + 3) * t ** 3,
        t ** 8 - 1,
        (t ** 4 + 2 * t + 5) * (t ** 3 + t ** 2 + 1) * (t - 2),
    ]
    field = FieldSpec.prime(p)
    for expr in exprs:
        coeffs = [int(c) for c in reversed(sympy.Poly(expr, t).all_coeffs())]
        f = UniPoly.of(field, coeffs)
        assert factor_berlekamp(f, p) == _sympy_factors(expr, t, p)


def test_berlekamp_errors():
    with pytest.raises(FactorizationError):
        factor_berlekamp(UniPoly.x(Q), 5)
    with pytest.raises(FieldMismatchError):
        factor_berlekamp(UniPoly.x(F5), 7)
    with pytest.raises(FactorizationError):
        factor_berlekamp(poly(F5, 2, 1), 5)


def test_restrict_derivations():
    spec = RingSpec(Q, ["x1", "x2", "x3"], {(2, 1): {(1, 0, 0): 1}, (3, 1): {(0, 0, 0): 1}})
    derivations = restrict_derivations(spec)
    assert [d.index for d in derivations] == [2, 3]
    assert derivations[0].image == UniPoly.x(Q)
    assert derivations[1].image == UniPoly.const(Q, 1)


def test_invariant_check():
    x = UniPoly.x(Q)
    euler = UnivariateDerivation(x)
    assert invariant_check(x ** 3, [euler])
    assert not invariant_check(x - 1, [euler])
    assert invariant_check(x - 1, [])
    with pytest.raises(ZeroPolynomialError):
        invariant_check(UniPoly(Q), [euler])


def test_invariant_factorization_pure_power():
    x = UniPoly.x(Q)
    report = invariant_factorization(x ** 3, [UnivariateDerivation(x)])
    assert report.sigma_m == [x]
    assert report.exponents == [3]
    assert report.complete


def test_invariant_factorization_two_maximal_ideals():
    x = UniPoly.x(Q)
    delta = UnivariateDerivation(x ** 2 - x)
    f = x ** 2 * (x - 1)
    report = invariant_factorization(f, [delta])
    assert dict(report.pairs()) == {x: 2, x - 1: 1}
    assert report.complete
    assert maximal_invariant(f, [delta]) == report.sigma_m


def test_invariant_factorization_without_derivations():
    x = UniPoly.x(F5)
    report = invariant_factorization(x ** 4 + 1, [])
    assert report.sigma_m == [x ** 2 + 2, x ** 2 + 3]
    assert report.exponents == [1, 1]
    assert report.complete


def test_invariant_factor_keeps_only_full_power():
    # over F3, d/dx kills x^3 - 1 = (x - 1)^3 but moves (x - 1) and (x - 1)^2
    x = UniPoly.x(FieldSpec.prime(3))
    delta = UnivariateDerivation(UniPoly.const(x.field, 1))
    report = invariant_factorization(x ** 3 - 1, [delta])
    assert report.sigma_m == [x ** 3 - 1]
    assert report.exponents == [1]
    assert report.irreducible == [(x - 1, 3)]
    assert report.complete


def test_invariant_factorization_errors():
    x = UniPoly.x(Q)
    with pytest.raises(FactorizationError):
        invariant_factorization(x - 1, [UnivariateDerivation(x)])
    with pytest.raises(FactorizationError):
        invariant_factorization(UniPoly.const(Q, 1), [])
    many = UniPoly.const(Q, 1)
    for k in range(13):
        many = many * (x - k)
    with pytest.raises(DivisorLimitError):
        invariant_factorization(many, [])


@pytest.mark.parametrize("delta_terms", [
    {(1, 0): 1, (0, 0): 1},   # δ2(x1) = x1 + 1
    {(1, 0): 1},              # δ2(x1) = x1
    {(0, 0): 1},              # δ2(x1) = 1
])
def test_invariant_check_agrees_with_ideal_invariance(delta_terms):
    spec = RingSpec(Q, ["x1", "x2"], {(2, 1): delta_terms})
    derivations = restrict_derivations(spec)
    x1 = spec.var(1)
    candidates = [x1 + 1, (x1 + 1) ** 2, x1, x1 ** 3, x1 - 1, x1 ** 2 + 1, (x1 + 1) * x1]
    for f in candidates:
        expected = is_invariant(IdealHandle(spec, [f]), [2])
        assert invariant_check(UniPoly.from_poly(f), derivations) == expected
