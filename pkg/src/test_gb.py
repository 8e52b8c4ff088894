"""Tests for Groebner bases, truncations and exact linear algebra."""
import math
import random

import pytest
import sympy

from src.coeff import FieldSpec
from src.errors import UnfilteredRingError
from src.gb import (
    DEGLEX,
    EchelonBasis,
    Sidedness,
    echelon_span,
    left_gb,
    member,
    nullspace_rows,
    quotient_dim,
    reduce,
    rref_rows,
    truncated_basis,
    twosided_gb,
)
from src.ring import RingSpec

Q = FieldSpec.rationals()
F7 = FieldSpec.prime(7)


def abelian(n=2):
    return RingSpec(Q, [f"x{k}" for k in range(1, n + 1)])


def solvable2():
    return RingSpec(Q, ["x1", "x2"], {(2, 1): {(1, 0): 1}})


def heisenberg():
    return RingSpec(F7, ["x1", "x2", "x3"], {(3, 2): {(1, 0, 0): 1}})


def test_monomials_are_descending():
    monomials = DEGLEX.monomials(2, 2)
    assert monomials[0] == (0, 2)
    assert monomials[-1] == (0, 0)
    assert len(monomials) == 6
    assert DEGLEX.monomials(3, 1, nvars=1) == [(1, 0, 0), (0, 0, 0)]


def test_left_gb_commutative():
    spec = abelian()
    x1, x2 = spec.var(1), spec.var(2)
    G = left_gb([x1 ** 2, x1 * x2])
    assert G.sidedness is Sidedness.LEFT
    assert list(G.elements) == [x1 ** 2, x1 * x2]
    assert member(x1 ** 3 * x2 + x1 ** 2, G)
    assert not member(x1, G)
    assert quotient_dim(G) == math.inf


def test_reduce_normal_form_has_no_divisible_terms():
    spec = solvable2()
    x1, x2 = spec.var(1), spec.var(2)
    G = left_gb([x2 - 1])
    r = reduce(x2 ** 3 * x1, G)
    assert all(not (m[1] >= 1) for m in r.terms)
    # x2·x1 = x1·(x2+1) and x2 ≡ 1 on the left ideal gives x2^3·x1 ≡ 8·x1
    assert r == 8 * x1


def test_twosided_closure_solvable():
    spec = solvable2()
    x1, x2 = spec.var(1), spec.var(2)
    G = twosided_gb([x2])
    assert list(G.elements) == [x1, x2]
    assert quotient_dim(G) == 1
    principal = twosided_gb([x1])
    assert list(principal.elements) == [x1]
    assert quotient_dim(principal) == math.inf


def test_twosided_unit_ideal():
    spec = solvable2()
    G = twosided_gb([spec.var(1) - 1])
    assert G.is_unit()
    assert quotient_dim(G) == 0


def test_twosided_subring_restriction():
    spec = solvable2()
    x1 = spec.var(1)
    G = twosided_gb([x1 - 1], nvars=1)
    assert not G.is_unit()
    assert list(G.elements) == [x1 - 1]
    assert G.nvars == 1


def test_heisenberg_codimension_one():
    spec = heisenberg()
    G = twosided_gb([spec.var(1), spec.var(2), spec.var(3)])
    assert quotient_dim(G) == 1
    # x1 = x3·x2 - x2·x3 lies in the ideal generated by x2 alone
    assert member(spec.var(1), twosided_gb([spec.var(2)]))


def test_gb_is_independent_of_generator_order():
    spec = heisenberg()
    x1, x2, x3 = spec.var(1), spec.var(2), spec.var(3)
    gens = [x3 ** 2 + x1, x2 * x3 - 2, x2 ** 2]
    first = twosided_gb(gens)
    second = twosided_gb(list(reversed(gens)))
    assert first.elements == second.elements
    assert str(first) == str(second)


def test_unfiltered_ring_rejected():
    spec = RingSpec(Q, ["x1", "x2"], {(2, 1): {(2, 0): 1}})
    with pytest.raises(UnfilteredRingError):
        left_gb([spec.var(1)])


def _normalized(exprs, *symbols):
    return {sympy.Poly(e, *symbols, domain="QQ").monic().as_expr() for e in exprs}


def test_left_gb_matches_sympy_groebner():
    spec = abelian()
    s1, s2 = sympy.symbols("x1 x2")
    rng = random.Random(11)
    for _ in range(10):
        gens = []
        for _ in range(rng.randint(1, 3)):
            f = spec.zero()
            for m in DEGLEX.monomials(2, 2):
                f = f + spec.monomial(m, rng.randint(-2, 2))
            if not f.is_zero():
                gens.append(f)
        if not gens:
            continue
        ours = left_gb(gens)
        exprs = [sum(int(c.value) * s1 ** m[0] * s2 ** m[1] for m, c in g.terms.items()) for g in gens]
        # deglex with x1 < x2 is sympy's grlex with x2 listed first
        oracle = sympy.groebner(exprs, s2, s1, order="grlex", domain="QQ")
        ours_exprs = [sum(sympy.Rational(c.value.numerator, c.value.denominator) * s1 ** m[0] * s2 ** m[1]
                          for m, c in g.terms.items()) for g in ours.elements]
        assert _normalized(ours_exprs, s2, s1) == _normalized(oracle.exprs, s2, s1)


def _macaulay(spec, gens, big, small):
    """Span of all m·g up to degree ``big``, cut down to degree ``small``."""
    products = []
    for g in gens:
        room = big - g.total_degree()
        for m in DEGLEX.monomials(spec.n, room):
            products.append(spec.monomial(m) * g)
    rows = echelon_span(spec, products, DEGLEX.monomials(spec.n, big))
    return tuple(r for r in rows if r.total_degree() <= small)


def test_truncation_matches_macaulay_oracle():
    spec = abelian()
    rng = random.Random(5)
    checked = 0
    while checked < 20:
        gens = []
        for _ in range(rng.randint(1, 3)):
            f = spec.zero()
            for m in DEGLEX.monomials(2, 2):
                if rng.random() < 0.5:
                    f = f + spec.monomial(m, rng.randint(-2, 2))
            if not f.is_zero():
                gens.append(f)
        if not gens:
            continue
        truncation = truncated_basis(left_gb(gens), 4)
        assert truncation.rows == _macaulay(spec, gens, 8, 4)
        checked += 1


def test_truncated_basis_noncommutative():
    spec = solvable2()
    G = twosided_gb([spec.var(1)])
    basis = truncated_basis(G, 2)
    # x1, x1^2, x1*x2
    assert basis.dim == 3
    assert basis.contains(spec.var(2) * spec.var(1))
    assert not basis.contains(spec.var(2))


def test_echelon_basis_equality_and_containment():
    spec = abelian()
    x1, x2 = spec.var(1), spec.var(2)
    a = EchelonBasis(spec, 2, tuple(echelon_span(spec, [x1 + x2, x2], DEGLEX.monomials(2, 2))))
    b = EchelonBasis(spec, 2, tuple(echelon_span(spec, [x1, x1 - x2], DEGLEX.monomials(2, 2))))
    assert a == b
    assert a.contains_space(b)
    assert a.leading_monomials == [(0, 1), (1, 0)]


def test_rref_and_nullspace():
    rows = [[F7(1), F7(2), F7(3)], [F7(2), F7(4), F7(6)]]
    reduced = rref_rows(F7, rows, 3)
    assert reduced == [[F7(1), F7(2), F7(3)]]
    kernel = nullspace_rows(F7, rows, 3)
    assert len(kernel) == 2
    for v in kernel:
        assert sum((a * b for a, b in zip(rows[0], v)), F7.zero()) == F7.zero()
    assert nullspace_rows(Q, [], 2) == [[Q(1), Q(0)], [Q(0), Q(1)]]
