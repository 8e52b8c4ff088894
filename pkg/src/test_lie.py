"""Tests for Lie algebras given by structure constants and their enveloping rings."""
import pytest

from src.coeff import FieldSpec
from src.errors import LieSpecError, NonAdaptedBasisError
from src.lie import (
    LieAlgebraSpec,
    bracket,
    derived_is_nilpotent,
    derived_series,
    is_adapted_flag,
    is_completely_solvable,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    to_ring_spec,
    validate_lie,
)
from src.ring import validate_spec

Q = FieldSpec.rationals()
F7 = FieldSpec.prime(7)


def solvable2():
    return LieAlgebraSpec.from_brackets(Q, 2, {(2, 1): [1, 0]})


def heisenberg():
    return LieAlgebraSpec.from_brackets(F7, 3, {(3, 2): [1, 0, 0]})


def abelian3():
    return LieAlgebraSpec.from_brackets(Q, 3)


def test_bracket_is_antisymmetric():
    spec = heisenberg()
    x2, x3 = spec.basis_vector(2), spec.basis_vector(3)
    assert bracket(spec, x3, x2) == spec.basis_vector(1)
    assert bracket(spec, x2, x3) == tuple(-c for c in spec.basis_vector(1))
    assert bracket(spec, x2, x2) == spec.zero_vector()


def test_from_brackets_rejects_bad_input():
    with pytest.raises(LieSpecError):
        LieAlgebraSpec.from_brackets(Q, 2, {(1, 2): [1, 0]})
    with pytest.raises(LieSpecError):
        LieAlgebraSpec.from_brackets(Q, 2, {(2, 1): [1]})
    with pytest.raises(LieSpecError):
        LieAlgebraSpec.from_brackets(Q, 0)


def test_jacobi_violation_reported():
    broken = LieAlgebraSpec.from_brackets(Q, 3, {(2, 1): [1, 0, 0], (3, 2): [0, 1, 0]})
    report = validate_lie(broken)
    assert not report.ok
    assert report.violations[0].where == (1, 2, 3)
    with pytest.raises(LieSpecError):
        to_ring_spec(broken)


def test_non_adapted_basis():
    spec = LieAlgebraSpec.from_brackets(Q, 2, {(2, 1): [0, 1]})
    assert validate_lie(spec).ok
    assert not is_adapted_flag(spec)
    with pytest.raises(NonAdaptedBasisError):
        to_ring_spec(spec)


@pytest.mark.parametrize("make", [solvable2, heisenberg, abelian3])
def test_enveloping_ring_is_valid(make):
    lie = make()
    ring = to_ring_spec(lie)
    assert validate_spec(ring).ok
    assert ring.filtered
    for (i, j), vector in lie.brackets:
        assert ring.var(i) * ring.var(j) - ring.var(j) * ring.var(i) == ring.poly(
            {tuple(1 if k == m else 0 for k in range(lie.n)): c for m, c in enumerate(vector)}
        )


def test_series():
    assert derived_series(solvable2()) == [2, 1, 0]
    assert lower_central_series(solvable2()) == [2, 1]
    assert is_solvable(solvable2())
    assert not is_nilpotent(solvable2())
    assert derived_is_nilpotent(solvable2())
    assert is_completely_solvable(solvable2())


def test_heisenberg_flags():
    spec = heisenberg()
    assert derived_series(spec) == [3, 1, 0]
    assert lower_central_series(spec) == [3, 1, 0]
    assert is_nilpotent(spec)
    assert derived_is_nilpotent(spec)


def test_abelian_series():
    spec = abelian3()
    assert derived_series(spec) == [3, 0]
    assert is_nilpotent(spec)


def sl2():
    # x1 = e, x2 = f, x3 = h
    return LieAlgebraSpec.from_brackets(Q, 3, {(2, 1): [0, 0, -1], (3, 1): [2, 0, 0], (3, 2): [0, -2, 0]})


def non_adapted():
    return LieAlgebraSpec.from_brackets(Q, 2, {(2, 1): [0, 1]})


def filiform4():
    # [x4, x3] = x2, [x4, x2] = x1
    return LieAlgebraSpec.from_brackets(Q, 4, {(4, 3): [0, 1, 0, 0], (4, 2): [1, 0, 0, 0]})


LIE_FIXTURES = [solvable2, heisenberg, abelian3, sl2, non_adapted, filiform4]


@pytest.mark.parametrize("make", LIE_FIXTURES)
def test_adapted_flag_implies_solvable(make):
    spec = make()
    assert validate_lie(spec).ok
    if is_adapted_flag(spec):
        assert is_solvable(spec)
        assert is_completely_solvable(spec)


@pytest.mark.parametrize("make", LIE_FIXTURES)
def test_series_dimensions_never_increase(make):
    spec = make()
    for series in (derived_series(spec), lower_central_series(spec)):
        assert series[0] == spec.n
        assert all(later <= earlier for earlier, later in zip(series, series[1:]))


def test_sl2_is_perfect():
    spec = sl2()
    assert derived_series(spec) == [3]
    assert not is_solvable(spec)
    assert not is_adapted_flag(spec)
    assert is_solvable(non_adapted())


def test_filiform_series():
    spec = filiform4()
    assert is_adapted_flag(spec)
    assert lower_central_series(spec) == [4, 2, 1, 0]
    assert derived_series(spec) == [4, 2, 0]
    assert is_nilpotent(spec)
