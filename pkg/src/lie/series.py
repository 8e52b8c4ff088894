# src/lie/series.py
"""Derived and lower central series by exact row reduction of bracket images."""
from typing import List, Sequence

from src.gb import rref_rows
from .algebra import LieAlgebraSpec, Vector, bracket


def _span(spec: LieAlgebraSpec, vectors: Sequence[Vector]) -> List[Vector]:
    return [tuple(row) for row in rref_rows(spec.field, [list(v) for v in vectors], spec.n)]


def _full(spec: LieAlgebraSpec) -> List[Vector]:
    return [spec.basis_vector(i) for i in range(1, spec.n + 1)]


def _brackets(spec: LieAlgebraSpec, left: Sequence[Vector], right: Sequence[Vector]) -> List[Vector]:
    return _span(spec, [bracket(spec, u, v) for u in left for v in right])


def _series(spec: LieAlgebraSpec, start: List[Vector], step) -> List[int]:
    dims = [len(start)]
    current = start
    while dims[-1] > 0:
        current = step(current)
        if len(current) == dims[-1]:
            break
        dims.append(len(current))
    return dims


def derived_series(spec: LieAlgebraSpec) -> List[int]:
    """dim L, dim [L,L], dim [[L,L],[L,L]], ... until stable."""
    return _series(spec, _full(spec), lambda current: _brackets(spec, current, current))


def is_solvable(spec: LieAlgebraSpec) -> bool:
    return derived_series(spec)[-1] == 0


def lower_central_series(spec: LieAlgebraSpec) -> List[int]:
    """dim L, dim [L,L], dim [L,[L,L]], ... until stable."""
    full = _full(spec)
    return _series(spec, full, lambda current: _brackets(spec, full, current))


def is_nilpotent(spec: LieAlgebraSpec) -> bool:
    return lower_central_series(spec)[-1] == 0


def derived_is_nilpotent(spec: LieAlgebraSpec) -> bool:
    """Lower central series of N = [L,L] with the induced bracket reaches 0."""
    full = _full(spec)
    derived = _brackets(spec, full, full)
    return _series(spec, derived, lambda current: _brackets(spec, derived, current))[-1] == 0
