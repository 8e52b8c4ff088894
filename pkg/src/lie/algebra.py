# src/lie/algebra.py
"""
Finite-dimensional Lie algebras given by structure constants in a basis x1..xn.

Only brackets [x_i, x_j] with i > j are stored; the rest follow from antisymmetry.
The ring of U(L) uses δ_i(x_j) = [x_i, x_j] for i > j, matching x_i x_j - x_j x_i = δ_i(x_j).
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.coeff import FieldSpec, Scalar
from src.errors import LieSpecError, NonAdaptedBasisError
from src.ring import RingSpec, ValidationReport, Violation
from src.ring.monomial import mono_var

logger = logging.getLogger(__name__)

Vector = Tuple[Scalar, ...]


@dataclass(frozen=True)
class LieAlgebraSpec:
    field: FieldSpec
    n: int
    brackets: Tuple[Tuple[Tuple[int, int], Vector], ...]

    @classmethod
    def from_brackets(cls, field: FieldSpec, n: int, brackets: Optional[Mapping[Tuple[int, int], Sequence]] = None) -> "LieAlgebraSpec":
        """Build from {(i, j): [c1..cn]} with i > j (1-based); omitted brackets are 0."""
        if n < 1:
            raise LieSpecError(f"dimension must be >= 1, got {n}")
        stored: Dict[Tuple[int, int], Vector] = {}
        for (i, j), coords in (brackets or {}).items():
            if not (1 <= j < i <= n):
                raise LieSpecError(f"bracket ({i},{j}) must satisfy 1 <= j < i <= {n}")
            if len(coords) != n:
                raise LieSpecError(f"bracket ({i},{j}) needs {n} coordinates, got {len(coords)}")
            vector = tuple(field(c) for c in coords)
            if any(not c.is_zero() for c in vector):
                stored[(i, j)] = vector
        return cls(field, n, tuple(sorted(stored.items())))

    @property
    def table(self) -> Dict[Tuple[int, int], Vector]:
        return dict(self.brackets)

    def zero_vector(self) -> Vector:
        return (self.field.zero(),) * self.n

    def basis_vector(self, i: int) -> Vector:
        """x_i as a coordinate vector (1-based)."""
        return tuple(self.field(1 if k == i - 1 else 0) for k in range(self.n))

    def structure(self, i: int, j: int) -> Vector:
        """[x_i, x_j] for any 1-based i, j."""
        if i == j:
            return self.zero_vector()
        table = self.table
        if i > j:
            return table.get((i, j), self.zero_vector())
        return tuple(-c for c in table.get((j, i), self.zero_vector()))


def bracket(spec: LieAlgebraSpec, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """[u, v] for coordinate vectors, by bilinearity."""
    out = list(spec.zero_vector())
    for i, a in enumerate(u, start=1):
        if a.is_zero():
            continue
        for j, b in enumerate(v, start=1):
            if b.is_zero() or i == j:
                continue
            ab = a * b
            for k, c in enumerate(spec.structure(i, j)):
                if not c.is_zero():
                    out[k] = out[k] + ab * c
    return tuple(out)


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def validate_lie(spec: LieAlgebraSpec) -> ValidationReport:
    """Jacobi identity on every basis triple i < j < k."""
    violations: List[Violation] = []
    n = spec.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                x_i, x_j, x_k = spec.basis_vector(i), spec.basis_vector(j), spec.basis_vector(k)
                total = _add(_add(bracket(spec, bracket(spec, x_i, x_j), x_k),
                                  bracket(spec, bracket(spec, x_j, x_k), x_i)),
                             bracket(spec, bracket(spec, x_k, x_i), x_j))
                if any(not c.is_zero() for c in total):
                    violations.append(Violation(
                        "jacobi", (i, j, k),
                        f"Jacobi sum for (x{i}, x{j}, x{k}) is {[str(c) for c in total]}",
                    ))
    return ValidationReport(not violations, violations)


def is_adapted_flag(spec: LieAlgebraSpec) -> bool:
    """[x_i, x_j] ∈ span(x1..x_j) for all i > j, so span(x1..x_j) is a flag of ideals."""
    return all(c.is_zero() for (_, j), vector in spec.brackets for c in vector[j:])


def is_completely_solvable(spec: LieAlgebraSpec) -> bool:
    """Whether the given basis exhibits complete solvability (no flag search)."""
    return is_adapted_flag(spec)


def to_ring_spec(spec: LieAlgebraSpec, names: Optional[Sequence[str]] = None) -> RingSpec:
    """U(L) as an iterated differential polynomial ring with δ_i(x_j) = [x_i, x_j]."""
    report = validate_lie(spec)
    if not report.ok:
        raise LieSpecError(f"structure constants violate Jacobi: {report.summary()}")
    if not is_adapted_flag(spec):
        offending = [(i, j) for (i, j), vector in spec.brackets if any(not c.is_zero() for c in vector[j:])]
        raise NonAdaptedBasisError(
            f"basis is not adapted to a flag of ideals: brackets {offending} leave span(x1..xj)",
            {"brackets": offending},
        )
    names = tuple(names) if names else tuple(f"x{k}" for k in range(1, spec.n + 1))
    table = {}
    for (i, j), vector in spec.brackets:
        table[(i, j)] = {mono_var(spec.n, k): c for k, c in enumerate(vector) if not c.is_zero()}
    ring = RingSpec(spec.field, names, table)
    logger.debug("to_ring_spec: %d nonzero brackets -> %r", len(spec.brackets), ring)
    return ring
