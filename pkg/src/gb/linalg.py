# src/gb/linalg.py
"""
Exact linear algebra over ℚ and 𝔽_p through sympy's DomainMatrix.

Scalars cross the boundary in both directions here and nowhere else.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from src.coeff import FieldSpec, Scalar
from src.ring import Poly, RingSpec, mul
from src.ring.monomial import Monomial, mono_degree
from .order import DEGLEX

logger = logging.getLogger(__name__)


def domain_for(field: FieldSpec):
    return QQ if field.is_rational else GF(field.p)


def _to_domain(c: Scalar, K):
    if c.field.is_rational:
        return K(c.value.numerator, c.value.denominator)
    return K(c.value)


def _from_sympy(value, field: FieldSpec) -> Scalar:
    if field.is_rational:
        return field(Fraction(int(value.p), int(value.q)))
    return field(int(value) % field.p)


def to_domain_matrix(field: FieldSpec, rows: Sequence[Sequence[Scalar]], ncols: int) -> DomainMatrix:
    K = domain_for(field)
    data = [[_to_domain(c, K) for c in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), K)


def from_domain_matrix(matrix: DomainMatrix, field: FieldSpec) -> List[List[Scalar]]:
    return [[_from_sympy(v, field) for v in row] for row in matrix.to_Matrix().tolist()]


def rref_rows(field: FieldSpec, rows: Sequence[Sequence[Scalar]], ncols: int) -> List[List[Scalar]]:
    """Nonzero rows of the reduced row echelon form (pivots equal to 1)."""
    if not rows or ncols == 0:
        return []
    reduced, pivots = to_domain_matrix(field, rows, ncols).rref()
    dense = from_domain_matrix(reduced, field)
    return [dense[r] for r in range(len(pivots))]


def nullspace_rows(field: FieldSpec, rows: Sequence[Sequence[Scalar]], ncols: int) -> List[List[Scalar]]:
    """Basis of {v : M v = 0}, one vector per row."""
    if not rows:
        return [[field(1 if a == b else 0) for b in range(ncols)] for a in range(ncols)]
    kernel = to_domain_matrix(field, rows, ncols).nullspace()
    return [row for row in from_domain_matrix(kernel, field) if any(not c.is_zero() for c in row)]


def echelon_span(spec: RingSpec, polys: Sequence[Poly], columns: Sequence[Monomial]) -> List[Poly]:
    """Row-reduced basis of span(polys); columns fix the pivot preference (first = most significant)."""
    index = {m: k for k, m in enumerate(columns)}
    rows = []
    for f in polys:
        if f.is_zero():
            continue
        row = [spec.field.zero()] * len(columns)
        for m, c in f.terms.items():
            row[index[m]] = c
        rows.append(row)
    reduced = rref_rows(spec.field, rows, len(columns))
    return [Poly(spec, {columns[k]: c for k, c in enumerate(row) if not c.is_zero()}) for row in reduced]


@dataclass(frozen=True)
class EchelonBasis:
    """Reduced echelon basis of a subspace of S_{<=degree}; rows descend by leading monomial."""
    ring: RingSpec
    degree: int
    rows: Tuple[Poly, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [row.lm for row in self.rows]

    def contains(self, f: Poly) -> bool:
        if f.is_zero():
            return True
        if f.total_degree() > self.degree:
            return False
        rest = f
        for row in self.rows:
            c = rest.terms.get(row.lm)
            if c is not None:
                rest = rest - row.scale(c)
        return rest.is_zero()

    def contains_space(self, other: "EchelonBasis") -> bool:
        return all(self.contains(row) for row in other.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EchelonBasis):
            return NotImplemented
        return self.degree == other.degree and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.degree, self.rows))


def truncated_basis(G, d: int) -> EchelonBasis:
    """Echelon basis of span{m·g : g ∈ G, deg(m) + deg(g) <= d}, which is I ∩ S_{<=d} for the left ideal of G."""
    spec = G.ring
    columns = DEGLEX.monomials(spec.n, d, G.nvars)
    products = []
    for g in G.elements:
        room = d - mono_degree(g.lm)
        if room < 0:
            continue
        for m in DEGLEX.monomials(spec.n, room, G.nvars):
            products.append(mul(spec.monomial(m), g))
    rows = echelon_span(spec, products, columns)
    logger.debug("truncated_basis(d=%d): %d products, dim %d of %d", d, len(products), len(rows), len(columns))
    return EchelonBasis(spec, d, tuple(rows))
