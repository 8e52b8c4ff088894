from .order import MonomialOrder, OrderKind, DEGLEX
from .groebner import GBasis, Sidedness, reduce, member, left_gb, twosided_gb, quotient_dim
from .linalg import EchelonBasis, truncated_basis, echelon_span, rref_rows, nullspace_rows

__all__ = [
    'MonomialOrder', 'OrderKind', 'DEGLEX',
    'GBasis', 'Sidedness', 'reduce', 'member', 'left_gb', 'twosided_gb', 'quotient_dim',
    'EchelonBasis', 'truncated_basis', 'echelon_span', 'rref_rows', 'nullspace_rows',
]
