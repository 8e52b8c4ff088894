from .unipoly import UniPoly, gcd
from .derivation import UnivariateDerivation, restrict_derivations, invariant_check
from .factor import factor_squarefree, factor_berlekamp, rational_roots, irreducible_factors
from .sigma import InvariantFactorReport, maximal_invariant, invariant_factorization

__all__ = [
    'UniPoly', 'gcd',
    'UnivariateDerivation', 'restrict_derivations', 'invariant_check',
    'factor_squarefree', 'factor_berlekamp', 'rational_roots', 'irreducible_factors',
    'InvariantFactorReport', 'maximal_invariant', 'invariant_factorization',
]
