from .monomial import Monomial, deglex_key, mono_degree, mono_divides
from .poly import Poly, format_poly, format_monomial
from .spec import RingSpec
from .validate import ValidationReport, Violation, validate_spec
from .arith import (
    mul,
    commutator,
    apply_derivation,
    max_variable,
    degree,
    degree_in,
    leading_term,
    is_central,
    is_normal,
    divide_exact,
)

__all__ = [
    'Monomial', 'deglex_key', 'mono_degree', 'mono_divides',
    'Poly', 'format_poly', 'format_monomial',
    'RingSpec',
    'ValidationReport', 'Violation', 'validate_spec',
    'mul', 'commutator', 'apply_derivation', 'max_variable', 'degree', 'degree_in',
    'leading_term', 'is_central', 'is_normal', 'divide_exact',
]
