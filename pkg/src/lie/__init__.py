from .algebra import (
    LieAlgebraSpec,
    bracket,
    validate_lie,
    is_adapted_flag,
    is_completely_solvable,
    to_ring_spec,
)
from .series import (
    derived_series,
    is_solvable,
    lower_central_series,
    is_nilpotent,
    derived_is_nilpotent,
)

__all__ = [
    'LieAlgebraSpec', 'bracket', 'validate_lie', 'is_adapted_flag', 'is_completely_solvable', 'to_ring_spec',
    'derived_series', 'is_solvable', 'lower_central_series', 'is_nilpotent', 'derived_is_nilpotent',
]
