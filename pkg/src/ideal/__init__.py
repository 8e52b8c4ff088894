from .handle import IdealHandle, product, power, ideal_sum, equals, is_proper
from .certificate import ZeroCertificate, CertFailure, cert_zero_principal
from .powint import (
    PowIntStatus,
    PowIntReport,
    PowerRecord,
    IterationRound,
    powint,
    iterate_powint,
    vanishing_index,
    iteration_status,
)
from .invariance import is_invariant, slice_s0

__all__ = [
    'IdealHandle', 'product', 'power', 'ideal_sum', 'equals', 'is_proper',
    'ZeroCertificate', 'CertFailure', 'cert_zero_principal',
    'PowIntStatus', 'PowIntReport', 'PowerRecord', 'IterationRound',
    'powint', 'iterate_powint', 'vanishing_index', 'iteration_status',
    'is_invariant', 'slice_s0',
]
