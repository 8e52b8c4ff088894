# src/errors.py
"""
Exception hierarchy shared by all iterpow modules.

Every error carries an ``exit_code`` which the command line maps onto the process
exit status: 1 for domain errors, 2 for usage and parse errors.
"""
from typing import Optional


class IterPowError(Exception):
    """Base class for all library errors."""
    exit_code: int = 1

    def __init__(self, message: str, detail: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}


# --- Domain errors (exit 1) ---

class FieldMismatchError(IterPowError):
    pass


class ZeroDivisionFieldError(IterPowError):
    pass


class RingMismatchError(IterPowError):
    pass


class UnfilteredRingError(IterPowError):
    """Raised by Groebner machinery when some δ_i(x_j) has degree > 1."""


class InvalidSpecError(IterPowError):
    pass


class ZeroPolynomialError(IterPowError):
    """An operation that needs a nonzero element got 0."""


class DerivationDomainError(IterPowError):
    """δ_i applied to an element that uses a variable with index ≥ i."""


class FactorizationError(IterPowError):
    pass


class DivisorLimitError(FactorizationError):
    pass


class LieSpecError(IterPowError):
    pass


class NonAdaptedBasisError(LieSpecError):
    pass


class GroebnerInvariantError(IterPowError):
    """An internal Groebner invariant failed. Always a defect."""


# --- Usage / parse errors (exit 2) ---

class UsageError(IterPowError):
    exit_code = 2


class ParameterError(UsageError):
    """Out-of-range numeric parameter (degree bound, power, round count)."""


class ScalarSyntaxError(UsageError):
    pass


class ExpressionSyntaxError(UsageError):
    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message, {"position": position})
        self.position = position


class UnknownIdentifierError(UsageError):
    pass


class SpecDocumentError(UsageError):
    pass
