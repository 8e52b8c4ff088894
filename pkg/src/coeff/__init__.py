from .field import FieldSpec, FieldKind, Scalar, ArithOp, field_arith, parse_scalar, is_prime

__all__ = ['FieldSpec', 'FieldKind', 'Scalar', 'ArithOp', 'field_arith', 'parse_scalar', 'is_prime']
