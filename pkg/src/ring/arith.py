# src/ring/arith.py
"""Public ring operations on Poly values. Variable indices are 1-based."""
import logging
from typing import Optional, Tuple, Union

from src.coeff import Scalar
from src.errors import DerivationDomainError, InvalidSpecError, UnfilteredRingError, ZeroPolynomialError
from .monomial import Monomial, deglex_key, mono_degree, mono_div, mono_divides
from .poly import Poly

logger = logging.getLogger(__name__)


def mul(f: Poly, g: Poly) -> Poly:
    """Normal-form product f·g."""
    return f.ring.multiply(f, g)


def commutator(f: Poly, g: Poly) -> Poly:
    """[f, g] = f·g - g·f."""
    return mul(f, g) - mul(g, f)


def apply_derivation(spec, i: int, f: Poly) -> Poly:
    """δ_i(f) for f in F[x1..x_{i-1}], by the Leibniz rule on each PBW word."""
    if not 1 <= i <= spec.n:
        raise InvalidSpecError(f"derivation index {i} outside 1..{spec.n}")
    if f.ring is not spec and f.ring != spec:
        raise InvalidSpecError("element does not belong to this ring")
    top = f.max_var()
    if top >= i:
        raise DerivationDomainError(
            f"δ{i} is defined on {spec.names[:i - 1] or 'scalars'} only, but the element uses {spec.names[top - 1]}"
        )
    if not spec.support_ok:
        raise InvalidSpecError("derivation table violates the support constraint")
    return Poly(spec, spec._derive_terms(i - 1, f.terms))


def max_variable(f: Poly) -> int:
    """Largest variable index in the support, 0 for scalars."""
    return f.max_var()


def degree(f: Poly) -> Union[int, float]:
    """Total degree; -inf for the zero polynomial."""
    return f.total_degree()


def degree_in(f: Poly, i: int) -> Union[int, float]:
    if f.is_zero():
        return float("-inf")
    return max(m[i - 1] for m in f.terms)


def leading_term(f: Poly, order=None) -> Tuple[Monomial, Scalar]:
    """(leading monomial, coefficient) under ``order`` (deglex when omitted)."""
    if f.is_zero():
        raise ZeroPolynomialError("leading_term of the zero polynomial")
    key = order.key if order is not None else deglex_key
    m = max(f.terms, key=key)
    return m, f.terms[m]


def is_central(f: Poly) -> bool:
    spec = f.ring
    return all(commutator(spec.var(i), f).is_zero() for i in range(1, spec.n + 1))


def _require_filtered(spec) -> None:
    if not spec.filtered:
        raise UnfilteredRingError("operation needs a filtered ring (every δ_i(x_j) of degree <= 1)")


def divide_exact(h: Poly, f: Poly, side: str = "left") -> Optional[Poly]:
    """q with h = q·f (side="left") or h = f·q (side="right"), None when f does not divide h.

    Needs a filtered ring, where LM(m·f) = m·LM(f) with coefficient LC(f).
    """
    _require_filtered(f.ring)
    if f.is_zero():
        raise ZeroPolynomialError("division by the zero polynomial")
    spec = f.ring
    lm_f = f.lm
    inv = f.lc.inverse()
    quotient = spec.zero()
    rest = h
    while not rest.is_zero():
        lm = rest.lm
        if not mono_divides(lm_f, lm):
            return None
        step = spec.monomial(mono_div(lm, lm_f), rest.terms[lm] * inv)
        quotient = quotient + step
        rest = rest - (mul(step, f) if side == "left" else mul(f, step))
    return quotient


def is_normal(f: Poly) -> bool:
    """fS = Sf, tested as x_i·f ∈ f·S and f·x_i ∈ S·f for every variable."""
    if f.is_zero():
        raise ZeroPolynomialError("is_normal of the zero polynomial")
    spec = f.ring
    _require_filtered(spec)
    if mono_degree(f.lm) == 0:
        return True
    for i in range(1, spec.n + 1):
        x = spec.var(i)
        if divide_exact(mul(x, f), f, side="right") is None:
            return False
        if divide_exact(mul(f, x), f, side="left") is None:
            return False
    return True
