# src/ring/monomial.py
"""
PBW monomials are exponent tuples: entry j is the exponent of x_{j+1} in the
normal word x1^e1 ... xn^en. All helpers here are commutative tuple arithmetic.
"""
from typing import Optional, Tuple

Monomial = Tuple[int, ...]


def mono_one(n: int) -> Monomial:
    return (0,) * n


def mono_var(n: int, index: int, exp: int = 1) -> Monomial:
    """x_{index+1}^exp (0-based index)."""
    exps = [0] * n
    exps[index] = exp
    return tuple(exps)


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if a divides b exponent-wise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_max_var(m: Monomial) -> int:
    """0-based index of the largest variable present, -1 for the empty word."""
    for index in range(len(m) - 1, -1, -1):
        if m[index]:
            return index
    return -1


def mono_min_var(m: Monomial) -> int:
    """0-based index of the smallest variable present, len(m) for the empty word."""
    for index, e in enumerate(m):
        if e:
            return index
    return len(m)


def mono_bump(m: Monomial, index: int, by: int) -> Monomial:
    exps = list(m)
    exps[index] += by
    return tuple(exps)


def deglex_key(m: Monomial) -> Tuple[int, ...]:
    """Sort key for deglex with x1 < x2 < ... < xn: total degree, then e_n, e_{n-1}, ..."""
    return (sum(m),) + tuple(reversed(m))


def pure_power_index(m: Monomial) -> Optional[int]:
    """0-based variable index if m is x_i^e with e >= 1, else None."""
    support = [index for index, e in enumerate(m) if e]
    return support[0] if len(support) == 1 else None
