# src/invariant/factor.py
"""
Factorization in F[x1]: square-free decomposition, Berlekamp over 𝔽_p, and
rational-root extraction over ℚ (full rational factorization is not attempted).
"""
import logging
import random
from fractions import Fraction
from math import lcm
from typing import Dict, List, Tuple

from sympy import divisors

from config import settings
from src.coeff import FieldSpec
from src.errors import FactorizationError, FieldMismatchError
from src.gb import nullspace_rows
from .unipoly import UniPoly, gcd

logger = logging.getLogger(__name__)

Factorization = List[Tuple[UniPoly, int]]


def _require_monic(f: UniPoly) -> None:
    if not f.is_monic():
        raise FactorizationError(f"expected a monic polynomial, got {f}")


def _pth_root(f: UniPoly, p: int) -> UniPoly:
    """g with g(x)^p = f(x) for f in 𝔽_p[x^p]."""
    return UniPoly(f.field, f.coeffs[::p])


def _sqf_char_p(f: UniPoly, p: int) -> Dict[UniPoly, int]:
    found: Dict[UniPoly, int] = {}
    c = gcd(f, f.derivative()) if not f.derivative().is_zero() else f
    w = f // c
    i = 1
    while not w.is_one() and w.degree > 0:
        y = gcd(w, c)
        factor = w // y
        if factor.degree > 0:
            found[factor] = found.get(factor, 0) + i
        w, c, i = y, c // y, i + 1
    if c.degree > 0:
        for h, m in _sqf_char_p(_pth_root(c, p), p).items():
            found[h] = found.get(h, 0) + m * p
    return found


def _sqf_char_0(f: UniPoly) -> Dict[UniPoly, int]:
    # Yun
    found: Dict[UniPoly, int] = {}
    df = f.derivative()
    a = gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            found[a] = i
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return found


def factor_squarefree(f: UniPoly) -> Factorization:
    """[(square-free part, multiplicity)] with pairwise coprime monic parts, highest multiplicity first."""
    _require_monic(f)
    if f.degree < 1:
        return []
    if f.field.is_rational:
        found = _sqf_char_0(f)
    else:
        found = _sqf_char_p(f, f.field.p)
    return sorted(found.items(), key=lambda item: (-item[1], item[0].sort_key()))


def _pow_mod(base: UniPoly, e: int, modulus: UniPoly) -> UniPoly:
    result = UniPoly.const(base.field, 1)
    base = base % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        e >>= 1
        if e:
            base = (base * base) % modulus
    return result


def _berlekamp_basis(g: UniPoly) -> List[UniPoly]:
    """Basis of {h : h^p ≡ h mod g}, from the null space of (Q - I)^T."""
    field, n, p = g.field, g.degree, g.field.p
    xp = _pow_mod(UniPoly.x(field), p, g)
    rows = []
    power = UniPoly.const(field, 1)
    for _ in range(n):
        coeffs = list(power.coeffs) + [field.zero()] * (n - len(power.coeffs))
        rows.append(coeffs)
        power = (power * xp) % g
    for k in range(n):
        rows[k][k] = rows[k][k] - field.one()
    transposed = [[rows[k][j] for k in range(n)] for j in range(n)]
    return [UniPoly(field, tuple(v)) for v in nullspace_rows(field, transposed, n)]


def _split_scan(u: UniPoly, h: UniPoly, p: int) -> List[UniPoly]:
    parts, rest = [], u
    for s in range(p):
        if rest.degree < 1:
            break
        d = gcd(rest, h - s)
        if d.degree > 0:
            parts.append(d)
            rest = rest // d
    if rest.degree > 0:
        parts.append(rest.monic())
    return parts


def _split_random(u: UniPoly, basis: List[UniPoly], p: int, rng: random.Random) -> List[UniPoly]:
    h = UniPoly(u.field)
    for b in basis:
        h = h + b.scale(rng.randrange(p))
    a = _pow_mod(h, (p - 1) // 2, u) - 1
    d = gcd(u, a)
    if 0 < d.degree < u.degree:
        return [d, (u // d).monic()]
    return [u]


def _berlekamp_squarefree(g: UniPoly) -> List[UniPoly]:
    p = g.field.p
    basis = _berlekamp_basis(g)
    r = len(basis)
    factors = [g]
    if r == 1:
        return factors
    if p <= settings.BERLEKAMP_SCAN_LIMIT:
        for h in basis:
            if h.degree < 1:
                continue
            factors = [part for u in factors for part in _split_scan(u, h, p)]
            if len(factors) == r:
                break
    else:
        rng = random.Random(settings.BERLEKAMP_SEED)
        while len(factors) < r:
            factors = [part for u in factors for part in _split_random(u, basis, p, rng)]
    if len(factors) != r:
        raise FactorizationError(f"Berlekamp split {g} into {len(factors)} factors, expected {r}")
    return factors


def factor_berlekamp(f: UniPoly, p: int) -> List[UniPoly]:
    """Monic irreducible factors of f over 𝔽_p, with repetition, ascending."""
    _require_monic(f)
    if f.field.is_rational:
        raise FactorizationError("Berlekamp factorization needs a prime field")
    if f.field.p != p:
        raise FieldMismatchError(f"polynomial over {f.field} factored modulo {p}")
    factors = []
    for part, multiplicity in factor_squarefree(f):
        for q in _berlekamp_squarefree(part):
            factors.extend([q] * multiplicity)
    return sorted(factors, key=lambda q: q.sort_key())


def rational_roots(f: UniPoly) -> List[Fraction]:
    """Distinct rational roots, ascending."""
    if not f.field.is_rational:
        raise FactorizationError("rational roots need the rational field")
    if f.degree < 1:
        return []
    scale = lcm(*(c.value.denominator for c in f.coeffs))
    ints = [int(c.value * scale) for c in f.coeffs]
    roots = set()
    low = next(k for k, a in enumerate(ints) if a != 0)
    if low > 0:
        roots.add(Fraction(0))
    ints = ints[low:]
    for num in divisors(abs(ints[0])):
        for den in divisors(abs(ints[-1])):
            for candidate in (Fraction(num, den), Fraction(-num, den)):
                if f(candidate).is_zero():
                    roots.add(candidate)
    return sorted(roots)


def irreducible_factors(f: UniPoly) -> Tuple[Factorization, bool]:
    """Irreducible factorization with multiplicities, ascending; the flag is False when a
    rational cofactor of degree >= 4 without rational roots had to be kept unsplit."""
    _require_monic(f)
    if not f.field.is_rational:
        counts: Dict[UniPoly, int] = {}
        for q in factor_berlekamp(f, f.field.p):
            counts[q] = counts.get(q, 0) + 1
        return sorted(counts.items(), key=lambda item: item[0].sort_key()), True

    complete = True
    found: Factorization = []
    for part, multiplicity in factor_squarefree(f):
        rest = part
        for root in rational_roots(part):
            linear = UniPoly.of(f.field, [-root, 1])
            found.append((linear, multiplicity))
            rest = rest // linear
        if rest.degree >= 4:
            complete = False
            logger.info("cofactor %s has no rational roots and degree %d; left unsplit", rest, rest.degree)
        if rest.degree >= 1:
            # degree 2 or 3 without rational roots is irreducible
            found.append((rest, multiplicity))
    return sorted(found, key=lambda item: item[0].sort_key()), complete
