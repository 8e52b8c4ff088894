# src/ideal/invariance.py
import logging
from typing import Iterable, Optional

from src.errors import DerivationDomainError, ParameterError
from src.gb import DEGLEX, echelon_span, member, truncated_basis, twosided_gb
from src.ring import Poly, apply_derivation
from .handle import IdealHandle

logger = logging.getLogger(__name__)


def is_invariant(I: IdealHandle, ds: Iterable[int]) -> bool:
    """True when δ_i(g) ∈ I for every generator g and every i in ds.

    I is read as an ideal of the subring F[x1,δ1,...,x_t,δ_t], t = min(ds) - 1, where
    all derivations in ds are defined; membership uses the two-sided basis there.
    """
    ds = sorted(set(ds))
    gens = [g for g in I.generators if not g.is_zero()]
    if not ds or not gens:
        return True
    spec = I.ring
    t = ds[0] - 1
    for g in gens:
        if g.max_var() > t:
            raise DerivationDomainError(
                f"generator {g} uses variables outside x1..x{t}, where δ{ds[0]} is defined"
            )
    if t == 0:
        # scalars: every derivation kills them
        return True
    G = twosided_gb(gens, spec, nvars=t)
    for i in ds:
        for g in gens:
            if not member(apply_derivation(spec, i, g), G):
                logger.debug("is_invariant: δ%d(%s) not in the ideal", i, g)
                return False
    return True


def slice_s0(I: IdealHandle, d: int) -> Optional[Poly]:
    """Monic generator of J = I ∩ F[x1] when J has a nonzero element of degree <= d, else None.

    Eliminates x2..xn from the exact truncation I ∩ S_{<=d}: columns with any of x2..xn
    come first, so echelon rows whose pivot is a power of x1 span J ∩ S_{<=d}.
    """
    if d < 0:
        raise ParameterError(f"degree bound must be >= 0, got {d}")
    spec = I.ring
    truncation = truncated_basis(I.gb, d)
    monomials = DEGLEX.monomials(spec.n, d)
    columns = [m for m in monomials if any(m[1:])] + [m for m in monomials if not any(m[1:])]
    rows = echelon_span(spec, truncation.rows, columns)
    in_s0 = [r for r in rows if r.max_var() <= 1]
    if not in_s0:
        return None
    return min(in_s0, key=lambda r: r.total_degree()).monic()
