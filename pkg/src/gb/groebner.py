# src/gb/groebner.py
"""
Left and two-sided Groebner bases in filtered iterated differential polynomial rings.

Filtered tables (every δ_i(x_j) of degree <= 1) make the ring a G-algebra for deglex:
LM(m·g) = m·LM(g) with coefficient LC(g), so left division by leading terms is sound.
Buchberger runs with the normal pair strategy (smallest lcm first) and, when
GB_CHAIN_CRITERION is set, Buchberger's chain criterion. The product criterion does not
hold for noncommuting variables and is not used.
"""
import heapq
import logging
import math
from dataclasses import dataclass
from enum import Enum
from itertools import product as cartesian
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from config import settings
from src.errors import GroebnerInvariantError, InvalidSpecError, RingMismatchError, UnfilteredRingError
from src.ring import Poly, RingSpec, mul
from src.ring.monomial import (
    Monomial,
    deglex_key,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    pure_power_index,
)

logger = logging.getLogger(__name__)


class Sidedness(Enum):
    LEFT = "left"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class GBasis:
    """Reduced Groebner basis: monic elements with distinct leading monomials, ascending by LM.

    ``nvars`` is the number of leading variables the ideal lives in (the subring
    F[x1,δ1,...,x_t,δ_t] when nvars = t < n).
    """
    ring: RingSpec
    sidedness: Sidedness
    elements: Tuple[Poly, ...]
    nvars: int

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.lm for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_one()

    def is_zero(self) -> bool:
        return not self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self.elements) + "}"


def _require_filtered(spec: RingSpec) -> None:
    spec.require_valid()
    if not spec.filtered:
        raise UnfilteredRingError(
            "Groebner bases need a filtered ring: some δ_i(x_j) has degree > 1",
            {"entries": {f"{i},{j}": str(p) for (i, j), p in spec.table_entries().items()}},
        )


def _check_ring(spec: RingSpec, polys: Iterable[Poly]) -> List[Poly]:
    polys = list(polys)
    for f in polys:
        if f.ring is not spec and f.ring != spec:
            raise RingMismatchError("generators belong to different rings")
    return polys


def _reduce(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Full left reduction of f by monic ``basis``; first divisor in list order is used."""
    spec = f.ring
    remainder: Dict[Monomial, object] = {}
    rest = f
    while not rest.is_zero():
        lm = rest.lm
        coeff = rest.terms[lm]
        divisor = next((g for g in basis if mono_divides(g.lm, lm)), None)
        if divisor is None:
            remainder[lm] = coeff
            rest = Poly(spec, {m: c for m, c in rest.terms.items() if m != lm})
            continue
        # LM(m·g) = lm with coefficient 1 since g is monic
        multiple = mul(spec.monomial(mono_div(lm, divisor.lm), coeff), divisor)
        rest = rest - multiple
    return Poly(spec, remainder)


def reduce(f: Poly, G: Union[GBasis, Sequence[Poly]]) -> Poly:
    """Normal form of f modulo the left ideal of G; no term of the result is divisible by any LM(g)."""
    elements = G.elements if isinstance(G, GBasis) else [g.monic() for g in G if g]
    _require_filtered(f.ring)
    if not elements:
        return f
    _check_ring(f.ring, elements)
    return _reduce(f, elements)


def member(f: Poly, G: GBasis) -> bool:
    return f.is_zero() or reduce(f, G).is_zero()


class _Buchberger:
    """Incremental Buchberger state: elements can be added between runs."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.elements: List[Poly] = []
        self._queue: List[Tuple] = []
        self._live: Set[Tuple[int, int]] = set()
        self._lcms: Dict[Tuple[int, int], Monomial] = {}
        self.unit = False
        self.pairs_reduced = 0
        self.pairs_skipped = 0

    def add(self, f: Poly) -> bool:
        """Reduce f by the current elements and keep it if nonzero."""
        if self.unit:
            return False
        r = _reduce(f, self.elements) if self.elements else f
        if r.is_zero():
            return False
        r = r.monic()
        if r.is_constant():
            self.elements = [self.spec.one()]
            self._queue.clear()
            self._live.clear()
            self.unit = True
            return True
        k = len(self.elements)
        lm_k = r.lm
        if settings.GB_CHAIN_CRITERION:
            for pair in list(self._live):
                i, j = pair
                lcm_ij = self._lcms[pair]
                if (mono_divides(lm_k, lcm_ij)
                        and mono_lcm(self.elements[i].lm, lm_k) != lcm_ij
                        and mono_lcm(self.elements[j].lm, lm_k) != lcm_ij):
                    self._live.discard(pair)
                    self.pairs_skipped += 1
        self.elements.append(r)
        for i in range(k):
            lcm = mono_lcm(self.elements[i].lm, lm_k)
            pair = (i, k)
            self._lcms[pair] = lcm
            self._live.add(pair)
            heapq.heappush(self._queue, (mono_degree(lcm), deglex_key(lcm), i, k))
        return True

    def _spoly(self, i: int, j: int) -> Poly:
        f, g = self.elements[i], self.elements[j]
        lcm = self._lcms[(i, j)]
        p = mul(self.spec.monomial(mono_div(lcm, f.lm)), f)
        q = mul(self.spec.monomial(mono_div(lcm, g.lm)), g)
        return p - q.scale(p.lc / q.lc)

    def run(self) -> None:
        while self._queue and not self.unit:
            _, _, i, j = heapq.heappop(self._queue)
            if (i, j) not in self._live:
                continue
            self._live.discard((i, j))
            self.pairs_reduced += 1
            self.add(self._spoly(i, j))

    def reduced(self) -> List[Poly]:
        """Minimalize and interreduce; result ascending by LM."""
        if self.unit:
            return [self.spec.one()]
        ordered = sorted(self.elements, key=lambda g: deglex_key(g.lm))
        minimal: List[Poly] = []
        for g in ordered:
            if not any(mono_divides(h.lm, g.lm) for h in minimal):
                minimal.append(g)
        result = []
        for index, g in enumerate(minimal):
            others = minimal[:index] + minimal[index + 1:]
            lead = Poly(self.spec, {g.lm: g.lc})
            tail = Poly(self.spec, {m: c for m, c in g.terms.items() if m != g.lm})
            result.append((lead + _reduce(tail, others) if others else g).monic())
        return sorted(result, key=lambda g: deglex_key(g.lm))


def _prepare(gens: Iterable[Poly], spec: Optional[RingSpec]) -> Tuple[RingSpec, List[Poly]]:
    gens = [g for g in gens]
    if spec is None:
        if not gens:
            raise InvalidSpecError("cannot infer the ring of an empty generator list")
        spec = gens[0].ring
    gens = [g for g in _check_ring(spec, gens) if not g.is_zero()]
    _require_filtered(spec)
    # smallest first so duplicates and multiples vanish during insertion
    return spec, sorted(gens, key=lambda g: deglex_key(g.lm))


def left_gb(gens: Iterable[Poly], spec: Optional[RingSpec] = None) -> GBasis:
    """Reduced left Groebner basis of Σ S·g."""
    spec, gens = _prepare(gens, spec)
    builder = _Buchberger(spec)
    for g in gens:
        builder.add(g)
    builder.run()
    elements = tuple(builder.reduced()) if gens else ()
    logger.debug("left_gb: %d generators -> %d elements (%d pairs reduced, %d skipped)",
                 len(gens), len(elements), builder.pairs_reduced, builder.pairs_skipped)
    return GBasis(spec, Sidedness.LEFT, elements, spec.n)


def twosided_gb(gens: Iterable[Poly], spec: Optional[RingSpec] = None, nvars: Optional[int] = None) -> GBasis:
    """Reduced Groebner basis of the two-sided ideal generated by ``gens``.

    Right closure: every element g and variable x_i must satisfy g·x_i ∈ S·G; nonzero
    remainders join the basis and Buchberger resumes. With ``nvars = t`` the ideal is
    taken in F[x1,δ1,...,x_t,δ_t] and the generators must live there.
    """
    spec, gens = _prepare(gens, spec)
    t = spec.n if nvars is None else nvars
    if not 1 <= t <= spec.n:
        raise InvalidSpecError(f"nvars={t} outside 1..{spec.n}")
    for g in gens:
        if g.max_var() > t:
            raise InvalidSpecError(f"generator {g} does not lie in the subring of x1..x{t}")
    if not gens:
        return GBasis(spec, Sidedness.TWO_SIDED, (), t)

    builder = _Buchberger(spec)
    for g in gens:
        builder.add(g)
    checked: Set[Tuple[int, int]] = set()
    rounds = 0
    grew = True
    while grew:
        builder.run()
        rounds += 1
        grew = False
        for index in range(len(builder.elements)):
            for i in range(1, t + 1):
                if builder.unit or (index, i) in checked:
                    continue
                checked.add((index, i))
                grew = builder.add(mul(builder.elements[index], spec.var(i))) or grew

    basis = GBasis(spec, Sidedness.TWO_SIDED, tuple(builder.reduced()), t)
    for g in basis.elements:
        for i in range(1, t + 1):
            x = spec.var(i)
            if not _reduce(mul(x, g), basis.elements).is_zero():
                raise GroebnerInvariantError(f"left closure failed: x{i}·({g}) is not in the ideal")
            if not _reduce(mul(g, x), basis.elements).is_zero():
                raise GroebnerInvariantError(f"right closure failed: ({g})·x{i} is not in the ideal")
    logger.debug("twosided_gb: %d generators -> %d elements in %d closure round(s)",
                 len(gens), len(basis.elements), rounds)
    return basis


def quotient_dim(G: GBasis) -> Union[int, float]:
    """dim S/I by counting standard monomials; math.inf when some variable has no pure power among the LMs."""
    if G.is_unit():
        return 0
    n, t = G.ring.n, G.nvars
    lms = G.leading_monomials
    bounds = [None] * t
    for m in lms:
        index = pure_power_index(m)
        if index is not None and index < t:
            e = m[index]
            bounds[index] = e if bounds[index] is None else min(bounds[index], e)
    if any(b is None for b in bounds):
        return math.inf
    count = 0
    for exps in cartesian(*(range(b) for b in bounds)):
        m = tuple(exps) + (0,) * (n - t)
        if not any(mono_divides(lm, m) for lm in lms):
            count += 1
    return count
