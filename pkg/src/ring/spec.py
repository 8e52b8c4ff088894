# src/ring/spec.py
"""
RingSpec: the iterated differential polynomial ring F[x1,δ1,...,xn,δn].

The derivation table holds δ_i(x_j) for j < i (1-based). Multiplication is done by
recursion on the top variable: for a monomial a = a'·x_t^α and b = b'·x_t^β·b_high
(b' in x1..x_{t-1}, b_high in x_{t+1}..xn)

    x_t^α · b' = Σ_k C(α, k) D_t^k(b') x_t^(α-k)

where D_t is the Leibniz extension of row t. Products of monomials and D_t of monomials
are memoised per ring in LRU caches.
"""
import re
import logging
from fractions import Fraction
from math import comb
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from cachetools import LRUCache

from config import settings
from src.coeff import FieldSpec, Scalar
from src.errors import InvalidSpecError, RingMismatchError
from .monomial import Monomial, mono_add, mono_bump, mono_max_var, mono_min_var, mono_one, mono_var
from .poly import Poly

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

Terms = Dict[Monomial, Scalar]


def _accumulate(target: Terms, m: Monomial, value: Scalar) -> None:
    if m in target:
        total = target[m] + value
        if total.is_zero():
            del target[m]
        else:
            target[m] = total
    elif not value.is_zero():
        target[m] = value


class RingSpec:
    """Field, variable names and derivation table of an iterated differential polynomial ring.

    Args:
        field: base field (derivations vanish on it)
        names: n distinct identifiers, x1 < ... < xn in the monomial order
        table: {(i, j): δ_i(x_j)} for 1 <= j < i <= n, values as Poly or {monomial: scalar};
            omitted entries are 0
    """

    def __init__(self, field: FieldSpec, names: Sequence[str],
                 table: Optional[Mapping[Tuple[int, int], Union[Poly, Mapping[Monomial, object]]]] = None):
        names = tuple(names)
        if not names:
            raise InvalidSpecError("a ring needs at least one variable")
        for name in names:
            if not IDENTIFIER.match(name):
                raise InvalidSpecError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise InvalidSpecError("variable names must be distinct")

        self.field = field
        self.names = names
        self.n = len(names)
        self.one_monomial = mono_one(self.n)

        self._table: Dict[Tuple[int, int], Terms] = {}
        for (i, j), value in (table or {}).items():
            if not (1 <= j < i <= self.n):
                raise InvalidSpecError(f"derivation entry ({i},{j}) needs 1 <= j < i <= {self.n}")
            raw = value.terms if isinstance(value, Poly) else value
            terms: Terms = {}
            for m, c in raw.items():
                m = tuple(m)
                if len(m) != self.n or any(e < 0 for e in m):
                    raise InvalidSpecError(f"monomial {m} does not fit a ring with {self.n} variables")
                _accumulate(terms, m, field(c))
            if terms:
                self._table[(i - 1, j - 1)] = terms

        self._mul_cache = LRUCache(maxsize=settings.MUL_CACHE_SIZE)
        self._derivation_cache = LRUCache(maxsize=settings.DERIVATION_CACHE_SIZE)
        self._validation = None
        self._signature = (field, names, tuple(sorted(
            (key, tuple(sorted(terms.items(), key=lambda item: item[0])))
            for key, terms in self._table.items()
        )))

    # --- identity ---

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingSpec):
            return NotImplemented
        return self is other or self._signature == other._signature

    def __hash__(self) -> int:
        return hash(self._signature)

    def __repr__(self) -> str:
        return f"RingSpec({self.field}, {list(self.names)}, entries={len(self._table)})"

    # --- element constructors ---

    def zero(self) -> Poly:
        return Poly(self)

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        return Poly(self, {self.one_monomial: self.field(c)})

    def var(self, i: int) -> Poly:
        """x_i (1-based)."""
        if not 1 <= i <= self.n:
            raise InvalidSpecError(f"variable index {i} outside 1..{self.n}")
        return Poly(self, {mono_var(self.n, i - 1): self.field.one()})

    def monomial(self, exps: Sequence[int], coeff=1) -> Poly:
        return Poly(self, {tuple(exps): self.field(coeff)})

    def poly(self, terms: Mapping[Monomial, object]) -> Poly:
        return Poly(self, {tuple(m): self.field(c) for m, c in terms.items()})

    def variable_index(self, name: str) -> Optional[int]:
        """1-based index of a variable name, None when unknown."""
        try:
            return self.names.index(name) + 1
        except ValueError:
            return None

    # --- derivation table ---

    def delta(self, i: int, j: int) -> Poly:
        """δ_i(x_j) for j < i (1-based)."""
        if not (1 <= j < i <= self.n):
            raise InvalidSpecError(f"no derivation entry ({i},{j}) in a ring with {self.n} variables")
        return Poly(self, self._table.get((i - 1, j - 1), {}))

    def table_entries(self) -> Dict[Tuple[int, int], Poly]:
        """Nonzero entries, 1-based keys."""
        return {(i + 1, j + 1): Poly(self, terms) for (i, j), terms in sorted(self._table.items())}

    @property
    def support_ok(self) -> bool:
        """Every δ_i(x_j) uses only x1..x_j."""
        return all(mono_max_var(m) <= j for (_, j), terms in self._table.items() for m in terms)

    @property
    def filtered(self) -> bool:
        """Every table entry has total degree <= 1."""
        return all(sum(m) <= 1 for terms in self._table.values() for m in terms)

    @property
    def t2_shape(self) -> bool:
        """Every δ_i(x_j) is u·x_j + v with u, v free of x_j."""
        return all(m[j] <= 1 for (_, j), terms in self._table.items() for m in terms)

    def validation(self):
        if self._validation is None:
            from .validate import validate_spec
            self._validation = validate_spec(self)
        return self._validation

    def require_valid(self) -> None:
        report = self.validation()
        if not report.ok:
            raise InvalidSpecError(f"derivation table is inconsistent: {report.summary()}",
                                   {"violations": [v.as_dict() for v in report.violations]})

    def prefix(self, t: int) -> "RingSpec":
        """The subring F[x1,δ1,...,x_t,δ_t] as a ring of its own."""
        if not 1 <= t <= self.n:
            raise InvalidSpecError(f"prefix length {t} outside 1..{self.n}")
        table = {(i + 1, j + 1): {m[:t]: c for m, c in terms.items()}
                 for (i, j), terms in self._table.items() if i < t}
        return RingSpec(self.field, self.names[:t], table)

    # --- multiplication engine (0-based, on term dicts) ---

    def multiply(self, f: Poly, g: Poly) -> Poly:
        if f.ring is not self and f.ring != self or g.ring is not self and g.ring != self:
            raise RingMismatchError("polynomials belong to different rings")
        if not self.support_ok:
            raise InvalidSpecError("derivation table violates the support constraint δ_i(x_j) ∈ F[x1..xj]")
        return Poly(self, self._mul_terms(f.terms, g.terms))

    def _mul_terms(self, a: Terms, b: Terms) -> Terms:
        result: Terms = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                coeff = ca * cb
                for m, c in self._mono_mul(ma, mb).items():
                    _accumulate(result, m, coeff * c)
        return result

    def _mono_mul(self, a: Monomial, b: Monomial) -> Terms:
        key = (a, b)
        cached = self._mul_cache.get(key)
        if cached is None:
            cached = self._mono_mul_uncached(a, b)
            self._mul_cache[key] = cached
        return cached

    def _mono_mul_uncached(self, a: Monomial, b: Monomial) -> Terms:
        one = self.field.one()
        t = mono_max_var(a)
        if t < 0:
            return {b: one}
        if mono_min_var(b) >= t:
            return {mono_add(a, b): one}

        n = self.n
        alpha, beta = a[t], b[t]
        a_rest = a[:t] + (0,) * (n - t)
        b_prime = b[:t] + (0,) * (n - t)
        tail = (0,) * t + (0,) + b[t + 1:]

        result: Terms = {}
        current: Terms = {b_prime: one}
        for k in range(alpha + 1):
            if not current:
                break
            binom = comb(alpha, k)
            shift = alpha - k + beta
            for m, c in current.items():
                scaled = c * binom
                if scaled.is_zero():
                    continue
                for m2, c2 in self._mono_mul(a_rest, m).items():
                    word = mono_add(mono_bump(m2, t, shift), tail)
                    _accumulate(result, word, scaled * c2)
            if k < alpha:
                current = self._derive_terms(t, current)
        return result

    def _derive_terms(self, i: int, f: Terms) -> Terms:
        """D_i (0-based i) on a term dict in the variables below i."""
        result: Terms = {}
        for m, c in f.items():
            for dm, dc in self._derive_mono(i, m).items():
                _accumulate(result, dm, c * dc)
        return result

    def _derive_mono(self, i: int, m: Monomial) -> Terms:
        key = (i, m)
        cached = self._derivation_cache.get(key)
        if cached is not None:
            return cached
        result: Terms = {}
        t = mono_max_var(m)
        if t >= 0:
            # D(m'·x_t) = D(m')·x_t + m'·D(x_t); D(m') lives in x1..x_t
            m_prime = mono_bump(m, t, -1)
            for dm, dc in self._derive_mono(i, m_prime).items():
                _accumulate(result, mono_bump(dm, t, 1), dc)
            entry = self._table.get((i, t))
            if entry:
                for em, ec in entry.items():
                    for pm, pc in self._mono_mul(m_prime, em).items():
                        _accumulate(result, pm, ec * pc)
        self._derivation_cache[key] = result
        return result
