# src/gb/order.py
from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import Iterable, List, Optional, Tuple

from src.ring.monomial import Monomial, deglex_key


class OrderKind(Enum):
    DEGLEX = "deglex"


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-compatible order on PBW monomials; deglex with x1 < x2 < ... < xn."""
    kind: OrderKind = OrderKind.DEGLEX

    def key(self, m: Monomial) -> Tuple[int, ...]:
        return deglex_key(m)

    def sort_desc(self, monomials: Iterable[Monomial]) -> List[Monomial]:
        return sorted(monomials, key=self.key, reverse=True)

    def monomials(self, n: int, d: int, nvars: Optional[int] = None) -> List[Monomial]:
        """All monomials of degree <= d in x1..x_nvars (padded to length n), descending."""
        nvars = n if nvars is None else nvars
        found = []
        for total in range(d + 1):
            for combo in combinations_with_replacement(range(nvars), total):
                exps = [0] * n
                for index in combo:
                    exps[index] += 1
                found.append(tuple(exps))
        return self.sort_desc(found)


DEGLEX = MonomialOrder()
