# src/ring/validate.py
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from .monomial import mono_max_var
from .poly import Poly

logger = logging.getLogger(__name__)


@dataclass
class Violation:
    """One failed check. ``where`` holds 1-based indices: (i, j) for support, (i, k, j) for Leibniz."""
    kind: str
    where: Tuple[int, ...]
    message: str

    def as_dict(self) -> dict:
        return {"kind": self.kind, "where": list(self.where), "message": self.message}


@dataclass
class ValidationReport:
    ok: bool
    violations: List[Violation] = field(default_factory=list)

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.kind} at {v.where}: {v.message}" for v in self.violations)


def validate_spec(spec) -> ValidationReport:
    """Check that the table extends to genuine derivations.

    (1) δ_i(x_j) uses only x1..x_j.
    (2) For j < k < i, D_i respects x_k x_j - x_j x_k = δ_k(x_j):
        D_i(δ_k(x_j)) = D_i(x_k)x_j - x_j D_i(x_k) + x_k D_i(x_j) - D_i(x_j)x_k
    """
    violations: List[Violation] = []
    for (i, j), entry in spec.table_entries().items():
        worst = max(mono_max_var(m) + 1 for m in entry.terms)
        if worst > j:
            violations.append(Violation(
                "support", (i, j),
                f"δ{i}({spec.names[j - 1]}) = {entry} uses {spec.names[worst - 1]}",
            ))
    if violations:
        # Leibniz check needs the support constraint to be well defined
        logger.info("spec rejected on support: %d violation(s)", len(violations))
        return ValidationReport(False, violations)

    n = spec.n
    for i in range(3, n + 1):
        for k in range(2, i):
            for j in range(1, k):
                x_j, x_k = spec.var(j), spec.var(k)
                d_xj, d_xk = spec.delta(i, j), spec.delta(i, k)
                lhs = Poly(spec, spec._derive_terms(i - 1, spec.delta(k, j).terms))
                rhs = d_xk * x_j - x_j * d_xk + x_k * d_xj - d_xj * x_k
                if lhs != rhs:
                    violations.append(Violation(
                        "leibniz", (i, k, j),
                        f"D{i}(δ{k}({spec.names[j - 1]})) = {lhs} but the commutation rule gives {rhs}",
                    ))
    report = ValidationReport(not violations, violations)
    logger.debug("validate_spec(n=%d): %s", n, report.summary())
    return report
