# src/ideal/certificate.py
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Union

from src.ring import Poly, degree, is_central, is_normal
from .handle import IdealHandle

logger = logging.getLogger(__name__)


class CertFailure(Enum):
    NOT_PRINCIPAL = "NOT_PRINCIPAL"
    NOT_NORMAL = "NOT_NORMAL"
    DEGREE_ZERO = "DEGREE_ZERO"


@dataclass(frozen=True)
class ZeroCertificate:
    """Proof that the intersection of all powers of (f) is 0."""
    generator: Poly
    central: bool
    justification: str


def cert_zero_principal(I: IdealHandle) -> Union[ZeroCertificate, CertFailure]:
    """Certify ∩_k I^k = 0 when the two-sided basis is a single monic normal f of degree >= 1."""
    G = I.gb
    if len(G) != 1:
        return CertFailure.NOT_PRINCIPAL
    f = G.elements[0]
    k = degree(f)
    if k < 1:
        return CertFailure.DEGREE_ZERO
    if not is_normal(f):
        return CertFailure.NOT_NORMAL
    central = is_central(f)
    kind = "central" if central else "normal (fS = Sf; centrality is not needed)"
    justification = (
        f"I = f·S = S·f for the monic {kind} element f = {f} of degree {k}. "
        f"Then I^m = f^m·S, and in a filtered ring every nonzero element of f^m·S has degree >= {k}·m, "
        f"so no nonzero element lies in every power: the intersection of all powers is 0."
    )
    logger.info("certified zero intersection for (%s), central=%s", f, central)
    return ZeroCertificate(f, central, justification)
