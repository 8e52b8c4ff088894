# src/cli/documents.py
"""
Spec documents (ring and Lie specifications, JSON syntax) and report documents.

Ring:   {"field": "Q" | {"Fp": p}, "vars": ["x1", ...], "delta": {"i,j": "<expr in vars <= j>"}}
Lie:    {"field": ..., "dim": n, "brackets": {"i,j": [c1, ..., cn]}}   (i > j)
"""
import json
import logging
import os
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from config import settings
from src.coeff import FieldSpec, parse_scalar
from src.errors import SpecDocumentError
from src.lie import LieAlgebraSpec, to_ring_spec
from src.ring import RingSpec
from .parser import parse_expression

logger = logging.getLogger(__name__)

FieldDoc = Union[str, Dict[str, int]]


def field_from_doc(value: FieldDoc) -> FieldSpec:
    if value == "Q":
        return FieldSpec.rationals()
    if isinstance(value, dict) and set(value) == {"Fp"}:
        return FieldSpec.prime(value["Fp"])
    raise SpecDocumentError(f'field must be "Q" or {{"Fp": p}}, got {value!r}')


def field_to_doc(field: FieldSpec) -> FieldDoc:
    return "Q" if field.is_rational else {"Fp": field.p}


def _pair_key(key: str) -> Tuple[int, int]:
    try:
        i, j = (int(part) for part in key.split(","))
    except ValueError:
        raise SpecDocumentError(f'index key must look like "i,j", got {key!r}') from None
    return i, j


class RingDocument(BaseModel):
    field: FieldDoc = Field(..., description='Base field: "Q" or {"Fp": p}')
    vars: List[str] = Field(..., description="Variable names x1 < ... < xn", min_length=1)
    delta: Dict[str, str] = Field(default_factory=dict, description='δ_i(x_j) keyed "i,j" (i > j); omitted entries are 0')

    @field_validator("delta")
    @classmethod
    def _keys_are_pairs(cls, value: Dict[str, str]) -> Dict[str, str]:
        for key in value:
            _pair_key(key)
        return value


class LieDocument(BaseModel):
    field: FieldDoc = Field(..., description='Base field: "Q" or {"Fp": p}')
    dim: int = Field(..., description="Dimension n of L", ge=1)
    brackets: Dict[str, List[Union[int, str]]] = Field(
        default_factory=dict, description='[x_i, x_j] keyed "i,j" (i > j) as coordinates in x1..xn'
    )


def ring_from_document(doc: RingDocument) -> RingSpec:
    """Entries are parsed column by column (ascending j): δ_i(x_j) only needs the rows below j."""
    field = field_from_doc(doc.field)
    entries = sorted(((_pair_key(key), text) for key, text in doc.delta.items()), key=lambda item: (item[0][1], item[0][0]))
    table, parsing_table = {}, {}
    for (i, j), text in entries:
        staging = RingSpec(field, doc.vars, parsing_table)
        poly = parse_expression(text, staging)
        table[(i, j)] = poly.terms
        if poly.max_var() <= j:
            parsing_table[(i, j)] = poly.terms
    return RingSpec(field, doc.vars, table)


def lie_from_document(doc: LieDocument) -> LieAlgebraSpec:
    field = field_from_doc(doc.field)
    brackets = {}
    for key, coords in doc.brackets.items():
        brackets[_pair_key(key)] = [parse_scalar(str(c), field) for c in coords]
    return LieAlgebraSpec.from_brackets(field, doc.dim, brackets)


def _resolve(path: str) -> str:
    """Paths that do not exist are looked up in the bundled specs directory."""
    if os.path.exists(path) or os.path.isabs(path):
        return path
    bundled = os.path.join(settings.SPECS_DIR, path)
    return bundled if os.path.exists(bundled) else path


def _read_json(path: str) -> Tuple[str, Dict[str, Any]]:
    path = _resolve(path)
    try:
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as e:
        raise SpecDocumentError(f"cannot read spec file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SpecDocumentError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(raw, dict):
        raise SpecDocumentError(f"{path}: expected a JSON object")
    return path, raw


def _is_lie(raw: Dict[str, Any]) -> bool:
    return "dim" in raw or "brackets" in raw


def _invalid(path: str, e: ValidationError) -> SpecDocumentError:
    first = e.errors()[0]
    return SpecDocumentError(f"{path}: {first['msg']} at {first['loc']}")


def load_lie(path: str) -> LieAlgebraSpec:
    """Read a ``.lie`` document without compiling it, so Jacobi failures can be reported."""
    path, raw = _read_json(path)
    if not _is_lie(raw):
        raise SpecDocumentError(f"{path}: not a Lie spec (expected \"dim\" and \"brackets\")")
    try:
        return lie_from_document(LieDocument.model_validate(raw))
    except ValidationError as e:
        raise _invalid(path, e) from e


def load_spec(path: str) -> Tuple[RingSpec, Optional[LieAlgebraSpec]]:
    """Read a ``.ring`` or ``.lie`` document; Lie documents are compiled to U(L)."""
    path, raw = _read_json(path)
    try:
        if _is_lie(raw):
            lie = lie_from_document(LieDocument.model_validate(raw))
            logger.info("📄 loaded Lie spec %s (dim %d)", path, lie.n)
            return to_ring_spec(lie), lie
        ring = ring_from_document(RingDocument.model_validate(raw))
    except ValidationError as e:
        raise _invalid(path, e) from e
    logger.info("📄 loaded ring spec %s (%d variables over %s)", path, ring.n, ring.field)
    return ring, None


class RoundDocument(BaseModel):
    index: int = Field(..., description="Round m, approximating I(m)")
    exact: bool = Field(..., description="Round 1 is exact; later rounds are seeded heuristically")
    status: str = Field(..., description="CERTIFIED_ZERO | OBSERVED_ZERO | CANDIDATE_NONZERO | INCONCLUSIVE")
    seed: List[str] = Field(..., description="Generators of the ideal this round started from")
    k_dims: List[int] = Field(default_factory=list, description="dim I^k ∩ S_{<=d}, k = 1, 2, ...")
    stable_index: Optional[int] = Field(default=None, description="k* where truncations stopped changing")
    candidate: Optional[List[str]] = Field(default=None, description="Two-sided basis of the lifted candidate")
    certificate: Optional[str] = Field(default=None, description="Zero-certificate justification")
    cert_failure: Optional[str] = Field(default=None, description="Why no certificate was found")
    notes: List[str] = Field(default_factory=list)


class ReportDocument(BaseModel):
    command: str = Field(..., description="Command that produced the report")
    params: Dict[str, Any] = Field(default_factory=dict, description="Exact parameters, for reproduction")
    result: Optional[Dict[str, Any]] = Field(default=None, description="Command-specific result")
    hypotheses: Optional[Dict[str, Any]] = Field(default=None, description="Checked hypotheses on the ring and algebra")
    ideal: Optional[Dict[str, Any]] = Field(default=None, description="Ideal summary")
    rounds: Optional[List[RoundDocument]] = Field(default=None, description="Iterated power-intersection rounds")
    case_split: Optional[Dict[str, Any]] = Field(default=None, description="J = I ∩ F[x1] and its factorization")
    status: Optional[str] = Field(default=None, description="Overall iteration status: CERTIFIED_ZERO | OBSERVED_ZERO | INCONCLUSIVE")
    m_obs: Optional[int] = Field(default=None, description="Observed vanishing index")
    bound: Optional[int] = Field(default=None, description="Theoretical vanishing bound")
    verdict: Optional[str] = Field(default=None, description="CONSISTENT | INCONCLUSIVE")
    notes: List[str] = Field(default_factory=list)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)

    def to_text(self) -> str:
        return "\n".join(_text_lines(self.model_dump(exclude_none=True), 0))


def _scalar_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _text_lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _flat_list(item):
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            elif isinstance(item, list):
                lines.append(f"{pad}{key}: [{', '.join(_scalar_text(v) for v in item)}]")
            elif isinstance(item, dict):
                lines.append(f"{pad}{key}: {{}}")
            else:
                lines.append(f"{pad}{key}: {_scalar_text(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(item)}")
    else:
        lines.append(pad + _scalar_text(value))
    return lines


def _flat_list(item: Any) -> bool:
    return isinstance(item, list) and all(not isinstance(v, (dict, list)) for v in item) and len(item) <= 12
