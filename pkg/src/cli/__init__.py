from .parser import parse_expression, parse_generators
from .documents import (
    RingDocument,
    LieDocument,
    ReportDocument,
    RoundDocument,
    load_spec,
    load_lie,
    field_from_doc,
    field_to_doc,
)
from .verify import VerifyReport, verify_theorem, CONSISTENT, INCONCLUSIVE
from .main import cli, run_command, entry

__all__ = [
    'parse_expression', 'parse_generators',
    'RingDocument', 'LieDocument', 'ReportDocument', 'RoundDocument',
    'load_spec', 'load_lie', 'field_from_doc', 'field_to_doc',
    'VerifyReport', 'verify_theorem', 'CONSISTENT', 'INCONCLUSIVE',
    'cli', 'run_command', 'entry',
]
