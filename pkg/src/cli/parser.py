# src/cli/parser.py
"""
Expression grammar for ring elements:

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := number | ident | '(' expr ')' | '-' base

``*`` is the noncommutative ring product, taken left to right in the written order.
"""
import logging
from typing import List

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from src.coeff import parse_scalar
from src.errors import ExpressionSyntaxError, IterPowError, UnknownIdentifierError
from src.ring import Poly, RingSpec

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?expr: term
     | expr "+" term   -> add
     | expr "-" term   -> sub

?term: factor
     | term "*" factor -> mul

?factor: base
       | base "^" NUMBER -> pow

?base: NUMBER          -> number
     | NAME            -> ident
     | "(" expr ")"
     | "-" base        -> neg

ideal: expr ("," expr)*

NUMBER: /\d+(\/\d+)?/
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser="lalr", start=["expr", "ideal"], propagate_positions=False)


@v_args(inline=True)
class _PolyBuilder(Transformer):
    def __init__(self, spec: RingSpec):
        super().__init__()
        self.spec = spec

    def number(self, token: Token) -> Poly:
        return self.spec.const(parse_scalar(str(token), self.spec.field))

    def ident(self, token: Token) -> Poly:
        index = self.spec.variable_index(str(token))
        if index is None:
            raise UnknownIdentifierError(
                f"unknown identifier {str(token)!r} at position {token.start_pos}; "
                f"variables are {', '.join(self.spec.names)}"
            )
        return self.spec.var(index)

    def neg(self, value: Poly) -> Poly:
        return -value

    def add(self, left: Poly, right: Poly) -> Poly:
        return left + right

    def sub(self, left: Poly, right: Poly) -> Poly:
        return left - right

    def mul(self, left: Poly, right: Poly) -> Poly:
        return left * right

    def pow(self, base: Poly, token: Token) -> Poly:
        text = str(token)
        if not text.isdigit():
            raise ExpressionSyntaxError(f"exponent must be a natural number, got {text!r}", token.start_pos)
        return base ** int(text)

    def ideal(self, *gens: Poly) -> List[Poly]:
        return list(gens)


def _parse(text: str, spec: RingSpec, start: str):
    try:
        tree = _PARSER.parse(text, start=start)
    except UnexpectedEOF as e:
        raise ExpressionSyntaxError(f"unexpected end of expression {text!r}", len(text)) from e
    except UnexpectedCharacters as e:
        raise ExpressionSyntaxError(
            f"unexpected character {text[e.pos_in_stream]!r} at position {e.pos_in_stream}", e.pos_in_stream
        ) from e
    except UnexpectedInput as e:
        position = getattr(e, "pos_in_stream", None)
        token = getattr(e, "token", None)
        raise ExpressionSyntaxError(f"unexpected token {token!s} at position {position}", position) from e
    try:
        return _PolyBuilder(spec).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, IterPowError):
            raise e.orig_exc from None
        raise


def parse_expression(text: str, spec: RingSpec) -> Poly:
    """Parse one element and return its normal form."""
    return _parse(text, spec, "expr")


def parse_generators(text: str, spec: RingSpec) -> List[Poly]:
    """Comma-separated generator list, e.g. ``"x1, x2^2 - 1"``."""
    result = _parse(text, spec, "ideal")
    logger.debug("parsed %d generator(s) from %r", len(result), text)
    return result
