"""Lark grammar and transformer for terms, justification formulas and modal formulas."""

from __future__ import annotations

from functools import lru_cache
from typing import FrozenSet, List

from lark import Lark, Token, Transformer
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
)

from gjlogic.errors import FormulaSyntaxError
from gjlogic.syntax.ast import (
    BOTTOM,
    And,
    App,
    Atom,
    Bang,
    Box,
    Constant,
    Formula,
    Holds,
    Implies,
    JustTerm,
    Query,
    Sum,
    Variable,
    contains_box,
    contains_holds,
    top,
)

# Prefix operators bind tightest, then "&" (left), then "->" (right).
# "t:" applies to the smallest following formula.
GRAMMAR = r"""
    ?formula: conj
            | conj "->" formula          -> implies

    ?conj: unary
         | conj "&" unary                -> conj_and

    ?unary: "~" unary                    -> negation
          | "[]" unary                   -> box
          | term ":" unary               -> holds
          | primary

    ?primary: "bot"                      -> bottom
            | "top"                      -> top_sugar
            | ATOM                       -> atom
            | "(" formula ")"

    ?term: term "+" app_term             -> term_sum
         | app_term

    ?app_term: app_term "*" unary_term   -> term_app
             | unary_term

    ?unary_term: "!" unary_term          -> term_bang
               | "?" unary_term          -> term_query
               | CONSTANT                -> constant
               | VARIABLE                -> variable
               | "(" term ")"
               | "[" term "]"

    ATOM: /p[1-9][0-9]*/
    CONSTANT: /c[1-9][0-9]*/
    VARIABLE: /x[1-9][0-9]*/

    %import common.WS
    %ignore WS
"""


class _AstBuilder(Transformer):
    """Turn the lark parse tree into frozen AST nodes."""

    def implies(self, items: List[Formula]) -> Formula:
        return Implies(items[0], items[1])

    def conj_and(self, items: List[Formula]) -> Formula:
        return And(items[0], items[1])

    def negation(self, items: List[Formula]) -> Formula:
        return Implies(items[0], BOTTOM)

    def box(self, items: List[Formula]) -> Formula:
        return Box(items[0])

    def holds(self, items: list) -> Formula:
        return Holds(items[0], items[1])

    def bottom(self, _: list) -> Formula:
        return BOTTOM

    def top_sugar(self, _: list) -> Formula:
        return top()

    def atom(self, items: List[Token]) -> Formula:
        return Atom(int(items[0][1:]))

    def term_sum(self, items: List[JustTerm]) -> JustTerm:
        return Sum(items[0], items[1])

    def term_app(self, items: List[JustTerm]) -> JustTerm:
        return App(items[0], items[1])

    def term_bang(self, items: List[JustTerm]) -> JustTerm:
        return Bang(items[0])

    def term_query(self, items: List[JustTerm]) -> JustTerm:
        return Query(items[0])

    def constant(self, items: List[Token]) -> JustTerm:
        return Constant(int(items[0][1:]))

    def variable(self, items: List[Token]) -> JustTerm:
        return Variable(int(items[0][1:]))


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(GRAMMAR, parser="lalr", start=["formula", "term"])


def _syntax_error(text: str, exc: UnexpectedInput) -> FormulaSyntaxError:
    expected: FrozenSet[str] = frozenset()
    at_end = isinstance(exc, UnexpectedEOF)
    if isinstance(exc, UnexpectedToken):
        expected = frozenset(exc.expected)
        at_end = exc.token.type == "$END"
    elif isinstance(exc, UnexpectedCharacters):
        expected = frozenset(exc.allowed or ())
    elif isinstance(exc, UnexpectedEOF):
        expected = frozenset(exc.expected)
    column = getattr(exc, "column", None)
    position = len(text) if at_end or not isinstance(column, int) or column < 1 else column - 1
    where = "end of input" if at_end else f"column {position + 1}"
    listing = ", ".join(sorted(expected))
    message = f"syntax error at {where} in {text!r}"
    if listing:
        message = f"{message}; expected one of: {listing}"
    return FormulaSyntaxError(message, text=text, position=position, expected=expected)


def _parse(text: str, start: str) -> object:
    try:
        tree = _parser().parse(text, start=start)
    except UnexpectedInput as exc:
        raise _syntax_error(text, exc) from exc
    return _AstBuilder().transform(tree)


def parse_formula(text: str) -> Formula:
    """Parse either language; the result may mix ``Holds`` and ``Box``."""
    result = _parse(text, "formula")
    return result  # type: ignore[return-value]


def parse_jformula(text: str) -> Formula:
    """Parse a justification formula; modal boxes are rejected."""
    phi = parse_formula(text)
    if contains_box(phi):
        raise FormulaSyntaxError(
            f"'[]' is not part of the justification language in {text!r}",
            text=text,
            position=text.find("[]"),
            expected=frozenset({"term"}),
        )
    return phi


def parse_mformula(text: str) -> Formula:
    """Parse a modal formula; justification labels are rejected."""
    phi = parse_formula(text)
    if contains_holds(phi):
        raise FormulaSyntaxError(
            f"justification labels are not part of the modal language in {text!r}",
            text=text,
            position=text.find(":"),
            expected=frozenset({"BOX"}),
        )
    return phi


def parse_term(text: str) -> JustTerm:
    result = _parse(text, "term")
    return result  # type: ignore[return-value]


__all__ = [
    "GRAMMAR",
    "parse_formula",
    "parse_jformula",
    "parse_mformula",
    "parse_term",
]
