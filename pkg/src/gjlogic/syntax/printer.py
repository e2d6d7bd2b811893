"""Render terms and formulas in the concrete grammar accepted by the parser."""

from __future__ import annotations

from gjlogic.syntax.ast import (
    And,
    App,
    Atom,
    Bang,
    Bottom,
    Box,
    Constant,
    Formula,
    Holds,
    Implies,
    JustTerm,
    MetaFormula,
    MetaTerm,
    Query,
    Sum,
    Variable,
    is_negation,
)

# binding strength: implication < conjunction < prefix operators
_IMPLIES, _AND, _UNARY = 0, 1, 2
_SUM, _APP, _TERM_UNARY = 0, 1, 2


def format_term(term: JustTerm) -> str:
    return _term(term, _SUM)


def format_formula(phi: Formula) -> str:
    return _formula(phi, _IMPLIES)


def _term(term: JustTerm, context: int) -> str:
    if isinstance(term, Constant):
        return f"c{term.index}"
    if isinstance(term, Variable):
        return f"x{term.index}"
    if isinstance(term, MetaTerm):
        return f"<{term.name}>"
    if isinstance(term, Bang):
        return "!" + _term(term.inner, _TERM_UNARY)
    if isinstance(term, Query):
        return "?" + _term(term.inner, _TERM_UNARY)
    if isinstance(term, Sum):
        text = f"{_term(term.left, _SUM)}+{_term(term.right, _APP)}"
        return f"({text})" if context > _SUM else text
    if isinstance(term, App):
        text = f"{_term(term.left, _APP)}*{_term(term.right, _TERM_UNARY)}"
        return f"({text})" if context > _APP else text
    raise TypeError(f"not a justification term: {term!r}")


def _label(term: JustTerm) -> str:
    # compound labels are always parenthesised: (x1*x2):p1
    if isinstance(term, (Sum, App)):
        return f"({format_term(term)})"
    return format_term(term)


def _formula(phi: Formula, context: int) -> str:
    if isinstance(phi, Bottom):
        return "bot"
    if isinstance(phi, Atom):
        return f"p{phi.index}"
    if isinstance(phi, MetaFormula):
        return f"<{phi.name}>"
    if is_negation(phi):
        assert isinstance(phi, Implies)
        return "~" + _formula(phi.antecedent, _UNARY)
    if isinstance(phi, Holds):
        return f"{_label(phi.term)}:{_formula(phi.body, _UNARY)}"
    if isinstance(phi, Box):
        return "[]" + _formula(phi.body, _UNARY)
    if isinstance(phi, And):
        text = f"{_formula(phi.left, _AND)} & {_formula(phi.right, _UNARY)}"
        return f"({text})" if context > _AND else text
    if isinstance(phi, Implies):
        text = f"{_formula(phi.antecedent, _AND)} -> {_formula(phi.consequent, _IMPLIES)}"
        return f"({text})" if context > _IMPLIES else text
    raise TypeError(f"not a formula: {phi!r}")


__all__ = ["format_formula", "format_term"]
