"""Abstract syntax for justification terms, justification formulas and modal formulas.

Both formula languages share the propositional constructors; a justification
formula never contains ``Box`` and a modal formula never contains ``Holds``.
Negation is not a constructor: ``~phi`` is stored as ``Implies(phi, Bottom())``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Constant:
    index: int


@dataclass(frozen=True)
class Variable:
    index: int


@dataclass(frozen=True)
class Sum:
    left: "JustTerm"
    right: "JustTerm"


@dataclass(frozen=True)
class App:
    left: "JustTerm"
    right: "JustTerm"


@dataclass(frozen=True)
class Bang:
    inner: "JustTerm"


@dataclass(frozen=True)
class Query:
    inner: "JustTerm"


@dataclass(frozen=True)
class MetaTerm:
    """Term metavariable; only occurs inside axiom templates."""

    name: str


JustTerm = Union[Constant, Variable, Sum, App, Bang, Query, MetaTerm]


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Atom:
    index: int


@dataclass(frozen=True)
class Implies:
    antecedent: "Formula"
    consequent: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Holds:
    term: JustTerm
    body: "Formula"


@dataclass(frozen=True)
class Box:
    body: "Formula"


@dataclass(frozen=True)
class MetaFormula:
    """Formula metavariable; only occurs inside axiom templates."""

    name: str


Formula = Union[Bottom, Atom, Implies, And, Holds, Box, MetaFormula]
JFormula = Formula
MFormula = Formula

BOTTOM = Bottom()


def neg(phi: Formula) -> Formula:
    return Implies(phi, BOTTOM)


def top() -> Formula:
    return Implies(BOTTOM, BOTTOM)


def is_negation(phi: Formula) -> bool:
    return isinstance(phi, Implies) and isinstance(phi.consequent, Bottom)


def subterms(term: JustTerm) -> Iterator[JustTerm]:
    """Yield the term and its subterms, outermost first."""
    yield term
    if isinstance(term, (Sum, App)):
        yield from subterms(term.left)
        yield from subterms(term.right)
    elif isinstance(term, (Bang, Query)):
        yield from subterms(term.inner)


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Yield the formula and its subformulas, outermost first."""
    yield phi
    if isinstance(phi, Implies):
        yield from subformulas(phi.antecedent)
        yield from subformulas(phi.consequent)
    elif isinstance(phi, And):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, (Holds, Box)):
        yield from subformulas(phi.body)


def terms_in(phi: Formula) -> Iterator[JustTerm]:
    """Yield every term labelling a ``Holds`` node in phi, with its subterms."""
    for sub in subformulas(phi):
        if isinstance(sub, Holds):
            yield from subterms(sub.term)


def term_depth(term: JustTerm) -> int:
    if isinstance(term, (Sum, App)):
        return 1 + max(term_depth(term.left), term_depth(term.right))
    if isinstance(term, (Bang, Query)):
        return 1 + term_depth(term.inner)
    return 0


def formula_size(phi: Formula) -> int:
    return sum(1 for _ in subformulas(phi))


def contains_box(phi: Formula) -> bool:
    return any(isinstance(sub, Box) for sub in subformulas(phi))


def contains_holds(phi: Formula) -> bool:
    return any(isinstance(sub, Holds) for sub in subformulas(phi))


def is_justification_formula(phi: Formula) -> bool:
    return not any(isinstance(sub, (Box, MetaFormula)) for sub in subformulas(phi))


def is_modal_formula(phi: Formula) -> bool:
    return not any(isinstance(sub, (Holds, MetaFormula)) for sub in subformulas(phi))


def max_variable_index(phi: Formula) -> int:
    return max(
        (term.index for term in terms_in(phi) if isinstance(term, Variable)),
        default=0,
    )


def max_atom_index(phi: Formula) -> int:
    return max(
        (sub.index for sub in subformulas(phi) if isinstance(sub, Atom)), default=0
    )


__all__ = [
    "And",
    "App",
    "Atom",
    "BOTTOM",
    "Bang",
    "Bottom",
    "Box",
    "Constant",
    "Formula",
    "Holds",
    "Implies",
    "JFormula",
    "JustTerm",
    "MFormula",
    "MetaFormula",
    "MetaTerm",
    "Query",
    "Sum",
    "Variable",
    "contains_box",
    "contains_holds",
    "formula_size",
    "is_justification_formula",
    "is_modal_formula",
    "is_negation",
    "max_atom_index",
    "max_variable_index",
    "neg",
    "subformulas",
    "subterms",
    "term_depth",
    "terms_in",
    "top",
]
