"""Axiom schemes, one-sided template matching and the calculus tables."""

from __future__ import annotations

from dataclasses import dataclass, fields, is_dataclass
from typing import Dict, Mapping, Optional, Tuple, Union

from gjlogic.syntax.ast import (
    BOTTOM,
    And,
    App,
    Bang,
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
    neg,
)

Binding = Union[Formula, JustTerm]
Bindings = Dict[str, Binding]

_TERM_TYPES = (Constant, Variable, Sum, App, Bang, Query)

_phi, _psi, _chi = MetaFormula("phi"), MetaFormula("psi"), MetaFormula("chi")
_t, _s = MetaTerm("t"), MetaTerm("s")


@dataclass(frozen=True)
class AxiomScheme:
    name: str
    template: Formula

    def match(self, phi: Formula) -> Optional[Bindings]:
        return match_scheme(self, phi)

    def instantiate(self, bindings: Mapping[str, Binding]) -> Formula:
        return instantiate(self.template, bindings)  # type: ignore[return-value]


def _imp(a: Formula, b: Formula) -> Formula:
    return Implies(a, b)


SCHEMES: Dict[str, AxiomScheme] = {
    scheme.name: scheme
    for scheme in (
        AxiomScheme("A1", _imp(_imp(_phi, _psi), _imp(_imp(_psi, _chi), _imp(_phi, _chi)))),
        AxiomScheme("A2", _imp(And(_phi, _psi), _phi)),
        AxiomScheme("A3", _imp(And(_phi, _psi), And(_psi, _phi))),
        AxiomScheme("A5a", _imp(_imp(_phi, _imp(_psi, _chi)), _imp(And(_phi, _psi), _chi))),
        AxiomScheme("A5b", _imp(_imp(And(_phi, _psi), _chi), _imp(_phi, _imp(_psi, _chi)))),
        AxiomScheme(
            "A6",
            _imp(_imp(_imp(_phi, _psi), _chi), _imp(_imp(_imp(_psi, _phi), _chi), _chi)),
        ),
        AxiomScheme("A7", _imp(BOTTOM, _phi)),
        AxiomScheme("G4", _imp(_phi, And(_phi, _phi))),
        AxiomScheme(
            "J",
            _imp(Holds(_t, _imp(_phi, _psi)), _imp(Holds(_s, _phi), Holds(App(_t, _s), _psi))),
        ),
        AxiomScheme("Plus1", _imp(Holds(_t, _phi), Holds(Sum(_t, _s), _phi))),
        AxiomScheme("Plus2", _imp(Holds(_s, _phi), Holds(Sum(_t, _s), _phi))),
        AxiomScheme("F", _imp(Holds(_t, _phi), _phi)),
        AxiomScheme("Bang", _imp(Holds(_t, _phi), Holds(Bang(_t), Holds(_t, _phi)))),
        AxiomScheme(
            "Query", _imp(neg(Holds(_t, _phi)), Holds(Query(_t), neg(Holds(_t, _phi))))
        ),
        AxiomScheme("K", _imp(Box(_imp(_phi, _psi)), _imp(Box(_phi), Box(_psi)))),
        AxiomScheme("Z", _imp(neg(neg(Box(_phi))), Box(neg(neg(_phi))))),
        AxiomScheme("T", _imp(Box(_phi), _phi)),
        AxiomScheme("Four", _imp(Box(_phi), Box(Box(_phi)))),
        AxiomScheme("NegIntro", _imp(neg(Box(_phi)), Box(neg(Box(_phi))))),
    )
}

PROPOSITIONAL: Tuple[str, ...] = ("A1", "A2", "A3", "A5a", "A5b", "A6", "A7", "G4")
_GJ = PROPOSITIONAL + ("J", "Plus1", "Plus2")
_GK = PROPOSITIONAL + ("K", "Z")

CALCULUS_SCHEMES: Dict[str, Tuple[str, ...]] = {
    "GJ": _GJ,
    "GJT": _GJ + ("F",),
    "GJ4": _GJ + ("Bang",),
    "GLP": _GJ + ("F", "Bang"),
    "GJ45": _GJ + ("Bang", "Query"),
    "GJT45": _GJ + ("F", "Bang", "Query"),
    "GK": _GK,
    "GT": _GK + ("T",),
    "GK4": _GK + ("Four",),
    "GS4": _GK + ("T", "Four"),
    "GK45": _GK + ("Four", "NegIntro"),
}

JUSTIFICATION_CALCULI: Tuple[str, ...] = ("GJ", "GJT", "GJ4", "GLP", "GJ45", "GJT45")
MODAL_CALCULI: Tuple[str, ...] = ("GK", "GT", "GK4", "GS4", "GK45")

MODAL_COUNTERPART: Dict[str, str] = {
    "GJ": "GK",
    "GJT": "GT",
    "GJ4": "GK4",
    "GLP": "GS4",
    "GJ45": "GK45",
}

# justification scheme -> modal scheme under the forgetful projection
PROJECTED_SCHEME: Dict[str, str] = {
    **{name: name for name in PROPOSITIONAL},
    "J": "K",
    "F": "T",
    "Bang": "Four",
    "Query": "NegIntro",
}


def match_scheme(scheme: AxiomScheme, phi: Formula) -> Optional[Bindings]:
    """Bindings making the scheme's template syntactically equal to phi, if any."""
    bindings: Bindings = {}
    if _match(scheme.template, phi, bindings):
        return bindings
    return None


def _match(pattern: object, target: object, bindings: Bindings) -> bool:
    if isinstance(pattern, (MetaFormula, MetaTerm)):
        if isinstance(pattern, MetaTerm) != _is_term(target):
            return False
        bound = bindings.get(pattern.name)
        if bound is None:
            bindings[pattern.name] = target  # type: ignore[assignment]
            return True
        return bound == target
    if type(pattern) is not type(target):
        return False
    if not is_dataclass(pattern):
        return pattern == target
    for item in fields(pattern):
        left, right = getattr(pattern, item.name), getattr(target, item.name)
        if is_dataclass(left):
            if not _match(left, right, bindings):
                return False
        elif left != right:
            return False
    return True


def _is_term(node: object) -> bool:
    return isinstance(node, _TERM_TYPES)


def instantiate(template: object, bindings: Mapping[str, Binding]) -> object:
    """Substitute bound metavariables into a template."""
    if isinstance(template, (MetaFormula, MetaTerm)):
        return bindings.get(template.name, template)
    if not is_dataclass(template):
        return template
    values = {
        item.name: instantiate(getattr(template, item.name), bindings)
        for item in fields(template)
    }
    return type(template)(**values)


def schemes_of(calculus_name: str) -> Tuple[AxiomScheme, ...]:
    return tuple(SCHEMES[name] for name in CALCULUS_SCHEMES[calculus_name])


def axiom_instance_of(calculus_name: str, phi: Formula) -> Optional[Tuple[str, Bindings]]:
    """First scheme of the calculus that phi instantiates, with its bindings."""
    for scheme in schemes_of(calculus_name):
        bindings = match_scheme(scheme, phi)
        if bindings is not None:
            return scheme.name, bindings
    return None


__all__ = [
    "AxiomScheme",
    "Bindings",
    "CALCULUS_SCHEMES",
    "JUSTIFICATION_CALCULI",
    "MODAL_CALCULI",
    "MODAL_COUNTERPART",
    "PROJECTED_SCHEME",
    "PROPOSITIONAL",
    "SCHEMES",
    "axiom_instance_of",
    "instantiate",
    "match_scheme",
    "schemes_of",
]
