"""Fixed propositional derivations over the G schemes, instantiated per formula."""

from __future__ import annotations

from typing import Callable, Dict, Optional

from gjlogic.calculus.builder import ProofBuilder
from gjlogic.calculus.proof import CalculusId, Proof
from gjlogic.syntax.ast import BOTTOM, And, Formula, Implies, neg


def add_identity(builder: ProofBuilder, phi: Formula) -> int:
    """phi -> phi in five lines: G4, A2, A1 and two modus ponens steps."""
    doubled = And(phi, phi)
    widen = builder.axiom(Implies(phi, doubled), "G4")
    narrow = builder.axiom(Implies(doubled, phi), "A2")
    chain = builder.axiom(
        Implies(
            Implies(phi, doubled),
            Implies(Implies(doubled, phi), Implies(phi, phi)),
        ),
        "A1",
    )
    return builder.mp(builder.mp(chain, widen), narrow)


def add_double_negation(builder: ProofBuilder, phi: Formula) -> int:
    """phi -> ~~phi by exporting the contradiction (phi & ~phi) -> bot."""
    not_phi = neg(phi)
    identity = add_identity(builder, not_phi)
    swapped_and = And(not_phi, phi)
    plain_and = And(phi, not_phi)
    imported = builder.mp(
        builder.axiom(
            Implies(Implies(not_phi, Implies(phi, BOTTOM)), Implies(swapped_and, BOTTOM)),
            "A5a",
        ),
        identity,
    )
    commute = builder.axiom(Implies(plain_and, swapped_and), "A3")
    transitivity = builder.axiom(
        Implies(
            Implies(plain_and, swapped_and),
            Implies(Implies(swapped_and, BOTTOM), Implies(plain_and, BOTTOM)),
        ),
        "A1",
    )
    contradiction = builder.mp(builder.mp(transitivity, commute), imported)
    exported = builder.axiom(
        Implies(Implies(plain_and, BOTTOM), Implies(phi, Implies(not_phi, BOTTOM))),
        "A5b",
    )
    return builder.mp(exported, contradiction)


def identity_proof(calculus: CalculusId, phi: Formula) -> Proof:
    builder = ProofBuilder(calculus)
    return builder.build(add_identity(builder, phi))


def double_negation_proof(calculus: CalculusId, phi: Formula) -> Proof:
    builder = ProofBuilder(calculus)
    return builder.build(add_double_negation(builder, phi))


_TEMPLATES: Dict[str, Callable[[ProofBuilder, Formula], int]] = {
    "identity": add_identity,
    "double_negation": add_double_negation,
}


def template_for(goal: Formula) -> Optional[str]:
    """Name of the fixed derivation concluding goal, if goal has that shape."""
    if not isinstance(goal, Implies):
        return None
    if goal.antecedent == goal.consequent:
        return "identity"
    if goal.consequent == neg(neg(goal.antecedent)):
        return "double_negation"
    return None


def derive_template(calculus: CalculusId, goal: Formula) -> Optional[Proof]:
    name = template_for(goal)
    if name is None:
        return None
    assert isinstance(goal, Implies)
    builder = ProofBuilder(calculus)
    return builder.build(_TEMPLATES[name](builder, goal.antecedent))


__all__ = [
    "add_double_negation",
    "add_identity",
    "derive_template",
    "double_negation_proof",
    "identity_proof",
    "template_for",
]
