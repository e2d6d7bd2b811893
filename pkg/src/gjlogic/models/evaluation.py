"""Standard and alternative (starred) evaluation of justification formulas."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from gjlogic.algebra import ONE, ZERO, TruthValue, residuum, tnorm
from gjlogic.errors import ModelClassError
from gjlogic.models.evidence import AllOnes, FiniteSpec, Model, XRooted
from gjlogic.syntax.ast import (
    And,
    Atom,
    Bottom,
    Formula,
    Holds,
    Implies,
    subformulas,
)
from gjlogic.syntax.printer import format_formula


def evaluate(model: Model, phi: Formula) -> TruthValue:
    """|phi|_M, with |t:psi| = E(t, psi)."""
    return _evaluate(model, phi, star=False)


def evaluate_star(model: Model, phi: Formula) -> TruthValue:
    """|phi|*_M, with |t:psi|* = E(t, psi) min |psi|*."""
    return _evaluate(model, phi, star=True)


def _evaluate(model: Model, phi: Formula, star: bool) -> TruthValue:
    if isinstance(phi, Bottom):
        return ZERO
    if isinstance(phi, Atom):
        return model.valuation.value_of(phi.index)
    if isinstance(phi, Implies):
        return residuum(
            _evaluate(model, phi.antecedent, star), _evaluate(model, phi.consequent, star)
        )
    if isinstance(phi, And):
        return tnorm(_evaluate(model, phi.left, star), _evaluate(model, phi.right, star))
    if isinstance(phi, Holds):
        evidence = model.evidence.lookup(phi.term, phi.body)
        if not star or evidence == ZERO:
            return evidence
        return tnorm(evidence, _evaluate(model, phi.body, star))
    raise ModelClassError(f"{format_formula(phi)} is not a justification formula")


def evaluate_set(model: Model, gamma: Iterable[Formula], star: bool = False) -> TruthValue:
    """inf of the member values; the empty set evaluates to 1."""
    value = ONE
    for phi in gamma:
        value = tnorm(value, _evaluate(model, phi, star))
        if value == ZERO:
            break
    return value


@dataclass(frozen=True)
class ConsequenceVerdict:
    holds: bool
    model_index: Optional[int] = None
    gamma_value: Optional[TruthValue] = None
    phi_value: Optional[TruthValue] = None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "model_index": self.model_index,
            "gamma_value": str(self.gamma_value) if self.gamma_value is not None else None,
            "phi_value": str(self.phi_value) if self.phi_value is not None else None,
        }


def semantic_consequence(
    models: Sequence[Model], gamma: Iterable[Formula], phi: Formula, star: bool = False
) -> ConsequenceVerdict:
    """1-entailment over a finite family: report the first model with |gamma| = 1 and |phi| < 1."""
    premises = tuple(gamma)
    for index, model in enumerate(models):
        gamma_value = evaluate_set(model, premises, star)
        if gamma_value != ONE:
            continue
        phi_value = _evaluate(model, phi, star)
        if phi_value != ONE:
            return ConsequenceVerdict(False, index, gamma_value, phi_value)
    return ConsequenceVerdict(True)


def is_crisp(model: Model, universe: Iterable[Formula] = ()) -> bool:
    """Crisp: e and E take values in {0,1}; non-finite evidence is inspected on the universe."""
    if not all(value.is_crisp for value in model.valuation.values()):
        return False
    evidence = model.evidence
    if isinstance(evidence, AllOnes):
        return True
    if isinstance(evidence, FiniteSpec):
        return evidence.default.is_crisp and all(
            value.is_crisp for value in evidence.overrides.values()
        )
    if isinstance(evidence, XRooted) and evidence.x.is_crisp:
        return True
    pairs = {
        (sub.term, sub.body)
        for phi in universe
        for sub in subformulas(phi)
        if isinstance(sub, Holds)
    }
    return all(evidence.lookup(term, body).is_crisp for term, body in pairs)


__all__ = [
    "ConsequenceVerdict",
    "evaluate",
    "evaluate_set",
    "evaluate_star",
    "is_crisp",
    "semantic_consequence",
]
