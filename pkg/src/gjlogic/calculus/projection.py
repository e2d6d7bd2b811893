"""Proof-level forgetful projection from justification calculi into modal calculi."""

from __future__ import annotations

import logging
from typing import Dict

from gjlogic.calculus.builder import ProofBuilder
from gjlogic.calculus.checker import check_proof
from gjlogic.calculus.constant_spec import constant_chain
from gjlogic.calculus.derivations import add_identity
from gjlogic.calculus.proof import (
    Assumption,
    AxiomRule,
    CalculusId,
    ConstantRule,
    ModusPonens,
    Proof,
)
from gjlogic.calculus.schemes import MODAL_COUNTERPART, PROJECTED_SCHEME, axiom_instance_of
from gjlogic.errors import ProjectionError
from gjlogic.syntax.ast import Formula, Implies
from gjlogic.syntax.printer import format_formula
from gjlogic.syntax.projection import forgetful_projection

logger = logging.getLogger(__name__)

_SUM_SCHEMES = ("Plus1", "Plus2")


def modal_counterpart(calculus: CalculusId) -> CalculusId:
    if calculus.name not in MODAL_COUNTERPART:
        raise ProjectionError(f"{calculus.name} has no modal counterpart")
    return CalculusId(MODAL_COUNTERPART[calculus.name])


def project_proof(proof: Proof) -> Proof:
    """Translate a checked justification proof line by line into its modal counterpart."""
    target = modal_counterpart(proof.calculus)
    verdict = check_proof(proof)
    if not verdict.accepted:
        raise ProjectionError(f"input proof rejected at line {verdict.line}: {verdict.message}")

    builder = ProofBuilder(target, [forgetful_projection(psi) for psi in proof.assumptions])
    mapped: Dict[int, int] = {}
    for number, line in enumerate(proof.lines, start=1):
        rule = line.justification
        if isinstance(rule, Assumption):
            mapped[number] = builder.assume(rule.index)
        elif isinstance(rule, AxiomRule):
            mapped[number] = _project_axiom(builder, line.formula, rule.scheme)
        elif isinstance(rule, ConstantRule):
            mapped[number] = _project_member(builder, proof.calculus.name, line.formula)
        elif isinstance(rule, ModusPonens):
            mapped[number] = builder.mp(mapped[rule.major], mapped[rule.minor])
        else:
            raise ProjectionError(f"line {number}: {type(rule).__name__} has no projection")

    logger.debug("projected %s proof into %s", proof.calculus.label, target.label)
    return builder.build(mapped[len(proof.lines)])


def _project_axiom(builder: ProofBuilder, phi: Formula, scheme: str) -> int:
    projected = forgetful_projection(phi)
    if scheme in _SUM_SCHEMES:
        # t:A -> [t+s]:A and s:A -> [t+s]:A both become []A -> []A
        assert isinstance(projected, Implies)
        return add_identity(builder, projected.antecedent)
    return builder.axiom(projected, PROJECTED_SCHEME[scheme])


def _project_member(builder: ProofBuilder, base: str, member: Formula) -> int:
    chain = constant_chain(member)
    found = axiom_instance_of(base, chain[1]) if chain is not None else None
    if chain is None or found is None:
        raise ProjectionError(f"{format_formula(member)} is not a constant specification member")
    number = _project_axiom(builder, chain[1], found[0])
    for _ in chain[0]:
        number = builder.nbox(number)
    return number


__all__ = ["modal_counterpart", "project_proof"]
