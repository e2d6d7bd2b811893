"""Constructive lifting and internalization of justification proofs."""

from __future__ import annotations

import logging
from typing import Dict, Sequence, Tuple

from gjlogic.calculus.builder import ProofBuilder
from gjlogic.calculus.checker import check_proof
from gjlogic.calculus.proof import (
    Assumption,
    AxiomRule,
    ConstantRule,
    ModusPonens,
    Proof,
)
from gjlogic.errors import LiftingError
from gjlogic.syntax.ast import App, Holds, Implies, JustTerm

logger = logging.getLogger(__name__)


def lift(proof: Proof, terms: Sequence[JustTerm]) -> Tuple[JustTerm, Proof]:
    """Turn a proof of phi from psi_1..psi_n into a proof of t:phi from t_1:psi_1..t_n:psi_n."""
    calculus = proof.calculus
    if calculus.is_modal or calculus.cs is None:
        raise LiftingError(
            f"lifting needs a justification calculus with a constant specification, got {calculus.label}"
        )
    if len(terms) != len(proof.assumptions):
        raise LiftingError(
            f"{len(proof.assumptions)} assumptions but {len(terms)} terms were given"
        )
    verdict = check_proof(proof)
    if not verdict.accepted:
        raise LiftingError(f"input proof rejected at line {verdict.line}: {verdict.message}")

    cs = calculus.cs
    builder = ProofBuilder(
        calculus, [Holds(term, psi) for term, psi in zip(terms, proof.assumptions)]
    )
    lifted: Dict[int, Tuple[JustTerm, int]] = {}
    for number, line in enumerate(proof.lines, start=1):
        rule = line.justification
        if isinstance(rule, Assumption):
            lifted[number] = (terms[rule.index - 1], builder.assume(rule.index))
        elif isinstance(rule, AxiomRule):
            constant = cs.constant_for_axiom(line.formula)
            lifted[number] = (constant, builder.cs(Holds(constant, line.formula)))
        elif isinstance(rule, ConstantRule):
            constant = cs.constant_for_member(line.formula)
            lifted[number] = (constant, builder.cs(Holds(constant, line.formula)))
        elif isinstance(rule, ModusPonens):
            lifted[number] = _lift_mp(builder, lifted[rule.major], lifted[rule.minor])
        else:
            raise LiftingError(f"line {number}: {type(rule).__name__} has no lifted form")

    term, conclusion = lifted[len(proof.lines)]
    logger.debug("lifted %d lines into %d lines", len(proof.lines), conclusion)
    return term, builder.build(conclusion)


def _lift_mp(
    builder: ProofBuilder, major: Tuple[JustTerm, int], minor: Tuple[JustTerm, int]
) -> Tuple[JustTerm, int]:
    major_term, major_line = major
    minor_term, minor_line = minor
    implication = builder.formula(major_line)
    assert isinstance(implication, Holds) and isinstance(implication.body, Implies)
    product = App(major_term, minor_term)
    application = Implies(
        implication,
        Implies(builder.formula(minor_line), Holds(product, implication.body.consequent)),
    )
    step = builder.mp(builder.axiom(application, "J"), major_line)
    return product, builder.mp(step, minor_line)


def internalize(proof: Proof) -> Tuple[JustTerm, Proof]:
    """Lifting with no assumptions: from a proof of phi, a term t and a proof of t:phi."""
    if proof.assumptions:
        raise LiftingError("internalization needs a proof without assumptions")
    return lift(proof, ())


__all__ = ["internalize", "lift"]
