"""Theorem-gap reports pairing a modal (Z) proof with failing realizations.

A report for a correspondence such as GJ/GK holds a checked one-line modal
proof of ~~[]p1 -> []~~p1, the countermodel demonstrations for the realized
shapes ~~t:p1 -> s:~~p1, and a projected proof showing the inclusion
direction. ``recheck_report`` rebuilds everything from the structured data.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from gjlogic.algebra import ONE, TruthValue
from gjlogic.calculus.builder import ProofBuilder
from gjlogic.calculus.checker import ProofVerdict, check_proof
from gjlogic.calculus.constant_spec import TotalCS
from gjlogic.calculus.lifting import internalize
from gjlogic.calculus.projection import project_proof
from gjlogic.calculus.proof import CalculusId, Proof
from gjlogic.calculus.proof_file import read_proof, write_proof
from gjlogic.calculus.schemes import MODAL_COUNTERPART
from gjlogic.config import GJLogicSettings, load_settings
from gjlogic.errors import GJLogicError
from gjlogic.models.classes import check_cs_respect, check_model_class
from gjlogic.models.evaluation import evaluate, evaluate_star
from gjlogic.models.evidence import XRooted
from gjlogic.models.oracle import Semantics
from gjlogic.realization.demonstrations import (
    COUNTEREXAMPLE_NAMES,
    DEFAULT_INSTANCES,
    Demonstration,
    demo_z_failure_no_factivity,
    demo_z_failure_with_factivity,
    double_negation,
    recompute_values,
    z_instance,
)
from gjlogic.syntax.ast import BOTTOM, Atom, Box, Formula, Implies
from gjlogic.syntax.printer import format_formula, format_term
from gjlogic.syntax.projection import forgetful_projection

logger = logging.getLogger(__name__)

GAP_PAIRS: Tuple[Tuple[str, str], ...] = tuple(MODAL_COUNTERPART.items())

FACTIVE_CALCULI = ("GJT", "GLP")

INCLUSION_NOTE = (
    "inclusion: every {just}_CS theorem projects to a {modal} theorem (project_proof); "
    "the gap is strict because the (Z) instance has no realization among the shapes checked"
)
QUANTIFIER_NOTE = (
    "scope: the demonstrations settle the listed (t, s) instances only; "
    "the claim for every t, s and every constant specification is a meta-level result"
)


def z_axiom(phi: Formula) -> Formula:
    """The modal (Z) instance ~~[]phi -> []~~phi."""
    return Implies(double_negation(Box(phi)), Box(double_negation(phi)))


@dataclass(frozen=True)
class GapReport:
    justification: str
    modal: str
    z_proof: Proof
    z_verdict: ProofVerdict
    demonstrations: Tuple[Demonstration, ...]
    inclusion_source: Proof
    inclusion_proof: Proof
    inclusion_verdict: ProofVerdict
    notes: Tuple[str, ...] = ()

    @property
    def accepted(self) -> bool:
        return (
            self.z_verdict.accepted
            and self.inclusion_verdict.accepted
            and all(
                demo.is_counterexample and demo.verdicts_accepted
                for demo in self.demonstrations
            )
        )

    def to_dict(self) -> dict:
        return {
            "justification": self.justification,
            "modal": self.modal,
            "z_proof": write_proof(self.z_proof),
            "z_verdict": self.z_verdict.to_dict(),
            "demonstrations": [demo.to_dict() for demo in self.demonstrations],
            "inclusion_source": write_proof(self.inclusion_source),
            "inclusion_proof": write_proof(self.inclusion_proof),
            "inclusion_verdict": self.inclusion_verdict.to_dict(),
            "notes": list(self.notes),
        }


def demo_theorem_gap(
    pair: Tuple[str, str],
    *,
    x: Optional[TruthValue] = None,
    instances: Sequence[Tuple] = DEFAULT_INSTANCES,
    settings: Optional[GJLogicSettings] = None,
) -> GapReport:
    justification, modal = pair
    if MODAL_COUNTERPART.get(justification) != modal:
        raise GJLogicError(f"{justification}/{modal} is not a supported correspondence")
    settings = settings or load_settings()
    x = x or TruthValue.of("1/2")

    builder = ProofBuilder(CalculusId(modal))
    z_proof = builder.build(builder.axiom(z_axiom(Atom(1)), "Z"))

    demo = (
        demo_z_failure_with_factivity
        if justification in FACTIVE_CALCULI
        else demo_z_failure_no_factivity
    )
    demonstrations = tuple(demo(x, t, s, settings=settings) for t, s in instances)

    calculus = CalculusId.total(justification)
    theorem = ProofBuilder(calculus)
    _, internalized = internalize(theorem.build(theorem.axiom(Implies(BOTTOM, Atom(1)))))
    projected = project_proof(internalized)

    report = GapReport(
        justification=justification,
        modal=modal,
        z_proof=z_proof,
        z_verdict=check_proof(z_proof),
        demonstrations=demonstrations,
        inclusion_source=internalized,
        inclusion_proof=projected,
        inclusion_verdict=check_proof(projected),
        notes=(INCLUSION_NOTE.format(just=justification, modal=modal), QUANTIFIER_NOTE),
    )
    logger.info("gap report %s/%s accepted=%s", justification, modal, report.accepted)
    return report


def render_demonstration(demo: Demonstration) -> str:
    star = "*" if demo.semantics is Semantics.STAR else ""
    lines = [
        f"{demo.name}: x = {demo.x}, t = {format_term(demo.t)}, s = {format_term(demo.s)}",
        f"  instance |{format_formula(demo.instance)}|{star} = {demo.evaluation}",
    ]
    lines.extend(f"  {label} = {value}" for label, value in demo.intermediates)
    if demo.class_verdict is not None:
        lines.append(
            f"  class {demo.class_verdict.model_class.value}: "
            f"{'accept' if demo.class_verdict.accepted else 'reject'} "
            f"({demo.class_verdict.checked} instances)"
        )
    if demo.cs_verdict is not None:
        lines.append(
            f"  constant specification: {'accept' if demo.cs_verdict.accepted else 'reject'} "
            f"({demo.cs_verdict.checked} members)"
        )
    lines.append(f"  {demo.conclusion}")
    return "\n".join(lines)


def render_report(report: GapReport) -> str:
    lines = [
        f"theorem gap {report.justification}_CS / {report.modal}",
        f"modal proof of {format_formula(report.z_proof.conclusion)} in {report.modal}: "
        f"{'accept' if report.z_verdict.accepted else 'reject'}",
    ]
    lines.extend(render_demonstration(demo) for demo in report.demonstrations)
    lines.append(
        f"projected {format_formula(report.inclusion_source.conclusion)} to "
        f"{format_formula(report.inclusion_proof.conclusion)}: "
        f"{'accept' if report.inclusion_verdict.accepted else 'reject'}"
    )
    lines.extend(report.notes)
    return "\n".join(lines)


@dataclass(frozen=True)
class RecheckVerdict:
    accepted: bool
    problems: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"accepted": self.accepted, "problems": list(self.problems)}


def recheck_report(data: Dict) -> RecheckVerdict:
    """Recompute every verdict and value of a structured report from the data alone."""
    problems: List[str] = []
    try:
        problems.extend(_recheck_z_proof(data))
        problems.extend(_recheck_inclusion(data))
        for item in data.get("demonstrations", []):
            problems.extend(recheck_demonstration(Demonstration.from_dict(item)))
    except (GJLogicError, KeyError) as exc:
        problems.append(f"report could not be rebuilt: {exc}")
    return RecheckVerdict(not problems, tuple(problems))


def _recheck_z_proof(data: Dict) -> List[str]:
    proof = read_proof(data["z_proof"])
    if proof.calculus.name != data["modal"]:
        return [f"(Z) proof is in {proof.calculus.label}, expected {data['modal']}"]
    verdict = check_proof(proof)
    if not verdict.accepted:
        return [f"(Z) proof rejected at line {verdict.line}: {verdict.message}"]
    if proof.conclusion != z_axiom(Atom(1)):
        return [f"(Z) proof concludes {format_formula(proof.conclusion)}"]
    return []


def _recheck_inclusion(data: Dict) -> List[str]:
    source = read_proof(data["inclusion_source"])
    projected = read_proof(data["inclusion_proof"])
    problems = []
    for name, proof in (("source", source), ("projected", projected)):
        verdict = check_proof(proof)
        if not verdict.accepted:
            problems.append(f"inclusion {name} rejected at line {verdict.line}: {verdict.message}")
    if projected.conclusion != forgetful_projection(source.conclusion):
        problems.append("projected proof does not conclude the projection of the source")
    return problems


def recheck_demonstration(demo: Demonstration) -> List[str]:
    """Class check, specification sample, evaluation and intermediates, recomputed from the model."""
    problems: List[str] = []
    evidence = demo.model.evidence
    if isinstance(evidence, XRooted):
        oracle_verdict = evidence.oracle.validate()
        problems.extend(f"{demo.name}: {problem}" for problem in oracle_verdict.problems)
    if demo.class_verdict is not None:
        verdict = check_model_class(demo.model, demo.class_verdict.model_class, list(demo.universe))
        if not verdict.accepted:
            problems.append(f"{demo.name}: class check no longer accepts")
    if demo.cs_verdict is not None and isinstance(evidence, XRooted):
        cs = TotalCS(evidence.oracle.calculus.name)
        if not check_cs_respect(demo.model, cs, sample_size=demo.cs_verdict.checked).accepted:
            problems.append(f"{demo.name}: constant specification sample no longer accepts")
    if demo.instance != z_instance(demo.t, demo.s, demo.target):
        problems.append(f"{demo.name}: instance is not ~~t:p -> s:~~p for the stated t, s, p")
    evaluator = evaluate_star if demo.semantics is Semantics.STAR else evaluate
    value = evaluator(demo.model, demo.instance)
    combined, intermediates = recompute_values(demo)
    if demo.name in COUNTEREXAMPLE_NAMES:
        if value != combined:
            problems.append(
                f"{demo.name}: {demo.semantics.value} semantics gives {value}, expected {combined}"
            )
        if combined >= ONE:
            problems.append(f"{demo.name}: instance evaluates to {combined}, not a counterexample")
    elif combined != ONE:
        problems.append(f"{demo.name}: instances evaluate to {combined}, expected 1")
    if combined != demo.evaluation:
        problems.append(f"{demo.name}: recomputed {combined}, report states {demo.evaluation}")
    stated = dict(demo.intermediates)
    for label, recomputed in intermediates:
        if label not in stated:
            problems.append(f"{demo.name}: {label} is missing from the report")
        elif stated[label] != recomputed:
            problems.append(
                f"{demo.name}: {label} recomputed {recomputed}, report states {stated[label]}"
            )
    extra = set(stated) - {label for label, _ in intermediates}
    problems.extend(f"{demo.name}: unexpected value {label}" for label in sorted(extra))
    return problems


__all__ = [
    "FACTIVE_CALCULI",
    "GAP_PAIRS",
    "GapReport",
    "RecheckVerdict",
    "demo_theorem_gap",
    "recheck_demonstration",
    "recheck_report",
    "render_demonstration",
    "render_report",
    "z_axiom",
]
