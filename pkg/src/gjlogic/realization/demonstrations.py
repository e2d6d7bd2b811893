"""Executable countermodel demonstrations for realizations of the (Z) scheme.

Each demonstration builds an x-rooted model, checks it against its model class
on a seeded universe and against the total constant specification on a sample
of constant chains, and evaluates a realized instance ~~t:p -> s:~~p. The
oracle certificates it relied on are embedded so the result can be re-checked.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gjlogic.algebra import ONE, ZERO, TruthValue, tnorm
from gjlogic.calculus.constant_spec import TotalCS
from gjlogic.calculus.derivations import double_negation_proof
from gjlogic.calculus.lifting import internalize
from gjlogic.calculus.proof import CalculusId
from gjlogic.config import GJLogicSettings, load_settings
from gjlogic.errors import DemonstrationError, ModelClassError
from gjlogic.models.classes import ClassVerdict, CSVerdict, check_cs_respect, check_model_class
from gjlogic.models.evaluation import evaluate, evaluate_star
from gjlogic.models.evidence import EvidenceKey, Model, ModelClass, XRooted
from gjlogic.models.oracle import Semantics, TheoremhoodOracle, default_oracle
from gjlogic.models.sampling import sample_universe
from gjlogic.models.transform import ShiftDirection, crisp_shift, make_x_rooted
from gjlogic.syntax.ast import (
    BOTTOM,
    App,
    Atom,
    Constant,
    Formula,
    Holds,
    Implies,
    JustTerm,
    Variable,
    neg,
    subformulas,
    subterms,
)
from gjlogic.syntax.printer import format_formula, format_term

logger = logging.getLogger(__name__)

NO_FACTIVITY_LOGIC = "GJ45_TCS"
FACTIVITY_LOGIC = "GLP_TCS"

# (t, s) instances used by the crisp and gap demonstrations
DEFAULT_INSTANCES: Tuple[Tuple[JustTerm, JustTerm], ...] = (
    (Variable(1), Variable(2)),
    (Variable(1), Variable(1)),
    (Constant(1), Variable(3)),
)


def double_negation(phi: Formula) -> Formula:
    return neg(neg(phi))


def z_instance(t: JustTerm, s: JustTerm, phi: Formula) -> Formula:
    """The realization ~~t:phi -> s:~~phi of ~~[]phi -> []~~phi."""
    return Implies(double_negation(Holds(t, phi)), Holds(s, double_negation(phi)))


@dataclass(frozen=True)
class Demonstration:
    name: str
    x: TruthValue
    t: JustTerm
    s: JustTerm
    target: Formula
    instance: Formula
    model: Model
    semantics: Semantics
    evaluation: TruthValue
    conclusion: str
    class_verdict: Optional[ClassVerdict] = None
    cs_verdict: Optional[CSVerdict] = None
    intermediates: Tuple[Tuple[str, TruthValue], ...] = ()
    universe: Tuple[EvidenceKey, ...] = ()
    certificates: dict = field(default_factory=dict, compare=False)

    @property
    def is_counterexample(self) -> bool:
        return self.evaluation < ONE

    @property
    def verdicts_accepted(self) -> bool:
        return all(
            verdict is None or verdict.accepted for verdict in (self.class_verdict, self.cs_verdict)
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "x": str(self.x),
            "t": format_term(self.t),
            "s": format_term(self.s),
            "target": format_formula(self.target),
            "instance": format_formula(self.instance),
            "model": self.model.to_dict(),
            "semantics": self.semantics.value,
            "evaluation": str(self.evaluation),
            "conclusion": self.conclusion,
            "class_verdict": self.class_verdict.to_dict() if self.class_verdict else None,
            "cs_verdict": self.cs_verdict.to_dict() if self.cs_verdict else None,
            "intermediates": [[label, str(value)] for label, value in self.intermediates],
            "universe": [[format_term(term), format_formula(phi)] for term, phi in self.universe],
            "certificates": self.certificates,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Demonstration":
        from gjlogic.syntax.parser import parse_formula, parse_term

        certificates = data.get("certificates") or {}

        def oracle_factory(logic: str) -> TheoremhoodOracle:
            if certificates:
                return TheoremhoodOracle.from_dict(certificates)
            return default_oracle(logic)

        class_verdict = data.get("class_verdict")
        cs_verdict = data.get("cs_verdict")
        return cls(
            name=data["name"],
            x=TruthValue.of(data["x"]),
            t=parse_term(data["t"]),
            s=parse_term(data["s"]),
            target=parse_formula(data["target"]),
            instance=parse_formula(data["instance"]),
            model=Model.from_dict(data["model"], oracle_factory),
            semantics=Semantics(data["semantics"]),
            evaluation=TruthValue.of(data["evaluation"]),
            conclusion=data["conclusion"],
            class_verdict=ClassVerdict.from_dict(class_verdict) if class_verdict else None,
            cs_verdict=CSVerdict.from_dict(cs_verdict) if cs_verdict else None,
            intermediates=tuple(
                (label, TruthValue.of(value)) for label, value in data.get("intermediates", [])
            ),
            universe=tuple(
                (parse_term(term), parse_formula(phi)) for term, phi in data.get("universe", [])
            ),
            certificates=certificates,
        )


Intermediates = Tuple[Tuple[str, TruthValue], ...]
Values = Tuple[TruthValue, Intermediates]


def _no_factivity_values(model: Model, t: JustTerm, s: JustTerm, target: Formula) -> Values:
    intermediates = (
        ("|t:p|", evaluate(model, Holds(t, target))),
        ("|~~t:p|", evaluate(model, double_negation(Holds(t, target)))),
        ("|s:~~p|", evaluate(model, Holds(s, double_negation(target)))),
    )
    return evaluate(model, z_instance(t, s, target)), intermediates


def _factivity_values(model: Model, t: JustTerm, s: JustTerm, target: Formula) -> Values:
    intermediates = (
        ("|t:p|*", evaluate_star(model, Holds(t, target))),
        ("|~~p|*", evaluate_star(model, double_negation(target))),
        ("|s:~~p|*", evaluate_star(model, Holds(s, double_negation(target)))),
    )
    return evaluate_star(model, z_instance(t, s, target)), intermediates


def _crisp_to_one_values(model: Model, t: JustTerm, s: JustTerm, target: Formula) -> Values:
    instances = [z_instance(left, right, target) for left, right in DEFAULT_INSTANCES]
    intermediates = tuple((format_formula(phi), evaluate(model, phi)) for phi in instances)
    value = ONE
    for _, instance_value in intermediates:
        value = tnorm(value, instance_value)
    return value, intermediates


def _crisp_to_zero_values(model: Model, t: JustTerm, s: JustTerm, target: Formula) -> Values:
    if not isinstance(s, App):
        raise DemonstrationError(f"crisp_to_zero needs s = r*t, got {format_term(s)}")
    # E_0(t, phi) = 0 branch: the antecedent ~~t:phi evaluates to 0
    zero_t, zero_target = Variable(1), Atom(1)
    zero_instance = z_instance(zero_t, App(s.left, zero_t), zero_target)
    intermediates = (
        ("|~~t:phi|", evaluate(model, double_negation(Holds(t, target)))),
        ("|[r*t]:~~phi|", evaluate(model, Holds(s, double_negation(target)))),
        ("E_0(x1, p1)", model.evidence.lookup(zero_t, zero_target)),
        (format_formula(zero_instance), evaluate(model, zero_instance)),
    )
    value = evaluate(model, z_instance(t, s, target))
    return tnorm(value, intermediates[-1][1]), intermediates


_VALUES = {
    "z_failure_no_factivity": _no_factivity_values,
    "z_failure_with_factivity": _factivity_values,
    "crisp_to_one": _crisp_to_one_values,
    "crisp_to_zero": _crisp_to_zero_values,
}

COUNTEREXAMPLE_NAMES = ("z_failure_no_factivity", "z_failure_with_factivity")


def recompute_values(demo: Demonstration) -> Values:
    """The evaluation and intermediate values of ``demo``, computed afresh from its model."""
    compute = _VALUES.get(demo.name)
    if compute is None:
        raise DemonstrationError(f"unknown demonstration {demo.name!r}")
    return compute(demo.model, demo.t, demo.s, demo.target)


def _demonstration_pairs(instance: Formula, terms: Sequence[JustTerm]) -> List[EvidenceKey]:
    """Every labelled subformula of the instance, plus each term paired with each body."""
    labelled = [sub for sub in subformulas(instance) if isinstance(sub, Holds)]
    pairs = [(sub.term, sub.body) for sub in labelled]
    pool = dict.fromkeys(sub for term in terms for sub in subterms(term))
    pairs.extend((term, sub.body) for term in pool for sub in labelled)
    return list(dict.fromkeys(pairs))


def _universe(
    oracle: TheoremhoodOracle,
    instance: Formula,
    terms: Sequence[JustTerm],
    settings: GJLogicSettings,
) -> List[EvidenceKey]:
    return sample_universe(
        oracle,
        size=settings.universe_size,
        seed=settings.seed,
        extra=_demonstration_pairs(instance, terms),
    )


def _x_rooted_model(x: TruthValue, logic: str, oracle: Optional[TheoremhoodOracle]) -> Model:
    try:
        return make_x_rooted(x, logic, oracle)
    except ModelClassError as exc:
        raise DemonstrationError(str(exc)) from exc


def _oracle_of(model: Model) -> TheoremhoodOracle:
    evidence = model.evidence
    assert isinstance(evidence, XRooted)
    return evidence.oracle


def demo_z_failure_no_factivity(
    x: TruthValue,
    t: JustTerm,
    s: JustTerm,
    *,
    oracle: Optional[TheoremhoodOracle] = None,
    settings: Optional[GJLogicSettings] = None,
) -> Demonstration:
    """|~~t:p1 -> s:~~p1| = x in M_x, a GM45 model respecting the total specification."""
    settings = settings or load_settings()
    target = Atom(1)
    instance = z_instance(t, s, target)
    model = _x_rooted_model(x, NO_FACTIVITY_LOGIC, oracle)
    oracle = _oracle_of(model)

    universe = _universe(oracle, instance, (t, s), settings)
    class_verdict = check_model_class(model, ModelClass.GM45, universe)
    cs_verdict = check_cs_respect(
        model, TotalCS(oracle.calculus.name), sample_size=settings.cs_sample_size
    )
    value, intermediates = _no_factivity_values(model, t, s, target)
    demonstration = Demonstration(
        name="z_failure_no_factivity",
        x=x,
        t=t,
        s=s,
        target=target,
        instance=instance,
        model=model,
        semantics=Semantics.STANDARD,
        evaluation=value,
        conclusion=(
            f"|{format_formula(instance)}| = {value} < 1 in M_{x}, a GM45 model respecting TCS; "
            f"{NO_FACTIVITY_LOGIC} does not prove this realization of (Z)"
        ),
        class_verdict=class_verdict,
        cs_verdict=cs_verdict,
        intermediates=intermediates,
        universe=tuple(universe),
        certificates=oracle.to_dict(),
    )
    return _confirmed(demonstration)


def demo_z_failure_with_factivity(
    x: TruthValue,
    t: JustTerm,
    s: JustTerm,
    *,
    target: Optional[Formula] = None,
    oracle: Optional[TheoremhoodOracle] = None,
    settings: Optional[GJLogicSettings] = None,
) -> Demonstration:
    """|~~t:p -> s:~~p|* = x in M'_x, a GM4 model read with the starred semantics."""
    settings = settings or load_settings()
    target = target if target is not None else Atom(1)
    if not isinstance(target, Atom):
        raise DemonstrationError(
            f"the factive countermodel covers atoms only, got {format_formula(target)}"
        )
    instance = z_instance(t, s, target)
    model = _x_rooted_model(x, FACTIVITY_LOGIC, oracle)
    oracle = _oracle_of(model)

    universe = _universe(oracle, instance, (t, s), settings)
    class_verdict = check_model_class(model, ModelClass.GM4, universe)
    cs_verdict = check_cs_respect(
        model, TotalCS(oracle.calculus.name), sample_size=settings.cs_sample_size
    )
    value, intermediates = _factivity_values(model, t, s, target)
    demonstration = Demonstration(
        name="z_failure_with_factivity",
        x=x,
        t=t,
        s=s,
        target=target,
        instance=instance,
        model=model,
        semantics=Semantics.STAR,
        evaluation=value,
        conclusion=(
            f"|{format_formula(instance)}|* = {value} < 1 in M'_{x}, a GM4 model respecting TCS; "
            f"{FACTIVITY_LOGIC} does not prove this realization of (Z)"
        ),
        class_verdict=class_verdict,
        cs_verdict=cs_verdict,
        intermediates=intermediates,
        universe=tuple(universe),
        certificates=oracle.to_dict(),
    )
    return _confirmed(demonstration)


def _confirmed(demonstration: Demonstration) -> Demonstration:
    if not demonstration.verdicts_accepted:
        raise DemonstrationError(
            f"{demonstration.name}: model checks failed: "
            f"{demonstration.class_verdict.to_dict() if demonstration.class_verdict else None}, "
            f"{demonstration.cs_verdict.to_dict() if demonstration.cs_verdict else None}"
        )
    if demonstration.evaluation != demonstration.x:
        raise DemonstrationError(
            f"{demonstration.name}: expected value {demonstration.x}, "
            f"got {demonstration.evaluation}"
        )
    logger.debug("%s confirmed at x=%s", demonstration.name, demonstration.x)
    return demonstration


def demo_crisp_recovery(
    direction: ShiftDirection, *, oracle: Optional[TheoremhoodOracle] = None
) -> Demonstration:
    """Moving x to 1 validates every realized instance; moving it to 0 validates the
    instance built from an internalized s."""
    if direction is ShiftDirection.TO_ONE:
        return _crisp_to_one(oracle)
    return _crisp_to_zero(oracle)


def _crisp_to_one(oracle: Optional[TheoremhoodOracle]) -> Demonstration:
    model = crisp_shift(ShiftDirection.TO_ONE, NO_FACTIVITY_LOGIC, oracle)
    target = Atom(1)
    t, s = DEFAULT_INSTANCES[0]
    value, intermediates = _crisp_to_one_values(model, t, s, target)
    demonstration = Demonstration(
        name="crisp_to_one",
        x=ONE,
        t=t,
        s=s,
        target=target,
        instance=z_instance(t, s, target),
        model=model,
        semantics=Semantics.STANDARD,
        evaluation=value,
        conclusion="with x moved to 1 all evidence is 1 and each realized instance is valid",
        intermediates=intermediates,
        certificates=_oracle_of(model).to_dict(),
    )
    return _valid(demonstration)


def _crisp_to_zero(oracle: Optional[TheoremhoodOracle]) -> Demonstration:
    theorem = Implies(BOTTOM, Atom(1))
    calculus = CalculusId.from_label(NO_FACTIVITY_LOGIC)
    r, r_proof = internalize(double_negation_proof(calculus, theorem))
    base = oracle or default_oracle(NO_FACTIVITY_LOGIC)
    model = crisp_shift(ShiftDirection.TO_ZERO, NO_FACTIVITY_LOGIC, base.with_proofs([r_proof]))

    t = Constant(1)
    instance = z_instance(t, App(r, t), theorem)
    combined, intermediates = _crisp_to_zero_values(model, t, App(r, t), theorem)
    value = evaluate(model, instance)
    demonstration = Demonstration(
        name="crisp_to_zero",
        x=ZERO,
        t=t,
        s=App(r, t),
        target=theorem,
        instance=instance,
        model=model,
        semantics=Semantics.STANDARD,
        evaluation=combined,
        conclusion=(
            f"with x moved to 0 and r from internalizing phi -> ~~phi, "
            f"|{format_formula(instance)}| = {value}"
        ),
        intermediates=intermediates,
        certificates=_oracle_of(model).to_dict(),
    )
    return _valid(demonstration)


def _valid(demonstration: Demonstration) -> Demonstration:
    if demonstration.evaluation != ONE:
        raise DemonstrationError(
            f"{demonstration.name}: expected every instance to be valid, "
            f"got {demonstration.evaluation}"
        )
    return demonstration


__all__ = [
    "COUNTEREXAMPLE_NAMES",
    "DEFAULT_INSTANCES",
    "Demonstration",
    "FACTIVITY_LOGIC",
    "NO_FACTIVITY_LOGIC",
    "demo_crisp_recovery",
    "demo_z_failure_no_factivity",
    "demo_z_failure_with_factivity",
    "double_negation",
    "recompute_values",
    "z_instance",
]
