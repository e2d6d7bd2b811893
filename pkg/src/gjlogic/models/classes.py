"""Closure conditions of the model classes and constant-specification respect.

For finitely described evidence (``FiniteSpec`` and ``AllOnes``) every condition
is decided exactly: a violation needs an override somewhere on the instance,
so the candidates come from the override keys, their unique head
decompositions, and one fresh variable and atom standing for "everything
else". ``XRooted`` evidence is checked on a finite universe of pairs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from gjlogic.algebra import ONE, ZERO, TruthValue, tconorm, tnorm, wneg
from gjlogic.calculus.constant_spec import ConstantSpec, FiniteCS
from gjlogic.errors import ModelClassError
from gjlogic.models.evaluation import evaluate
from gjlogic.models.evidence import (
    AllOnes,
    Capped,
    EvidenceKey,
    FiniteSpec,
    Model,
    ModelClass,
    XRooted,
)
from gjlogic.syntax.ast import (
    BOTTOM,
    App,
    Atom,
    Bang,
    Formula,
    Holds,
    Implies,
    JustTerm,
    Query,
    Sum,
    Variable,
    max_atom_index,
    max_variable_index,
    neg,
)
from gjlogic.syntax.printer import format_formula, format_term

logger = logging.getLogger(__name__)

APPLICATION = "application"
SUM = "sum"
FACTIVITY = "factivity"
POSITIVE = "positive_introspection"
NEGATIVE = "negative_introspection"

CLASS_OF_CALCULUS: Dict[str, ModelClass] = {
    "GJ": ModelClass.GM,
    "GJT": ModelClass.GMT,
    "GJ4": ModelClass.GM4,
    "GLP": ModelClass.GMLP,
    "GJ45": ModelClass.GM45,
    "GJT45": ModelClass.GMT45,
}

# classes complete for the starred semantics
STAR_CLASS_OF_CALCULUS: Dict[str, ModelClass] = {
    "GJT": ModelClass.GM,
    "GLP": ModelClass.GM4,
}


@dataclass(frozen=True)
class ClassViolation:
    condition: str
    bindings: Tuple[Tuple[str, object], ...]
    lhs: TruthValue
    rhs: TruthValue

    def binding(self, name: str) -> object:
        return dict(self.bindings)[name]

    def to_dict(self) -> dict:
        rendered = {
            name: format_term(value) if name in ("t", "s") else format_formula(value)  # type: ignore[arg-type]
            for name, value in self.bindings
        }
        return {
            "condition": self.condition,
            "bindings": rendered,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClassViolation":
        from gjlogic.syntax.parser import parse_formula, parse_term

        bindings = tuple(
            (name, parse_term(text) if name in ("t", "s") else parse_formula(text))
            for name, text in sorted(data["bindings"].items())
        )
        lhs, rhs = TruthValue.of(data["lhs"]), TruthValue.of(data["rhs"])
        return cls(data["condition"], bindings, lhs, rhs)


@dataclass(frozen=True)
class ClassVerdict:
    accepted: bool
    model_class: ModelClass
    violation: Optional[ClassViolation] = None
    exact: bool = True
    checked: int = 0

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "class": self.model_class.value,
            "violation": self.violation.to_dict() if self.violation is not None else None,
            "exact": self.exact,
            "checked": self.checked,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClassVerdict":
        violation = data.get("violation")
        return cls(
            bool(data["accepted"]),
            ModelClass(data["class"]),
            ClassViolation.from_dict(violation) if violation is not None else None,
            bool(data.get("exact", True)),
            int(data.get("checked", 0)),
        )


class _Found(Exception):
    def __init__(self, violation: ClassViolation) -> None:
        super().__init__(violation.condition)
        self.violation = violation


def _violation(condition: str, lhs: TruthValue, rhs: TruthValue, **bindings: object) -> None:
    if lhs > rhs:
        raise _Found(ClassViolation(condition, tuple(sorted(bindings.items())), lhs, rhs))


def fresh_variable(keys: Iterable[EvidenceKey]) -> Variable:
    """A variable occurring in no key."""
    highest = 0
    for term, phi in keys:
        highest = max(highest, max_variable_index(Holds(term, phi)))
    return Variable(highest + 1)


def fresh_atom(keys: Iterable[EvidenceKey]) -> Atom:
    return Atom(max((max_atom_index(phi) for _, phi in keys), default=0) + 1)


def check_model_class(
    model: Model,
    model_class: ModelClass,
    universe: Optional[Sequence[EvidenceKey]] = None,
) -> ClassVerdict:
    """Decide membership exactly for finite evidence; sample it on ``universe`` otherwise."""
    evidence = model.evidence
    if isinstance(evidence, (XRooted, Capped)):
        if universe is None:
            raise ModelClassError(
                f"{evidence.to_dict()['kind']} evidence can only be checked on a finite universe"
            )
        return _check_sampled(model, model_class, universe)
    if isinstance(evidence, AllOnes):
        return _check_all_ones(model_class)
    return _check_finite(model, evidence, model_class)


def _check_all_ones(model_class: ModelClass) -> ClassVerdict:
    if model_class.factive:
        violation = ClassViolation(FACTIVITY, (("phi", BOTTOM), ("t", Variable(1))), ONE, ZERO)
        return ClassVerdict(False, model_class, violation, checked=1)
    return ClassVerdict(True, model_class, checked=1)


def _sorted_keys(evidence: FiniteSpec) -> List[EvidenceKey]:
    return sorted(evidence.overrides, key=lambda key: (format_term(key[0]), format_formula(key[1])))


def _check_finite(model: Model, evidence: FiniteSpec, model_class: ModelClass) -> ClassVerdict:
    keys = _sorted_keys(evidence)
    checks = [_finite_application, _finite_sum]
    if model_class.factive:
        checks.append(_finite_factivity)
    if model_class.positive_introspection:
        checks.append(_finite_positive)
    if model_class.negative_introspection:
        checks.append(_finite_negative)
    try:
        for check in checks:
            check(model, evidence, keys)
    except _Found as found:
        logger.debug("%s violated by %s", model_class.value, found.violation.to_dict())
        return ClassVerdict(False, model_class, found.violation, checked=len(keys))
    return ClassVerdict(True, model_class, checked=len(keys))


def _finite_application(model: Model, evidence: FiniteSpec, keys: List[EvidenceKey]) -> None:
    lookup, default = evidence.lookup, evidence.default
    atom = fresh_atom(keys)
    for term, psi in keys:
        if not isinstance(term, App):
            continue
        t, s = term.left, term.right
        value = evidence.overrides[(term, psi)]
        if default > value:
            _violation(APPLICATION, default, value, t=t, s=s, phi=atom, psi=psi)
        for other, chi in keys:
            if other == t and isinstance(chi, Implies) and chi.consequent == psi:
                phi = chi.antecedent
                lhs = tnorm(lookup(t, chi), lookup(s, phi))
                _violation(APPLICATION, lhs, value, t=t, s=s, phi=phi, psi=psi)
            if other == s:
                _violation(
                    APPLICATION,
                    tnorm(lookup(t, Implies(chi, psi)), lookup(s, chi)),
                    value,
                    t=t,
                    s=s,
                    phi=chi,
                    psi=psi,
                )
    # instances whose right-hand side falls back to the default
    for (t, chi), (s, phi) in product(keys, keys):
        if not isinstance(chi, Implies) or chi.antecedent != phi:
            continue
        rhs = lookup(App(t, s), chi.consequent)
        _violation(
            APPLICATION,
            tnorm(evidence.overrides[(t, chi)], evidence.overrides[(s, phi)]),
            rhs,
            t=t,
            s=s,
            phi=phi,
            psi=chi.consequent,
        )


def _finite_sum(model: Model, evidence: FiniteSpec, keys: List[EvidenceKey]) -> None:
    lookup = evidence.lookup
    fresh = fresh_variable(keys)
    for term, phi in keys:
        value = evidence.overrides[(term, phi)]
        _violation(SUM, value, lookup(Sum(term, fresh), phi), t=term, s=fresh, phi=phi)
        _violation(SUM, value, lookup(Sum(fresh, term), phi), t=fresh, s=term, phi=phi)
        if isinstance(term, Sum):
            t, s = term.left, term.right
            _violation(SUM, tconorm(lookup(t, phi), lookup(s, phi)), value, t=t, s=s, phi=phi)


def _finite_factivity(model: Model, evidence: FiniteSpec, keys: List[EvidenceKey]) -> None:
    if evidence.default > ZERO:
        _violation(FACTIVITY, evidence.default, ZERO, t=fresh_variable(keys), phi=BOTTOM)
    for term, phi in keys:
        _violation(FACTIVITY, evidence.overrides[(term, phi)], evaluate(model, phi), t=term, phi=phi)


def _finite_positive(model: Model, evidence: FiniteSpec, keys: List[EvidenceKey]) -> None:
    lookup = evidence.lookup
    for term, phi in keys:
        value = evidence.overrides[(term, phi)]
        _violation(POSITIVE, value, lookup(Bang(term), Holds(term, phi)), t=term, phi=phi)
        if isinstance(term, Bang) and isinstance(phi, Holds) and phi.term == term.inner:
            t = term.inner
            _violation(POSITIVE, lookup(t, phi.body), value, t=t, phi=phi.body)


def _finite_negative(model: Model, evidence: FiniteSpec, keys: List[EvidenceKey]) -> None:
    lookup = evidence.lookup
    if evidence.default == ZERO:
        _violation(NEGATIVE, ONE, ZERO, t=fresh_variable(keys), phi=fresh_atom(keys))
    for term, phi in keys:
        value = evidence.overrides[(term, phi)]
        _violation(NEGATIVE, wneg(value), lookup(Query(term), neg(Holds(term, phi))), t=term, phi=phi)
        body = phi.antecedent if isinstance(phi, Implies) and phi.consequent == BOTTOM else None
        if isinstance(term, Query) and isinstance(body, Holds) and body.term == term.inner:
            t = term.inner
            _violation(NEGATIVE, wneg(lookup(t, body.body)), value, t=t, phi=body.body)


def _check_sampled(
    model: Model, model_class: ModelClass, universe: Sequence[EvidenceKey]
) -> ClassVerdict:
    evidence = model.evidence
    lookup = evidence.lookup
    floor = evidence.floor()
    values = {key: lookup(*key) for key in universe}
    by_formula: Dict[Formula, List[JustTerm]] = {}
    for term, phi in universe:
        by_formula.setdefault(phi, []).append(term)
    checked = 0
    try:
        for (t, phi), value in values.items():
            checked += 1
            if model_class.factive:
                _violation(FACTIVITY, value, evaluate(model, phi), t=t, phi=phi)
            if model_class.positive_introspection and value > floor:
                _violation(POSITIVE, value, lookup(Bang(t), Holds(t, phi)), t=t, phi=phi)
            if model_class.negative_introspection and value == ZERO:
                _violation(NEGATIVE, ONE, lookup(Query(t), neg(Holds(t, phi))), t=t, phi=phi)
            for s in by_formula[phi]:
                lhs = tconorm(value, values[(s, phi)])
                if lhs > floor:
                    checked += 1
                    _violation(SUM, lhs, lookup(Sum(t, s), phi), t=t, s=s, phi=phi)
            if isinstance(phi, Implies):
                for s in by_formula.get(phi.antecedent, []):
                    lhs = tnorm(value, values[(s, phi.antecedent)])
                    if lhs > floor:
                        checked += 1
                        _violation(
                            APPLICATION,
                            lhs,
                            lookup(App(t, s), phi.consequent),
                            t=t,
                            s=s,
                            phi=phi.antecedent,
                            psi=phi.consequent,
                        )
    except _Found as found:
        return ClassVerdict(False, model_class, found.violation, exact=False, checked=checked)
    logger.debug("sampled %d instances of %s", checked, model_class.value)
    return ClassVerdict(True, model_class, exact=False, checked=checked)


@dataclass(frozen=True)
class CSVerdict:
    accepted: bool
    member: Optional[Formula] = None
    value: Optional[TruthValue] = None
    exact: bool = False
    checked: int = 0

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "member": format_formula(self.member) if self.member is not None else None,
            "value": str(self.value) if self.value is not None else None,
            "exact": self.exact,
            "checked": self.checked,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CSVerdict":
        from gjlogic.syntax.parser import parse_formula

        member, value = data.get("member"), data.get("value")
        return cls(
            bool(data["accepted"]),
            parse_formula(member) if member is not None else None,
            TruthValue.of(value) if value is not None else None,
            bool(data.get("exact", False)),
            int(data.get("checked", 0)),
        )


def check_cs_respect(
    model: Model, cs: ConstantSpec, sample: Optional[Sequence[Formula]] = None, sample_size: int = 20
) -> CSVerdict:
    """E(c, phi) = 1 for the members of cs; exhaustive for finite evidence and a finite cs."""
    exact = isinstance(cs, FiniteCS) and isinstance(model.evidence, (FiniteSpec, AllOnes))
    if exact:
        members: Sequence[Formula] = sorted(cs.members, key=format_formula)  # type: ignore[union-attr]
    else:
        members = list(sample) if sample is not None else cs.sample(sample_size)
    for checked, member in enumerate(members, start=1):
        if not isinstance(member, Holds):
            raise ModelClassError(f"{format_formula(member)} is not a constant specification member")
        value = model.evidence.lookup(member.term, member.body)
        if value != ONE:
            return CSVerdict(False, member, value, exact, checked)
    return CSVerdict(True, exact=exact, checked=len(members))


__all__ = [
    "APPLICATION",
    "CLASS_OF_CALCULUS",
    "CSVerdict",
    "ClassVerdict",
    "ClassViolation",
    "FACTIVITY",
    "NEGATIVE",
    "POSITIVE",
    "STAR_CLASS_OF_CALCULUS",
    "SUM",
    "check_cs_respect",
    "check_model_class",
    "fresh_atom",
    "fresh_variable",
]
