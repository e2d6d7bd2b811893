"""Tests for the model class closure checks and constant specification respect."""

from __future__ import annotations

import random
from itertools import product
from typing import Dict

import pytest
from hypothesis import given, settings, strategies as st

from gjlogic.algebra import ONE, ZERO, TruthValue, tconorm, tnorm, wneg
from gjlogic.calculus.constant_spec import FiniteCS, TotalCS
from gjlogic.errors import ModelClassError
from gjlogic.models.classes import (
    APPLICATION,
    FACTIVITY,
    NEGATIVE,
    POSITIVE,
    SUM,
    ClassVerdict,
    check_cs_respect,
    check_model_class,
)
from gjlogic.models.evaluation import evaluate
from gjlogic.models.evidence import AllOnes, FiniteSpec, Model, ModelClass, Valuation
from gjlogic.models.transform import make_x_rooted
from gjlogic.syntax.ast import App, Bang, Holds, Implies, Query, Sum, neg
from gjlogic.syntax.parser import parse_formula, parse_jformula, parse_term

HALF = TruthValue.of("1/2")
VALUES = [ZERO, HALF, ONE]

KEY_TERMS = [parse_term(text) for text in ("x1", "x2", "x1*x2", "x1+x2", "!x1", "?x1")]
KEY_FORMULAS = [
    parse_formula(text) for text in ("p1", "p2", "p1 -> p2", "~p1", "x1:p1", "~x1:p1")
]
TERM_POOL = KEY_TERMS + [parse_term("x3")]
FORMULA_POOL = KEY_FORMULAS + [parse_formula("p3"), parse_formula("bot")]


def _model(default: TruthValue, overrides: Dict[str, TruthValue], e: TruthValue = ZERO) -> Model:
    parsed = {}
    for key, value in overrides.items():
        term, formula = key.split(" : ", 1)
        parsed[(parse_term(term), parse_formula(formula))] = value
    return Model(FiniteSpec(default, parsed), Valuation(e))


def _random_model(seed: int) -> Model:
    rng = random.Random(seed)
    overrides = {
        (rng.choice(KEY_TERMS), rng.choice(KEY_FORMULAS)): rng.choice(VALUES)
        for _ in range(rng.randint(0, 5))
    }
    valuation = Valuation(rng.choice(VALUES), {index: rng.choice(VALUES) for index in (1, 2)})
    return Model(FiniteSpec(rng.choice(VALUES), overrides), valuation)


def _brute_force(model: Model) -> Dict[str, bool]:
    """Each closure condition checked on every instance drawn from the pools."""
    lookup = model.evidence.lookup
    holds = {APPLICATION: True, SUM: True, FACTIVITY: True, POSITIVE: True, NEGATIVE: True}
    for t, phi in product(TERM_POOL, FORMULA_POOL):
        value = lookup(t, phi)
        if value > evaluate(model, phi):
            holds[FACTIVITY] = False
        if value > lookup(Bang(t), Holds(t, phi)):
            holds[POSITIVE] = False
        if wneg(value) > lookup(Query(t), neg(Holds(t, phi))):
            holds[NEGATIVE] = False
        for s in TERM_POOL:
            if tconorm(value, lookup(s, phi)) > lookup(Sum(t, s), phi):
                holds[SUM] = False
            for psi in FORMULA_POOL:
                lhs = tnorm(lookup(t, Implies(phi, psi)), lookup(s, phi))
                if lhs > lookup(App(t, s), psi):
                    holds[APPLICATION] = False
    return holds


_CONDITIONS = {
    ModelClass.GM: (APPLICATION, SUM),
    ModelClass.GMT: (APPLICATION, SUM, FACTIVITY),
    ModelClass.GM4: (APPLICATION, SUM, POSITIVE),
    ModelClass.GMLP: (APPLICATION, SUM, FACTIVITY, POSITIVE),
    ModelClass.GM45: (APPLICATION, SUM, POSITIVE, NEGATIVE),
    ModelClass.GMT45: (APPLICATION, SUM, FACTIVITY, POSITIVE, NEGATIVE),
}


class TestExactAgreesWithBruteForce:
    """The exact decision for finite evidence matches enumeration over a closed universe."""

    @settings(max_examples=300, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_every_class(self, seed: int) -> None:
        model = _random_model(seed)
        holds = _brute_force(model)

        for model_class, conditions in _CONDITIONS.items():
            verdict = check_model_class(model, model_class)
            assert verdict.accepted == all(holds[name] for name in conditions), model_class
            if not verdict.accepted:
                assert verdict.violation is not None
                assert not holds[verdict.violation.condition]
                assert verdict.violation.lhs > verdict.violation.rhs


class TestFiniteViolations:
    """Each condition reports a concrete witness instance."""

    def test_default_one_with_variable_overrides_is_gm45(self) -> None:
        model = _model(ONE, {"x1 : p1": HALF, "x2 : p1 -> p2": ZERO})

        for model_class in (ModelClass.GM, ModelClass.GM4, ModelClass.GM45):
            assert check_model_class(model, model_class).accepted

    def test_application_against_lowered_product(self) -> None:
        model = _model(ONE, {"x1*x2 : p2": HALF})

        verdict = check_model_class(model, ModelClass.GM)

        assert not verdict.accepted
        assert verdict.violation is not None
        assert verdict.violation.condition == APPLICATION
        assert verdict.violation.binding("t") == parse_term("x1")
        assert verdict.violation.binding("s") == parse_term("x2")
        assert verdict.violation.binding("psi") == parse_formula("p2")

    def test_application_from_two_overrides(self) -> None:
        model = _model(ZERO, {"x1 : p1 -> p2": ONE, "x2 : p1": HALF})

        verdict = check_model_class(model, ModelClass.GM)

        assert not verdict.accepted
        assert verdict.violation is not None
        assert verdict.violation.lhs == HALF and verdict.violation.rhs == ZERO

    def test_sum_needs_a_fresh_partner(self) -> None:
        model = _model(ZERO, {"x1 : p1": HALF})

        verdict = check_model_class(model, ModelClass.GM)

        assert verdict.violation is not None
        assert verdict.violation.condition == SUM
        assert parse_term("x2") in (verdict.violation.binding("t"), verdict.violation.binding("s"))

    def test_zero_evidence_is_factive_but_not_negatively_introspective(self) -> None:
        model = _model(ZERO, {})

        assert check_model_class(model, ModelClass.GMLP).accepted
        verdict = check_model_class(model, ModelClass.GMT45)
        assert verdict.violation is not None
        assert verdict.violation.condition == NEGATIVE

    def test_factivity_of_positive_default(self) -> None:
        verdict = check_model_class(_model(HALF, {}), ModelClass.GMT)

        assert verdict.violation is not None
        assert verdict.violation.condition == FACTIVITY
        assert verdict.violation.binding("phi") == parse_formula("bot")

    def test_positive_introspection_against_bang_override(self) -> None:
        model = _model(ONE, {"!x1 : x1:p1": HALF})

        verdict = check_model_class(model, ModelClass.GM4)

        assert verdict.violation is not None
        assert verdict.violation.condition == POSITIVE

    def test_all_ones_is_never_factive(self) -> None:
        model = Model(AllOnes())

        assert check_model_class(model, ModelClass.GM45).accepted
        assert not check_model_class(model, ModelClass.GMT).accepted

    def test_verdict_round_trips_through_dict(self) -> None:
        verdict = check_model_class(_model(ONE, {"x1*x2 : p2": HALF}), ModelClass.GM)

        assert ClassVerdict.from_dict(verdict.to_dict()) == verdict


class TestSampledCheck:
    def test_x_rooted_needs_a_universe(self) -> None:
        with pytest.raises(ModelClassError):
            check_model_class(make_x_rooted(HALF, "GJ45_TCS"), ModelClass.GM45)

    def test_x_rooted_is_a_gm45_model_on_the_universe(self) -> None:
        model = make_x_rooted(HALF, "GJ45_TCS")
        universe = [
            (parse_term("x1"), parse_formula("p1")),
            (parse_term("x2"), parse_formula("p1")),
            (parse_term("c1"), parse_formula("bot -> p1")),
        ]

        verdict = check_model_class(model, ModelClass.GM45, universe)

        assert verdict.accepted
        assert not verdict.exact
        assert verdict.checked >= len(universe)


class TestConstantSpecificationRespect:
    def test_finite_specification_is_checked_exactly(self) -> None:
        member = parse_jformula("c1:(bot -> p1)")
        cs = FiniteCS("GJ", frozenset({member}))

        evidence = FiniteSpec(ZERO, {(parse_term("c1"), parse_formula("bot -> p1")): ONE})

        accepted = check_cs_respect(Model(evidence), cs)
        rejected = check_cs_respect(Model(FiniteSpec(HALF)), cs)

        assert accepted.accepted and accepted.exact
        assert not rejected.accepted
        assert rejected.member == member
        assert rejected.value == HALF

    def test_total_specification_is_sampled(self) -> None:
        verdict = check_cs_respect(Model(AllOnes()), TotalCS("GJ45"), sample_size=7)

        assert verdict.accepted
        assert not verdict.exact
        assert verdict.checked == 7

    def test_x_rooted_model_respects_the_total_specification(self) -> None:
        model = make_x_rooted(HALF, "GJ45_TCS")

        assert check_cs_respect(model, TotalCS("GJ45")).accepted

    def test_members_must_be_labelled(self) -> None:
        with pytest.raises(ModelClassError):
            check_cs_respect(Model(AllOnes()), TotalCS("GJ"), sample=[parse_formula("p1")])
