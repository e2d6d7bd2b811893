"""Tests for standard and starred evaluation and the pre-model transformations."""

from __future__ import annotations

import random
from typing import List

import pytest
from hypothesis import given, settings, strategies as st

from gjlogic.algebra import ONE, ZERO, TruthValue
from gjlogic.errors import ModelClassError
from gjlogic.models.classes import check_model_class
from gjlogic.models.evaluation import (
    evaluate,
    evaluate_set,
    evaluate_star,
    is_crisp,
    semantic_consequence,
)
from gjlogic.models.evidence import (
    AllOnes,
    EvidenceKey,
    FiniteSpec,
    Model,
    ModelClass,
    Valuation,
)
from gjlogic.models.sampling import random_formula, random_term
from gjlogic.models.transform import normal_to_pre, pre_to_normal
from gjlogic.syntax.ast import (
    Bang,
    Formula,
    Holds,
    Implies,
    Query,
    Sum,
    Variable,
    contains_holds,
    subformulas,
)
from gjlogic.syntax.parser import parse_formula, parse_term

GRID = [TruthValue.of(text) for text in ("0", "1/4", "1/3", "1/2", "2/3", "3/4", "1")]
HALF = TruthValue.of("1/2")
THIRD = TruthValue.of("1/3")


def _valuation(rng: random.Random) -> Valuation:
    return Valuation(rng.choice(GRID), {index: rng.choice(GRID) for index in (1, 2, 3)})


def _propositional(rng: random.Random, depth: int) -> Formula:
    while True:
        phi = random_formula(rng, depth)
        if not contains_holds(phi):
            return phi


def _factive_model(rng: random.Random) -> Model:
    """Zero by default; every override is bounded by the value of its propositional body."""
    valuation = _valuation(rng)
    bare = Model(FiniteSpec(ZERO), valuation)
    overrides = {}
    for _ in range(rng.randint(0, 8)):
        phi = _propositional(rng, 2)
        overrides[(random_term(rng, 1), phi)] = min(rng.choice(GRID), evaluate(bare, phi))
    return Model(FiniteSpec(ZERO, overrides), valuation)


def _sample_formulas(rng: random.Random, model: Model) -> List[Formula]:
    """Random formulas plus formulas built from the model's own evidence keys."""
    formulas = [random_formula(rng, 5, term_depth=1) for _ in range(3)]
    assert isinstance(model.evidence, FiniteSpec)
    for term, phi in model.evidence.overrides:
        formulas.append(Implies(Holds(term, phi), phi))
        formulas.append(Implies(phi, Holds(term, phi)))
    return formulas


def _introspective_model(rng: random.Random) -> Model:
    overrides = {
        (Variable(rng.randint(1, 3)), random_formula(rng, 2)): rng.choice(GRID)
        for _ in range(rng.randint(0, 6))
    }
    return Model(FiniteSpec(ONE, overrides), _valuation(rng))


def _pre_model(rng: random.Random) -> Model:
    """A GM model whose overrides sit below the default on x, !x and ?x terms.

    Each x:phi override gets a !x:x:phi partner; half of the time the partner is
    pushed below its base, which leaves GM4.
    """
    default = rng.choice(GRID[3:])
    below = [value for value in GRID if value <= default]
    overrides = {}
    for _ in range(rng.randint(1, 6)):
        x = Variable(rng.randint(1, 3))
        phi = random_formula(rng, 2)
        overrides[(rng.choice([Bang(x), Query(x)]), phi)] = rng.choice(below)
        overrides[(x, phi)] = value = rng.choice(below[1:])
        overrides[(Bang(x), Holds(x, phi))] = rng.choice([v for v in below if v >= value])
    if rng.random() < 0.5:
        x, phi = next(key for key in overrides if isinstance(key[0], Variable))
        overrides[(Bang(x), Holds(x, phi))] = ZERO
    return Model(FiniteSpec(default, overrides), _valuation(rng))


def _labelled_pairs(formulas: List[Formula]) -> List[EvidenceKey]:
    pairs = {
        (sub.term, sub.body): None
        for phi in formulas
        for sub in subformulas(phi)
        if isinstance(sub, Holds)
    }
    return list(pairs)


class TestEvaluate:
    def test_connectives(self) -> None:
        model = Model(FiniteSpec(ZERO), Valuation(ZERO, {1: HALF, 2: THIRD}))

        assert evaluate(model, parse_formula("p1 -> p2")) == THIRD
        assert evaluate(model, parse_formula("p2 -> p1")) == ONE
        assert evaluate(model, parse_formula("p1 & p2")) == THIRD
        assert evaluate(model, parse_formula("~p1")) == ZERO
        assert evaluate(model, parse_formula("~~p1")) == ONE
        assert evaluate(model, parse_formula("~p3")) == ONE

    def test_label_reads_evidence(self) -> None:
        evidence = FiniteSpec(ZERO, {(Variable(1), parse_formula("p1")): HALF})
        model = Model(evidence, Valuation(ZERO, {1: THIRD}))

        assert evaluate(model, parse_formula("x1:p1")) == HALF
        assert evaluate(model, parse_formula("x2:p1")) == ZERO

    def test_star_caps_by_the_body(self) -> None:
        evidence = FiniteSpec(ZERO, {(Variable(1), parse_formula("p1")): HALF})
        model = Model(evidence, Valuation(ZERO, {1: THIRD}))

        assert evaluate_star(model, parse_formula("x1:p1")) == THIRD
        assert evaluate_star(model, parse_formula("x1:p1 -> p1")) == ONE
        assert evaluate(model, parse_formula("x1:p1 -> p1")) == THIRD

    def test_boxes_are_not_evaluated(self) -> None:
        with pytest.raises(ModelClassError):
            evaluate(Model(AllOnes()), parse_formula("[]p1"))

    def test_empty_set_is_one(self) -> None:
        model = Model(AllOnes())

        assert evaluate_set(model, []) == ONE
        assert evaluate_set(model, [parse_formula("p1"), parse_formula("x1:p1")]) == ZERO


class TestSemanticConsequence:
    def test_reports_first_counter_model(self) -> None:
        models = [
            Model(AllOnes(), Valuation(ONE)),
            Model(AllOnes(), Valuation(ZERO, {1: ONE})),
        ]

        verdict = semantic_consequence(models, [parse_formula("p1")], parse_formula("p2"))

        assert not verdict.holds
        assert verdict.model_index == 1
        assert verdict.phi_value == ZERO

    def test_models_below_one_on_gamma_are_skipped(self) -> None:
        models = [Model(AllOnes(), Valuation(HALF))]

        verdict = semantic_consequence(models, [parse_formula("p1")], parse_formula("bot"))

        assert verdict.holds

    def test_star_consequence(self) -> None:
        models = [Model(AllOnes(), Valuation(ZERO))]
        gamma = [parse_formula("x1:p1")]

        assert semantic_consequence(models, gamma, parse_formula("p1"), star=True).holds
        assert not semantic_consequence(models, gamma, parse_formula("p1")).holds


class TestIsCrisp:
    def test_crisp_and_non_crisp(self) -> None:
        assert is_crisp(Model(AllOnes(), Valuation(ONE)))
        assert not is_crisp(Model(AllOnes(), Valuation(HALF)))
        assert not is_crisp(Model(FiniteSpec(ZERO, {(Variable(1), parse_formula("p1")): HALF})))


class TestEvaluatorEquivalence:
    """Starred and standard evaluation agree on factive models, and pre-models normalize."""

    @settings(max_examples=500, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_factive_models_evaluate_alike(self, seed: int) -> None:
        rng = random.Random(seed)
        model = _factive_model(rng)
        assert isinstance(model.evidence, FiniteSpec)
        for (_, phi), value in model.evidence.overrides.items():
            assert value <= evaluate(model, phi)

        for phi in _sample_formulas(rng, model):
            assert evaluate(model, phi) == evaluate_star(model, phi)

    @settings(max_examples=500, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_pre_models_normalize(self, seed: int) -> None:
        rng = random.Random(seed)
        model = _introspective_model(rng)
        assert check_model_class(model, ModelClass.GM4).accepted
        universe = _sample_formulas(rng, model)

        normal = pre_to_normal(model, universe)

        for phi in universe:
            assert evaluate_star(model, phi) == evaluate(normal, phi)

    @settings(max_examples=300, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_normalized_model_is_factive(self, seed: int) -> None:
        rng = random.Random(seed)
        model = _pre_model(rng)
        assert check_model_class(model, ModelClass.GM).accepted
        introspective = check_model_class(model, ModelClass.GM4).accepted
        assert isinstance(model.evidence, FiniteSpec)
        universe = _sample_formulas(rng, model)

        normal = pre_to_normal(model, universe)

        target = ModelClass.GMLP if introspective else ModelClass.GMT
        pairs = _labelled_pairs(universe) + list(model.evidence.overrides)
        pairs += [(Sum(t, Variable(9)), phi) for t, phi in pairs]
        verdict = check_model_class(normal, target, pairs)
        assert verdict.accepted, verdict.violation
        for phi in universe:
            assert evaluate(normal, phi) == evaluate_star(model, phi)

    def test_all_ones_pre_model(self) -> None:
        model = Model(AllOnes(), Valuation(THIRD))
        universe = [parse_formula("x1:p1 -> p1"), parse_formula("x2:x1:p1")]

        normal = pre_to_normal(model, universe)

        assert evaluate(normal, parse_formula("x1:p1")) == THIRD
        assert evaluate(normal, universe[0]) == ONE


class TestNormalToPre:
    def test_factive_model_is_returned(self) -> None:
        model = Model(FiniteSpec(ZERO), Valuation(HALF))

        assert normal_to_pre(model) is model

    def test_non_factive_model_is_rejected(self) -> None:
        with pytest.raises(ModelClassError):
            normal_to_pre(Model(AllOnes()))


class TestPreToNormal:
    def test_sum_closure_reaches_fresh_partners(self) -> None:
        model = Model(FiniteSpec(ONE), Valuation(ONE))

        normal = pre_to_normal(model, [parse_formula("x1:p1")])

        universe = [(parse_term(text), parse_formula("p1")) for text in ("x1", "x2", "x1+x2")]
        assert check_model_class(normal, ModelClass.GMLP, universe).accepted
        assert normal.evidence.lookup(parse_term("x1+x2"), parse_formula("p1")) == ONE
        assert normal.evidence.lookup(parse_term("x7*x8"), parse_formula("p1")) == ONE

    def test_falsum_is_never_evidenced(self) -> None:
        model = Model(FiniteSpec(ONE, {(Variable(1), parse_formula("bot")): ONE}))

        normal = pre_to_normal(model, [])

        assert normal.evidence.lookup(Variable(1), parse_formula("bot")) == ZERO

    def test_gm_input_gives_gmt(self) -> None:
        key = (parse_term("!x1"), parse_formula("x1:p1"))
        overrides = {(Variable(1), parse_formula("p1")): HALF, key: ZERO}
        model = Model(FiniteSpec(ONE, overrides), Valuation(ONE))
        assert not check_model_class(model, ModelClass.GM4).accepted

        normal = pre_to_normal(model, [parse_formula("!x1:x1:p1 -> x1:p1")])

        pairs = [(Variable(1), parse_formula("p1")), key]
        assert check_model_class(normal, ModelClass.GMT, pairs).accepted
        assert not check_model_class(normal, ModelClass.GMLP, pairs).accepted

    def test_non_gm_input_is_rejected(self) -> None:
        model = Model(FiniteSpec(ONE, {(parse_term("x1*x2"), parse_formula("p2")): HALF}))

        with pytest.raises(ModelClassError):
            pre_to_normal(model, [])

    def test_capped_evidence_needs_a_universe_to_check(self) -> None:
        normal = pre_to_normal(Model(AllOnes(), Valuation(HALF)), [])

        with pytest.raises(ModelClassError):
            check_model_class(normal, ModelClass.GMLP)

    def test_dict_round_trip(self) -> None:
        model = Model(FiniteSpec(ONE, {(Variable(2), parse_formula("p1")): THIRD}), Valuation(HALF))
        normal = pre_to_normal(model, [])

        assert Model.from_dict(normal.to_dict()) == normal
