"""Tests for theorem-gap reports and their independent re-check."""

from __future__ import annotations

from typing import Tuple

import pytest

from gjlogic.algebra import TruthValue
from gjlogic.config import GJLogicSettings
from gjlogic.errors import GJLogicError
from gjlogic.models.oracle import Semantics
from gjlogic.realization.report import (
    FACTIVE_CALCULI,
    GAP_PAIRS,
    demo_theorem_gap,
    recheck_report,
    render_report,
    z_axiom,
)
from gjlogic.syntax.parser import parse_formula, parse_mformula

SMALL = GJLogicSettings(
    seed=20190801, universe_size=60, cs_sample_size=20, prover_depth=3, log_level="WARNING"
)


class TestDemoTheoremGap:
    @pytest.mark.parametrize("pair", GAP_PAIRS, ids="/".join)
    def test_every_correspondence_is_accepted(self, pair: Tuple[str, str]) -> None:
        report = demo_theorem_gap(pair, settings=SMALL)
        star = pair[0] in FACTIVE_CALCULI

        assert report.accepted
        assert report.z_proof.conclusion == parse_mformula("~~[]p1 -> []~~p1")
        assert report.z_proof.calculus.name == pair[1]
        assert len(report.demonstrations) == 3
        assert all(
            (demo.semantics is Semantics.STAR) == star for demo in report.demonstrations
        )
        assert report.inclusion_proof.conclusion == parse_mformula("[](bot -> p1)")

    def test_x_is_passed_through(self) -> None:
        report = demo_theorem_gap(("GJ", "GK"), x=TruthValue.of("1/3"), settings=SMALL)

        assert {demo.evaluation for demo in report.demonstrations} == {TruthValue.of("1/3")}

    def test_unsupported_pair(self) -> None:
        with pytest.raises(GJLogicError):
            demo_theorem_gap(("GJ", "GS4"), settings=SMALL)

    def test_z_axiom_shape(self) -> None:
        assert z_axiom(parse_formula("p2")) == parse_mformula("~~[]p2 -> []~~p2")


class TestRecheckReport:
    def test_report_data_rechecks(self) -> None:
        report = demo_theorem_gap(("GJ4", "GK4"), settings=SMALL)

        verdict = recheck_report(report.to_dict())

        assert verdict.accepted, verdict.problems

    def test_tampered_evaluation_is_flagged(self) -> None:
        data = demo_theorem_gap(("GLP", "GS4"), settings=SMALL).to_dict()
        data["demonstrations"][1]["evaluation"] = "1"

        verdict = recheck_report(data)

        assert not verdict.accepted
        assert any("report states 1" in problem for problem in verdict.problems)

    def test_tampered_intermediate_is_flagged(self) -> None:
        data = demo_theorem_gap(("GJ", "GK"), settings=SMALL).to_dict()
        assert data["demonstrations"][0]["intermediates"][2] == ["|s:~~p|", "1/2"]
        data["demonstrations"][0]["intermediates"][2][1] = "1"

        verdict = recheck_report(data)

        assert not verdict.accepted
        assert "z_failure_no_factivity: |s:~~p| recomputed 1/2, report states 1" in verdict.problems

    def test_valid_instance_is_not_a_counterexample(self) -> None:
        data = demo_theorem_gap(("GJ", "GK"), settings=SMALL).to_dict()
        demo = data["demonstrations"][0]
        demo["model"]["evidence"]["x"] = "1"
        demo["evaluation"] = "1"
        demo["intermediates"] = [[label, "1"] for label, _ in demo["intermediates"]]

        verdict = recheck_report(data)

        assert not verdict.accepted
        assert any("not a counterexample" in problem for problem in verdict.problems)
        assert not any("report states" in problem for problem in verdict.problems)

    def test_swapped_instance_is_flagged(self) -> None:
        data = demo_theorem_gap(("GJ", "GK"), settings=SMALL).to_dict()
        data["demonstrations"][0]["instance"] = "~~x1:p1 -> x1:~~p1"

        verdict = recheck_report(data)

        assert any("instance is not" in problem for problem in verdict.problems)

    def test_wrong_modal_proof_is_flagged(self) -> None:
        data = demo_theorem_gap(("GJ", "GK"), settings=SMALL).to_dict()
        data["modal"] = "GK4"

        verdict = recheck_report(data)

        assert not verdict.accepted
        assert "expected GK4" in verdict.problems[0]

    def test_missing_section_is_a_problem(self) -> None:
        verdict = recheck_report({"modal": "GK"})

        assert not verdict.accepted
        assert verdict.problems[0].startswith("report could not be rebuilt")


class TestRenderReport:
    def test_text_lists_every_part(self) -> None:
        text = render_report(demo_theorem_gap(("GJ45", "GK45"), settings=SMALL))

        assert text.startswith("theorem gap GJ45_CS / GK45")
        assert "~~[]p1 -> []~~p1 in GK45: accept" in text
        assert text.count("z_failure_no_factivity: x = 1/2") == 3
        assert "class GM45: accept" in text
        assert "projected c1:(bot -> p1) to [](bot -> p1): accept" in text
