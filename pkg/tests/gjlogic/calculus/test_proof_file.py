"""Tests for the proof and constant specification file formats."""

from __future__ import annotations

from pathlib import Path

import pytest

from gjlogic.calculus.checker import check_proof
from gjlogic.calculus.constant_spec import FiniteCS, TotalCS
from gjlogic.calculus.derivations import identity_proof
from gjlogic.calculus.lifting import internalize
from gjlogic.calculus.proof import Assumption, CalculusId, ModusPonens
from gjlogic.calculus.proof_file import (
    cs_reference_of,
    load_proof,
    read_cs,
    read_proof,
    write_cs,
    write_proof,
)
from gjlogic.errors import ProofFormatError
from gjlogic.syntax.parser import parse_formula, parse_jformula

FACTIVE_PROOF = """\
# factivity applied to an assumption
calculus GJT cs total
1. x1:p1 ; assume 1
2. x1:p1 -> p1 ; axiom F {t := x1, phi := p1}
3. p1 ; mp 2 1
"""

CS_TEXT = """\
base GJ
c1:(bot -> p1)
c2:c1:(bot -> p1)
"""


class TestReadProof:
    def test_reads_lines_and_assumptions(self) -> None:
        proof = read_proof(FACTIVE_PROOF)

        assert proof.calculus == CalculusId.total("GJT")
        assert proof.assumptions == (parse_jformula("x1:p1"),)
        assert proof.lines[0].justification == Assumption(1)
        assert proof.lines[2].justification == ModusPonens(2, 1)
        assert proof.lines[2].assumptions == frozenset({1})
        assert check_proof(proof).accepted

    def test_binding_must_match_formula(self) -> None:
        text = FACTIVE_PROOF.replace("phi := p1", "phi := p2")

        with pytest.raises(ProofFormatError) as excinfo:
            read_proof(text)

        assert excinfo.value.line == 4

    def test_line_numbers_must_be_consecutive(self) -> None:
        text = FACTIVE_PROOF.replace("3. p1", "4. p1")

        with pytest.raises(ProofFormatError):
            read_proof(text)

    def test_missing_header(self) -> None:
        with pytest.raises(ProofFormatError):
            read_proof("1. bot -> p1 ; axiom A7\n")

    def test_unknown_rule(self) -> None:
        with pytest.raises(ProofFormatError):
            read_proof("calculus GJ\n1. bot -> p1 ; guess\n")

    def test_bad_formula_reports_line(self) -> None:
        with pytest.raises(ProofFormatError) as excinfo:
            read_proof("calculus GJ\n1. bot -> ; axiom A7\n")

        assert excinfo.value.line == 2

    def test_assumption_gaps_are_rejected(self) -> None:
        with pytest.raises(ProofFormatError):
            read_proof("calculus GJ\n1. p1 ; assume 2\n")

    def test_bad_references_are_left_to_the_checker(self) -> None:
        proof = read_proof("calculus GJ\n1. p1 ; mp 4 5\n")

        verdict = check_proof(proof)

        assert not verdict.accepted and verdict.line == 1


class TestWriteProof:
    def test_written_proof_reads_back(self) -> None:
        _, internal = internalize(identity_proof(CalculusId.total("GJ45"), parse_formula("p1")))

        text = write_proof(internal)

        assert text.startswith("calculus GJ45 cs total\n")
        assert read_proof(text) == internal

    def test_axiom_lines_list_bindings(self) -> None:
        text = write_proof(read_proof(FACTIVE_PROOF))

        assert "2. x1:p1 -> p1 ; axiom F {phi := p1, t := x1}" in text

    def test_finite_specification_needs_a_reference(self) -> None:
        cs = FiniteCS("GJ", frozenset({parse_jformula("c1:(bot -> p1)")}))
        proof = read_proof("calculus GJ cs total\n1. bot -> p1 ; axiom A7\n")
        proof = type(proof)(CalculusId("GJ", cs), proof.lines)

        with pytest.raises(ProofFormatError):
            write_proof(proof)
        assert write_proof(proof, cs_reference="gj.cs").startswith("calculus GJ cs gj.cs\n")


class TestConstantSpecificationFiles:
    def test_read_and_write(self) -> None:
        cs = read_cs(CS_TEXT)

        assert cs.base == "GJ"
        assert len(cs.members) == 2
        assert read_cs(write_cs(cs)) == cs

    def test_must_be_downward_closed(self) -> None:
        with pytest.raises(ProofFormatError):
            read_cs("base GJ\nc2:c1:(bot -> p1)\n")

    def test_members_must_be_axiom_chains(self) -> None:
        with pytest.raises(ProofFormatError):
            read_cs("base GJ\nc1:p1\n")

    def test_proof_file_loads_relative_specification(self, tmp_path: Path) -> None:
        (tmp_path / "gj.cs").write_text(CS_TEXT, encoding="utf-8")
        path = tmp_path / "member.proof"
        path.write_text("calculus GJ cs gj.cs\n1. c1:(bot -> p1) ; cs\n", encoding="utf-8")

        proof = load_proof(path)

        assert isinstance(proof.calculus.cs, FiniteCS)
        assert check_proof(proof).accepted
        assert cs_reference_of(path.read_text(encoding="utf-8")) == "gj.cs"

    def test_missing_specification_file(self, tmp_path: Path) -> None:
        path = tmp_path / "member.proof"
        path.write_text("calculus GJ cs absent.cs\n1. c1:(bot -> p1) ; cs\n", encoding="utf-8")

        with pytest.raises(ProofFormatError) as excinfo:
            load_proof(path)

        assert excinfo.value.line == 1

    def test_total_reference(self) -> None:
        assert cs_reference_of(FACTIVE_PROOF) == "total"
        assert isinstance(read_proof(FACTIVE_PROOF).calculus.cs, TotalCS)
        assert cs_reference_of("calculus GK\n") is None
