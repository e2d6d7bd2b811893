"""Tests for lifting and internalization over generated proofs."""

from __future__ import annotations

import pytest

from gjlogic.calculus.builder import ProofBuilder
from gjlogic.calculus.checker import check_proof
from gjlogic.calculus.derivations import double_negation_proof, identity_proof
from gjlogic.calculus.lifting import internalize, lift
from gjlogic.calculus.proof import CalculusId
from gjlogic.calculus.schemes import JUSTIFICATION_CALCULI
from gjlogic.errors import LiftingError
from gjlogic.syntax.ast import App, Constant, Holds, Variable
from gjlogic.syntax.parser import parse_formula, parse_jformula

_SEEDS = range(120)


class TestGeneratedProofs:
    """Every generated proof is accepted, and so is its lifted form."""

    def test_generated_proofs_check(self, random_proof) -> None:
        for seed in _SEEDS:
            calculus = CalculusId.total(JUSTIFICATION_CALCULI[seed % len(JUSTIFICATION_CALCULI)])
            proof = random_proof(seed, calculus, assumptions=seed % 3)

            assert len(proof) <= 10
            assert check_proof(proof).accepted, seed

    def test_lifted_proofs_check(self, random_proof) -> None:
        for seed in _SEEDS:
            calculus = CalculusId.total(JUSTIFICATION_CALCULI[seed % len(JUSTIFICATION_CALCULI)])
            proof = random_proof(seed, calculus, assumptions=seed % 3)
            terms = [Variable(index + 1) for index in range(len(proof.assumptions))]

            term, lifted = lift(proof, terms)

            verdict = check_proof(lifted)
            assert verdict.accepted, (seed, verdict.line, verdict.message)
            assert lifted.conclusion == Holds(term, proof.conclusion)
            assert lifted.assumptions == tuple(
                Holds(t, psi) for t, psi in zip(terms, proof.assumptions)
            )

    def test_internalized_proofs_have_no_assumptions(self, random_proof) -> None:
        for seed in _SEEDS:
            calculus = CalculusId.total(JUSTIFICATION_CALCULI[seed % len(JUSTIFICATION_CALCULI)])
            proof = random_proof(seed, calculus)

            term, internal = internalize(proof)

            assert check_proof(internal).accepted, seed
            assert internal.is_pure
            assert internal.conclusion == Holds(term, proof.conclusion)


class TestLiftTerms:
    """The shape of the produced justification term."""

    def test_axiom_gets_the_first_constant(self) -> None:
        calculus = CalculusId.total("GJT")
        builder = ProofBuilder(calculus)
        proof = builder.build(builder.axiom(parse_jformula("x1:p1 -> p1")))

        term, _ = internalize(proof)

        assert term == Constant(1)

    def test_constant_member_gets_the_next_constant(self) -> None:
        calculus = CalculusId.total("GJ")
        builder = ProofBuilder(calculus)
        proof = builder.build(builder.cs(parse_jformula("c2:c1:(bot -> p1)")))

        term, lifted = internalize(proof)

        assert term == Constant(3)
        assert check_proof(lifted).accepted

    def test_modus_ponens_becomes_application(self) -> None:
        calculus = CalculusId.total("GJT")
        builder = ProofBuilder(calculus, [parse_jformula("x1:p1")])
        minor = builder.assume(1)
        proof = builder.build(builder.mp(builder.axiom(parse_jformula("x1:p1 -> p1")), minor))

        term, lifted = lift(proof, [Variable(5)])

        assert term == App(Constant(1), Variable(5))
        assert lifted.conclusion == parse_jformula("(c1*x5):p1")

    @pytest.mark.parametrize("name", JUSTIFICATION_CALCULI)
    def test_identity_internalizes_in_every_calculus(self, name: str) -> None:
        proof = identity_proof(CalculusId.total(name), parse_formula("p1"))

        term, internal = internalize(proof)

        assert check_proof(internal).accepted
        assert internal.conclusion == Holds(term, parse_formula("p1 -> p1"))

    def test_double_negation_internalizes(self) -> None:
        proof = double_negation_proof(CalculusId.total("GJ45"), parse_formula("p1"))

        _, internal = internalize(proof)

        assert check_proof(internal).accepted


class TestLiftErrors:
    def test_needs_a_constant_specification(self) -> None:
        proof = identity_proof(CalculusId("GJ"), parse_formula("p1"))

        with pytest.raises(LiftingError):
            internalize(proof)

    def test_term_count_must_match(self) -> None:
        calculus = CalculusId.total("GJ")
        builder = ProofBuilder(calculus, [parse_jformula("p1")])
        proof = builder.build(builder.assume(1))

        with pytest.raises(LiftingError):
            lift(proof, [])

    def test_internalize_rejects_assumptions(self) -> None:
        calculus = CalculusId.total("GJ")
        builder = ProofBuilder(calculus, [parse_jformula("p1")])
        proof = builder.build(builder.assume(1))

        with pytest.raises(LiftingError):
            internalize(proof)

    def test_modal_proofs_cannot_be_lifted(self) -> None:
        proof = identity_proof(CalculusId("GK"), parse_formula("p1"))

        with pytest.raises(LiftingError):
            internalize(proof)
