"""Line-by-line proof checking for the justification and modal calculi."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from gjlogic.calculus.proof import (
    Assumption,
    AxiomRule,
    ConstantRule,
    ModusPonens,
    Necessitation,
    Proof,
    ProofLine,
)
from gjlogic.calculus.schemes import CALCULUS_SCHEMES, SCHEMES, instantiate, match_scheme
from gjlogic.syntax.ast import Box, Formula, Implies, is_justification_formula, is_modal_formula
from gjlogic.syntax.printer import format_formula

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProofVerdict:
    accepted: bool
    line: Optional[int] = None
    message: str = ""
    conclusion: Optional[Formula] = None

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "line": self.line,
            "message": self.message,
            "conclusion": format_formula(self.conclusion) if self.conclusion is not None else None,
        }


class _Reject(Exception):
    pass


def check_proof(proof: Proof) -> ProofVerdict:
    """Accept iff every line is justified in the proof's calculus; otherwise name the first bad line."""
    if not proof.lines:
        return ProofVerdict(False, None, "empty proof")
    for number, line in enumerate(proof.lines, start=1):
        try:
            _check_language(proof, line.formula)
            _check_line(proof, number, line)
        except _Reject as exc:
            logger.debug("proof rejected at line %d: %s", number, exc)
            return ProofVerdict(False, number, str(exc))
    return ProofVerdict(True, conclusion=proof.conclusion)


def _check_language(proof: Proof, phi: Formula) -> None:
    if proof.calculus.is_modal and not is_modal_formula(phi):
        raise _Reject(f"{format_formula(phi)} is not a modal formula")
    if not proof.calculus.is_modal and not is_justification_formula(phi):
        raise _Reject(f"{format_formula(phi)} is not a justification formula")


def _check_line(proof: Proof, number: int, line: ProofLine) -> None:
    rule = line.justification
    if isinstance(rule, Assumption):
        if not 1 <= rule.index <= len(proof.assumptions):
            raise _Reject(f"no assumption number {rule.index}")
        if proof.assumptions[rule.index - 1] != line.formula:
            raise _Reject(f"line does not state assumption {rule.index}")
        _expect_assumptions(line, frozenset({rule.index}))
    elif isinstance(rule, AxiomRule):
        _check_axiom(proof, line, rule)
    elif isinstance(rule, ModusPonens):
        major = _earlier(proof, number, rule.major)
        minor = _earlier(proof, number, rule.minor)
        if major.formula != Implies(minor.formula, line.formula):
            raise _Reject(
                f"line {rule.major} is not {format_formula(minor.formula)} -> "
                f"{format_formula(line.formula)}"
            )
        _expect_assumptions(line, major.assumptions | minor.assumptions)
    elif isinstance(rule, ConstantRule):
        cs = proof.calculus.cs
        if cs is None:
            raise _Reject(f"{proof.calculus.label} has no constant specification")
        if not cs.contains(line.formula):
            raise _Reject(f"{format_formula(line.formula)} is not in the constant specification")
        _expect_assumptions(line, frozenset())
    elif isinstance(rule, Necessitation):
        if not proof.calculus.is_modal:
            raise _Reject("necessitation is only available in modal calculi")
        premise = _earlier(proof, number, rule.premise)
        if premise.assumptions:
            raise _Reject(f"necessitation applied to line {rule.premise}, which has assumptions")
        if line.formula != Box(premise.formula):
            raise _Reject(f"line is not [] applied to line {rule.premise}")
        _expect_assumptions(line, frozenset())
    else:
        raise _Reject(f"unknown rule {rule!r}")


def _check_axiom(proof: Proof, line: ProofLine, rule: AxiomRule) -> None:
    if rule.scheme not in CALCULUS_SCHEMES[proof.calculus.name]:
        raise _Reject(f"scheme {rule.scheme} is not an axiom of {proof.calculus.name}")
    scheme = SCHEMES[rule.scheme]
    if rule.bindings is not None:
        if instantiate(scheme.template, dict(rule.bindings)) != line.formula:
            raise _Reject(f"bindings do not instantiate {rule.scheme} to this formula")
    elif match_scheme(scheme, line.formula) is None:
        raise _Reject(f"{format_formula(line.formula)} is not an instance of {rule.scheme}")
    _expect_assumptions(line, frozenset())


def _earlier(proof: Proof, number: int, reference: int) -> ProofLine:
    if not 1 <= reference < number:
        raise _Reject(f"reference to line {reference} is not an earlier line")
    return proof.line(reference)


def _expect_assumptions(line: ProofLine, expected: frozenset) -> None:
    if line.assumptions != expected:
        raise _Reject(
            f"assumption set {sorted(line.assumptions)} should be {sorted(expected)}"
        )


__all__ = ["ProofVerdict", "check_proof"]
