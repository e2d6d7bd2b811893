"""Incremental construction of proofs with automatic dependency tracking."""

from __future__ import annotations

from typing import Dict, FrozenSet, List, Optional, Sequence

from gjlogic.calculus.proof import (
    Assumption,
    AxiomRule,
    CalculusId,
    ConstantRule,
    Justification,
    ModusPonens,
    Necessitation,
    Proof,
    ProofLine,
)
from gjlogic.calculus.schemes import CALCULUS_SCHEMES, SCHEMES, axiom_instance_of, match_scheme
from gjlogic.errors import LiftingError
from gjlogic.syntax.ast import Box, Formula, Implies
from gjlogic.syntax.printer import format_formula


class ProofBuilder:
    """Append lines one at a time; every method returns the 1-based number of the new line."""

    def __init__(self, calculus: CalculusId, assumptions: Sequence[Formula] = ()) -> None:
        self.calculus = calculus
        self.assumptions = tuple(assumptions)
        self._lines: List[ProofLine] = []
        self._pure: Dict[Formula, int] = {}

    def __len__(self) -> int:
        return len(self._lines)

    def formula(self, number: int) -> Formula:
        return self._lines[number - 1].formula

    def _append(
        self, formula: Formula, rule: Justification, assumptions: FrozenSet[int] = frozenset()
    ) -> int:
        self._lines.append(ProofLine(formula, rule, assumptions))
        number = len(self._lines)
        if not assumptions:
            self._pure.setdefault(formula, number)
        return number

    def assume(self, index: int) -> int:
        if not 1 <= index <= len(self.assumptions):
            raise LiftingError(f"no assumption number {index}")
        return self._append(self.assumptions[index - 1], Assumption(index), frozenset({index}))

    def axiom(self, phi: Formula, scheme: Optional[str] = None) -> int:
        """Add an axiom line, detecting the scheme when none is given."""
        if phi in self._pure:
            return self._pure[phi]
        if scheme is None:
            found = axiom_instance_of(self.calculus.name, phi)
            if found is None:
                raise LiftingError(
                    f"{format_formula(phi)} is not an axiom of {self.calculus.name}"
                )
            scheme = found[0]
        elif scheme not in CALCULUS_SCHEMES[self.calculus.name] or (
            match_scheme(SCHEMES[scheme], phi) is None
        ):
            raise LiftingError(f"{format_formula(phi)} is not an instance of {scheme}")
        return self._append(phi, AxiomRule(scheme))

    def mp(self, major: int, minor: int) -> int:
        implication = self.formula(major)
        if not isinstance(implication, Implies) or implication.antecedent != self.formula(minor):
            raise LiftingError(f"line {major} does not apply to line {minor}")
        assumptions = self._lines[major - 1].assumptions | self._lines[minor - 1].assumptions
        return self._append(implication.consequent, ModusPonens(major, minor), assumptions)

    def cs(self, member: Formula) -> int:
        if member in self._pure:
            return self._pure[member]
        return self._append(member, ConstantRule())

    def nbox(self, premise: int) -> int:
        return self._append(Box(self.formula(premise)), Necessitation(premise))

    def include(self, proof: Proof) -> int:
        """Inline a pure proof, renumbering its references; returns its conclusion's line."""
        offset: Dict[int, int] = {}
        for number, line in enumerate(proof.lines, start=1):
            rule = line.justification
            if isinstance(rule, Assumption):
                raise LiftingError("only proofs without assumptions can be included")
            if isinstance(rule, AxiomRule):
                offset[number] = self.axiom(line.formula, rule.scheme)
            elif isinstance(rule, ConstantRule):
                offset[number] = self.cs(line.formula)
            elif isinstance(rule, ModusPonens):
                offset[number] = self.mp(offset[rule.major], offset[rule.minor])
            elif isinstance(rule, Necessitation):
                offset[number] = self.nbox(offset[rule.premise])
        return offset[len(proof.lines)]

    def build(self, conclusion: Optional[int] = None) -> Proof:
        """Finish the proof; a reused earlier line is repeated so it ends the proof."""
        if not self._lines:
            raise LiftingError("cannot build an empty proof")
        if conclusion is not None and conclusion != len(self._lines):
            self._lines.append(self._lines[conclusion - 1])
        return Proof(self.calculus, tuple(self._lines), self.assumptions)


__all__ = ["ProofBuilder"]
