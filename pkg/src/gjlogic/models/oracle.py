"""Certified theoremhood for the x-rooted evidence.

The oracle never guesses. A formula is a theorem when a checkable proof is
found (stored certificates, axiom and constant instances, the fixed
derivation templates, or a bounded closure under the term rules and modus
ponens). It is a non-theorem when a class-checked refutation model gives it a
value below 1. Anything else is undecided.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from gjlogic.algebra import ONE, ZERO, TruthValue
from gjlogic.calculus.builder import ProofBuilder
from gjlogic.calculus.checker import check_proof
from gjlogic.calculus.derivations import derive_template
from gjlogic.calculus.proof import CalculusId, Proof
from gjlogic.calculus.schemes import CALCULUS_SCHEMES, axiom_instance_of
from gjlogic.config import load_settings
from gjlogic.errors import ModelClassError, UndecidedEvidenceError
from gjlogic.models.classes import (
    CLASS_OF_CALCULUS,
    STAR_CLASS_OF_CALCULUS,
    check_cs_respect,
    check_model_class,
)
from gjlogic.models.evaluation import evaluate, evaluate_star
from gjlogic.models.evidence import AllOnes, Model, ModelClass, Valuation
from gjlogic.syntax.ast import (
    App,
    Bang,
    Formula,
    Holds,
    Implies,
    JustTerm,
    Query,
    Sum,
    is_negation,
    subformulas,
)
from gjlogic.syntax.printer import format_formula

logger = logging.getLogger(__name__)


class Semantics(str, Enum):
    STANDARD = "standard"
    STAR = "star"


@dataclass(frozen=True)
class RefutationWitness:
    """A model of the right class; a formula below 1 in it is not a theorem."""

    model: Model
    model_class: ModelClass
    semantics: Semantics = Semantics.STANDARD

    def value_of(self, phi: Formula) -> TruthValue:
        if self.semantics is Semantics.STAR:
            return evaluate_star(self.model, phi)
        return evaluate(self.model, phi)

    def refutes(self, phi: Formula) -> bool:
        return self.value_of(phi) < ONE

    def to_dict(self) -> dict:
        return {
            "model": self.model.to_dict(),
            "class": self.model_class.value,
            "semantics": self.semantics.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RefutationWitness":
        return cls(
            Model.from_dict(data["model"]),
            ModelClass(data["class"]),
            Semantics(data.get("semantics", Semantics.STANDARD.value)),
        )


@dataclass(frozen=True)
class OracleVerdict:
    accepted: bool
    problems: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"accepted": self.accepted, "problems": list(self.problems)}


class TheoremhoodOracle:
    """Proof search and refutation for one calculus.

    Refuters and non-theorem witnesses are class-checked on construction; a
    witness with a problem raises ``ModelClassError``.

    ``_proved``, ``_failed`` and ``_refuted`` memoize answers. Entries are only
    added, never changed, and the search reads them through snapshots, so
    threads may share an oracle and at worst repeat each other's work.
    """

    def __init__(
        self,
        calculus: CalculusId,
        *,
        proofs: Iterable[Proof] = (),
        refuters: Sequence[RefutationWitness] = (),
        nontheorems: Optional[Mapping[Formula, RefutationWitness]] = None,
        hints: Iterable[Formula] = (),
        depth: int = 3,
        check_witnesses: bool = True,
    ) -> None:
        self.calculus = calculus
        self.proofs: Dict[Formula, Proof] = {proof.conclusion: proof for proof in proofs}
        self.refuters = tuple(refuters)
        self.nontheorems: Dict[Formula, RefutationWitness] = dict(nontheorems or {})
        self.hints = tuple(dict.fromkeys(hints))
        self.depth = depth
        if check_witnesses:
            problems = self._all_witness_problems(sample_size=20)
            if problems:
                raise ModelClassError(f"{self.label} oracle: {'; '.join(problems)}")
        self._proved: Dict[Formula, Proof] = dict(self.proofs)
        self._failed: Dict[Formula, int] = {}
        self._refuted: Dict[Formula, Optional[RefutationWitness]] = {}

    @property
    def label(self) -> str:
        return self.calculus.label

    @property
    def certified(self) -> Tuple[Proof, ...]:
        """Stored proofs followed by every proof found since construction."""
        return tuple(self._proved.values())

    def with_hints(self, formulas: Iterable[Formula]) -> "TheoremhoodOracle":
        return TheoremhoodOracle(
            self.calculus,
            proofs=self.proofs.values(),
            refuters=self.refuters,
            nontheorems=self.nontheorems,
            hints=(*self.hints, *formulas),
            depth=self.depth,
            check_witnesses=False,
        )

    def with_proofs(self, proofs: Iterable[Proof]) -> "TheoremhoodOracle":
        return TheoremhoodOracle(
            self.calculus,
            proofs=(*self.proofs.values(), *proofs),
            refuters=self.refuters,
            nontheorems=self.nontheorems,
            hints=self.hints,
            depth=self.depth,
            check_witnesses=False,
        )

    # non-theorem side

    def refute(self, phi: Formula) -> Optional[RefutationWitness]:
        if phi in self._refuted:
            return self._refuted[phi]
        found: Optional[RefutationWitness] = None
        stored = self.nontheorems.get(phi)
        if stored is not None and stored.refutes(phi):
            found = stored
        else:
            found = next((witness for witness in self.refuters if witness.refutes(phi)), None)
        self._refuted[phi] = found
        return found

    # theorem side

    def prove(self, phi: Formula) -> Optional[Proof]:
        return self._prove(phi, self.depth)

    def _prove(self, goal: Formula, depth: int) -> Optional[Proof]:
        if goal in self._proved:
            return self._proved[goal]
        if self._failed.get(goal, -1) >= depth:
            return None
        if self.refute(goal) is not None:
            self._failed[goal] = self.depth
            return None
        proof = self._direct(goal)
        if proof is None and depth > 0:
            proof = self._compose(goal, depth)
        if proof is None:
            self._failed[goal] = max(depth, self._failed.get(goal, -1))
            return None
        logger.debug("certified %s in %d lines", format_formula(goal), len(proof))
        self._proved[goal] = proof
        return proof

    def _direct(self, goal: Formula) -> Optional[Proof]:
        builder = ProofBuilder(self.calculus)
        if axiom_instance_of(self.calculus.name, goal) is not None:
            return builder.build(builder.axiom(goal))
        if self.calculus.cs is not None and self.calculus.cs.contains(goal):
            return builder.build(builder.cs(goal))
        return derive_template(self.calculus, goal)

    def _compose(self, goal: Formula, depth: int) -> Optional[Proof]:
        if isinstance(goal, Holds):
            return self._by_term(goal, depth)
        for chi in self._candidates(goal, goal):
            minor = self._prove(chi, depth - 1)
            if minor is None:
                continue
            major = self._prove(Implies(chi, goal), depth - 1)
            if major is not None:
                builder = ProofBuilder(self.calculus)
                major_line = builder.include(major)
                return builder.build(builder.mp(major_line, builder.include(minor)))
        return None

    def _candidates(self, goal: Formula, target: Formula) -> List[Formula]:
        """Antecedents of certified implications into ``target``, proper subformulas, hints."""
        found = [
            phi.antecedent
            for phi in list(self._proved)
            if isinstance(phi, Implies) and phi.consequent == target
        ]
        found.extend(sub for sub in subformulas(goal) if sub != goal)
        found.extend(self.hints)
        return [phi for phi in dict.fromkeys(found) if phi != target]

    def _has(self, scheme: str) -> bool:
        return scheme in CALCULUS_SCHEMES[self.calculus.name]

    def _by_term(self, goal: Holds, depth: int) -> Optional[Proof]:
        term, body = goal.term, goal.body
        if isinstance(term, Sum):
            for side, scheme in ((term.left, "Plus1"), (term.right, "Plus2")):
                proof = self._single_step(Holds(side, body), goal, scheme, depth)
                if proof is not None:
                    return proof
            return None
        if isinstance(term, Bang) and isinstance(body, Holds) and body.term == term.inner:
            if self._has("Bang"):
                return self._single_step(body, goal, "Bang", depth)
            return None
        if isinstance(term, Query) and is_negation(body) and self._has("Query"):
            inner = body.antecedent  # type: ignore[union-attr]
            if isinstance(inner, Holds) and inner.term == term.inner:
                return self._single_step(body, goal, "Query", depth)
            return None
        if isinstance(term, App):
            return self._by_application(term, body, goal, depth)
        return None

    def _single_step(
        self, premise: Formula, goal: Formula, scheme: str, depth: int
    ) -> Optional[Proof]:
        proof = self._prove(premise, depth - 1)
        if proof is None:
            return None
        builder = ProofBuilder(self.calculus)
        premise_line = builder.include(proof)
        axiom = builder.axiom(Implies(premise, goal), scheme)
        return builder.build(builder.mp(axiom, premise_line))

    def _by_application(
        self, term: App, body: Formula, goal: Formula, depth: int
    ) -> Optional[Proof]:
        certified = [
            phi.body.antecedent
            for phi in list(self._proved)
            if isinstance(phi, Holds)
            and phi.term == term.left
            and isinstance(phi.body, Implies)
            and phi.body.consequent == body
        ]
        for chi in dict.fromkeys([*certified, *self._candidates(body, body)]):
            major_goal = Holds(term.left, Implies(chi, body))
            minor_goal = Holds(term.right, chi)
            major = self._prove(major_goal, depth - 1)
            if major is None:
                continue
            minor = self._prove(minor_goal, depth - 1)
            if minor is None:
                continue
            builder = ProofBuilder(self.calculus)
            major_line = builder.include(major)
            minor_line = builder.include(minor)
            axiom = builder.axiom(Implies(major_goal, Implies(minor_goal, goal)), "J")
            return builder.build(builder.mp(builder.mp(axiom, major_line), minor_line))
        return None

    # combined

    def is_theorem(self, phi: Formula) -> Optional[bool]:
        if self.refute(phi) is not None:
            return False
        if self.prove(phi) is not None:
            return True
        return None

    def evidence_is_one(self, term: JustTerm, phi: Formula) -> bool:
        """True iff phi and t:phi are certified theorems; False iff either is refuted."""
        labelled = Holds(term, phi)
        if self.refute(phi) is not None or self.refute(labelled) is not None:
            return False
        if self.prove(phi) is not None and self.prove(labelled) is not None:
            return True
        raise UndecidedEvidenceError(term, phi, f"no certificate in {self.label}")

    def is_decided(self, term: JustTerm, phi: Formula) -> bool:
        try:
            self.evidence_is_one(term, phi)
        except UndecidedEvidenceError:
            return False
        return True

    def validate(self, sample_size: int = 20) -> OracleVerdict:
        """Re-check every stored proof and every refutation witness."""
        problems: List[str] = []
        for conclusion, proof in self.proofs.items():
            if proof.calculus != self.calculus:
                problems.append(f"proof of {format_formula(conclusion)} is in {proof.calculus.label}")
                continue
            verdict = check_proof(proof)
            if not verdict.accepted:
                problems.append(
                    f"proof of {format_formula(conclusion)} fails at line {verdict.line}: "
                    f"{verdict.message}"
                )
        problems.extend(self._all_witness_problems(sample_size))
        return OracleVerdict(not problems, tuple(problems))

    def _all_witness_problems(self, sample_size: int) -> List[str]:
        witnesses: List[Tuple[Optional[Formula], RefutationWitness]] = [
            (None, witness) for witness in self.refuters
        ]
        witnesses.extend(self.nontheorems.items())
        problems: List[str] = []
        for formula, witness in witnesses:
            problems.extend(self._witness_problems(formula, witness, sample_size))
        return problems

    def _witness_problems(
        self, formula: Optional[Formula], witness: RefutationWitness, sample_size: int
    ) -> List[str]:
        table = STAR_CLASS_OF_CALCULUS if witness.semantics is Semantics.STAR else CLASS_OF_CALCULUS
        required = table.get(self.calculus.name)
        if required is None:
            return [f"{witness.semantics.value} semantics is not complete for {self.calculus.name}"]
        if witness.model_class is not required:
            return [f"witness class {witness.model_class.value} should be {required.value}"]
        problems: List[str] = []
        verdict = check_model_class(witness.model, required)
        if not verdict.accepted:
            problems.append(f"witness is not a {required.value} model")
        if self.calculus.cs is not None:
            if not check_cs_respect(witness.model, self.calculus.cs, sample_size=sample_size).accepted:
                problems.append("witness does not respect the constant specification")
        if formula is not None and not witness.refutes(formula):
            problems.append(f"witness gives {format_formula(formula)} the value 1")
        return problems

    def to_dict(self) -> dict:
        from gjlogic.calculus.proof_file import write_proof

        return {
            "calculus": self.label,
            "depth": self.depth,
            "hints": [format_formula(phi) for phi in self.hints],
            "theorems": [write_proof(proof) for proof in self.certified],
            "refuters": [witness.to_dict() for witness in self.refuters],
            "nontheorems": [
                {"formula": format_formula(phi), "witness": witness.to_dict()}
                for phi, witness in self.nontheorems.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TheoremhoodOracle":
        from gjlogic.calculus.proof_file import read_proof
        from gjlogic.syntax.parser import parse_formula

        return cls(
            CalculusId.from_label(data["calculus"]),
            proofs=[read_proof(text) for text in data.get("theorems", [])],
            refuters=[RefutationWitness.from_dict(item) for item in data.get("refuters", [])],
            nontheorems={
                parse_formula(item["formula"]): RefutationWitness.from_dict(item["witness"])
                for item in data.get("nontheorems", [])
            },
            hints=[parse_formula(text) for text in data.get("hints", [])],
            depth=int(data.get("depth", 3)),
        )


def zero_valued_refuter(calculus_name: str) -> Optional[RefutationWitness]:
    """All evidence 1 and every atom 0, under the semantics complete for the calculus."""
    model = Model(AllOnes(), Valuation(ZERO))
    model_class = CLASS_OF_CALCULUS[calculus_name]
    if not model_class.factive:
        return RefutationWitness(model, model_class)
    if calculus_name in STAR_CLASS_OF_CALCULUS:
        return RefutationWitness(model, STAR_CLASS_OF_CALCULUS[calculus_name], Semantics.STAR)
    return None


def default_oracle(logic: str, depth: Optional[int] = None) -> TheoremhoodOracle:
    """Oracle for a label such as ``GJ45_TCS`` or ``GLP_TCS``."""
    calculus = CalculusId.from_label(logic)
    if calculus.is_modal:
        raise ModelClassError(f"{logic} is not a justification calculus")
    refuter = zero_valued_refuter(calculus.name)
    return TheoremhoodOracle(
        calculus,
        refuters=[refuter] if refuter is not None else [],
        depth=load_settings().prover_depth if depth is None else depth,
    )


__all__ = [
    "OracleVerdict",
    "RefutationWitness",
    "Semantics",
    "TheoremhoodOracle",
    "default_oracle",
    "zero_valued_refuter",
]
