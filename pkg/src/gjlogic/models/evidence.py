"""Valuations, evidence specifications and Gödel-Mkrtychev models."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Callable, Dict, Iterator, Mapping, Optional, Tuple, Union

from gjlogic.algebra import ONE, ZERO, TruthValue, tnorm
from gjlogic.errors import ModelFormatError
from gjlogic.syntax.ast import Formula, JustTerm
from gjlogic.syntax.printer import format_formula, format_term

if TYPE_CHECKING:  # pragma: no cover
    from gjlogic.models.oracle import TheoremhoodOracle

EvidenceKey = Tuple[JustTerm, Formula]


class ModelClass(str, Enum):
    GM = "GM"
    GMT = "GMT"
    GM4 = "GM4"
    GMLP = "GMLP"
    GM45 = "GM45"
    GMT45 = "GMT45"

    @property
    def factive(self) -> bool:
        return self in (ModelClass.GMT, ModelClass.GMLP, ModelClass.GMT45)

    @property
    def positive_introspection(self) -> bool:
        return self in (ModelClass.GM4, ModelClass.GMLP, ModelClass.GM45, ModelClass.GMT45)

    @property
    def negative_introspection(self) -> bool:
        return self in (ModelClass.GM45, ModelClass.GMT45)


@dataclass(frozen=True)
class Valuation:
    """e: Var -> [0,1], total through its default."""

    default: TruthValue = ZERO
    overrides: Mapping[int, TruthValue] = field(default_factory=dict)

    def value_of(self, atom_index: int) -> TruthValue:
        return self.overrides.get(atom_index, self.default)

    def values(self) -> Iterator[TruthValue]:
        yield self.default
        yield from self.overrides.values()

    def to_dict(self) -> dict:
        return {
            "default": str(self.default),
            "overrides": {str(index): str(value) for index, value in sorted(self.overrides.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Valuation":
        return cls(
            TruthValue.of(data["default"]),
            {int(index): TruthValue.of(value) for index, value in data.get("overrides", {}).items()},
        )


@dataclass(frozen=True)
class FiniteSpec:
    """Evidence given by a default value and finitely many overrides."""

    default: TruthValue = ZERO
    overrides: Mapping[EvidenceKey, TruthValue] = field(default_factory=dict)

    def lookup(self, term: JustTerm, phi: Formula) -> TruthValue:
        return self.overrides.get((term, phi), self.default)

    def floor(self) -> TruthValue:
        return min([self.default, *self.overrides.values()])

    def to_dict(self) -> dict:
        return {
            "kind": "finite",
            "default": str(self.default),
            "overrides": [
                {"term": format_term(term), "formula": format_formula(phi), "value": str(value)}
                for (term, phi), value in sorted(
                    self.overrides.items(),
                    key=lambda item: (format_term(item[0][0]), format_formula(item[0][1])),
                )
            ],
        }


@dataclass(frozen=True)
class AllOnes:
    """Evidence that assigns 1 to every pair."""

    def lookup(self, term: JustTerm, phi: Formula) -> TruthValue:
        return ONE

    def floor(self) -> TruthValue:
        return ONE

    def to_dict(self) -> dict:
        return {"kind": "all_ones"}


@dataclass(frozen=True)
class XRooted:
    """1 on pairs (t, phi) with phi and t:phi both certified theorems, x elsewhere."""

    x: TruthValue
    logic: str
    oracle: "TheoremhoodOracle" = field(compare=False, repr=False)

    def lookup(self, term: JustTerm, phi: Formula) -> TruthValue:
        if self.x == ONE:
            return ONE
        return ONE if self.oracle.evidence_is_one(term, phi) else self.x

    def floor(self) -> TruthValue:
        return self.x

    def to_dict(self) -> dict:
        return {"kind": "x_rooted", "x": str(self.x), "logic": self.logic}


@dataclass(frozen=True)
class Capped:
    """E'(t, phi) = E(t, phi) min |phi|*, read off a pre-model; factive on every pair."""

    source: "Model"

    def lookup(self, term: JustTerm, phi: Formula) -> TruthValue:
        from gjlogic.models.evaluation import evaluate_star

        return tnorm(self.source.evidence.lookup(term, phi), evaluate_star(self.source, phi))

    def floor(self) -> TruthValue:
        # E'(t, bot) = 0
        return ZERO

    def to_dict(self) -> dict:
        return {"kind": "capped", "source": self.source.to_dict()}


EvidenceSpec = Union[FiniteSpec, AllOnes, XRooted, Capped]


@dataclass(frozen=True)
class Model:
    evidence: EvidenceSpec
    valuation: Valuation = field(default_factory=Valuation)
    crisp: bool = False

    def to_dict(self) -> dict:
        return {
            "evidence": self.evidence.to_dict(),
            "valuation": self.valuation.to_dict(),
            "crisp": self.crisp,
        }

    @classmethod
    def from_dict(
        cls,
        data: dict,
        oracle_factory: Optional[Callable[[str], "TheoremhoodOracle"]] = None,
    ) -> "Model":
        """Rebuild a model; x-rooted evidence needs a factory for its oracle."""
        evidence = evidence_from_dict(data["evidence"], oracle_factory)
        return cls(evidence, Valuation.from_dict(data["valuation"]), bool(data.get("crisp", False)))


def evidence_from_dict(
    data: dict, oracle_factory: Optional[Callable[[str], "TheoremhoodOracle"]] = None
) -> EvidenceSpec:
    from gjlogic.syntax.parser import parse_formula, parse_term

    kind = data.get("kind")
    if kind == "all_ones":
        return AllOnes()
    if kind == "finite":
        overrides: Dict[EvidenceKey, TruthValue] = {
            (parse_term(item["term"]), parse_formula(item["formula"])): TruthValue.of(item["value"])
            for item in data.get("overrides", [])
        }
        return FiniteSpec(TruthValue.of(data["default"]), overrides)
    if kind == "x_rooted":
        if oracle_factory is None:
            from gjlogic.models.oracle import default_oracle

            oracle_factory = default_oracle
        return XRooted(TruthValue.of(data["x"]), data["logic"], oracle_factory(data["logic"]))
    if kind == "capped":
        return Capped(Model.from_dict(data["source"], oracle_factory))
    raise ModelFormatError(f"unknown evidence kind {kind!r}")


__all__ = [
    "AllOnes",
    "Capped",
    "EvidenceKey",
    "EvidenceSpec",
    "FiniteSpec",
    "Model",
    "ModelClass",
    "Valuation",
    "XRooted",
    "evidence_from_dict",
]
