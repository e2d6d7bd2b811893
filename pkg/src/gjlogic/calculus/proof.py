"""Calculus identifiers and Hilbert proof objects."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple, Union

from gjlogic.calculus.constant_spec import ConstantSpec, TotalCS
from gjlogic.calculus.schemes import (
    CALCULUS_SCHEMES,
    JUSTIFICATION_CALCULI,
    MODAL_CALCULI,
    AxiomScheme,
    schemes_of,
)
from gjlogic.errors import ConstantSpecError
from gjlogic.syntax.ast import Formula


@dataclass(frozen=True)
class CalculusId:
    """A justification calculus with its constant specification, or a modal calculus."""

    name: str
    cs: Optional[ConstantSpec] = None

    def __post_init__(self) -> None:
        if self.name not in CALCULUS_SCHEMES:
            raise ConstantSpecError(f"unknown calculus {self.name!r}")
        if self.name in MODAL_CALCULI and self.cs is not None:
            raise ConstantSpecError(f"modal calculus {self.name} carries no constant specification")
        if self.cs is not None and self.cs.base != self.name:
            raise ConstantSpecError(
                f"constant specification for {self.cs.base} used with {self.name}"
            )

    @classmethod
    def total(cls, name: str) -> "CalculusId":
        return cls(name, TotalCS(name))

    @classmethod
    def from_label(cls, label: str) -> "CalculusId":
        """Read labels such as ``GJ45_TCS``, ``GLP_0`` or ``GK``."""
        name, _, suffix = label.partition("_")
        if suffix == "TCS":
            return cls.total(name)
        if suffix in ("", "0"):
            return cls(name)
        raise ConstantSpecError(f"unknown calculus label {label!r}")

    @property
    def is_modal(self) -> bool:
        return self.name in MODAL_CALCULI

    @property
    def is_justification(self) -> bool:
        return self.name in JUSTIFICATION_CALCULI

    @property
    def schemes(self) -> Tuple[AxiomScheme, ...]:
        return schemes_of(self.name)

    @property
    def label(self) -> str:
        if self.is_modal:
            return self.name
        return f"{self.name}_{self.cs.label if self.cs is not None else '0'}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Assumption:
    index: int


@dataclass(frozen=True)
class AxiomRule:
    scheme: str
    bindings: Optional[Tuple[Tuple[str, object], ...]] = None


@dataclass(frozen=True)
class ModusPonens:
    """From line ``major`` (phi -> psi) and line ``minor`` (phi) infer psi."""

    major: int
    minor: int


@dataclass(frozen=True)
class ConstantRule:
    pass


@dataclass(frozen=True)
class Necessitation:
    premise: int


Justification = Union[Assumption, AxiomRule, ModusPonens, ConstantRule, Necessitation]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification
    assumptions: FrozenSet[int] = frozenset()


@dataclass(frozen=True)
class Proof:
    """Lines are referenced 1-based; the last line is the conclusion."""

    calculus: CalculusId
    lines: Tuple[ProofLine, ...]
    assumptions: Tuple[Formula, ...] = ()

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula

    @property
    def is_pure(self) -> bool:
        return not self.lines[-1].assumptions

    def line(self, number: int) -> ProofLine:
        return self.lines[number - 1]

    def __len__(self) -> int:
        return len(self.lines)


__all__ = [
    "Assumption",
    "AxiomRule",
    "CalculusId",
    "ConstantRule",
    "Justification",
    "ModusPonens",
    "Necessitation",
    "Proof",
    "ProofLine",
]
