"""Exact Gödel truth-value algebra on rationals in [0,1]."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from gjlogic.errors import TruthValueError

RationalLike = Union["TruthValue", Fraction, int, str]


@dataclass(frozen=True, order=True)
class TruthValue:
    """A truth degree, stored as a reduced fraction."""

    value: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if not 0 <= self.value <= 1:
            raise TruthValueError(f"truth value {self.value} lies outside [0,1]")

    @classmethod
    def of(cls, raw: RationalLike) -> "TruthValue":
        """Build a truth value from an int, a Fraction or a "p/q" literal."""
        if isinstance(raw, TruthValue):
            return raw
        if isinstance(raw, str):
            return parse_truth_value(raw)
        return cls(Fraction(raw))

    @property
    def is_interior(self) -> bool:
        return 0 < self.value < 1

    @property
    def is_crisp(self) -> bool:
        return self.value in (0, 1)

    def __str__(self) -> str:
        return str(self.value)


ZERO = TruthValue(Fraction(0))
ONE = TruthValue(Fraction(1))


def parse_truth_value(text: str) -> TruthValue:
    """Read the "p/q" or integer syntax used in model files and on the CLI."""
    stripped = text.strip()
    numerator, slash, denominator = stripped.partition("/")
    try:
        top = int(numerator)
        bottom = int(denominator) if slash else 1
    except ValueError as exc:
        raise TruthValueError(f"not a rational literal: {text!r}") from exc
    if bottom <= 0:
        raise TruthValueError(f"denominator must be positive in {text!r}")
    return TruthValue(Fraction(top, bottom))


def tnorm(a: TruthValue, b: TruthValue) -> TruthValue:
    """Gödel conjunction, the minimum."""
    return a if a <= b else b


def tconorm(a: TruthValue, b: TruthValue) -> TruthValue:
    return a if a >= b else b


def residuum(a: TruthValue, b: TruthValue) -> TruthValue:
    """Residuum of the minimum: b if a > b, else 1."""
    return b if a > b else ONE


def wneg(a: TruthValue) -> TruthValue:
    """Truth function of the abbreviation ~x := x -> bot."""
    return ZERO if a > ZERO else ONE


def wneg2(a: TruthValue) -> TruthValue:
    return wneg(wneg(a))


__all__ = [
    "ONE",
    "ZERO",
    "TruthValue",
    "parse_truth_value",
    "residuum",
    "tconorm",
    "tnorm",
    "wneg",
    "wneg2",
]
