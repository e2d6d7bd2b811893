"""Forgetful projection, polarity of box occurrences and realization checks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Tuple

from gjlogic.syntax.ast import (
    And,
    Atom,
    Bottom,
    Box,
    Formula,
    Holds,
    Implies,
    Variable,
)
from gjlogic.syntax.printer import format_formula, format_term

# child positions: 0 antecedent/left/body, 1 consequent/right
Path = Tuple[int, ...]


class Polarity(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    def flipped(self) -> "Polarity":
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE


def forgetful_projection(phi: Formula) -> Formula:
    """Replace every ``t:psi`` by ``[]psi``; everything else is preserved."""
    if isinstance(phi, Holds):
        return Box(forgetful_projection(phi.body))
    if isinstance(phi, Implies):
        return Implies(
            forgetful_projection(phi.antecedent), forgetful_projection(phi.consequent)
        )
    if isinstance(phi, And):
        return And(forgetful_projection(phi.left), forgetful_projection(phi.right))
    if isinstance(phi, Box):
        return Box(forgetful_projection(phi.body))
    return phi


def project_set(gamma: Iterable[Formula]) -> FrozenSet[Formula]:
    return frozenset(forgetful_projection(phi) for phi in gamma)


def modal_polarities(phi: Formula) -> List[Tuple[Path, Polarity]]:
    """List every ``Box`` occurrence with its polarity, in pre-order."""
    found: List[Tuple[Path, Polarity]] = []
    _collect(phi, (), Polarity.POSITIVE, found, Box)
    return found


def holds_polarities(phi: Formula) -> List[Tuple[Path, Polarity]]:
    found: List[Tuple[Path, Polarity]] = []
    _collect(phi, (), Polarity.POSITIVE, found, Holds)
    return found


def _collect(
    phi: Formula,
    path: Path,
    polarity: Polarity,
    found: List[Tuple[Path, Polarity]],
    kind: type,
) -> None:
    if isinstance(phi, kind):
        found.append((path, polarity))
    if isinstance(phi, Implies):
        _collect(phi.antecedent, path + (0,), polarity.flipped(), found, kind)
        _collect(phi.consequent, path + (1,), polarity, found, kind)
    elif isinstance(phi, And):
        _collect(phi.left, path + (0,), polarity, found, kind)
        _collect(phi.right, path + (1,), polarity, found, kind)
    elif isinstance(phi, (Box, Holds)):
        _collect(phi.body, path + (0,), polarity, found, kind)


@dataclass(frozen=True)
class RealizationVerdict:
    accepted: bool
    path: Optional[Path] = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "path": list(self.path) if self.path is not None else None,
            "reason": self.reason,
        }


def check_realization(phi: Formula, psi: Formula, normal: bool = False) -> RealizationVerdict:
    """Accept iff phi projects onto psi (and, if normal, negative boxes carry variables)."""
    return _walk(phi, psi, (), Polarity.POSITIVE, normal)


def _walk(
    phi: Formula, psi: Formula, path: Path, polarity: Polarity, normal: bool
) -> RealizationVerdict:
    if isinstance(phi, Holds) and isinstance(psi, Box):
        if normal and polarity is Polarity.NEGATIVE and not isinstance(phi.term, Variable):
            return RealizationVerdict(
                False,
                path,
                f"negative occurrence realized by non-variable term {format_term(phi.term)}",
            )
        return _walk(phi.body, psi.body, path + (0,), polarity, normal)
    if isinstance(phi, Implies) and isinstance(psi, Implies):
        first = _walk(phi.antecedent, psi.antecedent, path + (0,), polarity.flipped(), normal)
        if not first.accepted:
            return first
        return _walk(phi.consequent, psi.consequent, path + (1,), polarity, normal)
    if isinstance(phi, And) and isinstance(psi, And):
        first = _walk(phi.left, psi.left, path + (0,), polarity, normal)
        if not first.accepted:
            return first
        return _walk(phi.right, psi.right, path + (1,), polarity, normal)
    if isinstance(phi, (Atom, Bottom)) and phi == psi:
        return RealizationVerdict(True)
    return RealizationVerdict(
        False,
        path,
        f"projection mismatch: {format_formula(forgetful_projection(phi))} "
        f"vs {format_formula(psi)}",
    )


__all__ = [
    "Path",
    "Polarity",
    "RealizationVerdict",
    "check_realization",
    "forgetful_projection",
    "holds_polarities",
    "modal_polarities",
    "project_set",
]
