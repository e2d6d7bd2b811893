"""Exception types raised by the gjlogic library."""

from __future__ import annotations

from typing import FrozenSet, Optional, TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover - import only used for typing
    from gjlogic.syntax.ast import Formula, JustTerm


class GJLogicError(Exception):
    """Base class for all library errors."""


class TruthValueError(GJLogicError, ValueError):
    """A value outside [0,1] or an unreadable rational literal."""


class FormulaSyntaxError(GJLogicError, ValueError):
    """Raised when formula or term text does not follow the grammar."""

    def __init__(
        self,
        message: str,
        *,
        text: str,
        position: int,
        expected: FrozenSet[str] = frozenset(),
    ) -> None:
        super().__init__(message)
        self.text = text
        self.position = position
        self.expected = expected


class UndecidedEvidenceError(GJLogicError):
    """The theoremhood oracle could not certify an evidence lookup."""

    def __init__(self, term: "JustTerm", formula: "Formula", detail: str = "") -> None:
        from gjlogic.syntax.printer import format_formula, format_term

        message = (
            f"undecided evidence for ({format_term(term)}, {format_formula(formula)})"
        )
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.term = term
        self.formula = formula


class ModelClassError(GJLogicError, ValueError):
    """A model does not belong to the class an operation requires."""


class ModelFormatError(GJLogicError, ValueError):
    """A model, oracle or constant specification file could not be read."""

    def __init__(self, message: str, *, line: Optional[int] = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ProofFormatError(ModelFormatError):
    """A proof file could not be read."""


class ConstantSpecError(GJLogicError, ValueError):
    """A constant specification is malformed or lacks a required member."""


class LiftingError(GJLogicError, ValueError):
    """The lifting procedure cannot be applied to the given proof."""


class ProjectionError(GJLogicError, ValueError):
    """A proof has no modal counterpart under the forgetful projection."""


class DemonstrationError(GJLogicError):
    """A countermodel demonstration did not produce the expected value."""


__all__ = [
    "ConstantSpecError",
    "DemonstrationError",
    "FormulaSyntaxError",
    "GJLogicError",
    "LiftingError",
    "ModelClassError",
    "ModelFormatError",
    "ProjectionError",
    "ProofFormatError",
    "TruthValueError",
    "UndecidedEvidenceError",
]
