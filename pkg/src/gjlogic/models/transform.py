"""Model transformations: normal models to pre-models and back, and x-rooted models."""

from __future__ import annotations

import logging
from enum import Enum
from typing import Dict, Iterable, Optional

from gjlogic.algebra import ONE, ZERO, TruthValue
from gjlogic.errors import ModelClassError
from gjlogic.models.classes import check_model_class
from gjlogic.models.evidence import (
    AllOnes,
    Capped,
    EvidenceKey,
    FiniteSpec,
    Model,
    ModelClass,
    Valuation,
    XRooted,
)
from gjlogic.models.oracle import TheoremhoodOracle, default_oracle
from gjlogic.syntax.ast import Formula, Holds, subformulas

logger = logging.getLogger(__name__)

X_ROOTED_LOGICS = ("GJ45_TCS", "GLP_TCS")


class ShiftDirection(str, Enum):
    TO_ZERO = "to_zero"
    TO_ONE = "to_one"


def normal_to_pre(model: Model) -> Model:
    """A factive model read under the starred semantics; evaluations agree, so it is returned as is."""
    verdict = check_model_class(model, ModelClass.GMT)
    if not verdict.accepted:
        assert verdict.violation is not None
        raise ModelClassError(
            f"normal_to_pre needs a GMT or GMLP model: {verdict.violation.to_dict()}"
        )
    return model


def pre_to_normal(model: Model, universe: Iterable[Formula]) -> Model:
    """E'(t, phi) = E(t, phi) min |phi|* on every pair.

    A GM input yields a GMT model and a GM4 input a GMLP model; the result is
    class-checked on the labelled subformulas of ``universe`` and the input's
    overrides before it is returned.
    """
    evidence = model.evidence
    if not isinstance(evidence, (FiniteSpec, AllOnes)):
        raise ModelClassError("pre_to_normal needs finitely described evidence")
    source = check_model_class(model, ModelClass.GM4)
    if not source.accepted and not check_model_class(model, ModelClass.GM).accepted:
        raise ModelClassError("pre_to_normal needs a GM or GM4 model")
    target = ModelClass.GMLP if source.accepted else ModelClass.GMT

    keys: Dict[EvidenceKey, None] = {}
    if isinstance(evidence, FiniteSpec):
        keys.update(dict.fromkeys(evidence.overrides))
    for phi in universe:
        for sub in subformulas(phi):
            if isinstance(sub, Holds):
                keys[(sub.term, sub.body)] = None

    normal = Model(Capped(model), model.valuation, model.crisp)
    verdict = check_model_class(normal, target, list(keys))
    if not verdict.accepted:
        assert verdict.violation is not None
        raise ModelClassError(
            f"pre_to_normal produced a non-{target.value} model: {verdict.violation.to_dict()}"
        )
    logger.debug("pre_to_normal checked %s on %d pairs", target.value, len(keys))
    return normal


def make_x_rooted(
    x: TruthValue, logic: str, oracle: Optional[TheoremhoodOracle] = None
) -> Model:
    """M_x for GJ45_TCS or M'_x for GLP_TCS; every atom gets the value x."""
    if not x.is_interior:
        raise ModelClassError(f"x must lie strictly between 0 and 1, got {x}")
    return _x_rooted(x, logic, oracle, crisp=False)


def crisp_shift(
    direction: ShiftDirection, logic: str, oracle: Optional[TheoremhoodOracle] = None
) -> Model:
    """The x-rooted construction with x moved to the boundary value 0 or 1."""
    boundary = ONE if direction is ShiftDirection.TO_ONE else ZERO
    return _x_rooted(boundary, logic, oracle, crisp=True)


def _x_rooted(
    x: TruthValue, logic: str, oracle: Optional[TheoremhoodOracle], crisp: bool
) -> Model:
    if logic not in X_ROOTED_LOGICS:
        raise ModelClassError(
            f"x-rooted models are built for {', '.join(X_ROOTED_LOGICS)}, not {logic}"
        )
    oracle = oracle or default_oracle(logic)
    if oracle.label != logic:
        raise ModelClassError(f"oracle decides {oracle.label}, model needs {logic}")
    return Model(XRooted(x, logic, oracle), Valuation(x), crisp)


__all__ = [
    "ShiftDirection",
    "X_ROOTED_LOGICS",
    "crisp_shift",
    "make_x_rooted",
    "normal_to_pre",
    "pre_to_normal",
]
