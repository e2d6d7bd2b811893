"""Bounded enumeration of realizations of a modal formula."""

from __future__ import annotations

import itertools
import logging
from typing import Iterator, List, Optional, Sequence

from gjlogic.syntax.ast import (
    And,
    App,
    Bang,
    Box,
    Constant,
    Formula,
    Holds,
    Implies,
    JustTerm,
    Query,
    Sum,
    Variable,
)
from gjlogic.syntax.projection import check_realization, modal_polarities

logger = logging.getLogger(__name__)


def terms_up_to(depth: int, *, variables: int = 2, constants: int = 1) -> List[JustTerm]:
    """Every term over x1..xk and c1..cm with operator nesting at most ``depth``."""
    layer: List[JustTerm] = [Variable(i) for i in range(1, variables + 1)]
    layer.extend(Constant(i) for i in range(1, constants + 1))
    known = list(layer)
    for _ in range(depth):
        grown: List[JustTerm] = []
        for left, right in itertools.product(known, repeat=2):
            grown.append(Sum(left, right))
            grown.append(App(left, right))
        for inner in known:
            grown.extend((Bang(inner), Query(inner)))
        known = list(dict.fromkeys([*known, *grown]))
    return known


def _realize(psi: Formula, terms: Iterator[JustTerm]) -> Formula:
    if isinstance(psi, Box):
        term = next(terms)
        return Holds(term, _realize(psi.body, terms))
    if isinstance(psi, Implies):
        antecedent = _realize(psi.antecedent, terms)
        return Implies(antecedent, _realize(psi.consequent, terms))
    if isinstance(psi, And):
        left = _realize(psi.left, terms)
        return And(left, _realize(psi.right, terms))
    return psi


def enumerate_realizations(
    psi: Formula,
    term_depth: int = 0,
    normal: bool = False,
    *,
    variables: int = 2,
    constants: int = 1,
    limit: Optional[int] = None,
    pool: Optional[Sequence[JustTerm]] = None,
) -> Iterator[Formula]:
    """Yield each realization of psi over the term pool that ``check_realization`` accepts."""
    terms = list(pool) if pool is not None else terms_up_to(
        term_depth, variables=variables, constants=constants
    )
    occurrences = len(modal_polarities(psi))
    produced = 0
    for assignment in itertools.product(terms, repeat=occurrences):
        phi = _realize(psi, iter(assignment))
        if not check_realization(phi, psi, normal).accepted:
            continue
        yield phi
        produced += 1
        if limit is not None and produced >= limit:
            break
    logger.debug("enumerated %d realizations over %d terms", produced, len(terms))


__all__ = ["enumerate_realizations", "terms_up_to"]
