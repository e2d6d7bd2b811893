"""Seeded generation of terms, formulas and (term, formula) universes."""

from __future__ import annotations

import logging
import random
from typing import Iterable, List, Optional, Set

from gjlogic.calculus.constant_spec import TotalCS, constant_chain
from gjlogic.models.evidence import EvidenceKey
from gjlogic.models.oracle import TheoremhoodOracle
from gjlogic.syntax.ast import (
    BOTTOM,
    And,
    App,
    Atom,
    Bang,
    Constant,
    Formula,
    Holds,
    Implies,
    JustTerm,
    Query,
    Sum,
    Variable,
    neg,
)

logger = logging.getLogger(__name__)


def random_term(
    rng: random.Random, depth: int, *, variables: int = 3, constants: int = 2, query: bool = True
) -> JustTerm:
    if depth <= 0 or rng.random() < 0.35:
        if rng.random() < 0.6:
            return Variable(rng.randint(1, variables))
        return Constant(rng.randint(1, constants))

    def inner() -> JustTerm:
        return random_term(rng, depth - 1, variables=variables, constants=constants, query=query)

    choice = rng.randrange(4 if query else 3)
    if choice == 0:
        return Sum(inner(), inner())
    if choice == 1:
        return App(inner(), inner())
    if choice == 2:
        return Bang(inner())
    return Query(inner())


def random_formula(
    rng: random.Random,
    depth: int,
    *,
    atoms: int = 3,
    term_depth: int = 1,
    variables: int = 3,
    constants: int = 2,
) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        return BOTTOM if rng.random() < 0.1 else Atom(rng.randint(1, atoms))

    def inner() -> Formula:
        return random_formula(
            rng,
            depth - 1,
            atoms=atoms,
            term_depth=term_depth,
            variables=variables,
            constants=constants,
        )

    choice = rng.randrange(4)
    if choice == 0:
        return Implies(inner(), inner())
    if choice == 1:
        return And(inner(), inner())
    if choice == 2:
        return neg(inner())
    return Holds(random_term(rng, term_depth, variables=variables, constants=constants), inner())


def sample_pairs(
    rng: random.Random, count: int, *, term_depth: int = 2, formula_depth: int = 2
) -> List[EvidenceKey]:
    return [
        (random_term(rng, term_depth), random_formula(rng, formula_depth))
        for _ in range(count)
    ]


def sample_universe(
    oracle: TheoremhoodOracle,
    *,
    size: int,
    seed: int,
    extra: Iterable[EvidenceKey] = (),
    axiom_share: Optional[int] = None,
) -> List[EvidenceKey]:
    """Given pairs first, then axiom instances and random pairs; only oracle-decided pairs are kept."""
    rng = random.Random(seed)
    candidates: List[EvidenceKey] = list(dict.fromkeys(extra))
    share = size // 4 if axiom_share is None else axiom_share
    for member in TotalCS(oracle.calculus.name).sample(share):
        chain = constant_chain(member)
        if chain is not None:
            candidates.append((chain[0][-1], chain[1]))
            candidates.append((random_term(rng, 1), chain[1]))

    universe: List[EvidenceKey] = []
    seen: Set[EvidenceKey] = set()

    def consider(pair: EvidenceKey) -> None:
        if pair not in seen and len(universe) < size:
            seen.add(pair)
            if oracle.is_decided(*pair):
                universe.append(pair)

    for pair in candidates:
        consider(pair)
    attempts = 0
    while len(universe) < size and attempts < 20 * size:
        consider(sample_pairs(rng, 1)[0])
        attempts += 1
    logger.debug("universe kept %d pairs after %d random draws", len(universe), attempts)
    return universe


__all__ = [
    "random_formula",
    "random_term",
    "sample_pairs",
    "sample_universe",
]
