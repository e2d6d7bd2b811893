"""Shared fixtures for the calculus tests: seeded generation of checked proofs."""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Optional

import pytest

from gjlogic.calculus.builder import ProofBuilder
from gjlogic.calculus.constant_spec import TotalCS
from gjlogic.calculus.proof import CalculusId, Proof
from gjlogic.calculus.schemes import AxiomScheme, Binding, instantiate, match_scheme
from gjlogic.models.sampling import random_formula, random_term
from gjlogic.syntax.ast import Formula, Implies

ProofFactory = Callable[..., Proof]


def _fill(rng: random.Random, bindings: Dict[str, Binding]) -> Dict[str, Binding]:
    filled = dict(bindings)
    for name in ("phi", "psi", "chi"):
        filled.setdefault(name, random_formula(rng, 1, term_depth=1))
    for name in ("t", "s"):
        filled.setdefault(name, random_term(rng, 1))
    return filled


def _forward_step(rng: random.Random, builder: ProofBuilder, line: int) -> Optional[int]:
    """Apply a scheme whose antecedent matches ``line`` and detach it."""
    premise = builder.formula(line)
    schemes = list(builder.calculus.schemes)
    rng.shuffle(schemes)
    for scheme in schemes:
        template = scheme.template
        if not isinstance(template, Implies):
            continue
        bindings = match_scheme(AxiomScheme(scheme.name, template.antecedent), premise)
        if bindings is None:
            continue
        axiom = instantiate(template, _fill(rng, bindings))
        return builder.mp(builder.axiom(axiom, scheme.name), line)  # type: ignore[arg-type]
    return None


def make_random_proof(
    seed: int,
    calculus: CalculusId,
    *,
    assumptions: int = 0,
    max_lines: int = 10,
) -> Proof:
    rng = random.Random(seed)
    gamma: List[Formula] = [random_formula(rng, 1) for _ in range(assumptions)]
    builder = ProofBuilder(calculus, gamma)
    last = 0
    for index in range(1, assumptions + 1):
        last = builder.assume(index)
    members = calculus.cs.sample(12) if isinstance(calculus.cs, TotalCS) else []
    while len(builder) < max_lines - 2:
        choice = rng.random()
        if last and choice < 0.5:
            step = _forward_step(rng, builder, rng.randint(1, len(builder)))
            if step is not None:
                last = step
                continue
        if members and choice < 0.7:
            last = builder.cs(rng.choice(members))
            continue
        scheme = rng.choice(calculus.schemes)
        last = builder.axiom(scheme.instantiate(_fill(rng, {})), scheme.name)
    return builder.build(last)


@pytest.fixture
def random_proof() -> ProofFactory:
    return make_random_proof
