"""Randomised search for tuples that are not good."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .beatty import InvalidTuple, Tuple4, derive_tuple
from .exactreal import RealNumber, sqrt
from .goodness import GoodnessVerdict, decide_good

__all__ = ["SearchHit", "candidate_tuples", "find_not_good"]

RADICANDS = (2, 3, 5, 6, 7, 10, 11, 13)


@dataclass
class SearchHit:
    tuple: Tuple4
    verdict: GoodnessVerdict
    tried: int
    beta_expr: str
    delta_expr: str


def _random_beta(rng: random.Random) -> tuple[RealNumber, str]:
    whole = rng.randint(2, 9)
    d = rng.choice(RADICANDS)
    k = rng.randint(2, 9)
    beta = whole + sqrt(d) / k
    if rng.random() < 0.3:
        d2 = rng.choice([r for r in RADICANDS if r != d])
        beta = beta + sqrt(d2) / (k + 7)
        return beta, str(beta)
    return beta, str(beta)


def candidate_tuples(seed: int = 0) -> Iterator[tuple[Tuple4, str, str]]:
    """Endless stream of valid tuples with ``B1 >= 3`` from a seeded RNG."""
    rng = random.Random(seed)
    while True:
        beta, bexpr = _random_beta(rng)
        if beta.floor() < 2:
            continue
        # delta in (0, 1) gives gamma < 0, delta < 0 gives gamma > 0
        if rng.random() < 0.5:
            delta = Fraction(rng.randint(1, 99), 100)
        else:
            delta = -Fraction(rng.randint(1, 100 * beta.floor()), 100)
        try:
            t = derive_tuple(beta, delta=RealNumber(delta))
        except InvalidTuple:
            continue
        if t.B1 < 3:
            continue
        yield t, bexpr, str(delta)


def find_not_good(seed: int = 0, budget: int = 500, scan_budget: int = 10**6) -> Optional[SearchHit]:
    """First NOT_GOOD tuple among ``budget`` random candidates, or None."""
    for tried, (t, bexpr, dexpr) in enumerate(candidate_tuples(seed), start=1):
        if tried > budget:
            return None
        v = decide_good(t, budget=scan_budget)
        if v.verdict == "NOT_GOOD":
            return SearchHit(t, v, tried, bexpr, dexpr)
    return None
