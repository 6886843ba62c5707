"""Randomised valid non-divisorial specs built the way value semigroups of
plane branches are: e_i = e_{i-1} / q_i, beta_i = e_i * c_i with
gcd(c_i, q_i) = 1, and beta_{i+1} > q_i * beta_i."""

import random
from fractions import Fraction
from math import gcd, prod
from typing import List, Tuple

from poincareseries.core import LexVal, QuadVal, RationalVal, TauOracle
from poincareseries.semigroup import Box, Scalar, TruncationBound, ValuationSpec, validate_spec

GOLDEN = (1,) * 30
SQRT2 = (1,) + (2,) * 30
SQRT3 = (1,) + (1, 2) * 15


def plane_branch(rng: random.Random, qs: List[int]) -> List[int]:
    """Integer generators beta_0, ..., beta_len(qs) with gcd 1."""
    e = prod(qs) if qs else 1
    betas = [e]
    for i, q in enumerate(qs):
        e_next = e // q
        lower = qs[i - 1] * betas[-1] if i > 0 else 0
        c = max(lower // e_next + 1, 2) + rng.randrange(3)
        while gcd(c, q) != 1:
            c += 1
        betas.append(e_next * c)
        e = e_next
    return betas


def _qs(rng: random.Random, count: int) -> List[int]:
    return [rng.choice([2, 3, 4]) for _ in range(count)]


def make_t41(rng: random.Random) -> Tuple[ValuationSpec, TruncationBound]:
    g = rng.randint(0, 2)
    qs = _qs(rng, g)
    betas = plane_branch(rng, qs)
    spec = validate_spec({"type": "4.1", "g": g, "betas": [str(b) for b in betas], "qs": qs})
    return spec, Scalar(RationalVal(min(max(betas) + rng.randint(3, 12), 70)))


def make_t1(rng: random.Random) -> Tuple[ValuationSpec, TruncationBound]:
    qs = _qs(rng, rng.randint(1, 2))
    ints = plane_branch(rng, qs)
    n = ints[0]
    betas = [RationalVal(b, n) for b in ints]
    next_bound = RationalVal.of(qs[-1] * betas[-1].fraction)
    spec = validate_spec(
        {"type": "1", "betas": betas, "qs": qs, "next_beta_lower_bound": next_bound}
    )
    bound = next_bound.fraction * Fraction(rng.randint(2, 4), 5)
    return spec, Scalar(RationalVal.of(bound))


def make_t2(rng: random.Random) -> Tuple[ValuationSpec, TruncationBound]:
    g = rng.randint(1, 2)
    qs = _qs(rng, g - 1)
    ints = plane_branch(rng, qs)
    n = ints[0]
    betas = [QuadVal(Fraction(b, n), 0) for b in ints]
    betas.append(QuadVal(rng.randint(0, 1), rng.randint(1, 2)))
    tau = TauOracle(rng.choice([GOLDEN, SQRT2, SQRT3]))
    spec = validate_spec({"type": "2", "g": g, "betas": betas, "qs": qs, "tau": tau})
    return spec, Scalar(QuadVal(rng.randint(3, 6), 0))


def _lex_spec(rng: random.Random, vtype: str, g: int, n_qs: int):
    qs = _qs(rng, n_qs)
    ints = plane_branch(rng, qs)
    betas = [LexVal(b, 0) for b in ints] + [LexVal(rng.randint(0, 3), 1)]
    spec = validate_spec({"type": vtype, "g": g, "betas": betas, "qs": qs})
    return spec, Box(min(max(ints) + rng.randint(2, 8), 40), rng.randint(1, 3))


def make_t3(rng: random.Random) -> Tuple[ValuationSpec, TruncationBound]:
    g = rng.randint(1, 2)
    return _lex_spec(rng, "3", g, g - 1)


def make_t42(rng: random.Random) -> Tuple[ValuationSpec, TruncationBound]:
    g = rng.randint(0, 2)
    return _lex_spec(rng, "4.2", g, g)


MAKERS = [make_t1, make_t2, make_t3, make_t41, make_t42]


def random_corpus(count: int = 60, seed: int = 20240601):
    """``count`` (spec, bound) pairs cycling through every non-divisorial type."""
    rng = random.Random(seed)
    return [MAKERS[i % len(MAKERS)](rng) for i in range(count)]
