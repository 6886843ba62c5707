"""Factor lists of the closed-form Poincaré series products."""

import re
from dataclasses import dataclass
from typing import List, Sequence, Union

from poincareseries.core import Value, value_scale
from poincareseries.semigroup import ValuationSpec


@dataclass(frozen=True)
class Geom:
    """1 / (1 - t^beta)"""

    beta: Value


@dataclass(frozen=True)
class Pair:
    """(1 - t^(q*beta)) / (1 - t^beta), i.e. 1 + t^beta + ... + t^((q-1)*beta)"""

    q: int
    beta: Value

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"Pair factor needs q >= 2, got {self.q}")


SeriesFactor = Union[Geom, Pair]


def series_factors(spec: ValuationSpec) -> List[SeriesFactor]:
    """
    The product formula for P_nu(t) as a list of factors.

    Index 0 is always a geometric factor. Constrained indices (those bounded
    by q_i - 1 in the unique representation) become Pair factors and the
    remaining free index, if any, a final geometric factor:

        Type 1          Geom(b0) Pair(q1,b1) ... Pair(qN,bN)
        Types 2, 3      Geom(b0) Pair(q1,b1) ... Pair(q_{g-1},b_{g-1}) Geom(b_g)
        Type 4.1        Geom(b0) Pair(q1,b1) ... Pair(q_g,b_g)
        Type 4.2        Geom(b0) Pair(q1,b1) ... Pair(q_g,b_g) Geom(b_{g+1})
        Type 0, tail    as Type 4.2
        Type 0, no tail as Types 2, 3
    """
    constrained = set(spec.constrained_indices())
    factors: List[SeriesFactor] = []
    for i, beta in enumerate(spec.betas):
        if i in constrained:
            factors.append(Pair(spec.qs[i - 1], beta))
        else:
            factors.append(Geom(beta))
    return factors


def _power(v: Value) -> str:
    text = str(v)
    return f"t^{text}" if re.fullmatch(r"\d+", text) else f"t^({text})"


def render_product(factors: Sequence[SeriesFactor]) -> str:
    """The product as text, e.g. ``1/(1-t^2) * (1-t^6)/(1-t^3)``."""
    if not factors:
        return "1"
    parts = []
    for f in factors:
        if isinstance(f, Geom):
            parts.append(f"1/(1-{_power(f.beta)})")
        else:
            parts.append(f"(1-{_power(value_scale(f.q, f.beta))})/(1-{_power(f.beta)})")
    return " * ".join(parts)
