"""Node similarity scores and the eccentricity acceptance measure.

Three scores are supported:

* ``nar``: common mapped neighbors divided by the square root of the
  candidate's degree (a simplified cosine similarity).
* ``grh``: sum over common mapped neighbors of the weight of the mapping
  that links them.
* ``blb``: common mapped neighbors times ``min(d_i/d_j, d_j/d_i) ** delta``,
  a symmetric penalty for degree mismatch.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

KINDS = ("nar", "grh", "blb")


@dataclass(frozen=True)
class MetricSpec:
    kind: str
    delta: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown metric {self.kind!r}; expected one of {KINDS}")
        if (self.kind == "blb") != (self.delta is not None):
            raise ValueError("delta must be given for blb and only for blb")
        if self.delta is not None and not 0 <= self.delta <= 1:
            raise ValueError(f"delta must be in [0, 1], got {self.delta}")

    @classmethod
    def parse(cls, text: str) -> MetricSpec:
        """Parse ``nar``, ``grh``, ``blb(0.5)`` or ``blb:0.5``."""
        m = re.fullmatch(r"\s*(nar|grh|blb)\s*(?:[(:]\s*([0-9.eE+-]+)\s*\)?)?\s*", text)
        if not m:
            raise ValueError(f"cannot parse metric {text!r}")
        kind, delta = m.group(1), m.group(2)
        if kind == "blb" and delta is None:
            raise ValueError("blb needs a delta, e.g. 'blb(0.5)'")
        return cls(kind, float(delta) if delta is not None else None)

    def __str__(self) -> str:
        return f"blb({self.delta:g})" if self.kind == "blb" else self.kind


def nar_sim(common: int, deg_candidate: int) -> float:
    return common / math.sqrt(deg_candidate)


def degree_ratio(deg_i: int, deg_j: int) -> float:
    return deg_i / deg_j if deg_i < deg_j else deg_j / deg_i


def blb_sim(common: int, deg_i: int, deg_j: int, delta: float) -> float:
    return common * degree_ratio(deg_i, deg_j) ** delta


def grh_weight(common_of_pair: int, deg_src: int, deg_tar: int) -> float:
    """Weight of one mapping: neighborhood agreement of the pair, plus one."""
    return common_of_pair / math.sqrt(deg_src * deg_tar) + 1


def grh_sim(mapped_common_neighbors: Iterable[int], weights: Mapping[int, float]) -> float:
    total = 0.0
    for v in mapped_common_neighbors:
        try:
            total += weights[v]
        except KeyError:
            raise RuntimeError(f"no weight for mapped node {v}") from None
    return total


def eccentricity(scores: Iterable[float]) -> float:
    """How far the best score stands out: ``(max - second max) / std``.

    The standard deviation is the population one over every candidate.
    An empty table or a table without a strict maximum gives 0; a single
    candidate gives infinity.
    """
    values = list(scores)
    n = len(values)
    if n == 0:
        return 0.0
    if n == 1:
        return math.inf
    best = second = -math.inf
    total = 0.0
    for x in values:
        total += x
        if x > best:
            best, second = x, best
        elif x > second:
            second = x
    gap = best - second
    if gap <= 0:
        return 0.0
    mean = total / n
    var = sum((x - mean) ** 2 for x in values) / n
    if var <= 0:
        return 0.0
    return gap / math.sqrt(var)
