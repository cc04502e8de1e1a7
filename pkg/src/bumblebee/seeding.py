"""Initial mappings drawn from the ground truth (correct seeds)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, degree_order
from .perturb import GroundTruth


@dataclass(frozen=True)
class SeedSet:
    pairs: tuple[tuple[int, int], ...]
    method: str

    def __post_init__(self):
        src = [s for s, _ in self.pairs]
        tar = [t for _, t in self.pairs]
        if len(set(src)) != len(src) or len(set(tar)) != len(tar):
            raise ValueError("seed pairs must be injective in both directions")

    @property
    def size(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def _eligible(g_src: Graph, g_tar: Graph, gt: GroundTruth) -> list[int]:
    return [v for v in degree_order(g_src) if v in gt.pairs and gt.pairs[v] in g_tar]


def seed_top(g_src: Graph, g_tar: Graph, gt: GroundTruth, k: int) -> SeedSet:
    """The ``k`` highest-degree source nodes that have a counterpart, correctly paired."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    eligible = _eligible(g_src, g_tar, gt)
    if len(eligible) < k:
        raise ValueError(f"only {len(eligible)} mutually existing nodes, cannot pick {k} seeds")
    return SeedSet(tuple((v, gt.pairs[v]) for v in eligible[:k]), "top")


def seed_random_top_percent(
    g_src: Graph,
    g_tar: Graph,
    gt: GroundTruth,
    k: int,
    percent: float = 0.01,
    rng_seed: int = 0,
) -> SeedSet:
    """``k`` seeds drawn uniformly from the top ``percent`` of source nodes by degree.

    The pool is the top ``ceil(percent * |V_src|)`` source nodes intersected
    with the mutually existing nodes. ``percent=0.01`` is the ``random.01``
    scheme.
    """
    if not 0 < percent <= 1:
        raise ValueError(f"percent must be in (0, 1], got {percent}")
    cutoff = math.ceil(percent * len(g_src))
    pool = [v for v in degree_order(g_src)[:cutoff] if v in gt.pairs and gt.pairs[v] in g_tar]
    if not 1 <= k <= len(pool):
        raise ValueError(f"cannot draw {k} seeds from a pool of {len(pool)}")
    rng = np.random.default_rng(rng_seed)
    picked = sorted(rng.choice(len(pool), size=k, replace=False).tolist())
    tag = "random.01" if percent == 0.01 else f"random.{percent:g}"
    return SeedSet(tuple((pool[i], gt.pairs[pool[i]]) for i in picked), tag)
