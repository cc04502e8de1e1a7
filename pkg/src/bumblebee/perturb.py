"""Synthetic (source, target, ground truth) pairs and overlap measurement."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class GroundTruth:
    """Correct correspondence between nodes present in both graphs.

    ``pairs`` maps a source node id to its target node id. The source-side
    keys form the set of mutually existing nodes that recall and error rates
    are normalized by.
    """

    pairs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.pairs.values())) != len(self.pairs):
            raise ValueError("ground truth is not injective")

    @classmethod
    def identity(cls, nodes) -> GroundTruth:
        return cls({v: v for v in sorted(nodes)})

    @property
    def v_common(self) -> frozenset[int]:
        return frozenset(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def check(self, g_src: Graph, g_tar: Graph) -> None:
        for s, t in self.pairs.items():
            if s not in g_src or t not in g_tar:
                raise ValueError(f"ground-truth pair {s}->{t} refers to a missing node")


@dataclass(frozen=True)
class PerturbationParams:
    alpha_v: float
    alpha_e: float
    rng_seed: int = 0

    def __post_init__(self):
        for name in ("alpha_v", "alpha_e"):
            a = getattr(self, name)
            if not 0 < a <= 1:
                raise ValueError(f"{name} must be in (0, 1], got {a}")


def keep_probability(alpha: float) -> float:
    """Per-copy Bernoulli keep probability giving expected Jaccard ``alpha``.

    Two independent keeps with probability p overlap with Jaccard p/(2-p).
    """
    return 2 * alpha / (1 + alpha)


def _streams(rng_seed: int, n: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(rng_seed).spawn(n)]


def ns_perturb(g: Graph, params: PerturbationParams) -> tuple[Graph, Graph, GroundTruth]:
    """Two copies of ``g`` thinned by independent node then edge deletion.

    Each copy keeps every node with probability ``keep_probability(alpha_v)``
    and every surviving edge with probability ``keep_probability(alpha_e)``.
    Nodes left isolated by edge deletion stay in the graph. Node and edge
    decisions use separate streams, so changing ``alpha_e`` leaves the node
    deletions of a given seed untouched.
    """
    if len(g) == 0:
        raise ValueError("cannot perturb an empty graph")
    p_v = keep_probability(params.alpha_v)
    p_e = keep_probability(params.alpha_e)
    nodes = np.array(sorted(g.adj), dtype=np.int64)
    edges = g.edges()
    node_rngs = _streams(params.rng_seed, 4)
    copies = []
    for node_rng, edge_rng in (node_rngs[0:2], node_rngs[2:4]):
        kept = set(nodes[node_rng.random(len(nodes)) < p_v].tolist())
        if not kept:
            raise ValueError("perturbation removed every node; raise alpha_v")
        edge_draw = edge_rng.random(len(edges)) < p_e
        kept_edges = [e for e, keep in zip(edges, edge_draw) if keep and e[0] in kept and e[1] in kept]
        copies.append(Graph.from_edges(kept_edges, kept))
    g_src, g_tar = copies
    gt = GroundTruth.identity(g_src.node_ids & g_tar.node_ids)
    return g_src, g_tar, gt


def edge_sample_pair(g: Graph, s: float, rng_seed: int = 0) -> tuple[Graph, Graph, GroundTruth]:
    """Two independent edge samples of ``g`` with keep probability ``s``; all nodes kept."""
    if not 0 < s <= 1:
        raise ValueError(f"s must be in (0, 1], got {s}")
    edges = g.edges()
    copies = []
    for rng in _streams(rng_seed, 2):
        keep = rng.random(len(edges)) < s
        copies.append(Graph.from_edges([e for e, k in zip(edges, keep) if k], g.adj))
    return copies[0], copies[1], GroundTruth.identity(g.adj)


def _jaccard(inter: int, union: int) -> float:
    return inter / union if union else 1.0


def _mapped_edges(g_src: Graph, gt: GroundTruth) -> set[tuple[int, int]]:
    out = set()
    pairs = gt.pairs
    for u, v in g_src.edges():
        if u in pairs and v in pairs:
            a, b = pairs[u], pairs[v]
            out.add((a, b) if a < b else (b, a))
    return out


def measure_overlap(g1: Graph, g2: Graph, gt: GroundTruth) -> tuple[float, float]:
    """Node and edge Jaccard overlap of a graph pair under ``gt``.

    Edges are compared after mapping ``g1`` through the ground truth; edges
    touching an unpaired node can only ever contribute to the union.
    """
    n_common = sum(1 for s, t in gt.pairs.items() if s in g1 and t in g2)
    node_j = _jaccard(n_common, len(g1) + len(g2) - n_common)
    e2 = set(g2.edges())
    shared = len(_mapped_edges(g1, gt) & e2)
    edge_j = _jaccard(shared, g1.edge_count + g2.edge_count - shared)
    return node_j, edge_j


def common_edge_overlap(g1: Graph, g2: Graph, gt: GroundTruth) -> float:
    """Edge Jaccard restricted to edges whose endpoints are all paired.

    This is the quantity the edge-deletion step of :func:`ns_perturb` is
    calibrated against; :func:`measure_overlap` additionally counts edges
    lost together with a deleted endpoint.
    """
    pairs = gt.pairs
    inv = {t: s for s, t in pairs.items()}
    e1 = _mapped_edges(g1, gt)
    e2 = {(u, v) for u, v in g2.edges() if u in inv and v in inv}
    shared = len(e1 & e2)
    return _jaccard(shared, len(e1) + len(e2) - shared)


def write_pairs(pairs, path: str | os.PathLike) -> None:
    """Write ``src<TAB>tar`` lines sorted by source id."""
    items = pairs.items() if hasattr(pairs, "items") else pairs
    with open(path, "w") as fh:
        for s, t in sorted(items):
            fh.write(f"{s}\t{t}\n")


def read_pairs(path: str | os.PathLike) -> dict[int, int]:
    """Read a ``src<TAB>tar`` pair file; the result must be injective."""
    pairs: dict[int, int] = {}
    seen: set[int] = set()
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            try:
                s, t = int(tokens[0]), int(tokens[1])
            except (ValueError, IndexError):
                raise ValueError(f"{path}:{lineno}: expected 'src<TAB>tar', got {line!r}") from None
            if s in pairs or t in seen:
                raise ValueError(f"{path}:{lineno}: pair {s}->{t} breaks injectivity")
            pairs[s] = t
            seen.add(t)
    return pairs


def load_ground_truth(path: str | os.PathLike) -> GroundTruth:
    return GroundTruth(read_pairs(path))
