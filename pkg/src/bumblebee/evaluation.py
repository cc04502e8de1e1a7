"""Attack quality against ground truth, and the pairwise decision oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph
from .perturb import GroundTruth
from .similarity import MetricSpec


@dataclass(frozen=True)
class Metrics:
    """Recall and error are normalized by the number of mutually existing
    nodes, so error counts wrong pairs wherever their source lies and can
    exceed 1. Precision of an empty mapping is 0."""

    recall: float
    error: float
    precision: float
    mapping_size: int
    v_common_size: int
    correct: int

    @property
    def incorrect(self) -> int:
        return self.mapping_size - self.correct


def evaluate(mu, gt: GroundTruth) -> Metrics:
    """Score a mapping (``Mapping`` or plain dict) against the ground truth."""
    truth = gt.pairs
    size = len(mu)
    correct = sum(1 for s, t in mu.items() if truth.get(s) == t)
    n = len(truth)
    return Metrics(
        recall=correct / n if n else 0.0,
        error=(size - correct) / n if n else 0.0,
        precision=correct / size if size else 0.0,
        mapping_size=size,
        v_common_size=n,
        correct=correct,
    )


def _pair_scores(g: Graph, metric: MetricSpec):
    nodes = sorted(v for v, nbrs in g.adj.items() if nbrs)
    index = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    adj = np.zeros((n, n), dtype=np.int64)
    for v in nodes:
        for u in g.adj[v]:
            adj[index[v], index[u]] = 1
    common = adj @ adj
    deg = adj.sum(axis=1).astype(float)
    d_a = deg[:, None]
    d_b = deg[None, :]
    if metric.kind == "nar":
        self_score = d_a / np.sqrt(d_a)
        cross = common / np.sqrt(d_b)
    elif metric.kind == "blb":
        ratio = np.minimum(d_a / d_b, d_b / d_a)
        self_score = d_a
        cross = common * ratio**metric.delta
    else:
        # grh with every mapping weight equal to one
        self_score = d_a
        cross = common.astype(float)
    return nodes, deg, np.broadcast_to(self_score, cross.shape), cross


def decision_matrix(g: Graph, metric: MetricSpec, theta: float = 0.0):
    """Boolean matrix: is ``S(A, A) > S(A, B) + theta`` for each ordered pair.

    Nodes without neighbors are left out. Returns ``(nodes, matrix)``; the
    diagonal is False.
    """
    nodes, _, self_score, cross = _pair_scores(g, metric)
    ok = self_score > cross + theta
    np.fill_diagonal(ok, False)
    return nodes, ok


def decision_count_oracle(g: Graph, metric: MetricSpec, theta: float = 0.0) -> tuple[int, int]:
    """Count correct comparisons over all ordered pairs of distinct nodes.

    Compares each node to itself and to every other node of the same graph,
    with the mapping taken as the identity. Returns ``(correct, total)``.
    """
    nodes, ok = decision_matrix(g, metric, theta)
    n = len(nodes)
    return int(ok.sum()), n * (n - 1)


def ratio_bound_holds(a: int, b: int, delta: float, rtol: float = 1e-12) -> bool:
    """``min(a/b, b/a) ** delta <= sqrt(a) / sqrt(b)`` for degrees a, b >= 1.

    The two sides are mathematically equal when ``a == b`` or when
    ``delta == 0.5`` and ``a < b``, so a relative slack of ``rtol`` absorbs
    rounding.
    """
    lhs = min(a / b, b / a) ** delta
    rhs = np.sqrt(a) / np.sqrt(b)
    return lhs <= rhs * (1 + rtol)


@dataclass
class Theorem1Report:
    rows: list[dict] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    degree_pairs_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def theorem1_check(graphs, deltas, raise_on_violation: bool = True) -> Theorem1Report:
    """Check that blb makes at least as many correct comparisons as nar.

    Runs the decision oracle at ``theta = 0`` for each graph and each
    ``delta`` and also checks the degree-ratio bound on every degree pair
    occurring in the graphs. Any violation is reported with the graph
    index, the node pair and ``delta``.
    """
    report = Theorem1Report()
    nar = MetricSpec("nar")
    for gi, g in enumerate(graphs):
        nodes, ok_nar = decision_matrix(g, nar)
        degs = sorted({len(g.adj[v]) for v in nodes})
        for delta in deltas:
            if delta < 0.5:
                raise ValueError(f"the dominance claim needs delta >= 0.5, got {delta}")
            _, ok_blb = decision_matrix(g, MetricSpec("blb", delta))
            n_nar, n_blb = int(ok_nar.sum()), int(ok_blb.sum())
            report.rows.append(
                {"graph": gi, "delta": delta, "nodes": len(nodes), "nar": n_nar, "blb": n_blb}
            )
            if n_blb < n_nar:
                report.violations.append(f"graph {gi}, delta={delta}: blb {n_blb} < nar {n_nar}")
            lost = np.argwhere(ok_nar & ~ok_blb)
            for i, j in lost[:3]:
                report.violations.append(
                    f"graph {gi}, pair ({nodes[i]}, {nodes[j]}), delta={delta}: "
                    "nar decides correctly but blb does not"
                )
            for a in degs:
                for b in degs:
                    report.degree_pairs_checked += 1
                    if not ratio_bound_holds(a, b, delta):
                        report.violations.append(
                            f"graph {gi}, degrees ({a}, {b}), delta={delta}: ratio bound fails"
                        )
    if raise_on_violation and report.violations:
        raise AssertionError("; ".join(report.violations[:10]))
    return report


def find_ratio_bound_counterexample(degrees, delta: float):
    """First degree pair ``(a, b)`` with ``a < b`` breaking the bound, or None."""
    degs = sorted(set(degrees))
    for i, a in enumerate(degs):
        for b in degs[i + 1 :]:
            if not ratio_bound_holds(a, b, delta):
                return a, b
    return None
