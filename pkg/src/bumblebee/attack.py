"""Seed-and-propagate de-anonymization.

A single propagation skeleton serves all three similarity scores. Each round
visits every source node, scores the unmapped neighbors-of-neighbors reached
through the current mapping, and registers a pair only when the best
candidate is outstanding (eccentricity at least ``theta``) in both directions
and the reverse check points back at the source node. Rounds repeat until
one registers nothing.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .evaluation import Metrics, evaluate
from .graph import Graph
from .perturb import GroundTruth, read_pairs, write_pairs
from .seeding import SeedSet
from .similarity import MetricSpec, eccentricity, grh_weight

ORDERS = ("sorted_id", "shuffled")


class Mapping:
    """Injective partial mapping with constant-time inverse lookup."""

    __slots__ = ("forward", "inverse")

    def __init__(self, pairs=None, *, _views=None):
        if _views is not None:
            self.forward, self.inverse = _views
            return
        self.forward: dict[int, int] = {}
        self.inverse: dict[int, int] = {}
        for s, t in dict(pairs or {}).items():
            self.register(s, t)

    def register(self, s: int, t: int) -> None:
        """Map ``s`` to ``t``, dropping any pair ``s`` was part of."""
        owner = self.inverse.get(t)
        if owner is not None and owner != s:
            raise ValueError(f"target {t} is already mapped from {owner}")
        self.remove(s)
        self.forward[s] = t
        self.inverse[t] = s

    def remove(self, s: int) -> int | None:
        t = self.forward.pop(s, None)
        if t is not None:
            del self.inverse[t]
        return t

    def inverted(self) -> Mapping:
        """View of the inverse mapping sharing storage with this one."""
        return Mapping(_views=(self.inverse, self.forward))

    def get(self, s, default=None):
        return self.forward.get(s, default)

    def __getitem__(self, s):
        return self.forward[s]

    def __contains__(self, s) -> bool:
        return s in self.forward

    def __len__(self) -> int:
        return len(self.forward)

    def __iter__(self):
        return iter(self.forward)

    def items(self):
        return self.forward.items()

    def copy(self) -> Mapping:
        return Mapping(_views=(dict(self.forward), dict(self.inverse)))

    def is_consistent(self) -> bool:
        return len(self.forward) == len(self.inverse) and all(
            self.inverse.get(t) == s for s, t in self.forward.items()
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Mapping) and self.forward == other.forward

    def __repr__(self) -> str:
        return f"Mapping({len(self)} pairs)"


@dataclass(frozen=True)
class AttackConfig:
    metric: MetricSpec
    theta: float = 0.01
    rng_seed: int = 0
    iteration_order: str = "sorted_id"
    max_rounds: int | None = 1000

    def __post_init__(self):
        if not self.theta >= 0:
            raise ValueError(f"theta must be >= 0, got {self.theta}")
        if self.iteration_order not in ORDERS:
            raise ValueError(f"iteration_order must be one of {ORDERS}")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1 or None")


@dataclass
class RoundLog:
    round_index: int
    delta: int
    mapping_size: int
    recall: float | None
    error: float | None
    precision: float | None
    elapsed: float
    correct: int | None = None


@dataclass
class Registration:
    """One accepted pair, as seen at the moment it was registered."""

    round_index: int
    src: int
    tar: int
    previous: int | None
    forward_ecc: float
    reverse_ecc: float
    forward_best: tuple[int, ...]
    reverse_best: tuple[int, ...]


@dataclass
class AttackResult:
    mapping: Mapping
    rounds: list[RoundLog]
    converged: bool
    config: AttackConfig
    name: str = ""
    metrics: Metrics | None = None
    overlaps: dict[str, float] = field(default_factory=dict)
    runtime: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "metric": str(self.config.metric),
            "theta": self.config.theta,
            "rng_seed": self.config.rng_seed,
            "iteration_order": self.config.iteration_order,
            "max_rounds": self.config.max_rounds,
            "converged": self.converged,
            "num_rounds": len(self.rounds),
            "mapping_size": len(self.mapping),
            "metrics": asdict(self.metrics) if self.metrics else None,
            "measured_overlaps": self.overlaps,
            "runtime_s": self.runtime,
            "rounds": [asdict(r) for r in self.rounds],
        }


class _Side:
    """Sorted adjacency tuples and degrees of one graph."""

    def __init__(self, g: Graph):
        self.nbrs = {v: tuple(sorted(ns)) for v, ns in g.adj.items()}
        self.deg = {v: len(ns) for v, ns in self.nbrs.items()}


def _score(a: _Side, b: _Side, v, fwd, inv, metric: MetricSpec, weights) -> dict:
    acc: dict = {}
    get = acc.get
    if metric.kind == "grh":
        for vi in a.nbrs[v]:
            t = fwd.get(vi)
            if t is None:
                continue
            w = weights[vi]
            for vj in b.nbrs[t]:
                if vj in inv:
                    continue
                acc[vj] = get(vj, 0.0) + w
        return acc
    for vi in a.nbrs[v]:
        t = fwd.get(vi)
        if t is None:
            continue
        for vj in b.nbrs[t]:
            if vj in inv:
                continue
            acc[vj] = get(vj, 0) + 1
    deg = b.deg
    if metric.kind == "nar":
        return {vj: c / math.sqrt(deg[vj]) for vj, c in acc.items()}
    d = a.deg[v]
    delta = metric.delta
    out = {}
    for vj, c in acc.items():
        dj = deg[vj]
        r = d / dj if d < dj else dj / d
        out[vj] = c * r**delta
    return out


def score(
    g_a: Graph,
    g_b: Graph,
    v: int,
    mu: Mapping,
    metric: MetricSpec,
    weights: dict[int, float] | None = None,
) -> dict[int, float]:
    """Similarity of ``v`` in ``g_a`` to every reachable unmapped node of ``g_b``.

    Candidates are neighbors (in ``g_b``) of the images of ``v``'s mapped
    neighbors, skipping nodes already in the image of ``mu``. For ``grh``,
    ``weights`` is keyed by the ``g_a`` side of each mapped pair. Nodes never
    reached have an implicit score of zero and are left out.
    """
    if v not in g_a:
        raise KeyError(f"unknown node {v!r}")
    if metric.kind == "grh" and weights is None:
        weights = {s: 1.0 for s in mu.forward}
    return _score(_Side(g_a), _Side(g_b), v, mu.forward, mu.inverse, metric, weights)


def _best(scores: dict) -> tuple:
    top = max(scores.values())
    return tuple(sorted(k for k, x in scores.items() if x == top))


def build_weights(g_src: Graph, g_tar: Graph, mu: Mapping) -> dict[int, float]:
    """Weight of every current mapping from its neighborhood agreement."""
    return _build_weights(_Side(g_src), _Side(g_tar), mu.forward)


def _build_weights(src: _Side, tar: _Side, fwd: dict) -> dict:
    weights = {}
    for s, t in fwd.items():
        ds, dt = src.deg[s], tar.deg[t]
        if ds == 0 or dt == 0:
            weights[s] = 1.0
            continue
        tn = set(tar.nbrs[t])
        common = sum(1 for n in src.nbrs[s] if fwd.get(n) in tn)
        weights[s] = grh_weight(common, ds, dt)
    return weights


class Propagator:
    """Stateful runner of propagation rounds over a fixed graph pair."""

    def __init__(self, g_src: Graph, g_tar: Graph, mu: Mapping, config: AttackConfig, weights=None):
        self.src = _Side(g_src)
        self.tar = _Side(g_tar)
        self.mu = mu
        self.config = config
        self.rng = np.random.default_rng(config.rng_seed)
        self.order = sorted(self.src.nbrs)
        self.round_index = 0
        self.audit: list[Registration] | None = None
        self.weights = None
        self.rev_weights = None
        if config.metric.kind == "grh":
            self.set_weights(weights if weights is not None else {s: 1.0 for s in mu.forward})

    def set_weights(self, weights: dict) -> None:
        fwd = self.mu.forward
        missing = set(fwd) - set(weights)
        if missing:
            raise ValueError(f"no weight for mapped nodes {sorted(missing)[:5]}")
        self.weights = {s: weights[s] for s in fwd}
        self.rev_weights = {t: self.weights[s] for s, t in fwd.items()}

    def rebuild_weights(self) -> None:
        self.set_weights(_build_weights(self.src, self.tar, self.mu.forward))

    def _pick(self, best: tuple):
        if len(best) == 1:
            return best[0]
        return best[int(self.rng.integers(len(best)))]

    def run_round(self) -> int:
        self.round_index += 1
        cfg = self.config
        theta = cfg.theta
        metric = cfg.metric
        src, tar = self.src, self.tar
        fwd, inv = self.mu.forward, self.mu.inverse
        grh = metric.kind == "grh"
        order = self.order
        if cfg.iteration_order == "shuffled":
            order = [order[i] for i in self.rng.permutation(len(order))]
        delta = 0
        for v in order:
            # a mapped node competes for its own target again, so a better
            # unmapped candidate can replace it
            old = fwd.pop(v, None)
            if old is not None:
                del inv[old]
            s = _score(src, tar, v, fwd, inv, metric, self.weights)
            accepted = None
            if s:
                ecc = eccentricity(s.values())
                if ecc >= theta:
                    best = _best(s)
                    vc = self._pick(best)
                    sr = _score(tar, src, vc, inv, fwd, metric, self.rev_weights)
                    ecc_r = eccentricity(sr.values())
                    if ecc_r >= theta:
                        best_r = _best(sr)
                        if self._pick(best_r) == v:
                            accepted = vc
            if accepted is None or accepted == old:
                if old is not None:
                    fwd[v] = old
                    inv[old] = v
                continue
            fwd[v] = accepted
            inv[accepted] = v
            delta += 1
            if grh:
                self.weights[v] = 1.0
                self.rev_weights.pop(old, None)
                self.rev_weights[accepted] = 1.0
            if self.audit is not None:
                self.audit.append(
                    Registration(self.round_index, v, accepted, old, ecc, ecc_r, best, best_r)
                )
        return delta


def propagate_round(
    g_src: Graph,
    g_tar: Graph,
    mu: Mapping,
    config: AttackConfig,
    weights: dict[int, float] | None = None,
) -> int:
    """Run one propagation round in place on ``mu``; returns the number of registrations."""
    return Propagator(g_src, g_tar, mu, config, weights).run_round()


def run_attack(
    g_src: Graph,
    g_tar: Graph,
    seeds: SeedSet | dict[int, int],
    config: AttackConfig,
    gt: GroundTruth | None = None,
    audit: list[Registration] | None = None,
    check_invariants: bool = False,
) -> AttackResult:
    """Propagate from ``seeds`` until a round registers nothing.

    With ``gt`` each round log carries recall, error and precision. Passing
    a list as ``audit`` records every registration with its eccentricities.
    """
    pairs = seeds.as_dict() if isinstance(seeds, SeedSet) else dict(seeds)
    for s, t in pairs.items():
        if s not in g_src or t not in g_tar:
            raise ValueError(f"seed {s}->{t} refers to a node missing from the graphs")
    mu = Mapping(pairs)
    prop = Propagator(g_src, g_tar, mu, config)
    prop.audit = audit
    rounds: list[RoundLog] = []
    converged = False
    start = time.perf_counter()
    while config.max_rounds is None or len(rounds) < config.max_rounds:
        t0 = time.perf_counter()
        delta = prop.run_round()
        if config.metric.kind == "grh":
            prop.rebuild_weights()
        elapsed = time.perf_counter() - t0
        if check_invariants and not mu.is_consistent():
            raise AssertionError(f"mapping lost injectivity in round {prop.round_index}")
        m = evaluate(mu, gt) if gt is not None else None
        rounds.append(
            RoundLog(
                round_index=prop.round_index,
                delta=delta,
                mapping_size=len(mu),
                recall=m.recall if m else None,
                error=m.error if m else None,
                precision=m.precision if m else None,
                elapsed=elapsed,
                correct=m.correct if m else None,
            )
        )
        if delta == 0:
            converged = True
            break
    return AttackResult(
        mapping=mu,
        rounds=rounds,
        converged=converged,
        config=config,
        metrics=evaluate(mu, gt) if gt is not None else None,
        runtime=time.perf_counter() - start,
    )


def write_mapping(mu: Mapping | dict, path) -> None:
    write_pairs(dict(mu.items()), path)


def read_mapping(path) -> Mapping:
    return Mapping(read_pairs(path))
