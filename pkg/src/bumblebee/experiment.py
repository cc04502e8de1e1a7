"""Experiment configuration and the perturb -> seed -> attack pipeline.

A configuration is a JSON document::

    {
      "graph": "slashdot.txt",
      "perturbation": {"method": "ns", "alpha_v": 0.5, "alpha_e": 0.75, "seed": 0},
      "seeding": {"method": "top", "k": 200},
      "attacks": [
        {"name": "nar", "metric": "nar", "theta": 0.01},
        {"name": "blb", "metric": "blb", "delta": 0.5, "theta": 0.01}
      ],
      "output": "results"
    }

Instead of ``graph`` + ``perturbation`` a prepared pair can be given with
``source``, ``target`` and ``ground_truth``; ``seeding.file`` points to a
ready seed file. Relative paths are resolved against the config file.
"""

from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

import numpy as np

from .attack import AttackConfig, AttackResult, run_attack, write_mapping
from .graph import Graph, load_edge_list, write_edge_list
from .perturb import (
    GroundTruth,
    PerturbationParams,
    common_edge_overlap,
    edge_sample_pair,
    load_ground_truth,
    measure_overlap,
    ns_perturb,
    read_pairs,
    write_pairs,
)
from .seeding import SeedSet, seed_random_top_percent, seed_top
from .similarity import MetricSpec

WORKERS_ENV = "BUMBLEBEE_WORKERS"
ROUND_COLUMNS = ["round", "delta", "mapping_size", "recall", "error", "precision", "elapsed_s"]


class ConfigError(ValueError):
    pass


@dataclass
class PerturbationBlock:
    method: str = "ns"
    alpha_v: float = 0.5
    alpha_e: float = 0.75
    s: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.method not in ("ns", "edge_sample"):
            raise ConfigError(f"perturbation.method must be 'ns' or 'edge_sample', got {self.method!r}")
        if self.method == "edge_sample" and self.s is None:
            raise ConfigError("edge_sample perturbation needs 's'")


@dataclass
class SeedingBlock:
    method: str = "top"
    k: int = 200
    percent: float = 0.01
    seed: int = 0
    file: str | None = None

    def __post_init__(self):
        if self.method not in ("top", "random"):
            raise ConfigError(f"seeding.method must be 'top' or 'random', got {self.method!r}")


@dataclass
class AttackBlock:
    name: str
    metric: str
    delta: float | None = None
    theta: float = 0.01
    seed: int = 0
    order: str = "sorted_id"
    max_rounds: int | None = 1000

    def metric_spec(self) -> MetricSpec:
        if self.delta is not None:
            return MetricSpec(self.metric, float(self.delta))
        return MetricSpec.parse(self.metric)

    def attack_config(self) -> AttackConfig:
        return AttackConfig(
            metric=self.metric_spec(),
            theta=float(self.theta),
            rng_seed=int(self.seed),
            iteration_order=self.order,
            max_rounds=self.max_rounds,
        )


@dataclass
class ExperimentConfig:
    attacks: list[AttackBlock]
    graph: str | None = None
    source: str | None = None
    target: str | None = None
    ground_truth: str | None = None
    perturbation: PerturbationBlock = field(default_factory=PerturbationBlock)
    seeding: SeedingBlock = field(default_factory=SeedingBlock)
    output: str = "results"
    large_scale_threshold: float = 0.1

    @classmethod
    def from_dict(cls, data: dict, base_dir: str | os.PathLike | None = None) -> ExperimentConfig:
        data = dict(data)
        try:
            attacks = [AttackBlock(**a) for a in data.pop("attacks", [])]
            pert = PerturbationBlock(**data.pop("perturbation", {}))
            seeding = SeedingBlock(**data.pop("seeding", {}))
            cfg = cls(attacks=attacks, perturbation=pert, seeding=seeding, **data)
        except TypeError as exc:
            raise ConfigError(f"bad config field: {exc}") from None
        if base_dir is not None:
            cfg._resolve(Path(base_dir))
        cfg.validate()
        return cfg

    @classmethod
    def load(cls, path: str | os.PathLike, overrides: dict | None = None) -> ExperimentConfig:
        with open(path) as fh:
            data = json.load(fh)
        for key, value in (overrides or {}).items():
            set_path(data, key, value)
        return cls.from_dict(data, Path(path).parent)

    def _resolve(self, base: Path) -> None:
        for name in ("graph", "source", "target", "ground_truth", "output"):
            value = getattr(self, name)
            if value is not None and not os.path.isabs(value):
                setattr(self, name, str(base / value))
        if self.seeding.file is not None and not os.path.isabs(self.seeding.file):
            self.seeding.file = str(base / self.seeding.file)

    def validate(self) -> None:
        prepared = [self.source, self.target, self.ground_truth]
        if any(prepared) and not all(prepared):
            raise ConfigError("source, target and ground_truth must be given together")
        if not all(prepared) and self.graph is None:
            raise ConfigError("config needs either 'graph' or a prepared source/target/ground_truth")
        names = [a.name for a in self.attacks]
        if len(set(names)) != len(names):
            raise ConfigError(f"attack names must be unique: {names}")
        for a in self.attacks:
            try:
                a.attack_config()
            except ValueError as exc:
                raise ConfigError(f"attack {a.name!r}: {exc}") from None
        for p in [self.graph, *prepared, self.seeding.file]:
            if p is not None and not os.path.exists(p):
                raise ConfigError(f"file not found: {p}")

    def to_dict(self) -> dict:
        return asdict(self)


def set_path(data: dict, dotted: str, value) -> None:
    """Set ``data['a']['b'] = value`` for ``dotted='a.b'``; list items by index."""
    keys = dotted.split(".")
    node = data
    for k in keys[:-1]:
        if isinstance(node, list):
            node = node[int(k)]
        else:
            node = node.setdefault(k, {})
    last = keys[-1]
    if isinstance(node, list):
        node[int(last)] = value
    else:
        node[last] = value


@dataclass
class PreparedPair:
    g_src: Graph
    g_tar: Graph
    gt: GroundTruth

    def overlaps(self) -> dict[str, float]:
        node_j, edge_j = measure_overlap(self.g_src, self.g_tar, self.gt)
        return {
            "node_jaccard": node_j,
            "edge_jaccard": edge_j,
            "edge_jaccard_common": common_edge_overlap(self.g_src, self.g_tar, self.gt),
        }


def perturb_graph(g: Graph, block: PerturbationBlock) -> PreparedPair:
    if block.method == "ns":
        pair = ns_perturb(g, PerturbationParams(block.alpha_v, block.alpha_e, block.seed))
    else:
        pair = edge_sample_pair(g, block.s, block.seed)
    return PreparedPair(*pair)


def prepare_pair(cfg: ExperimentConfig) -> PreparedPair:
    if cfg.source is not None:
        pair = PreparedPair(load_edge_list(cfg.source), load_edge_list(cfg.target), load_ground_truth(cfg.ground_truth))
        pair.gt.check(pair.g_src, pair.g_tar)
        return pair
    return perturb_graph(load_edge_list(cfg.graph), cfg.perturbation)


def make_seeds(pair: PreparedPair, block: SeedingBlock, k: int | None = None, rng_seed: int | None = None) -> SeedSet:
    k = block.k if k is None else k
    if block.file is not None:
        return SeedSet(tuple(sorted(read_pairs(block.file).items())), "file")
    if block.method == "top":
        return seed_top(pair.g_src, pair.g_tar, pair.gt, k)
    seed = block.seed if rng_seed is None else rng_seed
    return seed_random_top_percent(pair.g_src, pair.g_tar, pair.gt, k, block.percent, seed)


def write_pair(pair: PreparedPair, out: Path, extra: dict | None = None) -> dict:
    out.mkdir(parents=True, exist_ok=True)
    write_edge_list(pair.g_src, out / "source.edges")
    write_edge_list(pair.g_tar, out / "target.edges")
    write_pairs(pair.gt.pairs, out / "ground_truth.tsv")
    manifest = {
        "source": {"nodes": len(pair.g_src), "edges": pair.g_src.edge_count},
        "target": {"nodes": len(pair.g_tar), "edges": pair.g_tar.edge_count},
        "v_common": len(pair.gt),
        "measured_overlaps": pair.overlaps(),
        **(extra or {}),
    }
    write_json(manifest, out / "manifest.json")
    return manifest


def write_json(obj, path: Path) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_round_log(result: AttackResult, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(ROUND_COLUMNS)
        for r in result.rounds:
            w.writerow([r.round_index, r.delta, r.mapping_size, r.recall, r.error, r.precision, f"{r.elapsed:.6f}"])


def write_attack_result(result: AttackResult, out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    write_json(result.to_dict(), out / f"{result.name}.json")
    write_mapping(result.mapping, out / f"{result.name}.mapping.tsv")
    write_round_log(result, out / f"{result.name}.rounds.csv")


def attack_pair(pair: PreparedPair, seeds: SeedSet, block: AttackBlock, overlaps: dict | None = None) -> AttackResult:
    result = run_attack(pair.g_src, pair.g_tar, seeds, block.attack_config(), pair.gt)
    result.name = block.name
    result.overlaps = overlaps if overlaps is not None else pair.overlaps()
    return result


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV} must be an integer") from None


def _parallel_map(fn, tasks: list) -> list:
    workers = min(worker_count(), len(tasks))
    if workers <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _run_task(task) -> dict:
    pair, seeds, block, extra = task
    r = run_attack(pair.g_src, pair.g_tar, seeds, block.attack_config(), pair.gt)
    m = r.metrics
    return {
        **extra,
        "recall": m.recall,
        "error": m.error,
        "precision": m.precision,
        "mapping_size": m.mapping_size,
        "correct": m.correct,
        "rounds": len(r.rounds),
        "converged": r.converged,
    }


SWEEP_COLUMNS = ["attack", "metric", "theta", "delta", "recall", "error", "precision", "mapping_size", "correct", "rounds", "converged"]


def sweep(pair: PreparedPair, seeds: SeedSet, attacks: list[AttackBlock], thetas=None, deltas=None) -> list[dict]:
    """Rerun each attack over a theta x delta grid.

    ``delta`` values only apply to ``blb`` attacks. Every grid point keeps the
    attack's own RNG seed, so a single-point grid reproduces a plain attack
    run and the worker count never changes a result.
    """
    thetas = list(thetas) if thetas else None
    deltas = list(deltas) if deltas else None
    if thetas is None and deltas is None:
        raise ConfigError("sweep grid is empty: give thetas and/or deltas")
    tasks = []
    for block in attacks:
        spec = block.metric_spec()
        for theta in thetas or [block.theta]:
            grid_deltas = (deltas or [spec.delta]) if spec.kind == "blb" else [None]
            for delta in grid_deltas:
                b = replace(block, metric=spec.kind, delta=delta, theta=theta)
                extra = {"attack": block.name, "metric": str(b.metric_spec()), "theta": theta, "delta": delta}
                tasks.append((pair, seeds, b, extra))
    return _parallel_map(_run_task, tasks)


SENSITIVITY_COLUMNS = [
    "attack", "method", "size", "repeats",
    "recall_mean", "recall_min", "recall_max",
    "error_mean", "error_min", "error_max",
    "large_scale_fraction",
]


def seed_sensitivity(
    pair: PreparedPair,
    seeding: SeedingBlock,
    attacks: list[AttackBlock],
    sizes,
    repeats: int = 1,
    threshold: float = 0.1,
) -> tuple[list[dict], dict[str, int | None]]:
    """Recall/error distribution per seed-set size.

    ``top`` seeding is deterministic and runs once per size; ``random``
    seeding runs ``repeats`` draws, draw ``i`` using RNG seed
    ``seeding.seed + i``. A size counts as large-scale propagation when the
    mean recall reaches ``threshold``. Returns the rows and, per attack, the
    smallest large-scale size (None if none reached it).
    """
    if repeats < 1:
        raise ConfigError("repeats must be >= 1")
    reps = 1 if seeding.method == "top" else repeats
    sizes = sorted(set(sizes))
    tasks, keys = [], []
    for block in attacks:
        for size in sizes:
            for i in range(reps if size > 0 else 0):
                seeds = make_seeds(pair, replace(seeding, file=None), k=size, rng_seed=seeding.seed + i)
                tasks.append((pair, seeds, block, {}))
                keys.append((block.name, size))
    outcomes = _parallel_map(_run_task, tasks)
    grouped: dict = {}
    for key, out in zip(keys, outcomes):
        grouped.setdefault(key, []).append(out)
    rows = []
    minimum: dict[str, int | None] = {}
    for block in attacks:
        minimum[block.name] = None
        for size in sizes:
            outs = grouped.get((block.name, size), [])
            recalls = np.array([o["recall"] for o in outs]) if outs else np.zeros(1)
            errors = np.array([o["error"] for o in outs]) if outs else np.zeros(1)
            rows.append({
                "attack": block.name,
                "method": seeding.method,
                "size": size,
                "repeats": len(outs),
                "recall_mean": float(recalls.mean()),
                "recall_min": float(recalls.min()),
                "recall_max": float(recalls.max()),
                "error_mean": float(errors.mean()),
                "error_min": float(errors.min()),
                "error_max": float(errors.max()),
                "large_scale_fraction": float((recalls >= threshold).mean()) if outs else 0.0,
            })
            if minimum[block.name] is None and outs and recalls.mean() >= threshold:
                minimum[block.name] = size
    return rows, minimum


def write_csv(rows: list[dict], columns: list[str], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({c: row.get(c) for c in columns})
