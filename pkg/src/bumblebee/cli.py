"""Command-line front end.

Subcommands: ``perturb``, ``seed``, ``attack``, ``sweep``,
``seed-sensitivity`` and ``evaluate``. All but ``evaluate`` read a JSON
experiment config (see :mod:`bumblebee.experiment`); ``--set key=value``
overrides single fields, e.g. ``--set attacks.0.theta=0.5``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .attack import read_mapping
from .evaluation import evaluate
from .experiment import (
    SENSITIVITY_COLUMNS,
    SWEEP_COLUMNS,
    ConfigError,
    ExperimentConfig,
    PreparedPair,
    attack_pair,
    make_seeds,
    perturb_graph,
    prepare_pair,
    seed_sensitivity,
    sweep,
    write_attack_result,
    write_csv,
    write_json,
    write_pair,
)
from .graph import load_edge_list
from .perturb import load_ground_truth, write_pairs

log = logging.getLogger("bumblebee")


def _floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _override(text: str) -> tuple[str, object]:
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def _load_config(args) -> ExperimentConfig:
    overrides = dict(args.set or [])
    if args.output is not None:
        overrides["output"] = str(Path(args.output).resolve())
    return ExperimentConfig.load(args.config, overrides)


def cmd_perturb(cfg: ExperimentConfig) -> dict:
    if cfg.graph is None:
        raise ConfigError("perturb needs 'graph' in the config")
    pair = perturb_graph(load_edge_list(cfg.graph), cfg.perturbation)
    manifest = write_pair(pair, Path(cfg.output), {"perturbation": vars(cfg.perturbation)})
    log.info("wrote pair to %s", cfg.output)
    return manifest


def _pair(cfg: ExperimentConfig) -> PreparedPair:
    pair = prepare_pair(cfg)
    log.info("pair: %d/%d nodes, %d mutually existing", len(pair.g_src), len(pair.g_tar), len(pair.gt))
    return pair


def cmd_seed(cfg: ExperimentConfig) -> dict:
    pair = _pair(cfg)
    seeds = make_seeds(pair, cfg.seeding)
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    write_pairs(dict(seeds.pairs), out / "seeds.tsv")
    return {"method": seeds.method, "size": seeds.size}


def cmd_attack(cfg: ExperimentConfig) -> list[dict]:
    if not cfg.attacks:
        raise ConfigError("config has no attacks")
    pair = _pair(cfg)
    seeds = make_seeds(pair, cfg.seeding)
    overlaps = pair.overlaps()
    out = Path(cfg.output)
    summary = []
    for block in cfg.attacks:
        result = attack_pair(pair, seeds, block, overlaps)
        write_attack_result(result, out)
        m = result.metrics
        log.info("%s: recall=%.4f error=%.4f rounds=%d", block.name, m.recall, m.error, len(result.rounds))
        summary.append({"name": block.name, "recall": m.recall, "error": m.error, "precision": m.precision,
                        "rounds": len(result.rounds), "converged": result.converged})
    return summary


def cmd_sweep(cfg: ExperimentConfig, thetas, deltas) -> list[dict]:
    pair = _pair(cfg)
    seeds = make_seeds(pair, cfg.seeding)
    rows = sweep(pair, seeds, cfg.attacks, thetas, deltas)
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(rows, SWEEP_COLUMNS, out / "sweep.csv")
    return rows


def cmd_seed_sensitivity(cfg: ExperimentConfig, sizes, repeats: int, threshold: float | None) -> dict:
    pair = _pair(cfg)
    threshold = cfg.large_scale_threshold if threshold is None else threshold
    rows, minimum = seed_sensitivity(pair, cfg.seeding, cfg.attacks, sizes, repeats, threshold)
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(rows, SENSITIVITY_COLUMNS, out / "seed_sensitivity.csv")
    summary = {"threshold": threshold, "method": cfg.seeding.method, "minimum_seeds": minimum}
    write_json(summary, out / "seed_sensitivity.json")
    return summary


def cmd_evaluate(mapping_path, gt_path, source=None, target=None) -> dict:
    mu = read_mapping(mapping_path)
    gt = load_ground_truth(gt_path)
    if source and target:
        g_src, g_tar = load_edge_list(source), load_edge_list(target)
        missing = [(s, t) for s, t in mu.items() if s not in g_src or t not in g_tar]
        if missing:
            raise ConfigError(f"mapping refers to {len(missing)} nodes missing from the graphs, e.g. {missing[0]}")
    return vars(evaluate(mu, gt))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bumblebee", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_config(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("config", help="experiment config (JSON)")
        sp.add_argument("-o", "--output", help="output directory (overrides config)")
        sp.add_argument("--set", action="append", type=_override, metavar="KEY=VALUE",
                        help="override a config field, dotted path")
        return sp

    with_config("perturb", "create a perturbed source/target pair with ground truth")
    with_config("seed", "write the seed set for a pair")
    with_config("attack", "run every configured attack")
    sp = with_config("sweep", "rerun the attacks over a theta/delta grid")
    sp.add_argument("--theta", type=_floats, help="comma-separated theta values")
    sp.add_argument("--delta", type=_floats, help="comma-separated delta values (blb only)")
    sp = with_config("seed-sensitivity", "recall/error as a function of seed-set size")
    sp.add_argument("--sizes", type=_ints, required=True, help="comma-separated seed-set sizes")
    sp.add_argument("--repeats", type=int, default=1)
    sp.add_argument("--threshold", type=float, help="recall counted as large-scale propagation")

    sp = sub.add_parser("evaluate", help="score any mapping file against a ground truth")
    sp.add_argument("mapping")
    sp.add_argument("ground_truth")
    sp.add_argument("--source", help="source edge list, to check node ids")
    sp.add_argument("--target", help="target edge list, to check node ids")
    sp.add_argument("-o", "--output", help="write the metrics JSON here")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        if args.command == "evaluate":
            result = cmd_evaluate(args.mapping, args.ground_truth, args.source, args.target)
            if args.output:
                write_json(result, Path(args.output))
        else:
            cfg = _load_config(args)
            if args.command == "perturb":
                result = cmd_perturb(cfg)
            elif args.command == "seed":
                result = cmd_seed(cfg)
            elif args.command == "attack":
                result = cmd_attack(cfg)
            elif args.command == "sweep":
                result = cmd_sweep(cfg, args.theta, args.delta)
            else:
                result = cmd_seed_sensitivity(cfg, args.sizes, args.repeats, args.threshold)
    except (ConfigError, ValueError, KeyError, OSError) as exc:
        print(f"bumblebee: error: {exc}", file=sys.stderr)
        return 2
    json.dump(result, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
