"""Structural social-network de-anonymization: seed-and-propagate attacks
with the nar, grh and blb similarity scores, synthetic graph perturbation,
seeding and evaluation."""

__version__ = "0.1.0"

from .attack import (
    AttackConfig,
    AttackResult,
    Mapping,
    RoundLog,
    build_weights,
    propagate_round,
    read_mapping,
    run_attack,
    score,
    write_mapping,
)
from .evaluation import Metrics, decision_count_oracle, evaluate, theorem1_check
from .graph import Graph, degree, load_edge_list, neighbors, top_degree_nodes, write_edge_list
from .perturb import (
    GroundTruth,
    PerturbationParams,
    edge_sample_pair,
    measure_overlap,
    ns_perturb,
    read_pairs,
    write_pairs,
)
from .seeding import SeedSet, seed_random_top_percent, seed_top
from .similarity import MetricSpec, blb_sim, eccentricity, grh_sim, grh_weight, nar_sim

__all__ = [
    "AttackConfig",
    "AttackResult",
    "Graph",
    "GroundTruth",
    "Mapping",
    "MetricSpec",
    "Metrics",
    "PerturbationParams",
    "RoundLog",
    "SeedSet",
    "blb_sim",
    "build_weights",
    "decision_count_oracle",
    "degree",
    "eccentricity",
    "edge_sample_pair",
    "evaluate",
    "grh_sim",
    "grh_weight",
    "load_edge_list",
    "measure_overlap",
    "nar_sim",
    "neighbors",
    "ns_perturb",
    "propagate_round",
    "read_mapping",
    "read_pairs",
    "run_attack",
    "score",
    "seed_random_top_percent",
    "seed_top",
    "theorem1_check",
    "top_degree_nodes",
    "write_edge_list",
    "write_mapping",
    "write_pairs",
]
