"""
How many seeds are enough?
==========================

Recall as a function of the number of top-degree seeds, plus a few draws of
random seeds from the top 1% of nodes.
"""

import networkx as nx

from bumblebee import Graph, PerturbationParams, ns_perturb
from bumblebee.experiment import AttackBlock, PreparedPair, SeedingBlock, seed_sensitivity

g = Graph.from_networkx(nx.powerlaw_cluster_graph(4000, 8, 0.5, seed=1))
pair = PreparedPair(*ns_perturb(g, PerturbationParams(0.5, 0.75, 0)))

attacks = [AttackBlock("nar", "nar"), AttackBlock("blb", "blb", delta=0.5)]
sizes = [1, 2, 3, 5, 10, 25, 50]

rows, minimum = seed_sensitivity(pair, SeedingBlock("top"), attacks, sizes)
print("top seeding")
for row in rows:
    print(f"  {row['attack']:4s} {row['size']:3d} seeds  recall {row['recall_mean']:.3f}  error {row['error_mean']:.3f}")
print("  smallest size reaching recall 0.1:", minimum)

rows, minimum = seed_sensitivity(pair, SeedingBlock("random", percent=0.01, seed=0), attacks[1:], [1, 3, 5], repeats=4)
print("random.01 seeding, blb, 4 draws per size")
for row in rows:
    print(f"  {row['size']:3d} seeds  recall {row['recall_min']:.3f}..{row['recall_max']:.3f}  "
          f"large-scale in {row['large_scale_fraction']:.0%} of draws")
