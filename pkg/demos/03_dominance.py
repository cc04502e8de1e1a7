"""
Counting correct self-comparisons
=================================

Glue a graph to itself and ask, for every ordered pair (a, b), whether a
scores itself strictly higher than it scores b. blb with delta >= 0.5 never
makes fewer correct decisions than nar; below 0.5 the degree-ratio bound
fails for some degree pairs.
"""

import networkx as nx
import numpy as np

from bumblebee import Graph, MetricSpec, decision_count_oracle, theorem1_check
from bumblebee.evaluation import find_ratio_bound_counterexample

rng = np.random.default_rng(0)
graphs = []
for i in range(12):
    n = int(rng.integers(50, 200))
    g = nx.gnp_random_graph(n, 0.08, seed=i) if i % 2 else nx.barabasi_albert_graph(n, 3, seed=i)
    graphs.append(Graph.from_networkx(g))

report = theorem1_check(graphs, [0.5, 0.75, 1.0])
print(f"{len(report.rows)} graph/delta cases, {report.degree_pairs_checked} degree pairs, "
      f"{len(report.violations)} violations")
for row in report.rows[:6]:
    print(row)

# A sparse graph has many low-degree nodes hanging off the same hubs, which
# is where the plain common-neighbor count (grh, blb(0)) loses. With a
# margin theta, a must beat b by at least theta.
g = Graph.from_networkx(nx.barabasi_albert_graph(150, 2, seed=0))
for theta in (0.0, 0.3):
    print(f"theta={theta}")
    for m in ("nar", "grh", "blb(0)", "blb(0.5)", "blb(1)"):
        ok, total = decision_count_oracle(g, MetricSpec.parse(m), theta)
        print(f"  {m:9s} {ok:6d} / {total}")

degs = sorted({len(n) for n in g.adj.values() if n})
print("delta=0.25 counterexample degrees:", find_ratio_bound_counterexample(degs, 0.25))
