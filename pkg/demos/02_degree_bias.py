"""
Where nar and grh go wrong
==========================

Two nodes to re-identify: A with degree 100 and B with degree 2. Five
neighbors of A are already mapped, two of them are shared with B. We print
the 2x2 score matrix of each metric and the resulting decision.
"""

from bumblebee import Graph, Mapping, MetricSpec, score

A, B = 0, 1
mapped = range(10, 15)


def side():
    edges = [(A, m) for m in mapped] + [(B, 10), (B, 11)]
    edges += [(A, 100 + i) for i in range(95)]  # unmapped filler neighbors
    return Graph.from_edges(edges)


src, tar = side(), side()
mu = Mapping({m: m for m in mapped})

for metric in ("nar", "grh", "blb(0.5)"):
    spec = MetricSpec.parse(metric)
    print(f"\n{metric}")
    print("        A'       B'")
    for v, label in ((A, "A"), (B, "B")):
        row = score(src, tar, v, mu, spec)
        top = max(row.values())
        picks = [("A'", "B'")[k] for k, x in sorted(row.items()) if x == top]
        print(f"  {label}  {row[A]:7.4f}  {row[B]:7.4f}   -> {' / '.join(picks)}")

# nar sends both to B', grh ties on B, blb gets both right. The blb
# off-diagonal entries are 2 * (2/100) ** 0.5 = 0.2828.
