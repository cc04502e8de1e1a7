"""
Scoring one node by hand
========================

Nine people, two of them (Dave and Fred) already linked to their anonymized
nodes D and F. We score Harry against every candidate with the nar metric,
then let one propagation round decide.
"""

import math

from bumblebee import AttackConfig, Graph, Mapping, MetricSpec, propagate_round, score

letters = "ABCDEFGHI"
edges = ["DB", "DH", "DE", "DA", "FI", "FH", "FE", "FC", "FG", "AC", "EG"]

# anonymized side: letters -> 0..8; identified side: the same shape on 100..108
anon = Graph.from_edges([(letters.index(a), letters.index(b)) for a, b in edges])
known = Graph.from_edges([(100 + letters.index(a), 100 + letters.index(b)) for a, b in edges])
names = {103: "Dave", 104: "Ed", 105: "Fred", 107: "Harry"}

seeds = Mapping({103: 3, 105: 5})
nar = MetricSpec("nar")

for person in (107, 104):
    table = score(known, anon, person, seeds, nar)
    print(f"{names[person]}:")
    for cand, s in sorted(table.items(), key=lambda kv: -kv[1]):
        print(f"  {letters[cand]}  {s:.4f}")

# Harry's best is H at 2/sqrt(2); Ed is pulled towards H as well, because
# nar divides by the candidate degree and E has one more neighbor than H.
assert math.isclose(score(known, anon, 107, seeds, nar)[7], 2 / math.sqrt(2))

mu = seeds.copy()
added = propagate_round(known, anon, mu, AttackConfig(nar, theta=0.01))
print(f"\none round registered {added} pair(s):")
for s, t in sorted(mu.items()):
    print(f"  {names.get(s, 'person ' + letters[s - 100])} -> {letters[t]}")
