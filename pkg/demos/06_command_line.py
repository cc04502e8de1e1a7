"""
The same pipeline through the command line
==========================================

Writes a graph and a JSON config to a scratch directory, then drives the
``bumblebee`` subcommands in-process. Each call prints its JSON summary.
"""

import json
import tempfile
from pathlib import Path

import networkx as nx

from bumblebee import Graph
from bumblebee.cli import main
from bumblebee.graph import write_edge_list

work = Path(tempfile.mkdtemp(prefix="bumblebee-"))
write_edge_list(Graph.from_networkx(nx.barabasi_albert_graph(2000, 5, seed=3)), work / "graph.edges")

config = {
    "graph": "graph.edges",
    "perturbation": {"method": "ns", "alpha_v": 0.5, "alpha_e": 0.75, "seed": 0},
    "seeding": {"method": "top", "k": 50},
    "attacks": [
        {"name": "nar", "metric": "nar", "theta": 0.01},
        {"name": "blb", "metric": "blb", "delta": 0.5, "theta": 0.01},
    ],
    "output": "results",
}
(work / "experiment.json").write_text(json.dumps(config, indent=2))
cfg = str(work / "experiment.json")

main(["perturb", cfg, "-o", str(work / "pair")])
main(["attack", cfg])
main(["sweep", cfg, "--theta", "0.01,0.1,0.5", "--delta", "0.5"])
main(["seed-sensitivity", cfg, "--sizes", "1,5,20"])
main(["evaluate", str(work / "results" / "blb.mapping.tsv"), str(work / "pair" / "ground_truth.tsv")])

print("\nartifacts in", work)
for p in sorted(work.rglob("*")):
    if p.is_file():
        print("  ", p.relative_to(work))
