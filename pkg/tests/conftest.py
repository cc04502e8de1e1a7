import networkx as nx
import pytest

from bumblebee import Graph, GroundTruth

# Anonymized side of the introductory example, letters A..I -> ids 0..8.
LETTERS = "ABCDEFGHI"
L = {c: i for i, c in enumerate(LETTERS)}
INTRO_EDGES = [
    ("D", "B"), ("D", "H"), ("D", "E"), ("D", "A"),
    ("F", "I"), ("F", "H"), ("F", "E"), ("F", "C"), ("F", "G"),
    ("A", "C"), ("E", "G"),
]
# Identified side: same structure, person ids 100 + letter index.
PEOPLE = {"Dave": 103, "Ed": 104, "Fred": 105, "Harry": 107}


def person(letter: str) -> int:
    return 100 + L[letter]


@pytest.fixture
def intro():
    g_tar = Graph.from_edges([(L[a], L[b]) for a, b in INTRO_EDGES])
    g_src = Graph.from_edges([(person(a), person(b)) for a, b in INTRO_EDGES])
    gt = GroundTruth({person(c): L[c] for c in LETTERS})
    seeds = {PEOPLE["Dave"]: L["D"], PEOPLE["Fred"]: L["F"]}
    return g_src, g_tar, gt, seeds


# Degree-bias example: A/A' have degree 100, B/B' degree 2, five mapped
# pairs 10..14 of which two (10, 11) are also B's neighbors.
A, B = 0, 1
MAPPED = list(range(10, 15))


@pytest.fixture
def fig2():
    def side():
        edges = [(A, m) for m in MAPPED] + [(B, 10), (B, 11)]
        edges += [(A, 100 + i) for i in range(95)]
        return Graph.from_edges(edges)

    return side(), side(), {m: m for m in MAPPED}


def random_graphs(count, seed=0, n_range=(50, 200)):
    """Mixed Erdos-Renyi and preferential-attachment graphs."""
    import numpy as np

    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        s = int(rng.integers(1 << 30))
        if i % 2 == 0:
            g = nx.gnp_random_graph(n, float(rng.uniform(0.03, 0.15)), seed=s)
        else:
            g = nx.barabasi_albert_graph(n, int(rng.integers(1, 6)), seed=s)
        out.append(Graph.from_networkx(g))
    return out


# Acceptance reporting: tests tagged ``@pytest.mark.criterion(n)`` are
# folded into one PASS/FAIL line per criterion at the end of the run.
_criteria: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (report.when != "call" and report.passed):
        return
    entry = _criteria.setdefault(mark.args[0], {"ok": True, "title": mark.kwargs.get("title", ""), "notes": []})
    if report.failed or report.skipped:
        entry["ok"] = False
    entry["notes"].extend(v for k, v in item.user_properties if k == "detail" and v not in entry["notes"])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        line = f"criterion {n:2d} [{'PASS' if e['ok'] else 'FAIL'}] {e['title']}"
        if e["notes"]:
            line += " :: " + "; ".join(e["notes"])
        terminalreporter.write_line(line)
