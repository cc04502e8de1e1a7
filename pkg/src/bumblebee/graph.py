"""Undirected simple graphs keyed by the original integer node ids."""

from __future__ import annotations

import os
from collections.abc import Iterable, Mapping


class Graph:
    """Immutable undirected simple graph.

    Node ids are kept exactly as given (no re-indexing), so edge lists and
    pair files written from a graph stay human-checkable against the input.
    Self-loops and duplicate edges are dropped on construction.
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, adjacency: Mapping[int, Iterable[int]] | None = None):
        adj: dict[int, set[int]] = {}
        for u, nbrs in (adjacency or {}).items():
            adj.setdefault(int(u), set())
            for v in nbrs:
                v = int(v)
                if v == u:
                    continue
                adj[u].add(v)
                adj.setdefault(v, set()).add(u)
        self._adj = {u: frozenset(vs) for u, vs in adj.items()}
        self._edge_count = sum(len(vs) for vs in self._adj.values()) // 2

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], nodes: Iterable[int] = ()) -> Graph:
        adj: dict[int, set[int]] = {int(v): set() for v in nodes}
        for u, v in edges:
            adj.setdefault(int(u), set()).add(int(v))
            adj.setdefault(int(v), set())
        return cls(adj)

    @classmethod
    def from_networkx(cls, g) -> Graph:
        return cls.from_edges(g.edges(), g.nodes())

    @property
    def adj(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    @property
    def node_ids(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self):
        return iter(self._adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(frozenset(self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(nodes={len(self)}, edges={self.edge_count})"

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise KeyError(f"unknown node {v!r}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> list[tuple[int, int]]:
        """Each edge once as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u, vs in self._adj.items() for v in vs if u < v)

    def top_degree_nodes(self, k: int) -> list[int]:
        """The ``k`` highest-degree nodes; ties go to the smaller id."""
        if not 1 <= k <= len(self):
            raise ValueError(f"k must be in [1, {len(self)}], got {k}")
        return degree_order(self)[:k]


def degree_order(g: Graph) -> list[int]:
    """All nodes by degree descending, then id ascending."""
    return sorted(g.adj, key=lambda v: (-len(g.adj[v]), v))


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def top_degree_nodes(g: Graph, k: int) -> list[int]:
    return g.top_degree_nodes(k)


def load_edge_list(path: str | os.PathLike) -> Graph:
    """Read a SNAP-style edge list.

    Blank lines and lines starting with ``#`` are skipped. Only the first two
    tokens of a line are used, so weighted or timestamped lists load too.
    Directed inputs are symmetrized. ``# node <id>`` lines, as emitted by
    :func:`write_edge_list`, declare isolated nodes.
    """
    adj: dict[int, set[int]] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if line.startswith("# node "):
                adj.setdefault(int(line.split()[2]), set())
                continue
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) < 2:
                raise ValueError(f"{path}:{lineno}: expected two node ids, got {line!r}")
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer node id in {line!r}") from None
            if u < 0 or v < 0:
                raise ValueError(f"{path}:{lineno}: negative node id in {line!r}")
            adj.setdefault(u, set())
            adj.setdefault(v, set())
            if u != v:
                adj[u].add(v)
    return Graph(adj)


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    """Write edges sorted, one ``u v`` per line.

    Isolated nodes cannot be expressed in a plain edge list; they are written
    as ``# node <id>`` comment lines so the file stays SNAP-compatible
    and round-trips through :func:`load_edge_list`.
    """
    with open(path, "w") as fh:
        for v in sorted(v for v, nbrs in g.adj.items() if not nbrs):
            fh.write(f"# node {v}\n")
        for u, v in g.edges():
            fh.write(f"{u}\t{v}\n")

