import math

import networkx as nx
import numpy as np
import pytest

from bumblebee import Graph, GroundTruth, PerturbationParams, edge_sample_pair, measure_overlap, ns_perturb
from bumblebee.perturb import common_edge_overlap, keep_probability, read_pairs, write_pairs


@pytest.fixture(scope="module")
def ba2k():
    return Graph.from_networkx(nx.barabasi_albert_graph(2000, 4, seed=3))


def test_alpha_one_copies_identical(ba2k):
    g_src, g_tar, gt = ns_perturb(ba2k, PerturbationParams(1.0, 1.0, 5))
    assert g_src == ba2k and g_tar == ba2k
    assert gt.v_common == ba2k.node_ids


def test_keep_probability_closed_form():
    assert keep_probability(0.5) == pytest.approx(2 / 3, abs=1e-15)
    assert keep_probability(1.0) == 1.0


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.75, 0.9])
def test_keep_probability_against_simulation(alpha):
    # oracle: Jaccard of two independent Bernoulli(p) subsets of a big set
    rng = np.random.default_rng(0)
    p = keep_probability(alpha)
    a = rng.random(400_000) < p
    b = rng.random(400_000) < p
    assert (a & b).sum() / (a | b).sum() == pytest.approx(alpha, abs=0.005)


def test_overlap_statistics(ba2k):
    nodes, edges = [], []
    for seed in range(10):
        g_src, g_tar, gt = ns_perturb(ba2k, PerturbationParams(0.5, 0.75, seed))
        nj, _ = measure_overlap(g_src, g_tar, gt)
        nodes.append(nj)
        edges.append(common_edge_overlap(g_src, g_tar, gt))
    assert abs(np.mean(nodes) - 0.5) < 0.05
    assert abs(np.mean(edges) - 0.75) < 0.05


def test_all_edge_overlap_matches_closed_form(ba2k):
    # an edge survives in one copy with q = p_v^2 p_e, in both with q^2
    q = keep_probability(0.5) ** 2 * keep_probability(0.75)
    expected = q / (2 - q)
    vals = [measure_overlap(*ns_perturb(ba2k, PerturbationParams(0.5, 0.75, s)))[1] for s in range(10)]
    assert abs(np.mean(vals) - expected) < 0.02


def test_reproducible_and_paired(ba2k):
    params = PerturbationParams(0.5, 0.75, 11)
    a = ns_perturb(ba2k, params)
    b = ns_perturb(ba2k, params)
    assert a[0] == b[0] and a[1] == b[1] and a[2] == b[2]
    g_src, g_tar, gt = a
    assert gt.v_common == g_src.node_ids & g_tar.node_ids
    assert all(s == t for s, t in gt.pairs.items())


def test_edge_alpha_does_not_move_node_deletions(ba2k):
    a = ns_perturb(ba2k, PerturbationParams(0.5, 0.75, 2))
    b = ns_perturb(ba2k, PerturbationParams(0.5, 0.3, 2))
    assert a[0].node_ids == b[0].node_ids
    assert a[1].node_ids == b[1].node_ids


def test_isolated_nodes_kept():
    g = Graph.from_edges([(i, i + 1) for i in range(200)])
    g_src, g_tar, _ = ns_perturb(g, PerturbationParams(1.0, 0.2, 0))
    assert g_src.node_ids == g.node_ids
    assert any(not n for n in g_src.adj.values())


def test_params_validation():
    for bad in [(0, 0.5), (0.5, 0), (1.2, 0.5), (0.5, -1)]:
        with pytest.raises(ValueError):
            PerturbationParams(*bad)
    with pytest.raises(ValueError):
        ns_perturb(Graph(), PerturbationParams(0.5, 0.5))


def test_edge_sample_full(ba2k):
    g_src, g_tar, gt = edge_sample_pair(ba2k, 1.0, 0)
    assert g_src == ba2k and g_tar == ba2k
    assert len(gt) == len(ba2k)


def test_edge_sample_binomial():
    g = Graph.from_networkx(nx.gnm_random_graph(400, 1000, seed=1))
    assert g.edge_count == 1000
    sigma = math.sqrt(1000 * 0.25)
    for seed in range(5):
        g_src, g_tar, gt = edge_sample_pair(g, 0.5, seed)
        for copy in (g_src, g_tar):
            assert copy.node_ids == g.node_ids
            assert abs(copy.edge_count - 500) <= 4 * sigma
        assert len(gt) == len(g)
    with pytest.raises(ValueError):
        edge_sample_pair(g, 0.0)
    with pytest.raises(ValueError):
        edge_sample_pair(g, 1.5)


def test_measure_overlap_examples():
    tri = Graph.from_edges([(0, 1), (1, 2), (2, 0)])
    path = Graph.from_edges([(0, 1), (1, 2)])
    ident = GroundTruth.identity(range(3))
    assert measure_overlap(tri, tri, ident) == (1.0, 1.0)
    nj, ej = measure_overlap(tri, path, ident)
    assert nj == 1.0
    assert ej == pytest.approx(2 / 3, abs=1e-15)
    other = Graph.from_edges([(10, 11)])
    assert measure_overlap(tri, other, GroundTruth({})) == (0.0, 0.0)


def test_measure_overlap_through_relabeling():
    g1 = Graph.from_edges([(0, 1), (1, 2)])
    g2 = Graph.from_edges([(10, 11), (11, 12)])
    gt = GroundTruth({0: 10, 1: 11, 2: 12})
    assert measure_overlap(g1, g2, gt) == (1.0, 1.0)


def test_pairs_roundtrip(tmp_path):
    p = tmp_path / "gt.tsv"
    write_pairs({3: 30, 1: 10}, p)
    assert p.read_text() == "1\t10\n3\t30\n"
    assert read_pairs(p) == {1: 10, 3: 30}
    p.write_text("1\t10\n2\t10\n")
    with pytest.raises(ValueError, match=":2:"):
        read_pairs(p)
    with pytest.raises(ValueError):
        GroundTruth({1: 5, 2: 5})
