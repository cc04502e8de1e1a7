import networkx as nx
import pytest

from bumblebee import Graph, PerturbationParams, ns_perturb, seed_random_top_percent, seed_top
from bumblebee.graph import degree_order


@pytest.fixture(scope="module")
def pair():
    g = Graph.from_networkx(nx.barabasi_albert_graph(3000, 4, seed=7))
    return ns_perturb(g, PerturbationParams(0.5, 0.75, 1))


def test_top_one_is_highest_common_node(pair):
    g_src, g_tar, gt = pair
    s = seed_top(g_src, g_tar, gt, 1)
    best = next(v for v in degree_order(g_src) if v in gt.pairs)
    assert s.pairs == ((best, gt.pairs[best]),)
    assert s.method == "top" and s.size == 1


@pytest.mark.parametrize("k", [1, 50, 200])
def test_top_seeds_are_correct(pair, k):
    g_src, g_tar, gt = pair
    s = seed_top(g_src, g_tar, gt, k)
    assert s.size == k
    assert all(gt.pairs[a] == b for a, b in s.pairs)
    degs = [g_src.degree(a) for a, _ in s.pairs]
    assert degs == sorted(degs, reverse=True)


def test_top_too_many(pair):
    g_src, g_tar, gt = pair
    with pytest.raises(ValueError):
        seed_top(g_src, g_tar, gt, len(gt) + 1)
    with pytest.raises(ValueError):
        seed_top(g_src, g_tar, gt, 0)


def test_random_pool_and_determinism(pair):
    g_src, g_tar, gt = pair
    pool_cut = set(degree_order(g_src)[: -(-len(g_src) // 100)])
    a = seed_random_top_percent(g_src, g_tar, gt, 5, 0.01, rng_seed=3)
    b = seed_random_top_percent(g_src, g_tar, gt, 5, 0.01, rng_seed=3)
    c = seed_random_top_percent(g_src, g_tar, gt, 5, 0.01, rng_seed=4)
    assert a == b
    assert a != c
    assert a.method == "random.01"
    for s, t in a.pairs:
        assert s in pool_cut and gt.pairs[s] == t


def test_random_whole_pool(pair):
    g_src, g_tar, gt = pair
    cutoff = degree_order(g_src)[: -(-len(g_src) // 100)]
    pool = [v for v in cutoff if v in gt.pairs]
    s = seed_random_top_percent(g_src, g_tar, gt, len(pool), 0.01, 0)
    assert {a for a, _ in s.pairs} == set(pool)
    with pytest.raises(ValueError):
        seed_random_top_percent(g_src, g_tar, gt, len(pool) + 1, 0.01, 0)


def test_pool_size_scale():
    # on a ~25k-node source graph the top 1% is about 250 nodes
    g = Graph.from_networkx(nx.barabasi_albert_graph(25000, 2, seed=0))
    cutoff = -(-len(g) // 100)
    assert 200 <= cutoff <= 300
