import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bumblebee import MetricSpec, blb_sim, eccentricity, grh_sim, grh_weight, nar_sim
from bumblebee.evaluation import find_ratio_bound_counterexample, ratio_bound_holds


def test_nar_published_values():
    assert nar_sim(2, 3) == pytest.approx(2 / math.sqrt(3), abs=1e-15)
    assert nar_sim(2, 2) == pytest.approx(2 / math.sqrt(2), abs=1e-15)
    assert nar_sim(5, 100) == 0.5


def test_blb_values():
    assert blb_sim(5, 100, 100, 0.5) == 5
    assert blb_sim(5, 100, 100, 0.9) == 5
    assert blb_sim(3, 7, 40, 0.0) == 3
    # direct evaluation: 2 * sqrt(2/100)
    assert blb_sim(2, 100, 2, 0.5) == pytest.approx(0.28284271247461906, abs=1e-12)


def test_grh_weight_and_sum():
    assert grh_weight(0, 3, 5) == 1.0
    assert grh_weight(2, 4, 4) == 1.5
    assert grh_weight(4, 4, 4) == 2.0
    w = dict.fromkeys(range(5), 1.0)
    assert grh_sim(range(5), w) == 5
    assert grh_sim([0, 1], w) == 2
    assert grh_sim([7, 8], {7: 1.5, 8: 1.5}) == 3.0
    with pytest.raises(RuntimeError):
        grh_sim([9], w)


def test_eccentricity_values():
    sigma = math.sqrt(8 / 9)
    assert eccentricity([3, 1, 1]) == pytest.approx(2 / sigma, abs=1e-12)
    assert eccentricity([3, 1, 1]) == pytest.approx(2.1213203435596424, abs=1e-12)
    assert eccentricity([2, 2, 2]) == 0
    assert eccentricity([7]) == math.inf
    assert eccentricity([]) == 0
    assert eccentricity([5, 5, 1]) == 0


def test_eccentricity_matches_numpy_oracle():
    rng = np.random.default_rng(1)
    for _ in range(200):
        x = rng.random(rng.integers(2, 30)) * 10
        s = np.sort(x)
        expected = (s[-1] - s[-2]) / x.std()
        assert eccentricity(x.tolist()) == pytest.approx(expected, rel=1e-10)


@given(st.lists(st.integers(1, 1000), min_size=2, max_size=20), st.sampled_from([0.5, 2.0, 4.0, 8.0, 0.25]))
def test_eccentricity_scale_invariant(values, lam):
    # power-of-two factors scale every intermediate exactly
    assert eccentricity(values) == eccentricity([v * lam for v in values])


def test_metric_spec():
    assert MetricSpec.parse("nar") == MetricSpec("nar")
    assert MetricSpec.parse("blb(0.5)") == MetricSpec("blb", 0.5)
    assert MetricSpec.parse("blb:0.005") == MetricSpec("blb", 0.005)
    assert str(MetricSpec("blb", 0.5)) == "blb(0.5)"
    for bad in ["blb", "cosine", "nar(0.5)"]:
        with pytest.raises(ValueError):
            MetricSpec.parse(bad)
    with pytest.raises(ValueError):
        MetricSpec("blb", 1.5)
    with pytest.raises(ValueError):
        MetricSpec("grh", 0.5)


degs = st.integers(1, 10_000)
deltas = st.floats(0, 1)


@given(st.integers(0, 50), degs, degs, deltas)
def test_blb_symmetric_and_bounded(c, a, b, d):
    assert blb_sim(c, a, b, d) == blb_sim(c, b, a, d)
    assert blb_sim(c, a, b, d) <= c
    if a == b or d == 0:
        assert blb_sim(c, a, b, d) == c


@given(st.integers(1, 50), degs, st.integers(1, 100), st.floats(0.01, 1))
def test_blb_decreases_with_mismatch(c, a, gap, d):
    assert blb_sim(c, a, a + gap + 1, d) <= blb_sim(c, a, a + gap, d)
    if c > 0:
        assert blb_sim(c, a, a + gap, d) < c


@given(degs, degs, st.floats(0.5, 1))
def test_ratio_bound_for_large_delta(a, b, d):
    assert ratio_bound_holds(a, b, d)


@given(degs, degs, st.floats(0, 0.49))
def test_ratio_bound_fails_below_half(a, b, d):
    assume(a < b and (a / b) ** (d - 0.5) > 1 + 1e-9)
    assert not ratio_bound_holds(a, b, d)


def test_ratio_bound_counterexample_search():
    assert find_ratio_bound_counterexample([1, 2, 5, 40], 0.25) == (1, 2)
    assert find_ratio_bound_counterexample([1, 2, 5, 40], 0.5) is None
