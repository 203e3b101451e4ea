from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

from conftest import THETAS, all_partitions, partitions, positive_thetas
from plancherel.kerov import growth_kernel, h_series, kerov_coords
from plancherel.measures import (
    GROWTH,
    JACK_DIRECT,
    PLANCHEREL,
    MeasureTable,
    average,
    del_operator,
    empirical_frequencies,
    growth_marginal,
    jack_plancherel_direct,
    measure,
    plancherel,
    sample_final_diagrams,
    sample_trajectory,
)
from plancherel.observables import FMu, HCoeff, HProd, PStar, constant_one, content_power, parse_observable
from plancherel.partitions import addable_boxes, dim_standard, enumerate_partitions, transpose

TEST_THETAS = [Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]


def test_plancherel_examples():
    assert plancherel(0).weights == {(): 1}
    assert plancherel(2).weights == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    assert plancherel(3).weights == {(3,): Fraction(1, 6), (2, 1): Fraction(2, 3), (1, 1, 1): Fraction(1, 6)}


@pytest.mark.parametrize("theta", TEST_THETAS, ids=str)
def test_jack_measure_small(theta):
    assert jack_plancherel_direct(1, theta).weights == {(1,): 1}
    assert jack_plancherel_direct(2, theta).weights == {(2,): theta / (1 + theta), (1, 1): 1 / (1 + theta)}
    assert growth_marginal(0, theta).weights == {(): 1}


@pytest.mark.parametrize("theta", TEST_THETAS, ids=str)
def test_growth_equals_jack(theta):
    for n in range(7):
        assert growth_marginal(n, theta).same_weights(jack_plancherel_direct(n, theta))


def test_jack_at_one_is_plancherel():
    for n in range(9):
        assert jack_plancherel_direct(n, 1).same_weights(plancherel(n))
        assert growth_marginal(n, 1).same_weights(plancherel(n))


@pytest.mark.parametrize("theta", [Fraction(1, 2), Fraction(2), Fraction(1, 3), Fraction(3)], ids=str)
def test_duality(theta):
    for n in range(7):
        a, b = jack_plancherel_direct(n, theta), jack_plancherel_direct(n, 1 / theta)
        for lam, w in a.weights.items():
            assert b[transpose(lam)] == w


def test_support_is_all_partitions():
    for theta in THETAS:
        for n in range(7):
            assert set(growth_marginal(n, theta).weights) == set(enumerate_partitions(n))


def test_kernel_examples():
    assert growth_kernel((), 1).targets == (((1,), 1),)
    th = Fraction(7, 2)
    assert growth_kernel((1,), th).as_dict() == {(2,): th / (1 + th), (1, 1): 1 / (1 + th)}


def test_kernel_at_theta_one_is_dimension_ratio():
    for lam in all_partitions(8):
        n = sum(lam)
        for nu, p in growth_kernel(lam, 1).targets:
            assert p == Fraction(dim_standard(nu), (n + 1) * dim_standard(lam))


@pytest.mark.parametrize("theta", TEST_THETAS, ids=str)
def test_kernel_rows(theta):
    for lam in all_partitions(8):
        kernel = growth_kernel(lam, theta)
        probs = [p for _, p in kernel.targets]
        assert [nu for nu, _ in kernel.targets] == addable_boxes(lam)
        assert sum(probs) == 1 and min(probs) > 0


@pytest.mark.parametrize("theta", TEST_THETAS, ids=str)
def test_fundamental_identity(theta):
    for lam in all_partitions(6):
        kc = kerov_coords(lam, theta)
        probs = [p for _, p in growth_kernel(lam, theta).targets]
        h = h_series(lam, theta, 8)
        for m in range(9):
            assert sum(p * x**m for p, x in zip(probs, kc.X)) == h[m]


def test_average_examples():
    for n in range(8):
        assert average(constant_one(), n) == 1
        assert average(FMu((1,)), n) == n
    assert average(content_power(2), 2) == 1
    assert average(PStar(1), 5, Fraction(2)) == 5


def test_stanley_closed_form_small():
    for mu in all_partitions(4):
        m = sum(mu)
        for n in range(9):
            assert average(FMu(mu), n) == comb(n, m) * dim_standard(mu)


def test_sources_agree():
    obs = parse_observable("content:p(1,1)+h:3")
    for theta in (Fraction(1, 2), Fraction(2)):
        for n in range(6):
            assert average(obs, n, theta, GROWTH) == average(obs, n, theta, JACK_DIRECT)
    for n in range(6):
        assert average(obs, n, 1, PLANCHEREL) == average(obs, n, 1, GROWTH)
    with pytest.raises(ValueError):
        measure(3, Fraction(2), PLANCHEREL)


# ---------------------------------------------------------------- del


def test_del_examples():
    for theta in THETAS:
        d1 = del_operator(constant_one())
        assert all(d1(lam, theta) == 0 for lam in all_partitions(6))
        assert del_operator(HCoeff(2))((), theta) == theta


@pytest.mark.parametrize("theta", [Fraction(1, 2), Fraction(1), Fraction(2)], ids=str)
@pytest.mark.parametrize("spec", ["h:2", "h:3", "hrho:2,2", "content:p(2)", "pstar:3", "frak:4"])
def test_del_telescopes_averages(theta, spec):
    F = parse_observable(spec)
    dF = del_operator(F)
    for n in range(7):
        lhs = average(F, n + 1, theta, GROWTH) - average(F, n, theta, GROWTH)
        assert lhs == average(dF, n, theta, GROWTH)


def test_del_degree_bound():
    assert del_operator(HProd((3, 2))).degree_bound == 2
    assert del_operator(constant_one()).degree_bound == 0


# ---------------------------------------------------------------- serialization


def test_measure_json_and_csv():
    table = jack_plancherel_direct(3, Fraction(2))
    again = MeasureTable.from_json(table.to_json())
    assert again.same_weights(table) and again.theta == 2
    assert table.to_json().startswith('{"n": 3, "theta": "2", "weights": [["3", ')
    lines = table.to_csv().splitlines()
    assert lines[0] == "n,theta,partition,weight"
    assert len(lines) == 4


def test_measure_table_validation():
    with pytest.raises(AssertionError):
        MeasureTable(1, Fraction(1), {(1,): Fraction(1, 2)}, PLANCHEREL)


# ---------------------------------------------------------------- sampler


def test_sampler_trivial_cases():
    assert sample_trajectory(0, 1, seed=3) == [()]
    assert all(sample_trajectory(1, Fraction(2), seed=5, index=k) == [(), (1,)] for k in range(5))


@given(positive_thetas, partitions(max_size=0))
@settings(max_examples=20, deadline=None)
def test_sampler_paths_are_monotone(theta, _):
    path = sample_trajectory(7, theta, seed=11)
    assert len(path) == 8
    for a, b in zip(path, path[1:]):
        assert b in addable_boxes(a)


def test_sampler_deterministic():
    a = sample_final_diagrams(6, Fraction(2), seed=42, trajectories=50)
    b = sample_final_diagrams(6, Fraction(2), seed=42, trajectories=50)
    c = sample_final_diagrams(6, Fraction(2), seed=43, trajectories=50)
    assert a == b and a != c
    # trajectory k does not depend on how many others are drawn
    assert sample_final_diagrams(6, 2, seed=42, trajectories=10) == a[:10]


def test_sampler_rough_frequencies():
    samples = sample_final_diagrams(4, 1, seed=1, trajectories=4000)
    freqs = empirical_frequencies(samples)
    exact = plancherel(4).weights
    assert sum(freqs.values()) == 1
    assert all(abs(freqs.get(lam, 0) - w) < 0.04 for lam, w in exact.items())
