import json
from fractions import Fraction
from math import comb

import pytest
import sympy

from conftest import THETAS, all_partitions
from plancherel.observables import (
    ContentG,
    FMu,
    HPsi,
    Product,
    constant_one,
    del_operator,
    parse_observable,
)
from plancherel.partitions import dim_standard, enumerate_partitions
from plancherel.polycheck import (
    a_coefficients,
    check_identity_6E,
    check_polynomiality,
    finite_difference_check,
    forward_differences,
    identity_6e_sides,
    verify_closed_forms,
)
from plancherel.symfunc import SymFunc


def test_finite_difference_examples():
    rep = finite_difference_check([1, 1, 1, 1], 0)
    assert rep.verdict and rep.interpolant == (1,)
    rep = finite_difference_check([0, 1, 2, 3, 4], 1)
    assert rep.verdict and rep.interpolant == (0, 1)
    rep = finite_difference_check([0, 0, 1, 3, 6, 10], 2)
    assert rep.verdict and rep.interpolant == (0, 0, 1)
    assert all(rep(n) == comb(n, 2) for n in range(10))


def test_finite_difference_rejects():
    rep = finite_difference_check([0, 1, 4, 9, 16], 1)
    assert not rep.verdict and rep.differences == (2, 2, 2)
    with pytest.raises(ValueError):
        finite_difference_check([1, 2], 1)


def test_forward_differences():
    assert forward_differences([1, 4, 9, 16], 2) == [2, 2]


def test_interpolant_reproduces_values():
    rep = check_polynomiality(parse_observable("content:p(2)*pstar:1"), 1)
    assert rep.verdict
    assert all(rep(n) == v for n, v in enumerate(rep.values))


def test_polynomiality_examples():
    for mu in all_partitions(3):
        rep = check_polynomiality(FMu(mu), 1)
        assert rep.verdict
        assert all(rep(n) == comb(n, sum(mu)) * dim_standard(mu) for n in range(20))
    rep = check_polynomiality(ContentG(SymFunc.power((2,))), 1, n_max=7)
    assert rep.verdict and rep.degree == 3 and rep.values[2] == 1
    rep = check_polynomiality(constant_one(), Fraction(2))
    assert rep.degree == 0 and rep.interpolant == (1,)


def test_polynomiality_default_range_and_json():
    rep = check_polynomiality(parse_observable("hrho:2,2"), Fraction(1, 2))
    assert len(rep.values) == rep.degree + 5
    data = json.loads(rep.to_json())
    assert data["verdict"] is True and data["theta"] == "1/2"
    assert data["interpolant_binomial_basis"][0] == "0"


def test_degree_is_not_overclaimed():
    # <F_(2)>_n = C(n, 2): a bound of 1 must fail.
    assert not check_polynomiality(FMu((2,)), 1, degree=1).verdict
    assert check_polynomiality(FMu((2,)), 1).attained_degree == 2
    # <sum c**2>_n = C(n, 2) sits below its filtration bound 3.
    rep = check_polynomiality(ContentG(SymFunc.power((2,))), 1)
    assert rep.degree == 3 and rep.attained_degree == 2


@pytest.mark.parametrize("theta", [Fraction(1, 2), Fraction(1), Fraction(2)], ids=str)
@pytest.mark.parametrize("rho, sigma", [((1,), (1,)), ((2,), (1,)), ((1,), (2,)), ((1, 1), (1,))])
def test_content_times_h_polynomial(theta, rho, sigma):
    obs = Product((ContentG(SymFunc.power(rho)), HPsi(SymFunc.power(sigma))))
    assert obs.degree_bound == sum(rho) + len(rho) + sum(sigma) + len(sigma)
    assert check_polynomiality(obs, theta).verdict


@pytest.mark.parametrize("theta", [Fraction(1, 2), Fraction(1), Fraction(2)], ids=str)
@pytest.mark.parametrize("spec", ["h:2", "h:4", "hrho:2,2", "hrho:3,2", "content:p(2)", "frak:5", "pstar:3"])
def test_del_reduces_degree(theta, spec):
    obs = parse_observable(spec)
    D = obs.degree_bound
    rep = check_polynomiality(del_operator(obs), theta, n_max=D + 2, degree=max(D - 1, 0))
    assert rep.verdict


# ---------------------------------------------------------------- a_s(x)


def sympy_a(theta, s_max):
    u, x = sympy.symbols("u x")
    t = sympy.Rational(theta.numerator, theta.denominator)
    w = sympy.symbols("w")  # w = 1/u
    g = (u - x) * (u - x + t - 1) / ((u - x - 1) * (u - x + t))
    series = sympy.series(g.subs(u, 1 / w), w, 0, s_max + 1).removeO()
    out = []
    for s in range(s_max + 1):
        coeff = sympy.Poly(sympy.expand(series.coeff(w, s)), x)
        out.append(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(coeff.all_coeffs())))
    return out


@pytest.mark.parametrize("theta", THETAS + [Fraction(7, 3)], ids=str)
def test_a_coefficients_against_sympy(theta):
    ours = a_coefficients(theta, 8).a
    theirs = sympy_a(theta, 8)
    for s in range(9):
        trimmed = list(theirs[s])
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        assert ours[s] == tuple(trimmed), s


@pytest.mark.parametrize("theta", THETAS, ids=str)
def test_a_coefficient_leading_terms(theta):
    a = a_coefficients(theta, 8).a
    assert a[0] == (1,) and a[1] == ()
    assert a[2] == (theta,)
    assert a[3] == (theta * (1 - theta), 2 * theta)
    for s in range(3, 9):
        assert len(a[s]) == s - 1
        assert a[s][s - 2] == (s - 1) * theta
        assert a[s][s - 3] == Fraction((s - 1) * (s - 2), 2) * theta * (1 - theta)


# ---------------------------------------------------------------- (1 + del) h_rho


def test_identity_6e_examples():
    assert check_identity_6E((2,), 1, 5).ok
    assert check_identity_6E((3,), Fraction(2), 5).ok
    for rho in [(2,), (3,), (2, 2)]:
        lhs, rhs = identity_6e_sides(rho, (), Fraction(3, 2))
        assert lhs == rhs
    with pytest.raises(ValueError):
        check_identity_6E((2, 1), 1, 3)


@pytest.mark.parametrize("theta", [Fraction(1, 3), Fraction(5, 2)], ids=str)
def test_identity_6e_other_theta(theta):
    for n in range(2, 7):
        for rho in enumerate_partitions(n):
            if min(rho) >= 2:
                assert check_identity_6E(rho, theta, 4).ok


def test_identity_6e_reports_counterexample(monkeypatch):
    import plancherel.polycheck as pc

    real = pc.a_coefficients

    def skewed(theta, s_max):
        table = real(theta, s_max)
        a = list(table.a)
        a[2] = (2 * a[2][0],)
        return pc.ACoeffTable(table.theta, tuple(a))

    monkeypatch.setattr(pc, "a_coefficients", skewed)
    rep = pc.check_identity_6E((2,), 1, 4)
    assert not rep.ok
    assert rep.counterexample == () and rep.lhs != rep.rhs


# ---------------------------------------------------------------- closed forms


def test_closed_form_examples():
    rep = verify_closed_forms((1,), 1, 8)
    assert rep.ok and rep.averages == tuple(range(9))
    rep = verify_closed_forms((2, 1), 1, 8)
    assert rep.ok and rep.averages == tuple(2 * comb(n, 3) for n in range(9))
    for theta in THETAS:
        rep = verify_closed_forms((), theta, 6, jack=True)
        assert rep.ok and set(rep.averages) == {1}


@pytest.mark.parametrize("theta", THETAS, ids=str)
def test_jack_closed_form_with_primed_dimension(theta):
    for mu in all_partitions(3):
        assert verify_closed_forms(mu, theta, 7, jack=True).ok
