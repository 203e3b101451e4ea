"""Exact polynomiality certificates and the operator identity for ``(1 + del) h_rho``.

A sequence ``v_0, v_1, ...`` agrees with a polynomial of degree at most ``D``
iff all its forward differences of order ``D + 1`` vanish; the interpolant is
then ``sum_k (Delta^k v)_0 * C(n, k)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, prod

from .kerov import growth_kernel, h_series
from .measures import average, jack_plancherel_direct, plancherel
from .observables import FMu, FMuJack, HProd, Observable
from .partitions import Partition, dim_standard, enumerate_partitions, size
from .symfunc import format_rat, jack_table, monomial_structure_constants

EXTRA_POINTS = 4


@dataclass(frozen=True)
class PolyReport:
    spec: str
    theta: Fraction
    values: tuple[Fraction, ...]
    degree: int
    verdict: bool
    interpolant: tuple[Fraction, ...]
    differences: tuple[Fraction, ...] = field(default=())

    def __bool__(self):
        return self.verdict

    def __call__(self, n: int) -> Fraction:
        """Value of the interpolating polynomial at ``n``."""
        return sum((c * comb(n, k) for k, c in enumerate(self.interpolant)), Fraction(0))

    @property
    def attained_degree(self) -> int:
        """Highest ``k`` with a nonzero binomial coefficient (``-1`` for zero)."""
        return max((k for k, c in enumerate(self.interpolant) if c), default=-1)

    def to_dict(self) -> dict:
        return {
            "observable": self.spec,
            "theta": format_rat(self.theta),
            "degree_bound": self.degree,
            "verdict": self.verdict,
            "values": [format_rat(v) for v in self.values],
            "interpolant_binomial_basis": [format_rat(c) for c in self.interpolant],
            "attained_degree": self.attained_degree,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def forward_differences(values, order: int) -> list[Fraction]:
    vals = [Fraction(v) for v in values]
    for _ in range(order):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def finite_difference_check(values, degree: int, spec: str = "", theta=1) -> PolyReport:
    """Certify that ``values`` (indexed from ``n = 0``) fit a polynomial of degree <= ``degree``."""
    values = tuple(Fraction(v) for v in values)
    if len(values) < degree + 2:
        raise ValueError(f"need at least {degree + 2} values to test degree {degree}, got {len(values)}")
    high = forward_differences(values, degree + 1)
    interpolant = tuple(forward_differences(values, k)[0] for k in range(degree + 1))
    return PolyReport(spec, Fraction(theta), values, degree, all(d == 0 for d in high), interpolant, tuple(high))


def check_polynomiality(
    obs: Observable,
    theta=1,
    n_max: int | None = None,
    degree: int | None = None,
    source: str | None = None,
) -> PolyReport:
    """Averages for ``n = 0..n_max`` checked against the observable's degree bound.

    ``degree`` overrides ``obs.degree_bound`` (used to certify sharper bounds).
    """
    theta = Fraction(theta)
    D = obs.degree_bound if degree is None else degree
    if n_max is None:
        n_max = D + EXTRA_POINTS
    if n_max < D + 2:
        raise ValueError(f"n_max must be at least degree + 2 = {D + 2}")
    values = [average(obs, n, theta, source) for n in range(n_max + 1)]
    return finite_difference_check(values, D, obs.spec(), theta)


# ------------------------------------------------------ a-coefficients


Poly = tuple[Fraction, ...]


def poly_mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ACoeffTable:
    """``a[s]`` is the coefficient list (constant term first) of ``a_s(x)``."""

    theta: Fraction
    a: tuple[Poly, ...]

    def a_sigma(self, sigma: Partition) -> Poly:
        return _poly_prod(self.a[s] for s in sigma)


def _poly_prod(polys) -> Poly:
    out: Poly = (Fraction(1),)
    for p in polys:
        out = poly_mul(out, p)
    return out


@lru_cache(maxsize=None)
def a_coefficients(theta, s_max: int) -> ACoeffTable:
    """Coefficients of ``(u-x)(u-x+theta-1) / ((u-x-1)(u-x+theta))`` in powers of ``1/u``.

    With ``v = u - x`` the function is ``1 + theta / (v**2 + (theta-1) v - theta)``
    ``= 1 + theta * sum_k e_k v**-(k+2)`` where ``e`` is the geometric-type series
    ``e_k = (1 - theta) e_{k-1} + theta e_{k-2}``. Re-expanding
    ``v**-j = sum_i C(j+i-1, i) x**i u**-(j+i)`` gives each ``a_s``.
    """
    theta = Fraction(theta)
    if s_max < 2:
        raise ValueError("s_max must be at least 2")
    e = [Fraction(1), 1 - theta]
    while len(e) < s_max - 1:
        e.append((1 - theta) * e[-1] + theta * e[-2])
    table: list[Poly] = [(Fraction(1),), ()]
    for s in range(2, s_max + 1):
        coeffs = [Fraction(0)] * (s - 1)
        for j in range(2, s + 1):
            coeffs[s - j] += theta * e[j - 2] * comb(s - 1, s - j)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        table.append(tuple(coeffs))
    return ACoeffTable(theta, tuple(table))


def up_bracket(f: Poly, h: tuple[Fraction, ...]) -> Fraction:
    """``<x**m>_up = h_m`` extended linearly."""
    return sum((c * h[m] for m, c in enumerate(f)), Fraction(0))


@dataclass(frozen=True)
class IdentityReport:
    rho: Partition
    theta: Fraction
    n_max: int
    checked: int
    counterexample: Partition | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __bool__(self):
        return self.ok


@lru_cache(maxsize=None)
def _rhs_terms(rho: Partition) -> tuple[tuple[int, Partition, Partition], ...]:
    """All ``(c, sigma, tau)`` with ``c = c^rho_{sigma tau} != 0``."""
    total = size(rho)
    out = []
    for k in range(total + 1):
        for sigma in enumerate_partitions(k):
            for tau in enumerate_partitions(total - k):
                c = monomial_structure_constants(sigma, tau).get(rho, 0)
                if c:
                    out.append((c, sigma, tau))
    return tuple(out)


def identity_6e_sides(rho: Partition, lam: Partition, theta) -> tuple[Fraction, Fraction]:
    """Both sides of ``(1 + del) h_rho = sum c^rho_{sigma,tau} <a_sigma>_up h_tau`` at ``lam``."""
    theta = Fraction(theta)
    M = max(size(rho), 2)
    h_rho = HProd(rho)
    lhs = sum((p * h_rho.evaluate(nu, theta) for nu, p in growth_kernel(lam, theta).targets), Fraction(0))
    acoef = a_coefficients(theta, M)
    h = h_series(lam, theta, M)
    rhs = Fraction(0)
    for c, sigma, tau in _rhs_terms(rho):
        a_sig = _poly_prod(acoef.a[s] for s in sigma)
        if not a_sig:
            continue
        h_tau = prod((h[t] for t in tau), start=Fraction(1))
        if h_tau:
            rhs += c * up_bracket(a_sig, h) * h_tau
    return lhs, rhs


def check_identity_6E(rho: Partition, theta, n_max: int) -> IdentityReport:
    """Pointwise check of the ``(1 + del) h_rho`` expansion on every diagram with ``<= n_max`` boxes."""
    theta = Fraction(theta)
    if any(r < 2 for r in rho):
        raise ValueError("rho must have all parts >= 2")
    checked = 0
    for n in range(n_max + 1):
        for lam in enumerate_partitions(n):
            lhs, rhs = identity_6e_sides(rho, lam, theta)
            checked += 1
            if lhs != rhs:
                return IdentityReport(rho, theta, n_max, checked, lam, lhs, rhs)
    return IdentityReport(rho, theta, n_max, checked)


# ------------------------------------------------------ closed forms


@dataclass(frozen=True)
class ClosedFormReport:
    mu: Partition
    theta: Fraction
    averages: tuple[Fraction, ...]
    expected: tuple[Fraction, ...]

    @property
    def ok(self) -> bool:
        return self.averages == self.expected

    def __bool__(self):
        return self.ok

    def first_mismatch(self) -> int | None:
        for n, (a, b) in enumerate(zip(self.averages, self.expected)):
            if a != b:
                return n
        return None


def verify_closed_forms(mu: Partition, theta=1, n_max: int = 8, jack: bool | None = None) -> ClosedFormReport:
    """Compare ``<F_mu>_n`` with ``theta**m C(n, m) dim'_theta(mu)`` for ``n = 0..n_max``.

    ``jack=False`` (the default at ``theta = 1``) uses the classical ``F_mu``
    and the Plancherel measure; otherwise ``F_{mu;theta}`` and the
    Jack-Plancherel measure from the Jack table.

    The constant is the primed dimension ``(p_1**m, P_mu)_theta``: pairing
    ``p_1**(n-m) P_mu`` against ``p_1**n`` leaves ``P_mu``, not ``Q_mu``.
    The two dimensions agree at ``theta = 1``.
    """
    theta = Fraction(theta)
    if jack is None:
        jack = theta != 1
    m = size(mu)
    if jack:
        obs, dim_mu = FMuJack(mu), jack_table(theta, max(m, n_max)).dim_prime(mu)
        tables = [jack_plancherel_direct(n, theta) for n in range(n_max + 1)]
    else:
        if theta != 1:
            raise ValueError("classical F_mu is only averaged at theta = 1")
        obs, dim_mu = FMu(mu), dim_standard(mu)
        tables = [plancherel(n) for n in range(n_max + 1)]
    averages = tuple(
        sum((w * obs.evaluate(lam, theta) for lam, w in t.weights.items()), Fraction(0)) for t in tables
    )
    expected = tuple(theta**m * comb(n, m) * dim_mu for n in range(n_max + 1))
    return ClosedFormReport(mu, theta, averages, expected)
