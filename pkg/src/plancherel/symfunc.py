"""Symmetric functions over the rationals in the monomial and power-sum bases.

Jack functions are produced by Gram-Schmidt in the monomial basis against the
deformed inner product ``(p_lam, p_mu)_theta = delta * z_lam * theta**-len(lam)``,
which is diagonal in the power-sum basis. The exponent is the number of parts;
on ``p_1**n`` it equals ``-n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, Mapping

from .partitions import (
    EMPTY,
    Partition,
    addable_boxes,
    enumerate_partitions,
    format_partition,
    make_partition,
    multiplicities,
    parse_partition,
    size,
)

MONOMIAL = "monomial"
POWER_SUM = "power-sum"
BASES = (MONOMIAL, POWER_SUM)

# Largest degree handled by the cached basis-change tables.
BASIS_MAX_DEGREE = 12
DEFAULT_JACK_DEGREE = 8


class DegreeBoundError(ValueError):
    """A computation needs a degree beyond the configured table bound."""


def partition_sort_key(lam: Partition) -> tuple:
    """Sort by size, then reverse lexicographic within a size."""
    return (size(lam), tuple(-p for p in lam))


def format_rat(x: Fraction) -> str:
    """Lowest-terms ``num/den``; integers are written without ``/1``."""
    return str(Fraction(x))


def parse_rat(text: str) -> Fraction:
    """Parse an integer or ``p/q`` string. Decimal strings are rejected."""
    text = text.strip()
    if not text or any(c in text for c in ".eE"):
        raise ValueError(f"expected an integer or p/q rational, got {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class SymFunc:
    """Sparse linear combination of basis functions indexed by partitions."""

    basis: str
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {make_partition(k): Fraction(v) for k, v in self.terms.items() if v != 0}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, lam: Partition, coeff=1) -> "SymFunc":
        return cls(MONOMIAL, {lam: Fraction(coeff)})

    @classmethod
    def power(cls, lam: Partition, coeff=1) -> "SymFunc":
        return cls(POWER_SUM, {lam: Fraction(coeff)})

    @property
    def degree(self) -> int:
        return max((size(k) for k in self.terms), default=0)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        other = _to_basis(other, self.basis)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(self.basis, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        return SymFunc(self.basis, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            other = _to_basis(other, self.basis)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def to_json(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: partition_sort_key(kv[0]))
        return json.dumps(
            {"basis": self.basis, "terms": [[format_partition(k), format_rat(v)] for k, v in items]}
        )

    @classmethod
    def from_json(cls, text: str) -> "SymFunc":
        data = json.loads(text)
        return cls(data["basis"], {parse_partition(k): parse_rat(v) for k, v in data["terms"]})


def _distinct_arrangements(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    if not parts:
        return [()]
    out = []
    for value in sorted(set(parts), reverse=True):
        rest = list(parts)
        rest.remove(value)
        out.extend((value,) + tail for tail in _distinct_arrangements(tuple(rest)))
    return out


@cache
def monomial_structure_constants(sigma: Partition, tau: Partition) -> dict[Partition, int]:
    """Coefficients ``c`` with ``m_sigma * m_tau = sum_rho c[rho] m_rho``.

    Multiplies out in ``len(sigma) + len(tau)`` variables and reads off the
    coefficients of the dominant (weakly decreasing) exponent vectors.
    """
    k = len(sigma) + len(tau)
    alphas = _distinct_arrangements(tuple(sigma) + (0,) * (k - len(sigma)))
    betas = _distinct_arrangements(tuple(tau) + (0,) * (k - len(tau)))
    out: dict[Partition, int] = {}
    for alpha in alphas:
        for beta in betas:
            vec = [x + y for x, y in zip(alpha, beta)]
            if all(vec[i] >= vec[i + 1] for i in range(k - 1)):
                rho = make_partition(vec)
                out[rho] = out.get(rho, 0) + 1
    return out


def _check_degree(deg: int, max_degree: int) -> None:
    if deg > max_degree:
        raise DegreeBoundError(f"degree {deg} exceeds table bound {max_degree}")


@cache
def _power_in_monomials(lam: Partition) -> dict[Partition, int]:
    """``p_lam`` expanded in the monomial basis."""
    if not lam:
        return {EMPTY: 1}
    head, rest = lam[0], lam[1:]
    out: dict[Partition, int] = {}
    for mu, c in _power_in_monomials(rest).items():
        for rho, d in monomial_structure_constants((head,), mu).items():
            out[rho] = out.get(rho, 0) + c * d
    return out


@cache
def _monomial_in_powers(lam: Partition) -> dict[Partition, Fraction]:
    """``m_lam`` expanded in the power-sum basis.

    ``p_lam = prod(m_i!) m_lam + (terms m_mu with mu strictly dominating lam)``,
    and every such mu precedes lam in reverse lexicographic order, so this
    back-substitution terminates.
    """
    expansion = _power_in_monomials(lam)
    lead = expansion[lam]
    out: dict[Partition, Fraction] = {lam: Fraction(1, lead)}
    for mu, c in expansion.items():
        if mu == lam:
            continue
        for nu, d in _monomial_in_powers(mu).items():
            out[nu] = out.get(nu, 0) - Fraction(c, lead) * d
    return {k: v for k, v in out.items() if v}


def m_to_p(f: SymFunc, max_degree: int = BASIS_MAX_DEGREE) -> SymFunc:
    if f.basis == POWER_SUM:
        return f
    _check_degree(f.degree, max_degree)
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        for mu, d in _monomial_in_powers(lam).items():
            out[mu] = out.get(mu, 0) + c * d
    return SymFunc(POWER_SUM, out)


def p_to_m(f: SymFunc, max_degree: int = BASIS_MAX_DEGREE) -> SymFunc:
    if f.basis == MONOMIAL:
        return f
    _check_degree(f.degree, max_degree)
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        for mu, d in _power_in_monomials(lam).items():
            out[mu] = out.get(mu, 0) + c * d
    return SymFunc(MONOMIAL, out)


def _to_basis(f: SymFunc, basis: str) -> SymFunc:
    return m_to_p(f) if basis == POWER_SUM else p_to_m(f)


def multiply(f: SymFunc, g: SymFunc, max_degree: int = BASIS_MAX_DEGREE) -> SymFunc:
    """Exact product; the result is in the basis of ``f``."""
    _check_degree(f.degree + g.degree, max_degree)
    g = _to_basis(g, f.basis)
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        for mu, d in g.terms.items():
            if f.basis == POWER_SUM:
                rho = tuple(sorted(lam + mu, reverse=True))
                out[rho] = out.get(rho, 0) + c * d
            else:
                for rho, e in monomial_structure_constants(lam, mu).items():
                    out[rho] = out.get(rho, 0) + c * d * e
    return SymFunc(f.basis, out)


def z(lam: Partition) -> int:
    """``z_lam = prod_i i**m_i * m_i!`` over the part multiplicities ``m_i``."""
    return prod(i**m * factorial(m) for i, m in multiplicities(lam).items())


def _check_theta(theta) -> Fraction:
    theta = Fraction(theta)
    if theta <= 0:
        raise ValueError("theta must be positive")
    return theta


def _power_inner(f: Mapping[Partition, Fraction], g: Mapping[Partition, Fraction], theta: Fraction) -> Fraction:
    if len(g) < len(f):
        f, g = g, f
    total = Fraction(0)
    for lam, c in f.items():
        d = g.get(lam)
        if d:
            total += c * d * z(lam) / theta ** len(lam)
    return total


def inner_product_jack(f: SymFunc, g: SymFunc, theta) -> Fraction:
    """Bilinear form with ``(p_lam, p_mu)_theta = delta_{lam,mu} z_lam theta**-len(lam)``."""
    theta = _check_theta(theta)
    return _power_inner(m_to_p(f).terms, m_to_p(g).terms, theta)


def p1_power(k: int) -> SymFunc:
    return SymFunc.power((1,) * k)


class JackTable:
    """Jack P functions (monic in ``m_lam``) and their norms up to ``max_degree``.

    ``Q_lam = P_lam / norms[lam]`` so that ``(P_lam, Q_mu)_theta`` is the
    Kronecker delta.
    """

    def __init__(self, theta, max_degree: int = DEFAULT_JACK_DEGREE):
        self.theta = _check_theta(theta)
        self.max_degree = max_degree
        _check_degree(max_degree, BASIS_MAX_DEGREE)
        self.P: dict[Partition, SymFunc] = {}
        self.norms: dict[Partition, Fraction] = {}
        self._P_power: dict[Partition, dict[Partition, Fraction]] = {}
        for n in range(max_degree + 1):
            self._build_degree(n)

    def _build_degree(self, n: int) -> None:
        theta = self.theta
        done: list[Partition] = []
        # Increasing lexicographic order is a linear extension of dominance.
        for lam in reversed(enumerate_partitions(n)):
            mono: dict[Partition, Fraction] = {lam: Fraction(1)}
            power = dict(_monomial_in_powers(lam))
            m_lam_power = power.copy()
            for mu in done:
                coeff = _power_inner(m_lam_power, self._P_power[mu], theta) / self.norms[mu]
                if not coeff:
                    continue
                for nu, c in self.P[mu].terms.items():
                    mono[nu] = mono.get(nu, 0) - coeff * c
                for nu, c in self._P_power[mu].items():
                    power[nu] = power.get(nu, 0) - coeff * c
            power = {k: v for k, v in power.items() if v}
            self.P[lam] = SymFunc(MONOMIAL, mono)
            self._P_power[lam] = power
            self.norms[lam] = _power_inner(power, power, theta)
            done.append(lam)

    def _require(self, lam: Partition) -> None:
        if size(lam) > self.max_degree:
            raise DegreeBoundError(f"|{lam}| = {size(lam)} exceeds Jack table degree {self.max_degree}")

    def P_power(self, lam: Partition) -> SymFunc:
        self._require(lam)
        return SymFunc(POWER_SUM, self._P_power[lam])

    def Q(self, lam: Partition) -> SymFunc:
        self._require(lam)
        return self.P[lam].scale(1 / self.norms[lam])

    def _p1_pairing(self, mu: Partition, lam: Partition) -> Fraction:
        """``(p_1**(|lam|-|mu|) P_mu, P_lam)_theta``; zero when ``|mu| > |lam|``."""
        self._require(lam)
        self._require(mu)
        k = size(lam) - size(mu)
        if k < 0:
            return Fraction(0)
        target = self._P_power[lam]
        total = Fraction(0)
        for nu, c in self._P_power[mu].items():
            rho = nu + (1,) * k
            d = target.get(rho)
            if d:
                total += c * d * z(rho) / self.theta ** len(rho)
        return total

    def dim(self, lam: Partition) -> Fraction:
        """``(p_1**n, Q_lam)_theta``."""
        return self._p1_pairing(EMPTY, lam) / self.norms[lam]

    def dim_prime(self, lam: Partition) -> Fraction:
        """``(p_1**n, P_lam)_theta``."""
        return self._p1_pairing(EMPTY, lam)

    def dim_skew(self, mu: Partition, lam: Partition) -> Fraction:
        """``(p_1**(|lam|-|mu|) P_mu, Q_lam)_theta``."""
        if size(mu) > size(lam):
            return Fraction(0)
        return self._p1_pairing(mu, lam) / self.norms[lam]

    def dim_prime_skew(self, mu: Partition, lam: Partition) -> Fraction:
        """``(p_1**(|lam|-|mu|) Q_mu, P_lam)_theta``."""
        if size(mu) > size(lam):
            return Fraction(0)
        return self._p1_pairing(mu, lam) / self.norms[mu]

    def kappa(self, mu: Partition, nu: Partition) -> Fraction:
        """Pieri edge multiplicity ``(p_1 P_mu, Q_nu)_theta`` for ``nu`` covering ``mu``."""
        if nu not in addable_boxes(mu):
            raise ValueError(f"{nu} is not obtained from {mu} by adding one box")
        return self.dim_skew(mu, nu)


@cache
def build_jack_table(theta, max_degree: int = DEFAULT_JACK_DEGREE) -> JackTable:
    """Cached ``JackTable`` for ``theta``; a larger cached table serves smaller requests."""
    return JackTable(theta, max_degree)


def jack_table(theta, min_degree: int) -> JackTable:
    """A cached table covering at least ``min_degree`` (default degree otherwise)."""
    return build_jack_table(Fraction(theta), max(min_degree, DEFAULT_JACK_DEGREE))


def dim_theta(lam: Partition, theta) -> Fraction:
    return jack_table(theta, size(lam)).dim(lam)


def dim_theta_prime(lam: Partition, theta) -> Fraction:
    return jack_table(theta, size(lam)).dim_prime(lam)


def dim_theta_skew(mu: Partition, lam: Partition, theta) -> Fraction:
    return jack_table(theta, max(size(lam), size(mu))).dim_skew(mu, lam)


def dim_theta_prime_skew(mu: Partition, lam: Partition, theta) -> Fraction:
    return jack_table(theta, max(size(lam), size(mu))).dim_prime_skew(mu, lam)


def pieri_kappa(mu: Partition, nu: Partition, theta) -> Fraction:
    return jack_table(theta, size(nu)).kappa(mu, nu)


def evaluate_power_sum(f: SymFunc, power_sums: Mapping[int, Fraction]) -> Fraction:
    """Evaluate ``f`` given the values of ``p_1, p_2, ...`` (keys are the indices)."""
    total = Fraction(0)
    for lam, c in m_to_p(f).terms.items():
        total += c * prod((power_sums[r] for r in lam), start=Fraction(1))
    return total


def evaluate_at(f: SymFunc, values: Iterable) -> Fraction:
    """Evaluate ``f`` at the finite point ``values`` (padded by zeros)."""
    values = [Fraction(v) for v in values]
    needed = {r for lam in m_to_p(f).terms for r in lam}
    sums = {r: sum((v**r for v in values), Fraction(0)) for r in needed}
    return evaluate_power_sum(f, sums)
