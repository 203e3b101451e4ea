"""Regular functions on Young diagrams with certified degree upper bounds.

Every observable is evaluated as ``obs(lam, theta)``. Observables that do not
depend on the Jack parameter ignore ``theta``. ``degree_bound`` is an upper
bound for the filtration degree, which is what the polynomiality checks need.

Spec strings (used by the CLI)::

    expr    := term ('+' term)*
    term    := factor ('*' factor)*
    factor  := INT | '(' expr ')' | 'pstar:'M | 'superp:'M | 'content:p(' R,... ')'
             | 'hpsi:p(' R,... ')' | 'fmu:' PARTITION | 'fmujack:' PARTITION
             | 'h:'M | 'hrho:' PARTITION | 'frak:'M | 'del(' expr ')'

An integer factor scales the term, so ``2*pstar:2+content:p(1)`` is a valid
expression. ``fmu:`` with nothing after it is the empty diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .kerov import frak_p, growth_kernel, h_series
from .partitions import (
    EMPTY,
    Partition,
    contains,
    contents,
    dim_skew,
    dim_standard,
    falling_factorial,
    format_partition,
    frobenius_modified,
    make_partition,
    parse_partition,
    size,
)
from .symfunc import POWER_SUM, SymFunc, evaluate_power_sum, jack_table, m_to_p


class ObservableParseError(ValueError):
    pass


class Observable:
    """Base class; subclasses implement ``evaluate`` and ``degree_bound``."""

    theta_sensitive = False

    def evaluate(self, lam: Partition, theta: Fraction) -> Fraction:
        raise NotImplementedError

    @property
    def degree_bound(self) -> int:
        raise NotImplementedError

    def spec(self) -> str:
        raise NotImplementedError

    def __call__(self, lam: Partition, theta=1) -> Fraction:
        return self.evaluate(tuple(lam), Fraction(theta))

    def __mul__(self, other):
        if isinstance(other, Observable):
            return Product((self, other))
        return Linear(((Fraction(other), self),))

    def __rmul__(self, other):
        return Linear(((Fraction(other), self),))

    def __add__(self, other):
        if not isinstance(other, Observable):
            other = Constant(Fraction(other))
        return Linear(((Fraction(1), self), (Fraction(1), other)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Observable):
            other = Constant(Fraction(other))
        return Linear(((Fraction(1), self), (Fraction(-1), other)))

    def __repr__(self):
        return f"Observable({self.spec()!r})"


@dataclass(frozen=True, repr=False)
class Constant(Observable):
    value: Fraction = Fraction(1)

    def evaluate(self, lam, theta):
        return Fraction(self.value)

    @property
    def degree_bound(self):
        return 0

    def spec(self):
        return str(self.value)


@dataclass(frozen=True, repr=False)
class PStar(Observable):
    """``sum_i (lam_i - theta i)**m - (-theta i)**m``; ``p*_1 = |lam|``."""

    m: int
    theta_sensitive = True

    def evaluate(self, lam, theta):
        m = self.m
        return sum(((row - theta * i) ** m - (-theta * i) ** m for i, row in enumerate(lam, start=1)), Fraction(0))

    @property
    def degree_bound(self):
        return self.m

    def spec(self):
        return f"pstar:{self.m}"


@dataclass(frozen=True, repr=False)
class SuperP(Observable):
    """Super power sum ``sum a_i**m - (-b_i)**m`` of the modified Frobenius coordinates."""

    m: int

    def evaluate(self, lam, theta):
        fc = frobenius_modified(lam)
        m = self.m
        return sum((a**m - (-b) ** m for a, b in zip(fc.a, fc.b)), Fraction(0))

    @property
    def degree_bound(self):
        return self.m

    def spec(self):
        return f"superp:{self.m}"


def _power_sum_bound(f: SymFunc) -> int:
    return max((size(rho) + len(rho) for rho in m_to_p(f).terms), default=0)


def _rho_spec(f: SymFunc) -> str:
    terms = m_to_p(f).terms
    if len(terms) == 1:
        ((rho, c),) = terms.items()
        if c == 1:
            return "p(" + format_partition(rho) + ")"
    return f.to_json()


def theta_contents(lam: Partition, theta) -> list[Fraction]:
    """``(j - 1) - theta (i - 1)`` for every box; the usual contents at ``theta = 1``."""
    theta = Fraction(theta)
    return [(j - 1) - theta * (i - 1) for i, row in enumerate(lam, start=1) for j in range(1, row + 1)]


def content_power_sums(lam: Partition, theta, degrees) -> dict[int, Fraction]:
    cs = contents(lam) if theta == 1 else theta_contents(lam, theta)
    return {r: sum((Fraction(c) ** r for c in cs), Fraction(0)) for r in degrees}


@dataclass(frozen=True, repr=False)
class ContentG(Observable):
    """``phi`` evaluated at the box contents of ``lam`` (padded by zeros).

    Away from ``theta = 1`` the contents are the deformed ones
    ``(j - 1) - theta (i - 1)``, which keeps the function theta-regular.
    """

    phi: SymFunc
    theta_sensitive = True

    def evaluate(self, lam, theta):
        needed = {r for rho in m_to_p(self.phi).terms for r in rho}
        return evaluate_power_sum(self.phi, content_power_sums(lam, theta, needed))

    @property
    def degree_bound(self):
        return _power_sum_bound(self.phi)

    def spec(self):
        return "content:" + _rho_spec(self.phi)


def content_power(r: int) -> Observable:
    """Content power sum ``sum over boxes of c**r``; ``r = 0`` gives ``|lam|``."""
    if r == 0:
        return PStar(1)
    return ContentG(SymFunc.power((r,)))


@dataclass(frozen=True, repr=False)
class HPsi(Observable):
    """``psi(lam_1 + theta(n-1), lam_2 + theta(n-2), ..., lam_n)`` with ``n = |lam|``."""

    psi: SymFunc
    theta_sensitive = True

    def evaluate(self, lam, theta):
        n = size(lam)
        rows = list(lam) + [0] * (n - len(lam))
        values = [Fraction(rows[i - 1]) + theta * (n - i) for i in range(1, n + 1)]
        needed = {r for rho in m_to_p(self.psi).terms for r in rho}
        sums = {r: sum((v**r for v in values), Fraction(0)) for r in needed}
        return evaluate_power_sum(self.psi, sums)

    @property
    def degree_bound(self):
        return _power_sum_bound(self.psi)

    def spec(self):
        return "hpsi:" + _rho_spec(self.psi)


@dataclass(frozen=True, repr=False)
class FMu(Observable):
    """``n^(m falling) dim(mu, lam) / dim lam``."""

    mu: Partition

    def evaluate(self, lam, theta):
        n, m = size(lam), size(self.mu)
        if n < m or not contains(self.mu, lam):
            return Fraction(0)
        return Fraction(falling_factorial(n, m) * dim_skew(self.mu, lam), dim_standard(lam))

    @property
    def degree_bound(self):
        return size(self.mu)

    def spec(self):
        return "fmu:" + format_partition(self.mu)


@dataclass(frozen=True, repr=False)
class FMuJack(Observable):
    """``n^(m falling) dim_theta(mu, lam) / dim_theta lam``; needs a Jack table of degree ``|lam|``."""

    mu: Partition
    theta_sensitive = True

    def evaluate(self, lam, theta):
        n, m = size(lam), size(self.mu)
        if n < m or not contains(self.mu, lam):
            return Fraction(0)
        table = jack_table(theta, n)
        return falling_factorial(n, m) * table.dim_skew(self.mu, lam) / table.dim(lam)

    @property
    def degree_bound(self):
        return size(self.mu)

    def spec(self):
        return "fmujack:" + format_partition(self.mu)


def _h_bound(m: int) -> int:
    return m - 1 if m >= 2 else 0


@dataclass(frozen=True, repr=False)
class HCoeff(Observable):
    """Coefficient of ``u**-m`` in ``H(u; lam)``."""

    m: int
    theta_sensitive = True

    def evaluate(self, lam, theta):
        return h_series(lam, theta, self.m)[self.m]

    @property
    def degree_bound(self):
        return _h_bound(self.m)

    def spec(self):
        return f"h:{self.m}"


@dataclass(frozen=True, repr=False)
class HProd(Observable):
    """``h_rho = h_rho1 h_rho2 ...``; identically zero when ``rho`` has a part 1."""

    rho: Partition
    theta_sensitive = True

    def evaluate(self, lam, theta):
        if not self.rho:
            return Fraction(1)
        h = h_series(lam, theta, self.rho[0])
        return prod((h[r] for r in self.rho), start=Fraction(1))

    @property
    def degree_bound(self):
        return size(self.rho) - len(self.rho)

    def spec(self):
        return "hrho:" + format_partition(self.rho)


@dataclass(frozen=True, repr=False)
class Frak(Observable):
    """``sum x_i**m - sum y_j**m`` over the Kerov coordinates."""

    m: int
    theta_sensitive = True

    def evaluate(self, lam, theta):
        return frak_p(self.m, lam, theta)

    @property
    def degree_bound(self):
        return _h_bound(self.m)

    def spec(self):
        return f"frak:{self.m}"


@dataclass(frozen=True, repr=False)
class Product(Observable):
    factors: tuple[Observable, ...]

    @property
    def theta_sensitive(self):
        return any(f.theta_sensitive for f in self.factors)

    def evaluate(self, lam, theta):
        out = Fraction(1)
        for f in self.factors:
            out *= f.evaluate(lam, theta)
            if not out:
                break
        return out

    @property
    def degree_bound(self):
        return sum(f.degree_bound for f in self.factors)

    def spec(self):
        return "*".join(_wrap(f) for f in self.factors) or "1"


@dataclass(frozen=True, repr=False)
class Linear(Observable):
    terms: tuple[tuple[Fraction, Observable], ...]

    @property
    def theta_sensitive(self):
        return any(o.theta_sensitive for _, o in self.terms)

    def evaluate(self, lam, theta):
        return sum((c * o.evaluate(lam, theta) for c, o in self.terms if c), Fraction(0))

    @property
    def degree_bound(self):
        return max((o.degree_bound for c, o in self.terms if c), default=0)

    def spec(self):
        parts = []
        for c, o in self.terms:
            parts.append(_wrap(o) if c == 1 else f"{c}*{_wrap(o)}")
        return "+".join(parts) or "0"


@dataclass(frozen=True, repr=False)
class DelApplied(Observable):
    """``(del F)(lam) = -F(lam) + sum_nu p_up(lam, nu) F(nu)``."""

    inner: Observable
    theta_sensitive = True

    def evaluate(self, lam, theta):
        kernel = growth_kernel(lam, theta)
        total = -self.inner.evaluate(lam, theta)
        for nu, prob in kernel.targets:
            total += prob * self.inner.evaluate(nu, theta)
        return total

    @property
    def degree_bound(self):
        return max(self.inner.degree_bound - 1, 0)

    def spec(self):
        return f"del({self.inner.spec()})"


def del_operator(obs: Observable) -> Observable:
    return DelApplied(obs)


def _wrap(obs: Observable) -> str:
    text = obs.spec()
    if isinstance(obs, Linear) and len(obs.terms) > 1:
        return "(" + text + ")"
    return text


def degree_bound(obs: Observable) -> int:
    return obs.degree_bound


# ---------------------------------------------------------------- parsing

_ATOM_INT = re.compile(r"[+-]?\d+$")


def _int_arg(token: str, value: str) -> int:
    if not re.fullmatch(r"\d+", value):
        raise ObservableParseError(f"expected a nonnegative integer in {token!r}")
    return int(value)


def _positive_arg(token: str, value: str) -> int:
    m = _int_arg(token, value)
    if m < 1:
        raise ObservableParseError(f"index must be at least 1 in {token!r}")
    return m


def _partition_arg(token: str, value: str) -> Partition:
    try:
        return parse_partition(value)
    except ValueError as exc:
        raise ObservableParseError(f"bad partition in {token!r}") from exc


def _psum_arg(token: str, value: str) -> SymFunc:
    m = re.fullmatch(r"p\(([\d,\s]*)\)", value)
    if not m:
        raise ObservableParseError(f"expected p(r1,r2,...) in {token!r}")
    try:
        rs = [int(t) for t in m.group(1).split(",") if t.strip()]
    except ValueError as exc:
        raise ObservableParseError(f"bad index list in {token!r}") from exc
    if any(r < 1 for r in rs):
        raise ObservableParseError(f"power-sum indices must be at least 1 in {token!r}")
    return SymFunc(POWER_SUM, {tuple(sorted(rs, reverse=True)): 1})


def _parse_atom(token: str) -> Observable:
    if _ATOM_INT.match(token):
        return Constant(Fraction(int(token)))
    name, sep, arg = token.partition(":")
    if not sep:
        raise ObservableParseError(f"unknown observable token {token!r}")
    if name == "pstar":
        return PStar(_positive_arg(token, arg))
    if name == "superp":
        return SuperP(_positive_arg(token, arg))
    if name == "content":
        return ContentG(_psum_arg(token, arg))
    if name == "hpsi":
        return HPsi(_psum_arg(token, arg))
    if name == "fmu":
        return FMu(_partition_arg(token, arg))
    if name == "fmujack":
        return FMuJack(_partition_arg(token, arg))
    if name == "h":
        return HCoeff(_int_arg(token, arg))
    if name == "hrho":
        return HProd(_partition_arg(token, arg))
    if name == "frak":
        return Frak(_positive_arg(token, arg))
    raise ObservableParseError(f"unknown observable token {token!r}")


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ObservableParseError(f"unbalanced ')' in {text!r}")
        elif ch == sep and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    if depth:
        raise ObservableParseError(f"unbalanced '(' in {text!r}")
    parts.append(text[start:])
    return parts


def _parse_factor(token: str) -> Observable:
    token = token.strip()
    if not token:
        raise ObservableParseError("empty token")
    if token.startswith("del(") and token.endswith(")"):
        return DelApplied(_parse_expr(token[4:-1]))
    if token.startswith("(") and token.endswith(")"):
        return _parse_expr(token[1:-1])
    return _parse_atom(token)


def _parse_term(text: str) -> tuple[Fraction, Observable]:
    coeff = Fraction(1)
    factors: list[Observable] = []
    for tok in _split_top(text, "*"):
        atom = _parse_factor(tok)
        if isinstance(atom, Constant):
            coeff *= atom.value
        else:
            factors.append(atom)
    if not factors:
        return coeff, Constant(Fraction(1))
    return coeff, factors[0] if len(factors) == 1 else Product(tuple(factors))


def _parse_expr(text: str) -> Observable:
    terms = [_parse_term(t) for t in _split_top(text, "+")]
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return Linear(tuple(terms))


def parse_observable(text: str) -> Observable:
    """Parse an observable spec string; errors name the offending token."""
    if not text or not text.strip():
        raise ObservableParseError("empty observable spec")
    return _parse_expr(text.replace(" ", ""))


def constant_one() -> Observable:
    return Constant(Fraction(1))
