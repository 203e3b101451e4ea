"""Named verification suites run by ``plancherel verify``.

Each suite yields ``Case`` records at its desk-scale defaults; ``thetas`` and
``n_max`` narrow or widen them.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

import numpy as np

from .kerov import PoleError, growth_kernel, h_series, hh_eval, kerov_coords, phi_eval
from .measures import growth_marginal, jack_plancherel_direct, plancherel
from .observables import ContentG, Frak, HProd, HPsi, Observable, Product
from .partitions import dim_standard, enumerate_partitions, format_partition, size, transpose
from .polycheck import a_coefficients, check_identity_6E, check_polynomiality, verify_closed_forms
from .symfunc import POWER_SUM, SymFunc, format_rat


@dataclass(frozen=True)
class Case:
    name: str
    ok: bool
    detail: str = ""


def _fmt_theta(theta) -> str:
    return format_rat(Fraction(theta))


def _lam(lam) -> str:
    return "(" + format_partition(lam) + ")"


def stanley(thetas=None, n_max=None) -> Iterator[Case]:
    n_max = 8 if n_max is None else n_max
    for m in range(5):
        for mu in enumerate_partitions(m):
            rep = verify_closed_forms(mu, 1, n_max)
            bad = rep.first_mismatch()
            detail = "" if rep.ok else f"n={bad}: average {rep.averages[bad]} != {rep.expected[bad]}"
            yield Case(f"F_{_lam(mu)} n<={n_max}", rep.ok, detail)


def jack_closed_form(thetas=None, n_max=None) -> Iterator[Case]:
    n_max = 7 if n_max is None else n_max
    for theta in thetas or (Fraction(1, 2), 1, 2, Fraction(3, 5)):
        for m in range(4):
            for mu in enumerate_partitions(m):
                rep = verify_closed_forms(mu, theta, n_max, jack=True)
                bad = rep.first_mismatch()
                detail = "" if rep.ok else f"n={bad}: average {rep.averages[bad]} != {rep.expected[bad]}"
                yield Case(f"F_{_lam(mu)};theta={_fmt_theta(theta)} n<={n_max}", rep.ok, detail)


def _power(rho) -> SymFunc:
    return SymFunc(POWER_SUM, {tuple(rho): 1})


def _nonempty_partitions(max_size: int):
    for k in range(1, max_size + 1):
        yield from enumerate_partitions(k)


def polynomiality_observables() -> list[Observable]:
    """Content products, G*H products, h_rho and frak_m at the desk-scale bounds."""
    out: list[Observable] = []
    for rho in _nonempty_partitions(6):
        if size(rho) + len(rho) <= 6:
            out.append(ContentG(_power(rho)))
    for rho in _nonempty_partitions(6):
        for sigma in _nonempty_partitions(6):
            if size(rho) + len(rho) + size(sigma) + len(sigma) <= 6:
                out.append(Product((ContentG(_power(rho)), HPsi(_power(sigma)))))
    for rho in _nonempty_partitions(6):
        if min(rho) >= 2 and size(rho) - len(rho) <= 3:
            out.append(HProd(rho))
    out.extend(Frak(m) for m in range(1, 6))
    return out


def polynomiality(thetas=None, n_max=None) -> Iterator[Case]:
    for theta in thetas or (Fraction(1, 2), 1, 2):
        for obs in polynomiality_observables():
            top = n_max if n_max is not None and n_max >= obs.degree_bound + 2 else None
            rep = check_polynomiality(obs, theta, top)
            detail = "" if rep else f"nonzero differences {[str(d) for d in rep.differences]}"
            yield Case(f"{obs.spec()} theta={_fmt_theta(theta)} D={rep.degree}", rep.verdict, detail)


def growth_vs_jack(thetas=None, n_max=None) -> Iterator[Case]:
    top = 6 if n_max is None else n_max
    for theta in thetas or (Fraction(1, 3), Fraction(1, 2), 1, 2, 3):
        for n in range(top + 1):
            g, j = growth_marginal(n, theta), jack_plancherel_direct(n, theta)
            ok = g.same_weights(j)
            detail = ""
            if not ok:
                lam = next(l for l in g.weights if g.weights[l] != j.weights.get(l))
                detail = f"{_lam(lam)}: growth {g.weights[lam]} vs jack {j.weights.get(lam)}"
            yield Case(f"growth=jack n={n} theta={_fmt_theta(theta)}", ok, detail)
    if thetas is None or any(Fraction(t) == 1 for t in thetas):
        for n in range(max(top, 8) + 1):
            ok = growth_marginal(n, 1).same_weights(plancherel(n))
            yield Case(f"growth=(dim)^2/n! n={n}", ok)


def seeded_rationals(seed: int, count: int, avoid=()) -> list[Fraction]:
    """``count`` reproducible rationals, skipping anything in ``avoid``."""
    rng = np.random.Generator(np.random.PCG64(seed))
    avoid = set(avoid)
    out: list[Fraction] = []
    while len(out) < count:
        num = int(rng.integers(-2000, 2001))
        den = int(rng.integers(1, 98))
        u = Fraction(num, den)
        if u not in avoid:
            out.append(u)
    return out


def phi_poles(lam, theta) -> set[Fraction]:
    """Points where ``H(u)``, ``Phi(u)``, ``Phi(u - theta)`` blow up or ``Phi(u)`` vanishes."""
    theta = Fraction(theta)
    bad = set(kerov_coords(lam, theta).X)
    for i, row in enumerate(lam, start=1):
        bad.add(row - theta * i)
        bad.add(row - theta * i + theta)
        bad.add(-theta * i)
    return bad


def kerov_identities(thetas=None, n_max=None) -> Iterator[Case]:
    thetas = thetas or (Fraction(1, 3), Fraction(1, 2), 1, 2, 3)
    kernel_top = 8 if n_max is None else n_max
    ident_top = 6 if n_max is None else n_max
    for theta in thetas:
        theta = Fraction(theta)
        bad_rows = []
        for n in range(kernel_top + 1):
            for lam in enumerate_partitions(n):
                probs = [p for _, p in growth_kernel(lam, theta).targets]
                if sum(probs) != 1 or min(probs) <= 0:
                    bad_rows.append(lam)
        yield Case(
            f"kernel rows positive, sum 1, |lam|<={kernel_top} theta={_fmt_theta(theta)}",
            not bad_rows,
            f"first bad row {_lam(bad_rows[0])}" if bad_rows else "",
        )
        bad_fund = None
        for n in range(ident_top + 1):
            for lam in enumerate_partitions(n):
                kc = kerov_coords(lam, theta)
                h = h_series(lam, theta, 8)
                probs = [p for _, p in growth_kernel(lam, theta).targets]
                for m in range(9):
                    if sum((p * x**m for p, x in zip(probs, kc.X)), Fraction(0)) != h[m]:
                        bad_fund = bad_fund or (lam, m)
        yield Case(
            f"sum pi_i x_i^m = h_m, m<=8, |lam|<={ident_top} theta={_fmt_theta(theta)}",
            bad_fund is None,
            f"{_lam(bad_fund[0])} m={bad_fund[1]}" if bad_fund else "",
        )
        bad_ratio = None
        for n in range(ident_top + 1):
            for lam in enumerate_partitions(n):
                for u in seeded_rationals(case_seed(lam, theta), 20, phi_poles(lam, theta)):
                    try:
                        ok = hh_eval(lam, theta, u) * phi_eval(lam, theta, u) == phi_eval(lam, theta, u - theta)
                    except PoleError:
                        ok = False
                    if not ok:
                        bad_ratio = bad_ratio or (lam, u)
        yield Case(
            f"H(u) Phi(u) = Phi(u-theta), 20 u per lam, |lam|<={ident_top} theta={_fmt_theta(theta)}",
            bad_ratio is None,
            f"{_lam(bad_ratio[0])} u={bad_ratio[1]}" if bad_ratio else "",
        )


def case_seed(lam, theta) -> int:
    # crc32 rather than hash(): must be stable across processes.
    return zlib.crc32(f"{format_partition(lam)}|{Fraction(theta)}".encode())


def del_identity(thetas=None, n_max=None) -> Iterator[Case]:
    n_max = 5 if n_max is None else n_max
    for theta in thetas or (1, Fraction(1, 2), 2):
        theta = Fraction(theta)
        table = a_coefficients(theta, 8)
        a = table.a
        ok = (
            a[0] == (1,)
            and a[1] == ()
            and a[2] == (theta,)
            and a[3] == (theta * (1 - theta), 2 * theta)
        )
        yield Case(f"a_0..a_3 theta={_fmt_theta(theta)}", ok, "" if ok else f"a = {a[:4]}")
        for rho in _nonempty_partitions(6):
            if min(rho) < 2:
                continue
            rep = check_identity_6E(rho, theta, n_max)
            detail = "" if rep else f"at {_lam(rep.counterexample)}: lhs {rep.lhs} rhs {rep.rhs}"
            yield Case(f"(1+del)h_{_lam(rho)} theta={_fmt_theta(theta)} n<={n_max}", rep.ok, detail)


def duality(thetas=None, n_max=None) -> Iterator[Case]:
    n_max = 6 if n_max is None else n_max
    for theta in thetas or (Fraction(1, 2), 2, Fraction(1, 3), 3):
        theta = Fraction(theta)
        for n in range(n_max + 1):
            a, b = jack_plancherel_direct(n, theta), jack_plancherel_direct(n, 1 / theta)
            bad = [lam for lam in a.weights if a.weights[lam] != b.weights[transpose(lam)]]
            yield Case(
                f"M_theta(lam') = M_1/theta(lam) n={n} theta={_fmt_theta(theta)}",
                not bad,
                f"at {_lam(bad[0])}" if bad else "",
            )


SUITES: dict[str, Callable[..., Iterator[Case]]] = {
    "stanley": stanley,
    "jack-closed-form": jack_closed_form,
    "polynomiality": polynomiality,
    "growth-vs-jack": growth_vs_jack,
    "kerov-identities": kerov_identities,
    "del-identity": del_identity,
    "duality": duality,
}


def plancherel_normalization(n_max: int = 12) -> Iterator[Case]:
    for n in range(n_max + 1):
        total = sum(dim_standard(lam) ** 2 for lam in enumerate_partitions(n))
        yield Case(f"sum dim^2 = {n}!", total == factorial(n))
