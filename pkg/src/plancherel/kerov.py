"""Kerov interlacing coordinates and the functions built from them.

For a diagram drawn in English convention, the inner corners ``(r, s)`` of the
boundary sit at ``(i - 1, lam_i)`` for every row ``i`` that can receive a box,
and the outer corners at ``(i, lam_i)`` for every row ending a block of equal
parts. Both map to the line via ``s - theta * r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .partitions import Partition, addable_boxes


class PoleError(ZeroDivisionError):
    """Evaluation point hits a pole of a rational function of ``u``."""


@dataclass(frozen=True)
class KerovCoords:
    X: tuple[Fraction, ...]
    Y: tuple[Fraction, ...]
    theta: Fraction

    @property
    def d(self) -> int:
        return len(self.X)


def inner_corners(lam: Partition) -> list[tuple[int, int]]:
    rows = list(lam) + [0]
    return [(i, rows[i]) for i in range(len(rows)) if i == 0 or rows[i - 1] > rows[i]]


def outer_corners(lam: Partition) -> list[tuple[int, int]]:
    rows = list(lam) + [0]
    return [(i + 1, rows[i]) for i in range(len(lam)) if rows[i] > rows[i + 1]]


@lru_cache(maxsize=None)
def kerov_coords(lam: Partition, theta=1) -> KerovCoords:
    theta = Fraction(theta)
    X = tuple(s - theta * r for r, s in inner_corners(lam))
    Y = tuple(s - theta * r for r, s in outer_corners(lam))
    return KerovCoords(X, Y, theta)


def frak_p(m: int, lam: Partition, theta=1) -> Fraction:
    """Super power sum ``sum x**m - sum y**m`` of the Kerov coordinates."""
    kc = kerov_coords(lam, theta)
    return sum((x**m for x in kc.X), Fraction(0)) - sum((y**m for y in kc.Y), Fraction(0))


@lru_cache(maxsize=None)
def _h_series(lam: Partition, theta: Fraction, M: int) -> tuple[Fraction, ...]:
    frak = [Fraction(0)] + [frak_p(m, lam, theta) for m in range(1, M + 1)]
    h = [Fraction(1)]
    for m in range(1, M + 1):
        h.append(sum((frak[k] * h[m - k] for k in range(1, m + 1)), Fraction(0)) / m)
    return tuple(h)


def h_series(lam: Partition, theta=1, M: int = 8) -> tuple[Fraction, ...]:
    """Coefficients ``h_0..h_M`` of the expansion of ``H(u; lam)`` in ``1/u``.

    Uses ``m h_m = sum_{k=1..m} frak_k h_{m-k}``, the logarithmic derivative of
    ``H = exp(sum frak_m u**-m / m)``.
    """
    return _h_series(lam, Fraction(theta), M)


def hh_eval(lam: Partition, theta, u) -> Fraction:
    """``u * prod(u - y) / prod(u - x)`` over the Kerov coordinates."""
    kc = kerov_coords(lam, theta)
    u = Fraction(u)
    for i, x in enumerate(kc.X, start=1):
        if u == x:
            raise PoleError(f"u = {u} is the pole x_{i} of H(u; {lam})")
    return u * prod((u - y for y in kc.Y), start=Fraction(1)) / prod(u - x for x in kc.X)


def phi_eval(lam: Partition, theta, u) -> Fraction:
    """``prod_i (u + theta i) / (u - lam_i + theta i)`` over the rows of ``lam``."""
    theta = Fraction(theta)
    u = Fraction(u)
    out = Fraction(1)
    for i, row in enumerate(lam, start=1):
        den = u - row + theta * i
        if den == 0:
            raise PoleError(f"u = {u} is a pole of Phi(u; {lam}) from row i = {i}")
        out *= (u + theta * i) / den
    return out


@dataclass(frozen=True)
class GrowthKernel:
    source: Partition
    targets: tuple[tuple[Partition, Fraction], ...]

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.targets)


@lru_cache(maxsize=None)
def growth_kernel(lam: Partition, theta=1) -> GrowthKernel:
    """Transition probabilities to every ``lam + box``, top row first.

    ``pi_i = prod_j (x_i - y_j) / prod_{l != i} (x_i - x_l)``, the partial
    fraction coefficients of ``prod(u - y) / prod(u - x)``.
    """
    kc = kerov_coords(lam, Fraction(theta))
    probs = []
    for i, x in enumerate(kc.X):
        num = prod((x - y for y in kc.Y), start=Fraction(1))
        den = prod((x - xl for l, xl in enumerate(kc.X) if l != i), start=Fraction(1))
        probs.append(num / den)
    return GrowthKernel(lam, tuple(zip(addable_boxes(lam), probs)))
