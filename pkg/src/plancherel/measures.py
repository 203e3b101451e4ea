"""Plancherel and Jack-Plancherel measures, the growth chain, and exact averages.

The Jack-Plancherel measure is built two independent ways: directly from the
Jack table (``jack-direct``) and as the level-``n`` marginal of the Kerov
growth chain (``growth``). At ``theta = 1`` there is also the classical
``(dim lam)**2 / n!`` (``plancherel``).
"""

from __future__ import annotations

import csv
import io
import json
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, factorial
from typing import Mapping

import numpy as np

from .kerov import GrowthKernel, growth_kernel
from .observables import Observable, del_operator
from .partitions import EMPTY, Partition, dim_standard, enumerate_partitions, format_partition, parse_partition
from .symfunc import format_rat, jack_table, parse_rat, partition_sort_key

PLANCHEREL = "plancherel"
JACK_DIRECT = "jack-direct"
GROWTH = "growth"
SOURCES = (PLANCHEREL, JACK_DIRECT, GROWTH)

_DRAW_BITS = 64
_DRAW_SCALE = 1 << _DRAW_BITS

__all__ = [
    "GROWTH",
    "GrowthKernel",
    "JACK_DIRECT",
    "MeasureTable",
    "PLANCHEREL",
    "SOURCES",
    "average",
    "del_operator",
    "growth_kernel",
    "growth_marginal",
    "jack_plancherel_direct",
    "measure",
    "plancherel",
    "sample_final_diagrams",
    "sample_trajectory",
]


@dataclass(frozen=True)
class MeasureTable:
    n: int
    theta: Fraction
    weights: Mapping[Partition, Fraction]
    provenance: str

    def __post_init__(self):
        total = sum(self.weights.values(), Fraction(0))
        if total != 1:
            raise AssertionError(f"{self.provenance} measure at n={self.n} sums to {total}")
        if any(w <= 0 for w in self.weights.values()):
            raise AssertionError(f"{self.provenance} measure at n={self.n} has a nonpositive weight")

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.weights[lam]

    def items(self):
        return sorted(self.weights.items(), key=lambda kv: partition_sort_key(kv[0]))

    def same_weights(self, other: "MeasureTable") -> bool:
        return dict(self.weights) == dict(other.weights)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "theta": format_rat(self.theta),
            "weights": [[format_partition(lam), format_rat(w)] for lam, w in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "theta", "partition", "weight"])
        for lam, w in self.items():
            writer.writerow([self.n, format_rat(self.theta), format_partition(lam), format_rat(w)])
        return buf.getvalue()

    @classmethod
    def from_json(cls, text: str, provenance: str = JACK_DIRECT) -> "MeasureTable":
        data = json.loads(text)
        weights = {parse_partition(k): parse_rat(v) for k, v in data["weights"]}
        return cls(int(data["n"]), parse_rat(data["theta"]), weights, provenance)


@lru_cache(maxsize=None)
def plancherel(n: int) -> MeasureTable:
    nfact = factorial(n)
    weights = {lam: Fraction(dim_standard(lam) ** 2, nfact) for lam in enumerate_partitions(n)}
    return MeasureTable(n, Fraction(1), weights, PLANCHEREL)


@lru_cache(maxsize=None)
def jack_plancherel_direct(n: int, theta) -> MeasureTable:
    """``theta**n dim_theta(lam) dim'_theta(lam) / n!`` from the Jack table."""
    theta = Fraction(theta)
    table = jack_table(theta, n)
    scale = theta**n / factorial(n)
    weights = {lam: scale * table.dim(lam) * table.dim_prime(lam) for lam in enumerate_partitions(n)}
    return MeasureTable(n, theta, weights, JACK_DIRECT)


@lru_cache(maxsize=None)
def growth_marginal(n: int, theta) -> MeasureTable:
    """Level-``n`` marginal of the growth chain started at the empty diagram."""
    theta = Fraction(theta)
    if n == 0:
        return MeasureTable(0, theta, {EMPTY: Fraction(1)}, GROWTH)
    prev = growth_marginal(n - 1, theta)
    weights: dict[Partition, Fraction] = {}
    for lam, w in prev.weights.items():
        for nu, prob in growth_kernel(lam, theta).targets:
            weights[nu] = weights.get(nu, 0) + w * prob
    return MeasureTable(n, theta, weights, GROWTH)


def default_source(theta) -> str:
    return PLANCHEREL if Fraction(theta) == 1 else GROWTH


def measure(n: int, theta=1, source: str | None = None) -> MeasureTable:
    theta = Fraction(theta)
    source = source or default_source(theta)
    if source == PLANCHEREL:
        if theta != 1:
            raise ValueError("the plancherel source is only defined at theta = 1")
        return plancherel(n)
    if source == JACK_DIRECT:
        return jack_plancherel_direct(n, theta)
    if source == GROWTH:
        return growth_marginal(n, theta)
    raise ValueError(f"unknown measure source {source!r}")


def average(obs: Observable, n: int, theta=1, source: str | None = None) -> Fraction:
    """Exact expectation of ``obs`` over diagrams with ``n`` boxes."""
    theta = Fraction(theta)
    table = measure(n, theta, source)
    return sum((w * obs.evaluate(lam, theta) for lam, w in table.weights.items()), Fraction(0))


@lru_cache(maxsize=None)
def _thresholds(lam: Partition, theta: Fraction) -> tuple[tuple[int, ...], tuple[Partition, ...]]:
    # Draw U uniform on [0, 2**64) picks target k iff U < ceil(cum_k * 2**64),
    # which is exactly U / 2**64 < cum_k.
    kernel = growth_kernel(lam, theta)
    cum = Fraction(0)
    bounds = []
    for _, prob in kernel.targets:
        cum += prob
        bounds.append(ceil(cum * _DRAW_SCALE))
    return tuple(bounds), tuple(nu for nu, _ in kernel.targets)


def _trajectory_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(index,))))


def sample_trajectory(n: int, theta=1, seed: int = 0, index: int = 0) -> list[Partition]:
    """One monotone path of length ``n`` from the empty diagram.

    Deterministic in ``(seed, index)``; each index gets its own substream.
    """
    theta = Fraction(theta)
    if theta <= 0:
        raise ValueError("theta must be positive")
    draws = _trajectory_rng(seed, index).integers(0, _DRAW_SCALE, size=n, dtype=np.uint64)
    path = [EMPTY]
    lam = EMPTY
    for u in draws.tolist():
        bounds, targets = _thresholds(lam, theta)
        lam = targets[bisect_right(bounds, u)]
        path.append(lam)
    return path


def sample_final_diagrams(n: int, theta=1, seed: int = 0, trajectories: int = 1) -> list[Partition]:
    return [sample_trajectory(n, theta, seed, k)[-1] for k in range(trajectories)]


def empirical_frequencies(samples) -> dict[Partition, Fraction]:
    counts = Counter(samples)
    total = len(samples)
    return {lam: Fraction(c, total) for lam, c in counts.items()}
