"""Young diagrams and their combinatorial statistics.

A partition is a plain tuple of positive integers in weakly decreasing order;
the empty tuple is the empty diagram. Boxes are indexed ``(i, j)`` with
1-based row ``i`` and column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]

EMPTY: Partition = ()


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return them as a canonical partition tuple.

    Trailing zeros are dropped. Raises ``ValueError`` if the parts are
    negative or not weakly decreasing.
    """
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {parts!r}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated form, e.g. ``"3,3,1"``; ``""`` is the empty diagram."""
    text = text.strip().strip("()[]")
    if not text:
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc
    return make_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, e.g. (4), (3,1), (2,2), ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_bounded(n, n))


def size(lam: Partition) -> int:
    return sum(lam)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def boxes(lam: Partition) -> Iterator[tuple[int, int]]:
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


def contents(lam: Partition) -> list[int]:
    """Contents ``j - i`` of all boxes, listed row by row."""
    return [j - i for i, j in boxes(lam)]


def hook_lengths(lam: Partition) -> list[int]:
    conj = transpose(lam)
    return [(lam[i - 1] - j) + (conj[j - 1] - i) + 1 for i, j in boxes(lam)]


def dim_hook(lam: Partition) -> int:
    """Number of standard tableaux via the hook-length formula."""
    return factorial(size(lam)) // prod(hook_lengths(lam))


def removable_boxes(lam: Partition) -> list[Partition]:
    """Diagrams obtained from ``lam`` by deleting one corner box."""
    out = []
    for i, row in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if row > below:
            mu = list(lam)
            mu[i] -= 1
            out.append(make_partition(mu))
    return out


def addable_boxes(lam: Partition) -> list[Partition]:
    """Diagrams obtained by appending one box, top row first.

    The order matches the inner corners of the boundary listed left to right
    along the content axis from largest to smallest.
    """
    out = []
    for i in range(len(lam) + 1):
        row = lam[i] if i < len(lam) else 0
        above = lam[i - 1] if i > 0 else None
        if above is None or above > row:
            nu = list(lam) + [0]
            nu[i] += 1
            out.append(make_partition(nu))
    return out


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff the diagram ``mu`` fits inside ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


@cache
def dim_skew(mu: Partition, lam: Partition) -> int:
    """Number of monotone paths ``mu -> ... -> lam`` in the Young graph."""
    if mu == lam:
        return 1
    if size(mu) >= size(lam) or not contains(mu, lam):
        return 0
    return sum(dim_skew(mu, nu) for nu in removable_boxes(lam))


def dim_paths(lam: Partition) -> int:
    """dim via the recursion ``dim lam = sum of dim mu over mu -> lam``."""
    return dim_skew(EMPTY, lam)


@cache
def dim_standard(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam``.

    Computed twice, by the hook-length formula and by path counting, and the
    two results are required to agree.
    """
    by_hooks = dim_hook(lam)
    by_paths = dim_paths(lam)
    if by_hooks != by_paths:
        raise AssertionError(f"dim mismatch for {lam}: hooks {by_hooks}, paths {by_paths}")
    return by_hooks


@dataclass(frozen=True)
class FrobeniusCoords:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.a)


def frobenius_modified(lam: Partition) -> FrobeniusCoords:
    """Half-integer Frobenius coordinates ``a_i = lam_i - i + 1/2``, ``b_i = lam'_i - i + 1/2``."""
    conj = transpose(lam)
    d = sum(1 for i, row in enumerate(lam, start=1) if row >= i)
    half = Fraction(1, 2)
    a = tuple(lam[i - 1] - i + half for i in range(1, d + 1))
    b = tuple(conj[i - 1] - i + half for i in range(1, d + 1))
    return FrobeniusCoords(a, b)


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order ``lam >= mu`` for partitions of the same size."""
    if size(lam) != size(mu):
        return False
    s_lam = s_mu = 0
    for k in range(max(len(lam), len(mu))):
        s_lam += lam[k] if k < len(lam) else 0
        s_mu += mu[k] if k < len(mu) else 0
        if s_lam < s_mu:
            return False
    return True


def multiplicities(lam: Partition) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    return counts


def falling_factorial(x: int, m: int) -> int:
    return prod(x - k for k in range(m))
