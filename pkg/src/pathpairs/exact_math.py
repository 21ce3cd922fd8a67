"""Binomials, Raney numbers and closed counts of strict k-path pairs.

All arithmetic is on Python integers; nothing here touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from pathpairs.errors import DomainError, RangeError, SplitError


@dataclass(frozen=True)
class StrictQuery:
    """Parameters of one set of strict k-path pairs.

    The lower path has ``(k-1)*n`` steps, the upper path ``epsilon`` fewer,
    and the terminal x-coordinates differ by ``delta``.
    """

    k: int
    n: int
    delta: int
    epsilon: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise DomainError(f"k must be >= 2, got {self.k}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if self.delta < 0 or self.epsilon < 0:
            raise DomainError(
                f"delta and epsilon must be non-negative, got {self.delta}, {self.epsilon}"
            )

    @property
    def in_domain(self) -> bool:
        return 1 <= self.delta <= self.n and self.epsilon <= (self.k - 1) * self.n


@dataclass(frozen=True)
class EpsilonSplit:
    """A decomposition ``epsilon = (k-1)*epsilon1 + epsilon2``."""

    epsilon1: int
    epsilon2: int

    def __post_init__(self) -> None:
        if self.epsilon1 < 0 or self.epsilon2 < 0:
            raise SplitError(f"split parts must be non-negative: {self}")

    def total(self, k: int) -> int:
        return (k - 1) * self.epsilon1 + self.epsilon2


def binomial(a: int, b: int) -> int:
    """C(a, b), with 0 whenever b < 0, b > a or a < 0."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def raney_coefficient(k: int, r: int, n: int) -> int:
    """Coefficient of t^n in C_k(t)^r, i.e. r/(kn+r) * C(kn+r, n)."""
    if k < 2 or r < 1 or n < 0:
        raise DomainError(f"raney_coefficient needs k >= 2, r >= 1, n >= 0; got {k}, {r}, {n}")
    top = k * n + r
    numerator = r * math.comb(top, n)
    value, rest = divmod(numerator, top)
    assert rest == 0, f"inexact Raney division at k={k}, r={r}, n={n}"
    return value


def strict_count_formula(q: StrictQuery) -> int:
    """Closed count valid for ``0 <= epsilon <= (k-1)*delta``.

    Out-of-domain queries denote empty sets and give 0.
    """
    if not q.in_domain:
        return 0
    if q.epsilon > (q.k - 1) * q.delta:
        raise RangeError(
            f"closed formula needs epsilon <= (k-1)*delta = {(q.k - 1) * q.delta}, "
            f"got epsilon={q.epsilon}; use strict_count_general"
        )
    return raney_coefficient(q.k, q.k * q.delta - q.epsilon, q.n - q.delta)


def canonical_split(q: StrictQuery) -> EpsilonSplit:
    """The split with ``epsilon2 < k-1`` unless that would need ``epsilon1 = n``."""
    e2 = q.epsilon % (q.k - 1)
    e1 = (q.epsilon - e2) // (q.k - 1)
    if e1 > q.n - 1:
        # only reachable at epsilon == (k-1)*n
        e1, e2 = q.n - 1, q.k - 1
    return EpsilonSplit(e1, e2)


def strict_count_general(
    q: StrictQuery, split: Union[EpsilonSplit, str] = "canonical"
) -> int:
    """Count strict k-path pairs for any epsilon by peeling whole blocks off the lower path.

    The lower path is cut after ``n - epsilon1`` blocks; each pair of the
    shorter set at distance ``i`` extends in ``C(epsilon1, delta - i)`` ways.
    Any split with ``epsilon1 <= n - 1`` is accepted. Inner terms use the
    closed formula when it applies and recurse on the canonical split
    otherwise (only possible for splits with ``epsilon2 > k - 1``).
    """
    if split == "canonical":
        if not q.in_domain:
            return 0
        split = canonical_split(q)
    elif not isinstance(split, EpsilonSplit):
        raise SplitError(f"unknown split {split!r}")
    if split.total(q.k) != q.epsilon:
        raise SplitError(
            f"(k-1)*epsilon1 + epsilon2 = {split.total(q.k)} does not equal epsilon = {q.epsilon}"
        )
    if split.epsilon1 > q.n - 1:
        raise SplitError(f"epsilon1 must be <= n-1 = {q.n - 1}, got {split.epsilon1}")
    if not q.in_domain:
        return 0

    e1, e2 = split.epsilon1, split.epsilon2
    inner_n = q.n - e1
    total = 0
    for i in range(1, min(q.delta, inner_n) + 1):
        weight = binomial(e1, q.delta - i)
        if not weight:
            continue
        inner = StrictQuery(q.k, inner_n, i, e2)
        if e2 <= (q.k - 1) * i:
            count = strict_count_formula(inner)
        else:
            count = strict_count_general(inner)
        total += weight * count
    return total


def strict_count(q: StrictQuery) -> int:
    """Closed formula where it is valid, general decomposition elsewhere."""
    if q.in_domain and q.epsilon <= (q.k - 1) * q.delta:
        return strict_count_formula(q)
    return strict_count_general(q)
