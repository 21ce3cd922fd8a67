"""Lattice paths, dominance predicates and exhaustive enumeration of path pairs.

This module is the ground truth the closed formulas are checked against, so
it follows the definitions literally: explicit E/N step strings, explicit
vertex sets, and a depth-first search over upper paths that only prunes
prefixes which provably cannot complete to a valid pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Optional

from pathpairs.errors import DomainError

Point = tuple[int, int]


@dataclass(frozen=True)
class LatticePath:
    """A path from the origin made of unit E and N steps."""

    steps: str = ""

    def __post_init__(self) -> None:
        if not set(self.steps) <= {"E", "N"}:
            raise DomainError(f"paths use only E and N steps, got {self.steps!r}")

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        x = y = 0
        out = [(0, 0)]
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                y += 1
            out.append((x, y))
        return tuple(out)

    @property
    def endpoint(self) -> Point:
        return self.vertices[-1]

    def profile(self) -> dict[int, int]:
        """Highest y reached in each column the path visits."""
        top: dict[int, int] = {}
        for x, y in self.vertices:
            top[x] = y  # y is non-decreasing along the path
        return top


@dataclass(frozen=True)
class PathPair:
    upper: LatticePath
    lower: LatticePath

    def __str__(self) -> str:
        return f"{self.upper}/{self.lower}"

    @classmethod
    def parse(cls, text: str) -> "PathPair":
        upper, sep, lower = text.strip().partition("/")
        if not sep:
            raise DomainError(f"expected 'upper/lower', got {text!r}")
        return cls(LatticePath(upper), LatticePath(lower))

    @property
    def delta(self) -> int:
        return self.lower.endpoint[0] - self.upper.endpoint[0]

    @property
    def epsilon(self) -> int:
        return len(self.lower) - len(self.upper)

    @property
    def returns(self) -> int:
        return return_count(self.upper, self.lower)


def _as_path(p: LatticePath | str) -> LatticePath:
    return p if isinstance(p, LatticePath) else LatticePath(p)


def gamma2_blocks_valid(k: int, path: LatticePath | str) -> bool:
    """True iff ``path`` splits into (k-1)-step blocks N^(k-1) / E N^(k-2), starting with E."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    steps = str(path)
    if not steps:
        return True
    width = k - 1
    if len(steps) % width or steps[0] != "E":
        return False
    east_block = "E" + "N" * (k - 2)
    north_block = "N" * width
    return all(
        steps[i : i + width] in (east_block, north_block) for i in range(0, len(steps), width)
    )


def weakly_above(upper: LatticePath | str, lower: LatticePath | str) -> bool:
    """Column-profile dominance.

    No vertex of ``lower`` in a column ``x <= x_end(upper)`` may lie higher
    than the top of ``upper`` in that column.
    """
    upper, lower = _as_path(upper), _as_path(lower)
    top = upper.profile()
    x_end = upper.endpoint[0]
    return all(y <= top[x] for x, y in lower.vertices if x <= x_end)


def return_count(upper: LatticePath | str, lower: LatticePath | str) -> int:
    """Number of lattice points other than the origin shared by both paths."""
    upper, lower = _as_path(upper), _as_path(lower)
    shared = set(upper.vertices) & set(lower.vertices)
    shared.discard((0, 0))
    return len(shared)


def lower_paths(k: int, n: int) -> Iterator[str]:
    """Block-valid lower paths with ``(k-1)*n`` steps, in lexicographic order (E < N)."""
    east_block = "E" + "N" * (k - 2)
    north_block = "N" * (k - 1)
    if n == 0:
        yield ""
        return
    for rest in product((east_block, north_block), repeat=n - 1):
        yield east_block + "".join(rest)


def _uppers(
    length: int,
    target: Optional[Point],
    blocked: frozenset[Point],
    column_top: Optional[dict[int, int]],
) -> Iterator[str]:
    """N-initial upper paths of ``length`` steps, depth-first with E tried first.

    ``blocked`` vertices may never be visited (strict mode). With
    ``column_top`` set, leaving a column below its bound is forbidden
    (weak mode); the final column is checked at the end.
    """
    if length == 0:
        if target in (None, (0, 0)):
            yield ""
        return
    tx, ty = target if target is not None else (length, length)
    buf: list[str] = []

    def walk(x: int, y: int, left: int) -> Iterator[str]:
        if left == 0:
            if column_top is None or column_top.get(x, -1) <= y:
                yield "".join(buf)
            return
        if x < tx and (column_top is None or column_top.get(x, -1) <= y):
            if (x + 1, y) not in blocked:
                buf.append("E")
                yield from walk(x + 1, y, left - 1)
                buf.pop()
        if y < ty and (x, y + 1) not in blocked:
            buf.append("N")
            yield from walk(x, y + 1, left - 1)
            buf.pop()

    if (0, 1) in blocked or ty < 1:
        return
    buf.append("N")
    yield from walk(0, 1, length - 1)


def _check_sizes(k: int, n: int) -> None:
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")


def _strict_pairs(k: int, n: int, epsilon: int, delta: Optional[int]) -> Iterator[PathPair]:
    _check_sizes(k, n)
    up_len = (k - 1) * n - epsilon
    if up_len < 0:
        raise DomainError(f"upper path would have negative length (k-1)*n - epsilon = {up_len}")
    for low in lower_paths(k, n):
        low_path = LatticePath(low)
        x2, y2 = low_path.endpoint
        target = None
        if delta is not None:
            target = (x2 - delta, y2 + delta - epsilon)
            if target[0] < 0 or target[1] < 0:
                continue
        blocked = frozenset(low_path.vertices[1:])
        for up in _uppers(up_len, target, blocked, None):
            yield PathPair(LatticePath(up), low_path)


def enumerate_strict(k: int, n: int, delta: int, epsilon: int) -> list[PathPair]:
    """All strict k-path pairs for the query, ordered by (lower, upper) with E < N."""
    if delta < 0 or epsilon < 0:
        raise DomainError("delta and epsilon must be non-negative")
    return list(_strict_pairs(k, n, epsilon, delta))


def strict_counts_by_delta(k: int, n: int, epsilon: int) -> Counter[int]:
    """Brute-force counts for every distance at once; empty when epsilon > (k-1)*n."""
    _check_sizes(k, n)
    if epsilon < 0:
        raise DomainError("epsilon must be non-negative")
    if epsilon > (k - 1) * n:
        return Counter()
    return Counter(pair.delta for pair in _strict_pairs(k, n, epsilon, None))


def _weak_pairs(k: int, n: int, delta: int, epsilon: int) -> Iterator[PathPair]:
    up_len = (k - 1) * n - epsilon
    if up_len < 0:
        return
    for low in lower_paths(k, n):
        low_path = LatticePath(low)
        x2, y2 = low_path.endpoint
        target = (x2 - delta, y2 + delta - epsilon)
        if target[0] < 0 or target[1] < 0:
            continue
        column_top: dict[int, int] = {}
        for x, y in low_path.vertices:
            column_top[x] = y
        for up in _uppers(up_len, target, frozenset(), column_top):
            yield PathPair(LatticePath(up), low_path)


def enumerate_weak(
    k: int, n: int, delta: int, epsilon: int, m: Optional[int] = None
) -> list[PathPair]:
    """Weak k-path pairs (upper weakly above lower), optionally with exactly ``m`` returns."""
    _check_sizes(k, n)
    if delta < 0 or epsilon < 0 or (m is not None and m < 0):
        raise DomainError("delta, epsilon and m must be non-negative")
    if delta == 0 and epsilon > 0:
        raise DomainError("distance 0 is only defined for epsilon = 0")
    pairs = _weak_pairs(k, n, delta, epsilon)
    if m is None:
        return list(pairs)
    return [p for p in pairs if p.returns == m]


def weak_return_distribution(k: int, n: int, delta: int = 0, epsilon: int = 0) -> Counter[int]:
    """Histogram of return counts over all weak pairs of the given shape."""
    return Counter(p.returns for p in enumerate_weak(k, n, delta, epsilon))


def strict_count_oracle(k: int, n: int, delta: int, epsilon: int) -> int:
    """Size of ``enumerate_strict``, with 0 for queries whose set is empty by definition."""
    if epsilon > (k - 1) * n or not 1 <= delta <= n:
        _check_sizes(k, n)
        return 0
    return len(enumerate_strict(k, n, delta, epsilon))
