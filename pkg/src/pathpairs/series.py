"""Truncated integer power series, k-Catalan generating functions and Riordan arrays."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Optional

from pathpairs.exact_math import binomial
from pathpairs.errors import DomainError, RangeError
from pathpairs.report import VerificationReport

METHODS = ("recursive", "closed_form", "riordan")


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_N of a power series taken mod t^(N+1)."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise DomainError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def constant(cls, c: int, order: int) -> "TruncatedSeries":
        return cls([c] + [0] * order)

    @classmethod
    def monomial(cls, degree: int, order: int, c: int = 1) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        if degree <= order:
            cs[degree] = c
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.order else 0

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise RangeError(f"cannot raise truncation order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[i] - other.coeffs[i] for i in range(n + 1))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self.coeffs)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(c * other for c in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def shift(self) -> "TruncatedSeries":
        """Multiply by t, keeping the same order."""
        return TruncatedSeries((0,) + self.coeffs[:-1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(t)); needs inner(0) == 0 so every coefficient is a finite sum."""
        if inner[0] != 0:
            raise DomainError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = TruncatedSeries.constant(self.coeffs[n], n)
        for c in reversed(self.coeffs[:n]):
            acc = acc * inner + TruncatedSeries.constant(c, n)
        return acc

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "TruncatedSeries":
        s = cls(int(c) for c in data["coeffs"])
        if s.order != int(data["order"]):
            raise DomainError("order does not match the number of coefficients")
        return s


def series_power(s: TruncatedSeries, e: int) -> TruncatedSeries:
    """s**e truncated to s.order, by binary exponentiation."""
    if e < 0:
        raise DomainError(f"exponent must be non-negative, got {e}")
    result = TruncatedSeries.constant(1, s.order)
    base = s
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def kcatalan_series(k: int, order: int) -> TruncatedSeries:
    """C_k(t) through t^order from the fixed point s = 1 + t*s^k."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    one = TruncatedSeries.constant(1, order)
    s = one
    # each pass fixes one more coefficient
    for _ in range(order + 1):
        s = one + series_power(s, k).shift()
    return s


@dataclass(frozen=True)
class RiordanSpec:
    d: TruncatedSeries
    h: TruncatedSeries

    def __post_init__(self) -> None:
        if self.d[0] == 0:
            raise DomainError("improper Riordan array: d(0) must be non-zero")
        if self.h[0] != 0:
            raise DomainError("improper Riordan array: h(0) must be zero")
        if self.h[1] == 0:
            raise DomainError("improper Riordan array: h'(0) must be non-zero")


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular integer array; row i holds entries (i, 0..i)."""

    rows: tuple[tuple[int, ...], ...]
    k: Optional[int] = None
    epsilon: Optional[int] = None
    method: Optional[str] = None

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        for i, row in enumerate(rows):
            if len(row) != i + 1:
                raise DomainError(f"row {i} has {len(row)} entries, expected {i + 1}")
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry (i, j); zero outside the materialized triangle."""
        if 0 <= i < len(self.rows) and 0 <= j <= i:
            return self.rows[i][j]
        return 0

    def with_entry(self, i: int, j: int, value: int) -> "Triangle":
        rows = [list(r) for r in self.rows]
        rows[i][j] = value
        return Triangle(tuple(map(tuple, rows)), self.k, self.epsilon, self.method)

    def to_csv(self) -> str:
        return "".join(",".join(str(v) for v in row) + "\n" for row in self.rows)

    @classmethod
    def from_csv(cls, text: str, k=None, epsilon=None, method=None) -> "Triangle":
        rows = [tuple(int(v) for v in rec) for rec in csv.reader(io.StringIO(text)) if rec]
        return cls(tuple(rows), k, epsilon, method)

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "epsilon": self.epsilon,
                "method": self.method,
                "rows": [[str(v) for v in row] for row in self.rows],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Triangle":
        data = json.loads(text)
        rows = tuple(tuple(int(v) for v in row) for row in data["rows"])
        return cls(rows, data.get("k"), data.get("epsilon"), data.get("method"))


def riordan_triangle(
    spec: RiordanSpec,
    rows: int,
    *,
    k: Optional[int] = None,
    epsilon: Optional[int] = None,
    method: str = "riordan",
) -> Triangle:
    """Entries [t^i] d(t) h(t)^j for 0 <= j <= i < rows."""
    if rows < 1:
        raise DomainError("need at least one row")
    need = rows - 1
    if spec.d.order < need or spec.h.order < need:
        raise RangeError(
            f"series truncated at orders {spec.d.order}, {spec.h.order}; need {need}"
        )
    column = spec.d.truncate(need)
    h = spec.h.truncate(need)
    cols = []
    for _ in range(rows):
        cols.append(column)
        column = column * h
    out = []
    for i in range(rows):
        row = tuple(cols[j][i] for j in range(i + 1))
        if any(v < 0 for v in row):
            raise RangeError(f"negative entry in row {i}: not a counting triangle")
        out.append(row)
    return Triangle(tuple(out), k, epsilon, method)


def az_polynomials(k: int, epsilon: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """A(t) = (1+t)^k and Z(t) = ((1+t)^k - (1+t)^epsilon) / t as exact polynomials."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if not 0 <= epsilon <= k - 1:
        raise RangeError(f"A/Z sequences need 0 <= epsilon <= k-1, got {epsilon}")
    a = TruncatedSeries(binomial(k, i) for i in range(k + 1))
    numerator = [binomial(k, i) - binomial(epsilon, i) for i in range(k + 1)]
    assert numerator[0] == 0
    z = TruncatedSeries(numerator[1:])
    return a, z


def check_az_recurrence(
    tri: Triangle, A: TruncatedSeries, Z: TruncatedSeries
) -> VerificationReport:
    """Check every entry below row 0 against the previous row via the Z (column 0) or A sequence."""
    report = VerificationReport("az_recurrence")
    if len(tri) < 2:
        raise DomainError("need at least two rows to check a recurrence")
    for n in range(1, len(tri)):
        prev = tri.rows[n - 1]
        for col in range(n + 1):
            if col == 0:
                predicted = sum(Z[i] * prev[i] for i in range(len(prev)))
                route = "Z"
            else:
                predicted = sum(
                    A[i] * tri.entry(n - 1, col - 1 + i) for i in range(A.order + 1)
                )
                route = "A"
            report.check(
                {"row": n, "col": col, "route": route},
                {"triangle": tri.rows[n][col], "recurrence": predicted},
            )
    return report


def check_fundamental_identities(
    spec: RiordanSpec, A: TruncatedSeries, Z: TruncatedSeries, order: int
) -> VerificationReport:
    """h = t*A(h) and d*(1 - t*Z(h)) = d(0), coefficientwise through t^order."""
    report = VerificationReport("fundamental_identities")
    if spec.d.order < order or spec.h.order < order:
        raise RangeError(f"series must be materialized to order {order}")
    d, h = spec.d.truncate(order), spec.h.truncate(order)
    def pad(p: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(p[i] for i in range(order + 1))

    a_of_h = pad(A).compose(h)
    z_of_h = pad(Z).compose(h)
    h_residual = h - a_of_h.shift()
    one = TruncatedSeries.constant(1, order)
    d_residual = d * (one - z_of_h.shift()) - TruncatedSeries.constant(d[0], order)
    for i in range(order + 1):
        report.check({"identity": "h", "degree": i}, {"residual": h_residual[i], "expected": 0})
        report.check({"identity": "d", "degree": i}, {"residual": d_residual[i], "expected": 0})
    return report
