"""(k, epsilon)-Catalan triangles by three routes, plus closed counts of weak pairs.

Entry (i, j) of a triangle is the number of strict k-path pairs with
``n = i + 1`` blocks and distance ``delta = j + 1``.
"""

from __future__ import annotations

from pathpairs.errors import DomainError, RangeError
from pathpairs.exact_math import (
    StrictQuery,
    binomial,
    raney_coefficient,
    strict_count_formula,
    strict_count_general,
)
from pathpairs.series import (
    RiordanSpec,
    Triangle,
    kcatalan_series,
    riordan_triangle,
    series_power,
)


def _check(k: int, epsilon: int, rows: int, *, proper: bool) -> None:
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if epsilon < 0:
        raise DomainError(f"epsilon must be >= 0, got {epsilon}")
    if rows < 1:
        raise DomainError(f"rows must be >= 1, got {rows}")
    if proper and epsilon > k - 1:
        raise RangeError(
            f"only the closed-form builder handles epsilon > k-1 (got k={k}, epsilon={epsilon})"
        )


def triangle_recursive(k: int, epsilon: int, rows: int) -> Triangle:
    """Build row n from row n-1 with the block-appending recurrence.

    Column 0 uses the binomial weights of (1+t)^k minus those of
    (1+t)^epsilon; later columns use (1+t)^k alone.
    """
    _check(k, epsilon, rows, proper=True)
    weights_k = [binomial(k, j) for j in range(k + 1)]
    weights_e = [binomial(epsilon, j) for j in range(k + 1)]
    out = [(1,)]
    for n in range(1, rows):
        prev = out[-1]

        def at(d: int) -> int:
            # prev is indexed by distance - 1
            return prev[d - 1] if 1 <= d <= len(prev) else 0

        row = [
            sum((weights_k[j] - weights_e[j]) * at(j) for j in range(1, k + 1))
        ]
        for delta in range(2, n + 2):
            row.append(sum(weights_k[j] * at(delta - 1 + j) for j in range(k + 1)))
        out.append(tuple(row))
    return Triangle(tuple(out), k, epsilon, "recursive")


def triangle_closed_form(k: int, epsilon: int, rows: int) -> Triangle:
    _check(k, epsilon, rows, proper=False)
    out = []
    for i in range(rows):
        row = []
        for j in range(i + 1):
            q = StrictQuery(k, i + 1, j + 1, epsilon)
            if epsilon <= (k - 1) * (j + 1):
                row.append(strict_count_formula(q))
            else:
                row.append(strict_count_general(q))
        out.append(tuple(row))
    return Triangle(tuple(out), k, epsilon, "closed_form")


def triangle_riordan(k: int, epsilon: int, rows: int) -> Triangle:
    """R(C_k^(k-epsilon), t*C_k^k) cut to ``rows`` rows."""
    _check(k, epsilon, rows, proper=True)
    # order 1 at least, so properness (h'(0) != 0) is visible even for one row
    order = max(rows - 1, 1)
    ck = kcatalan_series(k, order)
    spec = RiordanSpec(series_power(ck, k - epsilon), series_power(ck, k).shift())
    return riordan_triangle(spec, rows, k=k, epsilon=epsilon, method="riordan")


BUILDERS = {
    "recursive": triangle_recursive,
    "closed_form": triangle_closed_form,
    "riordan": triangle_riordan,
}


def irreducible_count(k: int, n: int) -> int:
    """Closed weak pairs whose only contact away from the origin is the shared endpoint."""
    if k < 2 or n < 1:
        raise DomainError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    return raney_coefficient(k, k - 1, n - 1)


def weak_count_formula(k: int, n: int, delta: int, epsilon: int, m: int) -> int:
    """Weak k-path pairs with exactly m returns: [t^(n-delta-m)] C_k^(k*delta - epsilon + (k-1)*m)."""
    if k < 2 or n < 1 or m < 0 or delta < 0 or epsilon < 0:
        raise DomainError(
            f"need k >= 2, n >= 1 and non-negative delta, epsilon, m; got {k}, {n}, {delta}, {epsilon}, {m}"
        )
    closed = delta == 0 and epsilon == 0
    if not closed and (delta == 0 or epsilon > (k - 1) * delta):
        raise RangeError(
            "weak-pair formula needs delta = epsilon = 0 or 0 <= epsilon <= (k-1)*delta"
        )
    degree = n - delta - m
    if degree < 0:
        return 0
    power = k * delta - epsilon + (k - 1) * m
    if power == 0:
        # C_k^0 = 1
        return 1 if degree == 0 else 0
    return raney_coefficient(k, power, degree)
