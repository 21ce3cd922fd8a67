"""Cross-checks between the enumeration oracle, closed formulas, recurrences and series.

Every suite returns a :class:`VerificationReport`. Strict-pair cells must
agree exactly. Weak-pair cells may disagree only where the shipped
allowlist (``data/weak_allowlist.json``) records the same disagreement.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources
from pathlib import Path
from typing import Callable, Iterator, Optional, Union

from pathpairs.exact_math import (
    EpsilonSplit,
    StrictQuery,
    binomial,
    raney_coefficient,
    strict_count,
    strict_count_formula,
    strict_count_general,
)
from pathpairs.lattice import strict_counts_by_delta, weak_return_distribution
from pathpairs.report import Mismatch, VerificationReport, combine
from pathpairs.series import (
    RiordanSpec,
    TruncatedSeries,
    az_polynomials,
    check_az_recurrence,
    check_fundamental_identities,
    kcatalan_series,
    series_power,
)
from pathpairs.triangles import (
    BUILDERS,
    triangle_recursive,
    triangle_riordan,
    weak_count_formula,
)

FIGURE4_PAIRS = tuple((k, e) for k in (2, 3, 4) for e in range(k))

PathLike = Union[str, Path]


def data_path(name: str) -> Path:
    return Path(str(resources.files("pathpairs") / "data" / name))


def golden_file(k: int, epsilon: int) -> Path:
    return data_path(f"figure4/k{k}_eps{epsilon}.csv")


def read_golden(path: PathLike) -> list[list[str]]:
    text = Path(path).read_text()
    return [rec for rec in csv.reader(io.StringIO(text)) if rec]


# --- strict pairs -----------------------------------------------------------


def cross_check_strict(k: int, epsilon: int, max_n: int) -> VerificationReport:
    """Oracle vs closed form for every (n, delta), plus recurrence and Riordan when epsilon <= k-1."""
    report = VerificationReport(f"strict k={k} epsilon={epsilon}")
    proper = epsilon <= k - 1
    tri_rec = triangle_recursive(k, epsilon, max_n) if proper else None
    tri_rio = triangle_riordan(k, epsilon, max_n) if proper else None
    for n in range(1, max_n + 1):
        oracle = strict_counts_by_delta(k, n, epsilon)
        for delta in range(1, n + 1):
            values = {
                "oracle": oracle.get(delta, 0),
                "formula": strict_count(StrictQuery(k, n, delta, epsilon)),
            }
            if proper:
                values["recursive"] = tri_rec.entry(n - 1, delta - 1)
                values["riordan"] = tri_rio.entry(n - 1, delta - 1)
            report.check({"k": k, "epsilon": epsilon, "n": n, "delta": delta}, values)
    return report


def check_golden(k: int, epsilon: int, path: Optional[PathLike] = None) -> VerificationReport:
    """Diff every builder against a fixture CSV, entry by entry as decimal strings."""
    path = golden_file(k, epsilon) if path is None else Path(path)
    expected = read_golden(path)
    report = VerificationReport(f"golden {path.name}")
    rows = len(expected)
    for method, build in BUILDERS.items():
        got = build(k, epsilon, rows).rows
        for i, row in enumerate(expected):
            width = max(len(row), len(got[i]))
            for j in range(width):
                want = row[j] if j < len(row) else None
                have = str(got[i][j]) if j < len(got[i]) else None
                report.check(
                    {"file": path.name, "method": method, "row": i, "col": j},
                    {"golden": want, "computed": have},
                )
    return report


def golden_suite(root: Optional[PathLike] = None) -> VerificationReport:
    """Figure 2 and all nine Figure 4 fixtures against all three builders."""
    base = data_path("") if root is None else Path(root)
    parts = [check_golden(2, 0, base / "figure2.csv")]
    for k, e in FIGURE4_PAIRS:
        parts.append(check_golden(k, e, base / "figure4" / f"k{k}_eps{e}.csv"))
    return combine("golden", parts)


# --- weak pairs -------------------------------------------------------------


def load_allowlist(path: Optional[PathLike] = None) -> list[dict]:
    path = data_path("weak_allowlist.json") if path is None else Path(path)
    return json.loads(Path(path).read_text())["cells"]


def _allow_key(cell: dict, values: dict) -> tuple:
    return (
        int(cell["k"]),
        int(cell["n"]),
        int(cell["delta"]),
        int(cell["epsilon"]),
        int(cell["m"]),
        int(values["oracle"]),
        int(values["formula"]),
    )


def cross_check_weak(
    k: int, max_n: int, allowlist: Optional[list[dict]] = None
) -> VerificationReport:
    """Closed weak pairs: oracle return distribution vs the closed formula, m >= 1.

    Mismatches are tolerated only when the allowlist holds the same cell with
    the same oracle and formula values.
    """
    entries = load_allowlist() if allowlist is None else allowlist
    allowed = {
        _allow_key(e, {"oracle": e["oracle"], "formula": e["formula"]}) for e in entries
    }
    report = VerificationReport(f"weak k={k}")
    for n in range(1, max_n + 1):
        dist = weak_return_distribution(k, n)
        report.check(
            {"k": k, "n": n, "delta": 0, "epsilon": 0, "m": 0},
            {"oracle": dist.get(0, 0), "formula": weak_count_formula(k, n, 0, 0, 0)},
        )
        top = max([n, *dist])
        for m in range(1, top + 1):
            report.check(
                {"k": k, "n": n, "delta": 0, "epsilon": 0, "m": m},
                {"oracle": dist.get(m, 0), "formula": weak_count_formula(k, n, 0, 0, m)},
            )
    report.classify(lambda mm: _allow_key(mm.cell, mm.values) in allowed)
    return report


# --- identities -------------------------------------------------------------


def _strict_grid(max_n: dict[int, int]) -> Iterator[StrictQuery]:
    for k in sorted(max_n):
        for n in range(1, max_n[k] + 1):
            for delta in range(1, n + 1):
                for eps in range((k - 1) * n + 1):
                    yield StrictQuery(k, n, delta, eps)


def _sample(items: list, budget: int) -> list:
    if budget <= 0 or len(items) <= budget:
        return items
    stride = -(-len(items) // budget)
    return items[::stride]


def legal_splits(q: StrictQuery) -> list[EpsilonSplit]:
    """All non-negative splits of epsilon with epsilon1 <= n - 1."""
    out = []
    for e1 in range(0, q.n):
        e2 = q.epsilon - (q.k - 1) * e1
        if e2 < 0:
            break
        out.append(EpsilonSplit(e1, e2))
    return out


def split_invariance(queries) -> VerificationReport:
    report = VerificationReport("split_invariance")
    for q in queries:
        values = {
            f"split({s.epsilon1},{s.epsilon2})": strict_count_general(q, s)
            for s in legal_splits(q)
        }
        values["canonical"] = strict_count_general(q)
        report.check({"k": q.k, "n": q.n, "delta": q.delta, "epsilon": q.epsilon}, values)
    return report


def identity_suite(
    order: int = 16,
    sample_budget: int = 400,
    az: Callable[[int, int], tuple[TruncatedSeries, TruncatedSeries]] = az_polynomials,
) -> VerificationReport:
    """Run the exact identity batteries; ``az`` can be swapped to inject faults."""
    if order < 8:
        raise ValueError("identity suite needs order >= 8")
    parts: list[VerificationReport] = []

    catalan = {k: kcatalan_series(k, order) for k in range(2, 6)}

    # A/Z machinery for every golden triangle
    for k, e in FIGURE4_PAIRS:
        ck = catalan[k]
        spec = RiordanSpec(series_power(ck, k - e), series_power(ck, k).shift())
        a, z = az(k, e)
        parts.append(_tag(check_fundamental_identities(spec, a, z, order), k=k, epsilon=e))
        tri = triangle_riordan(k, e, order + 1)
        parts.append(_tag(check_az_recurrence(tri, a, z), k=k, epsilon=e))

    # fixed-point residual and two-route coefficients
    fixed = VerificationReport("fixed_point")
    coeffs = VerificationReport("raney_vs_series")
    for k, ck in catalan.items():
        residual = TruncatedSeries.constant(1, order) + series_power(ck, k).shift() - ck
        for i in range(order + 1):
            fixed.check({"k": k, "degree": i}, {"residual": residual[i], "expected": 0})
        if k > 4:
            continue
        for r in range(1, 9):
            power = series_power(ck, r)
            for n in range(order + 1):
                coeffs.check(
                    {"k": k, "r": r, "n": n},
                    {"series": power[n], "raney": raney_coefficient(k, r, n)},
                )
    parts += [fixed, coeffs]

    # closed-formula batteries on a deterministic grid
    grid = _sample(list(_strict_grid({2: 9, 3: 6, 4: 5})), sample_budget)
    probe = StrictQuery(3, 3, 2, 2)
    if probe not in grid:
        grid.append(probe)
    parts.append(split_invariance(grid))
    agree = VerificationReport("range_agreement")
    division = VerificationReport("exact_division")
    for q in grid:
        if q.epsilon <= (q.k - 1) * q.delta:
            agree.check(
                {"k": q.k, "n": q.n, "delta": q.delta, "epsilon": q.epsilon},
                {"general": strict_count_general(q), "formula": strict_count_formula(q)},
            )
            top = q.k * q.n - q.epsilon
            num = (q.k * q.delta - q.epsilon) * binomial(top, q.n - q.delta)
            division.check(
                {"k": q.k, "n": q.n, "delta": q.delta, "epsilon": q.epsilon},
                {"remainder": num % top, "expected": 0},
            )
    parts += [agree, division]

    # triangles read off the series equal the closed formula
    tri_agree = VerificationReport("triangle_vs_formula")
    for k, e in FIGURE4_PAIRS:
        tri = triangle_riordan(k, e, 10)
        for i in range(10):
            for j in range(i + 1):
                tri_agree.check(
                    {"k": k, "epsilon": e, "row": i, "col": j},
                    {
                        "riordan": tri.entry(i, j),
                        "formula": strict_count_formula(StrictQuery(k, i + 1, j + 1, e)),
                    },
                )
    parts.append(tri_agree)

    # weak formula: returns sum to the k-Catalan numbers; m = 0 is the strict count
    weak = VerificationReport("weak_formula_identities")
    for k in range(2, 5):
        for n in range(1, 21):
            total = sum(weak_count_formula(k, n, 0, 0, m) for m in range(1, n + 1))
            weak.check({"k": k, "n": n, "identity": "return_sum"},
                       {"sum": total, "catalan": raney_coefficient(k, 1, n)})
        for n in range(1, 9):
            for delta in range(1, n + 1):
                for eps in range((k - 1) * delta + 1):
                    weak.check(
                        {"k": k, "n": n, "delta": delta, "epsilon": eps, "identity": "m0"},
                        {
                            "weak": weak_count_formula(k, n, delta, eps, 0),
                            "strict": strict_count_formula(StrictQuery(k, n, delta, eps)),
                        },
                    )
    parts.append(weak)

    return combine(f"identities order={order}", parts)


def _tag(report: VerificationReport, **extra) -> VerificationReport:
    report.mismatches = [Mismatch({**extra, **m.cell}, m.values) for m in report.mismatches]
    return report
