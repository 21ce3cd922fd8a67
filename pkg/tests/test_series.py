import json

import pytest
from hypothesis import given, strategies as st

from pathpairs import (
    DomainError,
    RangeError,
    RiordanSpec,
    TruncatedSeries,
    Triangle,
    az_polynomials,
    check_az_recurrence,
    check_fundamental_identities,
    kcatalan_series,
    raney_coefficient,
    riordan_triangle,
    series_power,
)

FIG2 = ((1,), (2, 1), (5, 4, 1), (14, 14, 6, 1), (42, 48, 27, 8, 1))
FIG4_K3_E1 = ((1,), (2, 1), (7, 5, 1), (30, 25, 8, 1), (143, 130, 52, 11, 1))


def S(*cs):
    return TruncatedSeries(cs)


def test_series_basics():
    s = S(1, 1, 0, 0)
    assert s.order == 3
    assert series_power(s, 2) == S(1, 2, 1, 0)
    assert series_power(S(3, 4, 5), 0) == S(1, 0, 0)
    assert (S(1, 2, 3) * S(1, 1)) == S(1, 3)  # truncated to the smaller order
    assert S(0, 1, 2).shift() == S(0, 0, 1)
    with pytest.raises(DomainError):
        series_power(s, -1)
    with pytest.raises(DomainError):
        TruncatedSeries([])


def test_series_serialization():
    s = S(1, -2, 10**30)
    data = s.to_dict()
    assert data == {"order": 2, "coeffs": ["1", "-2", "1" + "0" * 30]}
    assert TruncatedSeries.from_dict(json.loads(json.dumps(data))) == s


def test_compose_against_expansion():
    # (1+u)^2 with u = t + t^2 is 1 + 2t + 3t^2 + 2t^3 + t^4
    assert S(1, 2, 1, 0, 0).compose(S(0, 1, 1, 0, 0)) == S(1, 2, 3, 2, 1)
    with pytest.raises(DomainError):
        S(1, 1).compose(S(1, 1))


@pytest.mark.parametrize(
    "k, order, expected",
    [(2, 5, (1, 1, 2, 5, 14, 42)), (3, 5, (1, 1, 3, 12, 55, 273)), (4, 0, (1,))],
)
def test_kcatalan(k, order, expected):
    assert kcatalan_series(k, order).coeffs == expected


def test_catalan_square():
    assert series_power(kcatalan_series(2, 2), 2).coeffs == (1, 2, 5)


def test_kcatalan_domain():
    with pytest.raises(DomainError):
        kcatalan_series(1, 3)


def test_fixed_point_residual_and_raney():
    for k in range(2, 6):
        ck = kcatalan_series(k, 24)
        residual = TruncatedSeries.constant(1, 24) + series_power(ck, k).shift() - ck
        assert residual.is_zero()
        for r in range(1, 9):
            p = series_power(kcatalan_series(k, 12), r)
            assert list(p.coeffs) == [raney_coefficient(k, r, n) for n in range(13)]


@given(st.integers(2, 5), st.integers(0, 12), st.integers(1, 6))
def test_truncation_stability(k, order, extra):
    low = kcatalan_series(k, order)
    high = kcatalan_series(k, order + extra)
    assert high.truncate(order) == low
    assert series_power(high, 3).truncate(order) == series_power(low, 3)


def _catalan_spec(k, eps, order):
    ck = kcatalan_series(k, order)
    return RiordanSpec(series_power(ck, k - eps), series_power(ck, k).shift())


def test_riordan_triangle_examples():
    assert riordan_triangle(_catalan_spec(2, 0, 4), 5).rows == FIG2
    ck3 = kcatalan_series(3, 4)
    spec = RiordanSpec(series_power(ck3, 2), series_power(ck3, 3).shift())
    assert riordan_triangle(spec, 5).rows == FIG4_K3_E1
    ident = riordan_triangle(RiordanSpec(S(1, 0, 0, 0), S(0, 1, 0, 0)), 4)
    assert ident.rows == tuple(tuple(int(i == j) for j in range(i + 1)) for i in range(4))


def test_riordan_errors():
    with pytest.raises(DomainError):
        RiordanSpec(S(0, 1), S(0, 1))
    with pytest.raises(DomainError):
        RiordanSpec(S(1, 1), S(1, 1))
    with pytest.raises(DomainError):
        RiordanSpec(S(1, 1), S(0, 0, 1))
    with pytest.raises(RangeError):
        riordan_triangle(_catalan_spec(2, 0, 3), 5)
    with pytest.raises(RangeError):
        riordan_triangle(RiordanSpec(S(1, -1, 0), S(0, 1, 0)), 3)


def test_az_polynomials():
    assert az_polynomials(2, 0) == (S(1, 2, 1), S(2, 1))
    assert az_polynomials(2, 1) == (S(1, 2, 1), S(1, 1))
    assert az_polynomials(3, 1) == (S(1, 3, 3, 1), S(2, 3, 1))
    with pytest.raises(RangeError):
        az_polynomials(3, 3)


def test_az_recurrence_passes_on_figures():
    rep = check_az_recurrence(Triangle(FIG2), S(1, 2, 1), S(2, 1))
    assert rep.status == "pass" and rep.cells_checked == 14
    rep = check_az_recurrence(Triangle(FIG4_K3_E1), S(1, 3, 3, 1), S(2, 3, 1))
    assert rep.status == "pass"
    # hand values: 48 = 14 + 2*14 + 6 via A, 42 = 2*14 + 14 via Z, 30 = 2*7 + 3*5 + 1 via Z
    assert 1 * 14 + 2 * 14 + 1 * 6 == 48 and 2 * 14 + 1 * 14 == 42 and 2 * 7 + 3 * 5 + 1 == 30


def test_az_recurrence_localizes_fault():
    bad = Triangle(FIG2).with_entry(3, 1, 15)
    rep = check_az_recurrence(bad, S(1, 2, 1), S(2, 1))
    assert rep.status == "fail"
    cells = sorted((m.cell["row"], m.cell["col"]) for m in rep.mismatches)
    # the perturbed cell itself, plus every row-4 cell whose recurrence reads it
    assert cells == [(3, 1), (4, 0), (4, 1), (4, 2)]


@pytest.mark.parametrize("k, eps", [(2, 0), (4, 3), (3, 1), (4, 0)])
def test_fundamental_identities_hold(k, eps):
    a, z = az_polynomials(k, eps)
    assert check_fundamental_identities(_catalan_spec(k, eps, 16), a, z, 16).status == "pass"


def test_fundamental_identities_catch_wrong_z():
    rep = check_fundamental_identities(_catalan_spec(2, 0, 8), S(1, 2, 1), S(2, 2), 8)
    assert rep.status == "fail"
    assert {m.cell["identity"] for m in rep.mismatches} == {"d"}


def test_triangle_csv_json_roundtrip():
    tri = Triangle(FIG2, 2, 0, "riordan")
    assert Triangle.from_csv(tri.to_csv(), 2, 0, "riordan") == tri
    assert Triangle.from_json(tri.to_json()) == tri
    assert json.loads(tri.to_json())["rows"][4] == ["42", "48", "27", "8", "1"]
    with pytest.raises(DomainError):
        Triangle(((1,), (2,)))
