from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from simcores.series import (DivisionByNonUnitError, IntegralityViolationError,
                             TruncatedSeries, _require_integral,
                             check_identities, constant, cross_check,
                             fuss_catalan_number, fuss_catalan_series, series,
                             stat_series)
from simcores.stats import average_size_check

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def coeffs(f, upto=None):
    upper = f.order if upto is None else upto
    return [f[k] for k in range(upper + 1)]


def test_mul_example():
    f = series([1, 1], order=3) * series([1, -1], order=3)
    assert f == series([1, 0, -1, 0])


def test_derivative_example():
    f = series([1, 1, 3, 12])
    assert f.derivative() == series([1, 6, 36])


def test_geometric_division():
    f = constant(1, 3) / series([1, -1], order=3)
    assert f == series([1, 1, 1, 1])


def test_division_by_nonunit():
    with pytest.raises(DivisionByNonUnitError):
        constant(1, 3) / series([0, 1], order=3)


def test_pow_shift_truncate():
    f = series([1, 2], order=4)
    assert f ** 0 == constant(1, 4)
    assert f ** 3 == series([1, 6, 12, 8, 0])
    assert f.shift(2).order == 6
    assert f.shift(2)[2] == 1
    assert f.truncate(1) == series([1, 2])
    with pytest.raises(ValueError):
        f.truncate(9)
    with pytest.raises(IndexError):
        f[5]


def test_arithmetic_truncates_to_shorter():
    long = constant(1, 9)
    short = constant(1, 4)
    assert (long + short).order == 4
    assert (long * short).order == 4
    assert long.derivative().order == 8


def test_scalar_operations():
    f = series([1, 2, 3])
    assert 2 * f == series([2, 4, 6])
    assert f * Fraction(1, 2) == series([Fraction(1, 2), 1, Fraction(3, 2)])
    assert f - 1 == series([0, 2, 3])
    assert 1 - f == series([0, -2, -3])


@given(st.lists(rationals, min_size=3, max_size=7),
       st.lists(rationals, min_size=3, max_size=7))
def test_product_rule(fa, ga):
    f, g = series(fa), series(ga)
    n = min(f.order, g.order)
    f, g = f.truncate(n), g.truncate(n)
    lhs = (f * g).derivative()
    rhs = f.derivative() * g + f * g.derivative()
    assert lhs == rhs


def test_fuss_catalan_series_values():
    assert coeffs(fuss_catalan_series(2, 4)) == [1, 1, 3, 12, 55]
    assert coeffs(fuss_catalan_series(1, 3)) == [1, 1, 2, 5]
    assert coeffs(fuss_catalan_series(3, 0)) == [1]


def test_fuss_catalan_closed_form_agrees():
    for m in (1, 2, 3, 4):
        f = fuss_catalan_series(m, 9)
        for n in range(10):
            assert f[n] == fuss_catalan_number(m, n)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("order", [0, 5, 12, 20])
def test_defining_equation_residual_zero(m, order):
    f = fuss_catalan_series(m, order)
    residual = (f ** (m + 1)).shift(1) - f + 1
    assert residual.is_zero


def test_fixed_point_idempotent():
    for m in (1, 2, 4):
        f = fuss_catalan_series(m, 10)
        again = ((f ** (m + 1)).shift(1) + 1).truncate(10)
        assert again == f


def test_stat_series_frozen_coefficients():
    b = stat_series(2, 6)
    assert coeffs(b.member[0], 3) == [0, 0, 3, 33]
    assert coeffs(b.size[0], 4) == [0, 0, 4, 66, 770]
    assert coeffs(b.count_trimmed[1], 4) == [1, 2, 7, 30, 143]


def test_stat_series_slope_one_degenerates():
    b = stat_series(1, 8)
    f = b.count
    fp = f.derivative()
    assert b.count_trimmed == {}
    assert b.member[0] == (fp * fp).shift(2) / f
    assert list(b.member) == [0] and list(b.layer) == [0] and list(b.size) == [0]


def test_integrality_guard():
    with pytest.raises(IntegralityViolationError):
        _require_integral(series([1, Fraction(1, 2)]), "demo")


def test_stat_series_rejects_tiny_order():
    with pytest.raises(ValueError):
        stat_series(2, 2)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_identity_ledger_passes(m):
    checks = check_identities(m, 12)
    failed = [c for c in checks if not c.passed]
    assert not failed, failed
    names = {c.identity for c in checks}
    assert "defining-equation" in names
    assert "average-size-identity" in names
    if m == 2:
        assert "explicit-squared-count" in names
        assert "explicit-size-from-derivatives" in names
    if m >= 2:
        assert "size-join-relation" in names
    if m >= 3:
        assert "member-step-relation[j=1]" in names


@pytest.mark.parametrize("m", [4, 5, 6])
def test_identity_ledger_passes_at_higher_slopes(m):
    # exercises the step-relation chains at deeper truncation indices
    checks = check_identities(m, 12)
    assert all(c.passed for c in checks)
    names = {c.identity for c in checks}
    assert f"size-step-relation[j={m - 2}]" in names


def test_cross_check_deeper_truncations():
    rows = cross_check(4, 4)
    assert all(r.passed for r in rows)
    assert {r.j for r in rows} == {0, 1, 2, 3}


def test_identity_effective_orders():
    checks = {c.identity: c for c in check_identities(2, 12)}
    assert checks["defining-equation"].effective_order == 12
    # triple-derivative identities are verified three orders lower
    assert checks["third-derivative"].effective_order == 9
    assert checks["average-size-identity"].effective_order == 12


def test_failed_identity_reports_first_nonzero():
    residual = series([0, 0, Fraction(1, 3), 2])
    assert residual.first_nonzero() == 2
    assert residual.max_abs() == 2


def test_cross_check_matches_enumeration_and_totals():
    rows = cross_check(2, 3)
    assert all(r.passed for r in rows)
    by_key = {(r.j, r.n, r.statistic): r for r in rows}
    assert by_key[(0, 3, "size")].series_value == 66
    assert average_size_check(3, 7).total == 66


def test_cross_check_single_slice():
    rows = cross_check(3, 2, j=1)
    assert rows and all(r.j == 1 and r.passed for r in rows)


def test_truncated_series_value_semantics():
    f = series([1, 2, 3])
    assert f == TruncatedSeries((Fraction(1), Fraction(2), Fraction(3)))
    assert f != f.truncate(1)
