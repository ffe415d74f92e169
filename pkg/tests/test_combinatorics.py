"""Exact combinatorics: harmonic sums, Stirling/Lah numbers, arctan-power
coefficients, and the power-series oracle that cross-checks them."""

import math
from fractions import Fraction

import pytest

from quadident.combinatorics import (
    RationalPowerSeries,
    arctan_power_coeff,
    arctan_power_coeff_lah,
    arctan_series,
    lah,
    leibniz_partial,
    leibniz_partial_float,
    odd_harmonic,
    odd_harmonic_float,
    series_pow,
    skew_harmonic,
    skew_harmonic_float,
    stirling_first,
)


# ---------------------------------------------------------------------------
# Harmonic-type prefix sums
# ---------------------------------------------------------------------------

def test_skew_harmonic_values():
    assert skew_harmonic(0) == 0
    assert skew_harmonic(2) == Fraction(1, 2)
    assert skew_harmonic(3) == Fraction(5, 6)


def test_skew_harmonic_difference():
    for n in range(1, 81):
        step = skew_harmonic(n) - skew_harmonic(n - 1)
        assert step == Fraction((-1) ** (n - 1), n)


def test_odd_harmonic_values():
    assert odd_harmonic(0) == 0
    assert odd_harmonic(2) == Fraction(4, 3)
    assert odd_harmonic(3) == Fraction(23, 15)


def test_odd_harmonic_vs_ordinary():
    # h_n = H_{2n} - H_n / 2, exactly
    def harmonic(m):
        return sum((Fraction(1, k) for k in range(1, m + 1)), Fraction(0))

    for n in range(1, 41):
        assert odd_harmonic(n) == harmonic(2 * n) - harmonic(n) / 2


def test_leibniz_partial_values():
    assert leibniz_partial(0) == 0
    assert leibniz_partial(1) == 1
    assert leibniz_partial(2) == Fraction(2, 3)
    assert leibniz_partial(3) == Fraction(13, 15)


def test_float_streams_match_exact():
    for n in (1, 2, 10, 100, 317):
        assert math.isclose(skew_harmonic_float(n), float(skew_harmonic(n)),
                            rel_tol=0, abs_tol=1e-15)
        assert math.isclose(odd_harmonic_float(n), float(odd_harmonic(n)),
                            rel_tol=1e-15)
        assert math.isclose(leibniz_partial_float(n), float(leibniz_partial(n)),
                            rel_tol=0, abs_tol=1e-15)


def test_negative_index_rejected():
    for fn in (skew_harmonic, odd_harmonic, leibniz_partial,
               skew_harmonic_float, odd_harmonic_float, leibniz_partial_float):
        with pytest.raises(ValueError):
            fn(-1)


# ---------------------------------------------------------------------------
# Stirling and Lah numbers
# ---------------------------------------------------------------------------

def test_stirling_base_and_small_values():
    assert stirling_first(0, 0) == 1
    # x(x-1)(x-2) = x^3 - 3x^2 + 2x
    assert stirling_first(3, 2) == -3
    assert stirling_first(3, 1) == 2
    assert stirling_first(4, 2) == 11
    assert stirling_first(2, 5) == 0
    with pytest.raises(ValueError):
        stirling_first(-1, 0)


def test_stirling_row_sums():
    for k in range(2, 26):
        row = [stirling_first(k, p) for p in range(k + 1)]
        assert sum(row) == 0
        assert sum(abs(v) for v in row) == math.factorial(k)


def test_stirling_truncated_matches_full():
    # the column-truncated table must agree with full rows where both exist
    from quadident.combinatorics import _stirling_row, _stirling_trunc

    for k in range(0, 40):
        row = _stirling_row(k)
        for p in range(0, min(k, 8) + 1):
            assert _stirling_trunc(k, p) == row[p]


def test_lah_values_and_recurrence():
    assert lah(1, 1) == 1
    assert lah(3, 2) == 6
    assert lah(4, 1) == 24
    # closed form equals L(n+1,k) = L(n,k-1) + (n+k) L(n,k)
    for n in range(1, 21):
        for k in range(1, n + 1):
            recur = (lah(n, k - 1) if k > 1 else 0) + (n + k) * lah(n, k)
            assert lah(n + 1, k) == recur
    with pytest.raises(ValueError):
        lah(3, 4)
    with pytest.raises(ValueError):
        lah(3, 0)


# ---------------------------------------------------------------------------
# Arctan-power coefficients
# ---------------------------------------------------------------------------

def test_arctan_power_coeff_values():
    assert arctan_power_coeff(1, 2) == 0  # n < p
    assert arctan_power_coeff(4, 2) == Fraction(-2, 3)
    assert arctan_power_coeff(6, 2) == Fraction(23, 45)


def test_arctan_power_coeff_parity_zeros():
    for p in range(1, 6):
        for n in range(1, 25):
            if n < p or (n - p) % 2:
                assert arctan_power_coeff(n, p) == 0


def test_arctan_power_oracle_equivalence():
    # closed form == power-series route, exactly, for 1 <= p <= 6, n <= 30
    base = arctan_series(30)
    for p in range(1, 7):
        powered = series_pow(base, p)
        for n in range(1, 31):
            expected = powered.coefficient(n)
            assert arctan_power_coeff(n, p) == expected
            assert arctan_power_coeff_lah(n, p) == expected


def test_arctan_power_squared_is_odd_harmonic():
    for n in range(1, 16):
        assert arctan_power_coeff(2 * n, 2) == Fraction((-1) ** (n - 1)) * odd_harmonic(n) / n


def test_arctan_power_coeff_validation():
    with pytest.raises(ValueError):
        arctan_power_coeff(0, 1)
    with pytest.raises(ValueError):
        arctan_power_coeff(3, 0)


# ---------------------------------------------------------------------------
# Rational power series
# ---------------------------------------------------------------------------

def test_series_pow_binomial():
    one_plus_x = RationalPowerSeries((Fraction(1), Fraction(1), Fraction(0)))
    sq = series_pow(one_plus_x, 2)
    assert sq.coefficients == (Fraction(1), Fraction(2), Fraction(1))


def test_series_pow_arctan_square():
    sq = series_pow(arctan_series(6), 2)
    assert sq.coefficient(2) == 1
    assert sq.coefficient(4) == Fraction(-2, 3)
    assert sq.coefficient(6) == Fraction(23, 45)
    assert sq.coefficient(3) == 0


def test_series_pow_identity():
    f = RationalPowerSeries((Fraction(2), Fraction(-1, 3), Fraction(5, 7)))
    assert series_pow(f, 1) == f


def test_product_truncates_to_smaller_order():
    f = arctan_series(8)
    g = arctan_series(4)
    assert (f * g).order == 4


def test_arctan_series_layout():
    s = arctan_series(5)
    assert s.coefficients[1] == 1
    assert s.coefficients[3] == Fraction(-1, 3)
    assert s.coefficients[5] == Fraction(1, 5)
    assert s.coefficients[2] == s.coefficients[4] == 0
    assert arctan_series(4).coefficient(4) == 0
    with pytest.raises(IndexError):
        s.coefficient(6)
    with pytest.raises(ValueError):
        arctan_series(0)
