import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperpow import PoleError, TableSizeError, build_table, digamma, excluded_alphas
from hyperpow.coefficients import ParameterPoint, get


def exact_table(alpha: Fraction, n_max: int, m_max: int):
    t = [[Fraction(1)] * (m_max + 1)]
    for n in range(1, n_max + 1):
        row, acc = [], Fraction(0)
        for m in range(m_max + 1):
            acc += t[n - 1][m] / (m + n * alpha)
            row.append(acc)
        t.append(row)
    return t


@pytest.mark.parametrize("alpha", [Fraction(1, 4), Fraction(1), Fraction(5, 2), Fraction(-7, 10)])
def test_matches_rational_arithmetic(alpha):
    ref = exact_table(alpha, 4, 40)
    table = build_table(float(alpha), 4, 40)
    for n in range(5):
        for m in range(41):
            assert table.get(n, m) == pytest.approx(float(ref[n][m]), rel=1e-14)


def test_seeds():
    table = build_table(0.7, 5, 30)
    assert np.all(table.row(0) == 1.0)
    for n in range(6):
        assert table.get(n, 0) * math.factorial(n) * 0.7 ** n == pytest.approx(1.0, abs=1e-14)


def test_level_one_is_digamma_difference():
    a = 1.3
    table = build_table(a, 1, 200)
    for k in (0, 1, 10, 200):
        assert table.get(1, k) == pytest.approx(digamma(k + 1 + a) - digamma(a), rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.01, max_value=20.0), st.integers(1, 5), st.integers(1, 60))
def test_recurrence_bit_for_bit(alpha, n_max, m_max):
    # positive alpha: every entry is exactly neighbour + increment
    t = build_table(alpha, n_max, m_max)
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            assert t.get(n, m) == t.get(n, m - 1) + t.get(n - 1, m) / (m + n * alpha)


def test_levels_monotone_for_positive_alpha():
    t = build_table(0.4, 4, 100)
    for n in range(1, 5):
        assert np.all(np.diff(t.row(n)) > 0)


def test_read_only():
    t = build_table(0.5, 2, 5)
    with pytest.raises(ValueError):
        t.values[1, 1] = 0.0


def test_index_errors():
    t = build_table(0.5, 2, 5)
    for n, m in [(3, 0), (0, 6), (-1, 0)]:
        with pytest.raises(IndexError):
            t.get(n, m)
    assert get(t, 2, 5) == t.get(2, 5)


def test_bad_sizes():
    with pytest.raises(TableSizeError):
        build_table(0.5, -1, 3)


def test_csv_round_trip():
    t = build_table(0.3, 2, 4)
    lines = t.to_csv().splitlines()
    assert lines[0] == "n,m,value"
    assert len(lines) == 1 + 3 * 5
    n, m, v = lines[-1].split(",")
    assert float(v) == t.get(int(n), int(m))


def test_excluded_set_small():
    assert excluded_alphas(2, 1) == [Fraction(-1), Fraction(-1, 2), Fraction(0)]


@pytest.mark.parametrize("n_max,m_max", [(3, 6), (5, 10)])
def test_every_excluded_alpha_raises(n_max, m_max):
    for frac in excluded_alphas(n_max, m_max):
        with pytest.raises(PoleError) as info:
            build_table(float(frac), n_max, m_max)
        if frac != 0:
            n, m = info.value.index
            assert m + n * frac == 0
            assert f"n={n}" in str(info.value) and f"m={m}" in str(info.value)


def test_nearby_alpha_is_fine():
    t = build_table(-0.5 + 1e-6, 3, 10)
    assert np.all(np.isfinite(t.values))


def test_nonfinite_alpha():
    for a in (math.nan, math.inf):
        with pytest.raises(ValueError):
            ParameterPoint(a)
