from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from smallknots.errors import InvalidInput, UndefinedValue, ZeroOverZero
from smallknots.rational import (
    ALL,
    EMPTY,
    INF,
    NEG_INF,
    MobiusMap,
    ParamInterval,
    Unique,
    format_mobius,
    frac_normalize,
    interval_contains,
    make_slope,
    mobius_eval,
    mobius_solve,
)

from conftest import fractions, slopes


def euclid_gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


@pytest.mark.parametrize(
    "num, den, expected",
    [(6, -4, (-3, 2)), (0, 7, (0, 1)), (16, 7, (16, 7)), (-5, -10, (1, 2))],
)
def test_frac_normalize(num, den, expected):
    f = frac_normalize(num, den)
    assert (f.numerator, f.denominator) == expected
    assert euclid_gcd(f.numerator, f.denominator) == 1


def test_frac_normalize_zero_over_zero():
    with pytest.raises(ZeroOverZero):
        frac_normalize(0, 0)


def test_make_slope_infinity():
    assert make_slope(3, 0) is INF
    assert make_slope(-3, 0) is INF


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9).filter(bool))
def test_frac_normalize_canonical(num, den):
    f = frac_normalize(num, den)
    assert f.denominator > 0
    assert euclid_gcd(f.numerator, f.denominator) == 1
    assert f.numerator * den == num * f.denominator
    assert frac_normalize(f.numerator, f.denominator) == f


RECIP_2 = MobiusMap(0, 2, 1, 0)  # 2/t
TWICE = MobiusMap(2, 0, 0, 1)  # 2t


def test_eval_examples():
    assert mobius_eval(RECIP_2, Fraction(0)) is INF
    assert mobius_eval(TWICE, Fraction(3, 2)) == 3
    assert mobius_eval(RECIP_2, INF) == 0


def test_eval_at_infinity_matches_large_t():
    # the exact limit a/c must be approached by evaluation at huge t
    m = MobiusMap(3, -7, 2, 5)
    big = Fraction(10**30)
    assert abs(mobius_eval(m, big) - Fraction(3, 2)) < Fraction(1, 10**25)
    assert mobius_eval(m, INF) == Fraction(3, 2)
    assert mobius_eval(MobiusMap(-2, 6, 0, 1), INF) is INF


def test_degenerate_map_is_constant():
    m = MobiusMap(2, 2, 1, 1)  # (2t+2)/(t+1)
    assert m.is_constant and not m.nondegenerate
    assert m.constant_value() == 2
    assert mobius_eval(m, Fraction(5)) == 2
    assert mobius_eval(m, INF) == 2
    with pytest.raises(UndefinedValue):
        mobius_eval(m, Fraction(-1))


def test_bad_maps_and_points():
    with pytest.raises(InvalidInput):
        MobiusMap(1, 2, 0, 0)
    with pytest.raises(InvalidInput):
        mobius_eval(TWICE, EMPTY)


def test_solve_examples():
    assert mobius_solve(TWICE, Fraction(4)) == Unique(Fraction(2))
    assert mobius_solve(RECIP_2, INF) == Unique(Fraction(0))
    assert mobius_solve(MobiusMap.constant(Fraction(-2)), Fraction(-2)) is ALL
    assert mobius_solve(MobiusMap.constant(Fraction(-2)), Fraction(3)) is None
    assert mobius_solve(TWICE, EMPTY) is None


def test_solve_examples_substitute_back():
    for m, v in [(TWICE, Fraction(4)), (RECIP_2, INF), (RECIP_2, Fraction(0))]:
        assert mobius_eval(m, mobius_solve(m, v).t) == v


maps = st.tuples(*[st.integers(-50, 50)] * 4).filter(
    lambda c: c[0] * c[3] - c[1] * c[2] != 0
).map(lambda c: MobiusMap(*c))


@settings(max_examples=500)
@given(maps, slopes(10**4))
def test_round_trip(m, t):
    v = mobius_eval(m, t)
    assert v is not EMPTY
    assert mobius_solve(m, v) == Unique(t)


@given(maps, maps, slopes(100))
def test_compose(m1, m2, t):
    assert mobius_eval(m1.compose(m2), t) == mobius_eval(m1, mobius_eval(m2, t))


def test_same_map():
    assert MobiusMap(1, 2, 3, 4).same_map(MobiusMap(-2, -4, -6, -8))
    assert not MobiusMap(1, 2, 3, 4).same_map(MobiusMap(1, 2, 3, 5))


def test_interval_examples():
    assert interval_contains(ParamInterval(Fraction(0), INF), INF)
    assert not interval_contains(ParamInterval(Fraction(-1), Fraction(1)), Fraction(2))
    assert interval_contains(ParamInterval(Fraction(1), INF), Fraction(1))
    assert not interval_contains(ParamInterval(Fraction(0), Fraction(1)), INF)
    assert interval_contains(ParamInterval(NEG_INF, Fraction(0)), INF)
    assert not interval_contains(ParamInterval(Fraction(0), INF), EMPTY)


def test_interval_rejects_reversed_bounds():
    with pytest.raises(InvalidInput):
        ParamInterval(Fraction(2), Fraction(1))


@given(fractions(1000), fractions(1000), fractions(1000))
def test_interval_membership_is_order(a, b, t):
    lo, hi = min(a, b), max(a, b)
    assert interval_contains(ParamInterval(lo, hi), t) == (lo <= t <= hi)


@pytest.mark.parametrize(
    "m, var, text",
    [
        (MobiusMap(0, 2, 1, 0), "t", "2/t"),
        (MobiusMap(-2, -6, 0, 1), "t", "-2t - 6"),
        (MobiusMap(-6, -2, 1, 0), "t", "-2/t - 6"),
        (MobiusMap(3, -5, 0, 1), "s", "3s - 5"),
        (MobiusMap(1, 1, 1, 2), "t", "(t + 1)/(t + 2)"),
    ],
)
def test_format_mobius(m, var, text):
    assert format_mobius(m, var) == text
