from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beatty_games.exactreal import parse_real, sqrt
from beatty_games.sturmian import (
    CircleInterval,
    TorusPoint,
    factor_interval,
    heavy_count,
    heavy_light_interval,
    is_balanced,
    is_heavy,
    letter_interval,
    mech_letter,
    mechanical_word,
    parse_word,
    region_coding,
    rotate,
    word_to_str,
)

FIB_LIGHT = {"01011", "01101", "10101", "10110", "11010"}


def factors(word, n):
    return {word_to_str(word[i:i + n]) for i in range(len(word) - n + 1)}


def test_fibonacci_prefix(golden_inverse):
    # the characteristic word starts at n = 1
    w = mechanical_word(golden_inverse, 0, 21, start=1)
    assert word_to_str(w) == "101101011011010110101"


def test_fibonacci_heavy_light(golden_inverse):
    w = mechanical_word(golden_inverse, 0, 2000)
    f5 = factors(w, 5)
    assert len(f5) == 6  # complexity n + 1
    heavy = {f for f in f5 if is_heavy(golden_inverse, parse_word(f))}
    assert heavy == {"11011"}
    assert f5 - heavy == FIB_LIGHT
    assert heavy_count(golden_inverse, 5) == 4


def test_mech_letter_matches_mpmath():
    lam = parse_real("sqrt(7)-2")
    rho = parse_real("1/3")
    ml, mr = mpmath.sqrt(7) - 2, mpmath.mpf(1) / 3
    got = mechanical_word(lam, rho, 500)
    want = [int(mpmath.floor((n + 1) * ml + mr) - mpmath.floor(n * ml + mr)) for n in range(500)]
    assert got == want
    assert all(mech_letter(lam, rho, n) == want[n] for n in range(0, 500, 37))


def test_mechanical_word_start_offset():
    lam = sqrt(2)
    assert mechanical_word(lam, 0, 10, start=5) == mechanical_word(lam, 0, 15)[5:]


def test_slope_positive():
    with pytest.raises(ValueError):
        mechanical_word(-sqrt(2), 0, 3)


def test_circle_interval_basics():
    half = Fraction(1, 2)
    I = CircleInterval(Fraction(3, 4), Fraction(1, 4))  # wraps
    assert I.contains(0) and I.contains(Fraction(9, 10)) and not I.contains(half)
    assert I.length() == half
    assert I.lo == Fraction(3, 4) and I.hi == Fraction(1, 4)
    assert CircleInterval(half, half).is_empty()
    assert I.complement() == CircleInterval(Fraction(1, 4), Fraction(3, 4))
    assert (I & I.complement()).is_empty()
    assert CircleInterval.full().is_full()
    assert I.shift(Fraction(1, 4)) == CircleInterval(0, half)


@settings(max_examples=60, deadline=None)
@given(st.fractions(0, 1), st.fractions(0, 1), st.fractions(0, 1), st.fractions(-3, 3))
def test_shift_contains(lo, hi, x, t):
    if lo == 1 or hi == 1 or x == 1:
        return
    I = CircleInterval(lo, hi)
    assert I.contains(x) == I.shift(t).contains(x + t)
    assert I.contains(x) != I.complement().contains(x)


def test_torus_point_reduction():
    p = TorusPoint(parse_real("3/2"), parse_real("-1/4"))
    assert p.x == Fraction(1, 2) and p.y == Fraction(3, 4)
    q = rotate(sqrt(2), TorusPoint(0))
    assert q == TorusPoint(sqrt(2) - 1)
    with pytest.raises(ValueError):
        rotate(sqrt(2), TorusPoint(0, 0))


def test_letter_interval(golden_inverse):
    w = mechanical_word(golden_inverse, 0, 200)
    for n in range(200):
        rho = (golden_inverse * n).frac()
        assert letter_interval(golden_inverse, w[n]).contains(rho)


def test_factor_interval_matches_occurrences(golden_inverse):
    lam = golden_inverse
    w = mechanical_word(lam, 0, 400)
    for f in sorted(factors(w, 5)):
        J = factor_interval(parse_word(f), lam)
        for n in range(len(w) - 5):
            here = word_to_str(w[n:n + 5]) == f
            assert J.contains((lam * n).frac()) == here


def test_factor_interval_rejects_foreign_letters(golden_inverse):
    assert factor_interval([2, 0], golden_inverse).is_empty()


def test_heavy_light_interval_partition():
    lam = parse_real("3+sqrt(3)/4")
    w = mechanical_word(lam, parse_real("1/5"), 1500)
    for L in (1, 2, 5, 13):
        H = heavy_light_interval(lam, L, "Heavy")
        Lt = heavy_light_interval(lam, L, "Light")
        assert H.complement() == Lt
        hc = heavy_count(lam, L)
        for n in range(0, 1400, 7):
            rho = (lam * n + parse_real("1/5")).frac()
            s = sum(w[n:n + L])
            assert s in (hc, hc - 1)
            assert H.contains(rho) == (s == hc)


def test_heavy_light_bad_kind():
    with pytest.raises(ValueError):
        heavy_light_interval(sqrt(2), 3, "medium")
    with pytest.raises(ValueError):
        heavy_light_interval(sqrt(2), 0, "Heavy")


@pytest.mark.parametrize("lam", ["sqrt(2)", "(sqrt(5)-1)/2", "5+sqrt(13)/3", "sqrt(2)+sqrt(3)"])
def test_balance(lam):
    w = mechanical_word(parse_real(lam), parse_real("2/7"), 10_000)
    assert is_balanced(w[:3000], 40)
    fl = parse_real(lam).floor()
    assert set(w) <= {fl, fl + 1}


def test_unbalanced_detected():
    assert not is_balanced([0, 0, 1, 1], 2)
    with pytest.raises(ValueError):
        is_balanced([0, 1], 3)


def test_region_coding_bad_neg(bad_neg):
    s = region_coding(bad_neg.alpha, bad_neg.beta, TorusPoint(bad_neg.gamma, bad_neg.delta), 10)
    assert s == "cbaacaaaacb"


def test_word_round_trip():
    assert parse_word(word_to_str([1, 0, 1])) == [1, 0, 1]
    assert parse_word(word_to_str([10, 11])) == [10, 11]
    assert parse_word("") == []
