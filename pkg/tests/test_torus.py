import random
from fractions import Fraction

import pytest

from beatty_games.exactreal import RealNumber, parse_real
from beatty_games.sturmian import CircleInterval, TorusPoint
from beatty_games.torus import (
    LineSpec,
    NotDependent,
    Rectangle,
    ScanBudgetExceeded,
    line_closure,
    orbit_hits,
    orbit_point,
    rect_line_intersect,
    scan_orbit,
    torus_svg,
)

LINE_ALPHA = parse_real("(3+sqrt(17))/2")
LINE_BETA = parse_real("(7+sqrt(17))/8")


def brute_first(t, rect, start, stop):
    for i in range(start, stop):
        x, y = orbit_point(t, i)
        if rect.contains(x, y):
            return i
    return None


def test_line_relation_small_coefficients():
    line = line_closure((LINE_ALPHA, LINE_BETA), start=(0, 0))
    assert (line.p, line.q, line.r) in {(1, -4, -2), (-1, 4, 2)}
    assert line.direction in {(4, 1), (-4, -1)}
    assert line.c == 0


def test_line_conservation():
    x = y = RealNumber(0)
    for _ in range(1000):
        x, y = (x + LINE_ALPHA).frac(), (y + LINE_BETA).frac()
        v = x - 4 * y
        assert v == v.floor()


def test_independent_raises(deg4):
    assert deg4.dependence is None
    with pytest.raises(NotDependent):
        line_closure(deg4)


def test_orbit_on_line(any_tuple):
    if any_tuple.dependence is None:
        return
    line = line_closure(any_tuple)
    for i in range(0, 200, 13):
        assert line.contains(*orbit_point(any_tuple, i))


def random_rect(rng, width):
    x0 = Fraction(rng.randrange(1000), 1000)
    y0 = Fraction(rng.randrange(1000), 1000)
    w = Fraction(rng.randint(1, width), 1000)
    h = Fraction(rng.randint(1, width), 1000)
    return Rectangle(CircleInterval(x0, x0 + w), CircleInterval(y0, y0 + h))


@pytest.mark.parametrize("name", ["line17", "good_pos", "deg4"])
def test_scan_agrees_with_decision(name, request):
    t = request.getfixturevalue(name)
    rng = random.Random(sum(map(ord, name)))
    hits = misses = 0
    for _ in range(50):
        rect = random_rect(rng, 80)
        decided = orbit_hits(t, rect, witness=False)
        found = scan_orbit(t, rect, 1, 100_000)
        if decided.hit:
            hits += 1
            if found is not None and found < 2000:
                assert found == brute_first(t, rect, 1, found + 1)
        else:
            misses += 1
            assert found is None
    assert hits > 0
    if t.dependence is None:
        assert misses == 0
    elif name == "line17":
        assert misses > 0


def test_line17_witnesses_found(line17):
    rng = random.Random(4)
    for _ in range(50):
        rect = random_rect(rng, 80)
        ans = orbit_hits(line17, rect, budget=10**6)
        if ans.hit:
            assert rect.contains(*orbit_point(line17, ans.witness))
        else:
            assert rect_line_intersect(line_closure(line17), rect).kind != "arc"


def test_line_case_misses_exist(line17):
    rng = random.Random(2)
    seen = 0
    for _ in range(100):
        rect = random_rect(rng, 20)
        if not orbit_hits(line17, rect, witness=False).hit:
            assert rect_line_intersect(line_closure(line17), rect).kind == "empty"
            seen += 1
    assert seen > 0


def test_corner_touch_upper_left(line17):
    # the line leaves the orbit point through the lower-left and upper-right,
    # so a box hanging below-right of it is touched only at an excluded corner
    x0, y0 = orbit_point(line17, 5)
    eps = Fraction(1, 10**6)
    line = line_closure(line17)
    dx, dy = line.direction
    if dx * dy > 0:
        rect = Rectangle(CircleInterval(x0, x0 + eps), CircleInterval(y0 - eps, y0))
        assert rect_line_intersect(line, rect).kind == "empty"
        ans = orbit_hits(line17, rect, budget=10**5)
        assert not ans.hit


def test_corner_point_lower_left_exact():
    line = LineSpec(1, 1, 0, parse_real("sqrt(2)/3").frac())
    x0 = parse_real("sqrt(2)/6")
    y0 = parse_real("sqrt(2)/6")
    eps = Fraction(1, 100)
    rect = Rectangle(CircleInterval(x0, x0 + eps), CircleInterval(y0, y0 + eps))
    inter = rect_line_intersect(line, rect)
    assert inter.kind == "points" and inter.points[0] == (x0, y0)
    shifted = Rectangle(CircleInterval(x0 - eps, x0), CircleInterval(y0 - eps, y0))
    assert rect_line_intersect(line, shifted).kind == "empty"


def test_exact_corner_hit(bad_neg):
    # an orbit point sitting exactly on a rectangle's lower-left corner
    x0, y0 = orbit_point(bad_neg, 9)
    big = Fraction(1, 50)
    rect = Rectangle(CircleInterval(x0, x0 + big), CircleInterval(y0, y0 + big))
    ans = orbit_hits(bad_neg, rect, budget=10**6)
    assert ans.hit and ans.witness <= 9
    assert rect.contains(*orbit_point(bad_neg, ans.witness))


def test_from_index(good_neg):
    x0, y0 = orbit_point(good_neg, 0)
    tiny = Fraction(1, 10**9)
    rect = Rectangle(CircleInterval(x0, x0 + tiny), CircleInterval(y0, y0 + tiny))
    assert orbit_hits(good_neg, rect, from_index=0).witness == 0


def test_empty_rectangle(good_neg):
    rect = Rectangle(CircleInterval.empty(), CircleInterval.full())
    assert orbit_hits(good_neg, rect).verdict == "NoHit"


def test_budget_exceeded(deg4):
    tiny = Fraction(1, 10**12)
    rect = Rectangle(CircleInterval(Fraction(1, 3), Fraction(1, 3) + tiny),
                     CircleInterval(Fraction(1, 7), Fraction(1, 7) + tiny))
    with pytest.raises(ScanBudgetExceeded):
        orbit_hits(deg4, rect, budget=1000)
    assert orbit_hits(deg4, rect, witness=False).hit


def test_svg(bad_neg):
    svg = torus_svg(bad_neg, 10)
    assert svg.startswith("<svg") and svg.count("<circle") == 11
    start = TorusPoint(bad_neg.gamma, bad_neg.delta)
    assert start.x == orbit_point(bad_neg, 0)[0]
