import pytest

from beatty_games.beatty import derive_tuple
from beatty_games.exactreal import parse_real

GOOD_NEG = dict(beta="1.99+sqrt(5)/2", gamma="-0.2")
GOOD_POS = dict(beta="8+(1+sqrt(5))/2", delta="-5*sqrt(7)/2")
BAD_NEG = dict(beta="3.99+sqrt(5)/2", gamma="-0.2")
BAD_POS = dict(beta="4.99+sqrt(5)/2", delta="-1-sqrt(2)")
# beta of degree 4, so alpha, beta, 1 are rationally independent
DEG4 = dict(beta="sqrt(2)+sqrt(3)", gamma="-1/10")
# floor(beta) = 2 with a dense orbit: the letter a occurs, prefix b offends
DENSE2 = dict(beta="sqrt(2)+sqrt(3)-1", delta="9/10")

# small line relation 4*alpha - beta = 2, so orbits wrap quickly
LINE17 = dict(beta="(3+sqrt(17))/2", gamma="-1/10")

FIXTURES = {
    "good_neg": GOOD_NEG,
    "good_pos": GOOD_POS,
    "bad_neg": BAD_NEG,
    "bad_pos": BAD_POS,
    "deg4": DEG4,
    "dense2": DENSE2,
    "line17": LINE17,
}


def tuple_of(name):
    return derive_tuple(**FIXTURES[name])


@pytest.fixture(scope="session")
def good_neg():
    return tuple_of("good_neg")


@pytest.fixture(scope="session")
def good_pos():
    return tuple_of("good_pos")


@pytest.fixture(scope="session")
def bad_neg():
    return tuple_of("bad_neg")


@pytest.fixture(scope="session")
def bad_pos():
    return tuple_of("bad_pos")


@pytest.fixture(scope="session")
def deg4():
    return tuple_of("deg4")


@pytest.fixture(scope="session")
def dense2():
    return tuple_of("dense2")


@pytest.fixture(scope="session")
def line17():
    return tuple_of("line17")


@pytest.fixture(scope="session", params=sorted(FIXTURES))
def any_tuple(request):
    return tuple_of(request.param)


@pytest.fixture(scope="session")
def golden_inverse():
    return parse_real("(sqrt(5)-1)/2")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
