import random

import mpmath
import pytest

from beatty_games.beatty import (
    InvalidTuple,
    Tuple4,
    a_n,
    b_n,
    check_partition,
    check_superadditivity,
    derive_tuple,
    make_tuple,
    sequence_table_tsv,
    tuple_from_record,
    tuple_record,
    validate_tuple,
)
from beatty_games.exactreal import parse_real

from conftest import GOOD_NEG, FIXTURES, tuple_of

mpmath.mp.dps = 50


def mp_floors(beta_mp, delta_mp, n):
    return [0] + [int(mpmath.floor(k * beta_mp + delta_mp)) for k in range(1, n + 1)]


def test_derive_from_gamma(bad_neg):
    assert round(float(bad_neg.alpha), 3) == 1.243
    assert abs(float(bad_neg.delta) - 0.8216) < 1e-3
    assert validate_tuple(bad_neg).ok


def test_derive_from_delta(bad_pos):
    assert round(float(bad_pos.alpha), 3) == 1.196
    assert round(float(bad_pos.gamma), 3) == 0.473


def test_good_pos_tables(good_pos):
    assert good_pos.B1 == 3
    assert [a_n(good_pos, n) for n in range(1, 16)] == [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17]
    assert [b_n(good_pos, n) for n in range(1, 16)] == [3, 12, 22, 31, 41, 51, 60, 70, 79, 89, 99, 108, 118, 128, 137]


def test_zero_index(any_tuple):
    assert (a_n(any_tuple, 0), b_n(any_tuple, 0)) == (0, 0)
    with pytest.raises(ValueError):
        a_n(any_tuple, -1)


def test_bad_neg_a_differences(bad_neg):
    A = bad_neg.A_upto(19)
    assert [A[n + 1] - A[n] for n in range(19)] == [1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 1]


def eval_expr(text):
    return mpmath.mpf(eval(text, {"sqrt": mpmath.sqrt}, {}))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_sequences_match_mpmath(name):
    params = FIXTURES[name]
    beta = eval_expr(params["beta"])
    alpha = beta / (beta - 1)
    if "gamma" in params:
        gamma = eval_expr(params["gamma"])
        delta = -beta * gamma / alpha
    else:
        delta = eval_expr(params["delta"])
        gamma = -alpha * delta / beta
    t = tuple_of(name)
    assert t.B_upto(3000) == mp_floors(beta, delta, 3000)
    assert t.A_upto(3000) == mp_floors(alpha, gamma, 3000)


def test_validate_good_neg():
    rep = validate_tuple(derive_tuple(**GOOD_NEG, validate=False))
    assert rep.ok and rep.B1 == 3
    assert not rep.undecided_regime


def test_nonintegral_failure_witness(bad_neg):
    t = Tuple4(bad_neg.alpha, bad_neg.beta, bad_neg.gamma, parse_real("-sqrt(5)/2 - 99/100"))
    rep = validate_tuple(t)
    assert not rep["nonintegral"].ok
    assert rep["nonintegral"].witness == 1


def test_nonintegral_mixed_radicals(good_pos):
    # radical parts of beta and delta live over different square roots
    rep = validate_tuple(good_pos)
    assert rep["nonintegral"].ok and not rep.nonintegral_unverified
    beta = 8 + (1 + mpmath.sqrt(5)) / 2
    delta = -5 * mpmath.sqrt(7) / 2
    for n in range(1, 10001):
        v = n * beta + delta
        assert abs(v - mpmath.nint(v)) > mpmath.mpf(10) ** -30


def test_derive_rejects():
    with pytest.raises(ValueError):
        derive_tuple("2", gamma="-0.2")
    with pytest.raises(ValueError):
        derive_tuple("1.99+sqrt(5)/2")
    with pytest.raises(InvalidTuple):
        derive_tuple("1.99+sqrt(5)/2", gamma="0.9")  # gamma >= 2 - alpha


def test_gamma_zero_rejected():
    with pytest.raises(InvalidTuple) as exc:
        derive_tuple("1.99+sqrt(5)/2", gamma="0")
    assert "gamma_nonzero" in str(exc.value)


def test_b1_two_flagged():
    t = derive_tuple("2+sqrt(2)/3", delta="-1/100", validate=False)
    rep = validate_tuple(t)
    assert rep.B1 == 2 and rep.undecided_regime


def test_record_round_trip(good_pos):
    rec = tuple_record(good_pos)
    assert rec["B1"] == 3 and rec["floor_beta"] == 9 and rec["gamma_sign"] == "positive"
    t = tuple_from_record(rec)
    assert t.B_upto(50) == good_pos.B_upto(50)


def test_table_tsv(good_pos):
    rows = sequence_table_tsv(good_pos, 15).splitlines()
    assert rows[0].split("\t") == ["n", "A_n", "B_n", "A_diff", "B_diff"]
    assert rows[-1].split("\t")[:3] == ["15", "17", "137"]


def test_partition_good_pos(good_pos):
    assert check_partition(good_pos, 137).ok


def test_partition_good_neg(good_neg):
    assert check_partition(good_neg, 10_000).ok


def test_partition_defect_on_corrupted_tuple(good_neg):
    bad = Tuple4(good_neg.alpha, good_neg.beta, good_neg.gamma + parse_real("1/10"), good_neg.delta)
    rep = check_partition(bad, 10_000)
    assert not rep.ok
    # brute-force oracle: first integer not covered exactly once
    A = set(bad.A_upto(10_000)[1:])
    B = set(bad.B_upto(10_000)[1:])
    first = next(k for k in range(1, 10_001) if (k in A) + (k in B) != 1)
    assert rep.defect["value"] == first


def test_superadditivity_good_pos(good_pos):
    rep = check_superadditivity(good_pos, 60)
    assert rep.status == "superadditive_only"
    assert (1, 2) in rep.upper_witnesses
    B = good_pos.B_upto(3)
    assert B[3] == 22 and B[1] + B[2] + B[1] == 18


def test_superadditivity_good_neg(good_neg):
    rep = check_superadditivity(good_neg, 50)
    assert rep.status == "not_superadditive"
    m, n = rep.lower_witness
    assert good_neg.B(m) + good_neg.B(n) > good_neg.B(m + n)


def test_superadditivity_adaptive(good_neg):
    # a horizon too short to contain the witness forces the diagonal search
    rep = check_superadditivity(good_neg, 2)
    m, n = rep.lower_witness
    assert m == n and 2 * good_neg.B(n) > good_neg.B(2 * n)


def test_b1_superadditive_implies_superadditive():
    rng = random.Random(5)
    for _ in range(20):
        d = rng.choice([2, 3, 5, 7])
        t = derive_tuple(f"{rng.randint(3, 9)}+sqrt({d})/{rng.randint(2, 9)}",
                         delta=f"-{rng.randint(1, 99)}/100", validate=False)
        if not validate_tuple(t).ok:
            continue
        rep = check_superadditivity(t, 40)
        if rep.status == "B1_superadditive":
            assert rep.lower_witness is None


def test_gap_ranges_and_monotone_difference(any_tuple):
    t = any_tuple
    A, B = t.A_upto(10_001), t.B_upto(10_001)
    fb = t.floor_beta
    assert all(A[n + 1] - A[n] in (1, 2) for n in range(10_000))
    assert all(B[n + 1] - B[n] in (fb, fb + 1) for n in range(1, 10_000))
    assert all(B[n + 1] - A[n + 1] >= B[n] - A[n] for n in range(10_000))


def test_difference_inequality(any_tuple):
    t = any_tuple
    A, B = t.A_upto(400), t.B_upto(400)
    rng = random.Random(11)
    checked = 0
    while checked < 300:
        m, n = sorted(rng.sample(range(400), 2))
        l, k = sorted(rng.sample(range(400), 2))
        delta = (A[n] - A[m]) - (A[k] - A[l])
        if delta >= 2:
            assert B[n] - B[m] > B[k] - B[l] + delta - 4
            checked += 1


def test_validation_implies_partition():
    for name in FIXTURES:
        t = tuple_of(name)
        assert validate_tuple(t).ok
        assert check_partition(t, 10_000).ok


def test_make_tuple_explicit(good_pos):
    t = make_tuple(str(good_pos.alpha), str(good_pos.beta), str(good_pos.gamma), str(good_pos.delta))
    assert t.B_upto(15) == good_pos.B_upto(15)
