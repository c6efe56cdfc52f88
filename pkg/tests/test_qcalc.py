from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qgrass.errors import HypothesisViolated, MissingX, UnknownLemma
from qgrass.qcalc import (
    CSV_HEADER,
    LEMMA_IDS,
    ParamPoint,
    alt_sum_identity,
    alt_sum_terms,
    check_point,
    default_lemma_grid,
    f1,
    f2,
    f3,
    f_eval,
    g1,
    g2,
    g3,
    g_eval,
    hypothesis_check,
    lemma_grid_check,
    min_n,
    nprime_count,
    power_at_least,
    qbinom,
)


def qbinom_product(a, b, q):
    # independent oracle: the product formula, evaluated as an exact fraction
    if b < 0 or b > a:
        return 0
    val = Fraction(1)
    for i in range(b):
        val *= Fraction(q ** (a - i) - 1, q ** (i + 1) - 1)
    assert val.denominator == 1
    return int(val)


def test_qbinom_examples():
    assert qbinom(4, 2, 2) == 35
    assert qbinom(7, 0, 3) == 1
    assert qbinom(3, -1, 2) == 0
    assert qbinom(3, 4, 2) == 0


@given(st.integers(0, 30), st.integers(-2, 32), st.sampled_from([2, 3, 4, 5, 7, 16]))
def test_qbinom_product_formula(a, b, q):
    assert qbinom(a, b, q) == qbinom_product(a, b, q)


def test_symmetry_and_pascal_grid():
    for q in (2, 3, 4, 5):
        for n in range(41):
            for k in range(n + 1):
                assert qbinom(n, k, q) == qbinom(n, n - k, q)
                if 1 <= k:
                    assert qbinom(n, k, q) == qbinom(n - 1, k - 1, q) + q**k * qbinom(n - 1, k, q)


def test_nprime_examples():
    assert nprime_count(0, 0, 2, 1, 3, 2, 2) == 42
    assert nprime_count(0, 0, 2, 0, 3, 2, 2) == 112
    for m, h in [(2, 1), (3, 2), (1, 0)]:
        assert nprime_count(m, h, m, h, 3, 2, 2) == 1


def test_nprime_sums_to_grassmannian():
    for q in (2, 3):
        for n in range(1, 9):
            for l in range(n + 1):
                e = n - l
                for m in range(n + 1):
                    total = sum(nprime_count(0, 0, m, h, e, l, q)
                                for h in range(max(0, m - e), min(m, l) + 1))
                    assert total == qbinom(n, m, q)


def test_nprime_hypothesis_named():
    with pytest.raises(HypothesisViolated) as ei:
        nprime_count(0, 0, 4, 0, 3, 2, 2)
    assert ei.value.inequality == "m - h <= e"


def test_f_examples():
    assert f1(12, 3, 1, 1, 2, 2) == 3 * 7 * qbinom(10, 1, 2) + 3 == 21486
    for n, k, t, s, q in product((10, 14), (3, 4), (1, 2), (1, 2), (2, 3)):
        assert f1(n, k, t, s, t, q) == qbinom(n - t, k - t, q)
        expect = qbinom(n - t, k - t, q) + q ** (k - t + 1) * qbinom(k - t, 1, q) * qbinom(t, 1, q) + s
        assert f3(n, k, t, s, k, q) == expect


def test_f_eval_requires_x():
    with pytest.raises(MissingX):
        f_eval("f2", ParamPoint(n=10, k=3, t=1, s=1, q=2))
    p = ParamPoint(n=12, k=3, t=1, s=1, q=2, x=2)
    assert f_eval("f1", p) == 21486
    assert f_eval("f2", p) == f2(12, 3, 1, 1, 2, 2)


def test_g_examples():
    assert g1(6, 2, 1, 1, 2) == 128
    assert g2(5, 2, 1, 2) == 43
    # large s: min picks q^(k-t+1)[t 1]
    n, k, t, q, s = 9, 3, 1, 2, 10**6
    first = qbinom(n - t, k - t, q) - q ** ((k - t) * (k + 1 - t)) * qbinom(n - k - 1, k - t, q) + s
    assert g1(n, k, t, s, q) == first * (qbinom(n - t, k - t, q) + q ** (k - t + 1) * qbinom(t, 1, q))
    p = ParamPoint(n=6, k=2, t=1, s=1, q=2)
    assert g_eval("g1", p) == 128
    assert g_eval("g3", p) == g3(6, 2, 1, 1, 2)


def test_alt_sum_examples():
    r = alt_sum_identity(6, 2, 1, 2)
    assert r.lhs == r.rhs == 3
    r = alt_sum_identity(9, 4, 4, 3)
    assert r.lhs == r.rhs == 0 and r.terms == ()
    with pytest.raises(HypothesisViolated):
        alt_sum_identity(5, 2, 3, 2)


def test_alt_sum_grid():
    for q in (2, 3):
        for t in range(0, 4):
            for k in range(t, t + 6):
                for n in range(k + 1, 21):
                    assert alt_sum_identity(n, k, t, q).holds


def test_alt_sum_against_type_counts():
    # count of (k-t)-spaces of V/W meeting the (k+1-t)-space M/W nontrivially
    n, k, t, q = 10, 4, 1, 2
    lhs = alt_sum_identity(n, k, t, q).lhs
    e, l, m = n - k - 1, k + 1 - t, k - t
    assert lhs == sum(nprime_count(0, 0, m, h, e, l, q) for h in range(1, min(m, l) + 1))
    assert len(alt_sum_terms(n, k, t, q)) == k - t


def test_power_at_least_examples():
    assert power_at_least(2, 17 - 13, 13)
    assert not power_at_least(2, 15 - 13, 13)
    assert power_at_least(2, -1, 0)
    assert not power_at_least(2, -1, 1)
    assert min_n(13, 13, 2) == 17


def test_hypothesis_transcription():
    p = ParamPoint(n=17, k=3, t=1, s=1, q=2)
    assert hypothesis_check("g1-lemma", p)
    assert not hypothesis_check("g1-lemma", ParamPoint(n=15, k=3, t=1, s=1, q=2))
    assert hypothesis_check("cover-bound", ParamPoint(n=6, k=3, t=1, s=1, q=2))
    with pytest.raises(UnknownLemma):
        hypothesis_check("no-such-lemma", p)


def test_stability_excludes_4_2():
    big = ParamPoint(n=60, k=4, t=2, s=1, q=2)
    assert not hypothesis_check("stability-theorem", big)
    assert hypothesis_check("stability-theorem", ParamPoint(n=60, k=5, t=2, s=1, q=2))


def test_f1_lemma_needs_l():
    p = ParamPoint(n=40, k=3, t=1, s=1, q=2)
    assert not hypothesis_check("f1-decreasing", p)
    assert hypothesis_check("f1-decreasing", ParamPoint(n=40, k=3, t=1, s=1, q=2, l=1))


def test_examples_of_basic_bounds():
    v = check_point("basic-bounds.iv", ParamPoint(n=4, k=2, t=1, s=1, q=2))
    assert v.claim_holds and v.lhs == v.rhs == 35
    v = check_point("basic-bounds.i", ParamPoint(n=2, k=1, t=1, s=1, q=2))
    assert v.hypothesis_met and v.claim_holds


@pytest.mark.parametrize("lemma_id", LEMMA_IDS)
def test_default_grids_pass(lemma_id):
    grid = default_lemma_grid(lemma_id)
    verdicts = lemma_grid_check(lemma_id, grid)
    met = [v for v in verdicts if v.hypothesis_met]
    assert len(met) >= 20
    assert all(v.claim_holds for v in met), [v for v in met if not v.claim_holds][:3]


def test_grid_parallel_matches_serial():
    grid = default_lemma_grid("g1-25-26")[:16]
    assert lemma_grid_check("g1-25-26", grid, jobs=2) == lemma_grid_check("g1-25-26", grid)


def test_hypothesis_failure_is_reported_not_raised():
    v = check_point("g1-lt-g2", ParamPoint(n=8, k=5, t=3, s=1, q=2))
    assert not v.hypothesis_met


def test_csv_row_layout():
    v = check_point("basic-bounds.iv", ParamPoint(n=4, k=2, t=1, s=1, q=2))
    row = v.csv_row()
    assert len(row) == len(CSV_HEADER)
    assert row[0] == "basic-bounds.iv" and row[-2:] == ["35", "35"]


def test_unknown_lemma():
    with pytest.raises(UnknownLemma):
        check_point("nope", ParamPoint(n=4, k=2, t=1, s=1, q=2))
