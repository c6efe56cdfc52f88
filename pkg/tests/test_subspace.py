import random

import pytest
from hypothesis import given, settings, strategies as st

from qgrass.errors import DimensionMismatch, DimensionOrder, EntryOutOfRange, AmbientMismatch, BudgetExceeded
from qgrass.qcalc import qbinom
from qgrass.subspace import (
    Ambient,
    canonicalize,
    contains,
    enumerate_between,
    enumerate_containing,
    enumerate_type,
    grassmannian_enumerate,
    intersect_dim,
    meet_dim,
    sum_span,
    unit_span,
)


def e(amb, *idx):
    return unit_span(amb, [i - 1 for i in idx])


def test_canonicalize_examples():
    a3 = Ambient(2, 3)
    s = canonicalize(a3, [(1, 1, 0), (0, 1, 0)])
    assert s.rows() == [[1, 0, 0], [0, 1, 0]] and s.dim == 2
    assert canonicalize(a3, [(0, 0, 0)]).dim == 0
    s = canonicalize(Ambient(5, 2), [(1, 2), (2, 4)])
    assert s.dim == 1 and s.rows() == [[1, 2]]


def test_canonicalize_rejects_bad_input():
    a = Ambient(3, 3)
    with pytest.raises(DimensionMismatch):
        canonicalize(a, [(1, 0)])
    with pytest.raises(EntryOutOfRange):
        canonicalize(a, [(1, 3, 0)])


def test_meet_examples():
    a = Ambient(2, 4)
    d, m = intersect_dim(e(a, 1, 2), e(a, 2, 3))
    assert d == 1 and m == e(a, 2)
    x = e(a, 1, 3)
    assert intersect_dim(x, x) == (2, x)
    assert meet_dim(e(a, 1), e(a, 2)) == 0


def test_sum_examples():
    a = Ambient(2, 4)
    assert sum_span(e(a, 1, 2), e(a, 2, 3)) == e(a, 1, 2, 3)
    x = e(a, 1, 4)
    assert sum_span(x, a.zero()) == x
    b = Ambient(2, 2)
    l1, l2 = canonicalize(b, [(1, 0)]), canonicalize(b, [(1, 1)])
    assert sum_span(l1, l2).dim == 2


def test_contains_examples():
    a = Ambient(3, 3)
    b = e(a, 2)
    assert contains(a.full(), b)
    assert contains(b, b)
    assert not contains(e(a, 1), e(a, 2))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        meet_dim(Ambient(2, 3).full(), Ambient(2, 4).full())


@pytest.mark.parametrize("q,nmax", [(2, 5), (3, 5), (4, 3), (5, 3)])
def test_grassmannian_complete_and_distinct(q, nmax):
    for n in range(1, nmax + 1):
        amb = Ambient(q, n)
        for k in range(n + 1):
            subs = list(grassmannian_enumerate(amb, k))
            assert len(subs) == qbinom(n, k, q)
            assert len(set(subs)) == len(subs)
            assert subs == sorted(subs)
            assert all(s.dim == k for s in subs)


def test_grassmannian_examples():
    assert sum(1 for _ in grassmannian_enumerate(Ambient(2, 4), 2)) == 35
    assert sum(1 for _ in grassmannian_enumerate(Ambient(2, 5), 2)) == 155
    assert list(grassmannian_enumerate(Ambient(2, 3), 0)) == [Ambient(2, 3).zero()]
    with pytest.raises(DimensionOrder):
        list(grassmannian_enumerate(Ambient(2, 3), 4))


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(grassmannian_enumerate(Ambient(2, 6), 3, budget=100))


def test_enumerate_containing_examples():
    a4 = Ambient(2, 4)
    assert sum(1 for _ in enumerate_containing(e(a4, 1), 2)) == 7
    assert sum(1 for _ in enumerate_containing(e(Ambient(2, 5), 1), 2)) == 15
    x = e(a4, 1, 3)
    assert list(enumerate_containing(x, 2)) == [x]


@pytest.mark.parametrize("q,n", [(2, 5), (3, 4)])
def test_enumerate_between_matches_filter(q, n):
    amb = Ambient(q, n)
    x = canonicalize(amb, [[1] * n, [0, 1] + [0] * (n - 2), [0, 0, 1] + [0] * (n - 3)])
    ev = canonicalize(amb, [[1] * n])
    for k in range(1, 4):
        got = set(enumerate_between(ev, x, k))
        oracle = {F for F in grassmannian_enumerate(amb, k) if contains(F, ev) and contains(x, F)}
        assert got == oracle


def test_enumerate_type_examples():
    a = Ambient(2, 5)
    l = e(a, 1, 2)
    assert sum(1 for _ in enumerate_type(l, 2, 1)) == 42
    assert list(enumerate_type(l, 2, 2)) == [l]
    assert sum(1 for _ in enumerate_type(l, 2, 0)) == 112


@pytest.mark.parametrize("q,n", [(2, 5), (3, 4)])
def test_enumerate_type_partitions(q, n):
    amb = Ambient(q, n)
    for dl in range(n + 1):
        l = unit_span(amb, range(n - dl, n))  # not a leading block, to exercise the coordinate change
        for m in range(n + 1):
            total = 0
            for h in range(max(0, m - (n - dl)), min(m, dl) + 1):
                subs = list(enumerate_type(l, m, h))
                assert len(set(subs)) == len(subs)
                assert all(meet_dim(U, l) == h and U.dim == m for U in subs)
                total += len(subs)
            assert total == qbinom(n, m, q)


def _random_subspace(rng, amb, rows):
    return canonicalize(amb, [[rng.randrange(amb.q) for _ in range(amb.n)] for _ in range(rows)])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 6), st.integers(0, 2**32))
def test_modular_law_and_fixpoint(q, n, seed):
    rng = random.Random(seed)
    amb = Ambient(q, n)
    a = _random_subspace(rng, amb, rng.randrange(n + 1))
    b = _random_subspace(rng, amb, rng.randrange(n + 1))
    d, m = intersect_dim(a, b)
    assert d + sum_span(a, b).dim == a.dim + b.dim
    assert d == meet_dim(a, b)
    assert contains(a, m) and contains(b, m)
    assert contains(sum_span(a, b), a)
    for s in (a, b, m):
        assert canonicalize(amb, s.rows()) == s


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_gf2_words_agree_with_general_path(seed):
    # the bit-packed q=2 kernel and the table kernel must agree
    from qgrass import _linalg

    rng = random.Random(seed)
    amb = Ambient(2, 7)
    rows = [[rng.randrange(2) for _ in range(7)] for _ in range(rng.randrange(1, 6))]
    assert _linalg.rref(rows, amb.field, 7) == _linalg._rref_general(rows, amb.field, 7)
