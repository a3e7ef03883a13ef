import random

import pytest
from hypothesis import given, strategies as st

from flagcob import flagring
from flagcob.combinatorics import ExponentSeq, SubsetQ, subsets
from flagcob.flagring import (
    ContextMismatch,
    FlagContext,
    FlagElem,
    NotCovered,
    intersect,
)
from flagcob.seriesalg import GPoly, series_power_component

E = ExponentSeq
g1, g2 = GPoly.gen(1), GPoly.gen(2)


def ctx_of(n, els=None):
    return FlagContext(SubsetQ(range(1, n + 1) if els is None else els, n))


def test_relation_examples():
    B2, B3 = ctx_of(2), ctx_of(3)
    assert FlagElem.x(B2, 1) * FlagElem.x(B2, 1) == FlagElem.x_set(B2, [1, 2])
    assert FlagElem.x(B3, 1) ** 3 == FlagElem.x_set(B3, [1, 2, 3])
    assert FlagElem.x(B2, 2) * FlagElem.x(B2, 2) == FlagElem.zero(B2)
    C = ctx_of(3, [1, 3])
    assert FlagElem.x(C, 1) * FlagElem.x(C, 3) == FlagElem.x_set(C, [1, 3])


def test_squares_leave_Q():
    C = ctx_of(4, [1, 2, 4])
    assert FlagElem.x(C, 2) ** 2 == FlagElem.zero(C)
    assert FlagElem.x(C, 1) ** 2 == FlagElem.x_set(C, [1, 2])
    assert FlagElem.x(C, 1) ** 3 == FlagElem.zero(C)


def test_contexts_do_not_mix():
    with pytest.raises(ContextMismatch):
        FlagElem.x(ctx_of(2), 1) * FlagElem.x(ctx_of(3), 1)


def test_outside_Q_rejected():
    with pytest.raises(ValueError):
        FlagElem(ctx_of(3, [1]), {(2,): 1})


@pytest.mark.parametrize("n", range(0, 11))
def test_basis_count(n):
    assert len(flagring.basis(ctx_of(n))) == 2 ** n


def test_rewrite_confluence_random_orders():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 5)
        Q = SubsetQ.from_mask(rng.randrange(1 << n), n)
        exps = [rng.randint(0, 3) for _ in range(n)]
        ref = flagring.rewrite_normal_form(exps, Q)
        for _ in range(3):
            assert flagring.rewrite_normal_form(exps, Q, choose=rng.choice) == ref
        fast = FlagElem.monomial(FlagContext(Q), exps)
        assert (fast.terms()[0][0] if fast else None) == ref


elems = st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, (1 << n) - 1), st.integers(-3, 3)), max_size=4),
    st.lists(st.tuples(st.integers(0, (1 << n) - 1), st.integers(-3, 3)), max_size=4),
    st.lists(st.tuples(st.integers(0, (1 << n) - 1), st.integers(-3, 3)), max_size=4)))


@given(elems)
def test_ring_axioms(data):
    n, *raw = data
    ctx = ctx_of(n)
    a, b, c = (sum((FlagElem.x_set(ctx, SubsetQ.from_mask(m, n).elements) * v for m, v in terms),
                   FlagElem.zero(ctx)) for terms in raw)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * FlagElem.one(ctx) == a


def test_json_round_trip():
    ctx = ctx_of(4, [1, 2, 4])
    e = FlagElem.x(ctx, 1) * g2 + FlagElem.x_set(ctx, [1, 2, 4]) * 3 - 1
    assert FlagElem.from_json(e.to_json()) == e


def test_right_class_examples():
    assert flagring.right_class(ctx_of(1), 1) == FlagElem.x(ctx_of(1), 1)
    B2 = ctx_of(2)
    assert flagring.right_class(B2, 1) == FlagElem.x(B2, 1) + FlagElem.x_set(B2, [1, 2]) * g1
    assert flagring.right_class(B2, 2) == FlagElem.x(B2, 2)


def test_pushforward_examples():
    for n in range(0, 9):
        assert flagring.pushforward(FlagElem.one(ctx_of(n))) == GPoly.gen(n)
        assert flagring.pushforward(FlagElem.x_set(ctx_of(n), range(1, n + 1))) == GPoly.one()
    assert flagring.pushforward(FlagElem.x(ctx_of(2), 1)) == g1
    assert flagring.pushforward(FlagElem.one(ctx_of(4, [1, 2, 4]))) == g2 * g1


def test_pairing_examples():
    for Q in subsets(4):
        for R in subsets(4):
            assert flagring.pairing_U(Q, R) == int(Q == R)
    assert flagring.kronecker_U(FlagElem.one(ctx_of(2))) == 0
    assert flagring.kronecker_U(FlagElem.x(ctx_of(3, [1, 3]), 1)) == 0


def test_char_number_examples():
    for Q in subsets(4):
        assert flagring.char_number(Q, E(), E()) == GPoly.monomial(
            [sum(1 for a, b in Q.intervals if b - a + 1 == k) for k in range(1, 5)])
    assert flagring.char_number(SubsetQ.full(2), E.eps(1), E()) == 2 * g1
    for n in range(1, 7):
        for m in range(0, n + 1):
            om = E.eps(m) if m else E()
            assert flagring.char_number(SubsetQ.full(n), E(), om) == series_power_component(m + 1, n - m)


def test_y_classes():
    B1, B2 = ctx_of(1), ctx_of(2)
    assert flagring.y_to_x(1, B1) == -FlagElem.x(B1, 1)
    assert flagring.y_to_x(1, B2) == -FlagElem.x(B2, 1) + FlagElem.x(B2, 2)
    assert flagring.y_to_x(2, B2) == -FlagElem.x(B2, 2)
    with pytest.raises(ValueError):
        flagring.y_to_x(1, ctx_of(2, [1]))


def test_intersections():
    full2 = SubsetQ.full(2)
    got = intersect("Y", SubsetQ([2], 2), "Y", SubsetQ([1], 2), 2)
    assert got.kind == "Y" and got.subset == SubsetQ((), 2)
    got = intersect("X", full2, "Y", SubsetQ([2], 2), 2)
    assert got.kind == "X" and got.subset == SubsetQ([2], 2) and got.context == SubsetQ([2], 2)
    with pytest.raises(NotCovered):
        intersect("X", SubsetQ([1], 3), "X", SubsetQ([2], 3), 3)
