import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from smk.groundset import (GroundSet, c_order, d_order, elements, enumerate_admissible_orders,
                           gale_leq, gale_leq_total, gale_maximum, mask_of, popcount, submasks)


def S(gs, *xs):
    return gs.mask_from_signed(xs)


def test_star_examples():
    gs2, gs3 = GroundSet(2), GroundSet(3)
    assert gs2.star(S(gs2, 1)) == S(gs2, -1)
    assert gs2.star(S(gs2, 1, -2)) == S(gs2, -1, 2)
    assert gs3.star(S(gs3, 1, -1)) == S(gs3, 1, -1)


def test_predicates():
    gs = GroundSet(2)
    assert gs.is_admissible(S(gs, 1, -2))
    assert not gs.is_admissible(S(gs, 1, -1))
    assert gs.is_admissible(0)
    assert gs.is_totally_inadmissible(S(gs, 1, -1, 2, -2))
    assert not gs.is_totally_inadmissible(S(gs, 1, -1, 2))
    assert gs.is_totally_inadmissible(0)
    assert gs.is_transversal(S(gs, 1, 2))
    assert not gs.is_transversal(S(gs, 1))
    gs3 = GroundSet(3)
    assert gs3.is_transversal(S(gs3, 1, 2), scope=gs3.full & ~S(gs3, 3, -3))


def test_signed_vector_examples():
    gs2, gs3 = GroundSet(2), GroundSet(3)
    assert gs2.signed_vector(S(gs2, 1, -2)) == (1, -1)
    assert gs2.signed_vector(0) == (0, 0)
    assert gs3.signed_vector(S(gs3, -1, 3)) == (-1, 0, 1)


def test_signed_round_trip():
    gs = GroundSet(3)
    for x in (1, 2, 3, -1, -2, -3):
        assert gs.to_signed(gs.from_signed(x)) == x
    with pytest.raises(ValueError):
        gs.from_signed(0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_c_orders_match_brute_force(n):
    gs = GroundSet(n)
    ours = {tuple(sorted(range(2 * n), key=lambda e: o.height[e])) for o in enumerate_admissible_orders(gs, "C")}
    brute = {tuple(gs.from_signed(x) for x in sorted(pos, key=pos.get)) for pos in oracles.c_orders(n)}
    assert ours == brute


def test_order_counts():
    assert len(list(enumerate_admissible_orders(GroundSet(1), "C"))) == 2
    assert len(list(enumerate_admissible_orders(GroundSet(2), "C"))) == 8
    assert len(list(enumerate_admissible_orders(GroundSet(3), "C"))) == 48
    assert len(list(enumerate_admissible_orders(GroundSet(2), "D"))) == 4


def _literal_d_order_ok(gs, o):
    """Def of a D order checked element by element on its strict relation."""
    n = gs.n
    unrelated = [(x, y) for x in range(2 * n) for y in range(x + 1, 2 * n)
                 if not o.lt(x, y) and not o.lt(y, x)]
    if len(unrelated) != 1 or unrelated[0][1] != gs.star_elem(unrelated[0][0]):
        return False
    return all(o.lt(x, y) == o.lt(gs.star_elem(y), gs.star_elem(x)) for x in range(2 * n) for y in range(2 * n))


@pytest.mark.parametrize("n", [2, 3])
def test_d_orders_literal(n):
    gs = GroundSet(n)
    orders = list(enumerate_admissible_orders(gs, "D"))
    assert all(_literal_d_order_ok(gs, o) for o in orders)
    assert len({o.height for o in orders}) == len(orders) == 2 ** (n - 1) * len(list(itertools.permutations(range(n))))


def test_unknown_order_kind():
    with pytest.raises(ValueError):
        list(enumerate_admissible_orders(GroundSet(2), "B"))


def _gale_brute(A, B, order):
    xs, ys = list(elements(A)), list(elements(B))
    return any(all(order.leq(x, y) for x, y in zip(xs, perm)) for perm in itertools.permutations(ys))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_gale_matching_equals_permutation_search(data):
    gs = GroundSet(3)
    kind = data.draw(st.sampled_from(["C", "D"]))
    orders = list(enumerate_admissible_orders(gs, kind))
    o = data.draw(st.sampled_from(orders))
    k = data.draw(st.integers(0, 3))
    pool = [mask_of(c) for c in itertools.combinations(range(6), k)]
    A, B = data.draw(st.sampled_from(pool)), data.draw(st.sampled_from(pool))
    assert gale_leq(A, B, o) == _gale_brute(A, B, o)
    if kind == "C":
        assert gale_leq_total(A, B, o) == _gale_brute(A, B, o)


def test_gale_maximum():
    gs = GroundSet(2)
    o = c_order(gs, [0, 1])
    fam = [S(gs, 1, 2), S(gs, 1, -2), S(gs, -1, -2)]
    assert gale_maximum(fam, o) == S(gs, 1, 2)
    d = d_order(gs, [0])
    assert gale_maximum([S(gs, 1, 2), S(gs, 1, -2)], d) is None


@given(st.integers(0, 63), st.integers(0, 63))
def test_bit_helpers_match_set_semantics(a, b):
    sa, sb = set(elements(a)), set(elements(b))
    assert popcount(a) == len(sa)
    assert set(elements(a | b)) == sa | sb
    assert set(elements(a & b)) == sa & sb
    assert set(elements(a & ~b)) == sa - sb
    assert set(elements(a ^ b)) == sa ^ sb
    assert mask_of(sa) == a


@given(st.integers(0, 63))
def test_star_involution_and_admissibility(a):
    gs = GroundSet(3)
    assert gs.star(gs.star(a)) == a
    labels = frozenset(gs.mask_to_signed(a))
    assert frozenset(gs.mask_to_signed(gs.star(a))) == oracles.star(labels)
    assert gs.is_admissible(a) == oracles.admissible(labels)
    if gs.is_admissible(a):
        assert gs.signed_vector(a) == oracles.signed_vector(3, labels)
    else:
        with pytest.raises(ValueError):
            gs.signed_vector(a)


def test_star_has_no_fixed_points():
    for n in range(1, 5):
        gs = GroundSet(n)
        for e in range(gs.size):
            assert gs.star_elem(gs.star_elem(e)) == e != gs.star_elem(e)


def test_submasks_and_admissible_sets():
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]
    gs = GroundSet(3)
    assert len(list(gs.admissible_sets(3))) == 8
    assert len(list(gs.admissible_sets())) == 27
