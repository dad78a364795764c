import pytest
from hypothesis import given, settings

import oracles
from helpers import signed
from smk.errors import CoLoopInput, EmptyFamily, ExchangeViolation
from smk.groundset import GroundSet, elements, mask_of
from smk.matroid import (Lattice, Matroid, boolean_expansion, from_bases, mobius_of_matroid,
                         ordinary_mobius_identities_check, uniform, weisner_check)
from strategies import matroid_bases


def oracle_of(m):
    return oracles.Oracle(elements(m.ground), [frozenset(elements(B)) for B in m.bases])


def as_sets(masks):
    return {frozenset(elements(F)) for F in masks}


def test_construction_examples(gs2, M1):
    assert uniform(2, 4).r == 2
    assert len(M1.bases) == 5
    bad = signed(gs2, (1, -1), (1, -2), (2, -1), (-1, -2))
    with pytest.raises(ExchangeViolation):
        from_bases(4, bad)
    with pytest.raises(EmptyFamily):
        from_bases(4, [])
    with pytest.raises(ValueError):
        Matroid(4, [0b1, 0b11])


def test_rank_and_closure_examples(gs2, M1, U24):
    pair = gs2.mask_from_signed((1, -1))
    assert U24.rank(pair) == 2 and U24.closure(pair) == U24.ground
    A = gs2.mask_from_signed((1, 2))
    assert M1.rank(A) == 1 and M1.closure(A) == A
    assert M1.rank(0) == 0 and M1.closure(0) == M1.loops == 0


def test_flat_examples(gs2, M1, U24):
    assert len(U24.flats) == 6
    expected = {frozenset(), frozenset([1, 2]), frozenset([-1]), frozenset([-2]), frozenset([1, 2, -1, -2])}
    assert {frozenset(gs2.mask_to_signed(F)) for F in M1.flats} == expected
    assert len(uniform(3, 6).flats) == 23


def test_minor_examples(gs2, M1, U24):
    assert U24.delete(1).bases == uniform(2, 4).restrict(0b1110).bases
    assert {B for B in U24.contract(1).bases} == {0b10, 0b100, 0b1000}
    c = M1.contract(gs2.mask_from_signed([1]))
    assert {tuple(gs2.mask_to_signed(B)) for B in c.bases} == {(-2,), (-1,)}


def test_connectivity_examples(M1, U24):
    assert U24.is_connected()
    assert len(Matroid(4, [0b0101, 0b0110, 0b1001, 0b1010]).components()) == 2
    assert M1.is_connected()


def test_mobius_examples(U24, M1):
    L = U24.lattice
    assert L.mobius(L.bottom, L.bottom) == 1
    assert L.mobius_top() == 3
    a = L.atoms[0]
    b = L.atoms[1]
    assert L.mobius(a, b) == 0
    assert all(weisner_check(L, x) for x in L.atoms)
    assert boolean_expansion(Lattice([0, 1, 2, 3], lambda m: bin(m).count("1"))) == 1
    assert boolean_expansion(M1.lattice) == 2 == M1.lattice.mobius_top()


def test_ordinary_identities_examples():
    assert ordinary_mobius_identities_check(uniform(2, 4), 0)
    assert ordinary_mobius_identities_check(uniform(3, 6), 0)
    assert ordinary_mobius_identities_check(Matroid(2, [0b01, 0b10]), 0)
    with pytest.raises(CoLoopInput):
        ordinary_mobius_identities_check(Matroid(3, [0b011, 0b101]), 0)


def test_truncate_and_relabel():
    t = uniform(3, 5).truncate()
    assert t.bases == uniform(2, 5).bases
    r = uniform(1, 2).relabel({0: 3, 1: 5}, 6)
    assert r.bases == {1 << 3, 1 << 5}


@settings(max_examples=60, deadline=None)
@given(matroid_bases(5))
def test_rank_closure_flats_against_oracle(bases):
    m = Matroid(5, bases, check=True)
    o = oracle_of(m)
    assert o.is_matroid()
    for A in range(32):
        S = frozenset(elements(A))
        assert m.rank(A) == o.rank(S)
        assert frozenset(elements(m.closure(A))) == o.closure(S)
    assert as_sets(m.flats) == o.flats()
    assert frozenset(elements(m.loops)) == o.loops()


@settings(max_examples=60, deadline=None)
@given(matroid_bases(5))
def test_mobius_against_recursion(bases):
    m = Matroid(5, bases, check=False)
    o = oracle_of(m)
    flats = o.flats()
    mu = oracles.mobius_from_bottom(flats, o.closure(frozenset()))
    expected = 0 if o.loops() else mu[frozenset(range(5))]
    assert mobius_of_matroid(m) == expected
    if not m.loops:
        assert boolean_expansion(m.lattice) == expected


@settings(max_examples=60, deadline=None)
@given(matroid_bases(6, loops=False))
def test_lattice_structure_properties(bases):
    m = Matroid(6, bases, check=False)
    L = m.lattice
    assert L.is_graded() and L.rank_respects_covers() and L.is_semimodular() and L.is_atomistic()
    for x in L.members:
        for y in L.members:
            assert L.meet(x, y) == x & y
            assert L.join(x, y) == m.closure(x | y)
    assert all(weisner_check(L, a) for a in L.atoms)
    sign = (-1) ** m.r
    assert sign * L.mobius_top() > 0
    for a in elements(m.ground):
        if not m.coloops >> a & 1:
            assert ordinary_mobius_identities_check(m, a)


@settings(max_examples=60, deadline=None)
@given(matroid_bases(5))
def test_minors_against_oracle(bases):
    m = Matroid(5, bases, check=False)
    o = oracle_of(m)
    X = 0b00011
    d, c = m.delete(X), m.contract(X)
    keep = frozenset(range(2, 5))
    top = max(len(B & keep) for B in o.bases)
    assert as_sets(d.bases) == {B & keep for B in o.bases if len(B & keep) == top}
    rx = o.rank({0, 1})
    assert as_sets(c.bases) == {B - {0, 1} for B in o.bases if len(B & {0, 1}) == rx}


@settings(max_examples=60, deadline=None)
@given(matroid_bases(5))
def test_components_partition_by_circuits(bases):
    m = Matroid(5, bases, check=False)
    comps = m.components()
    assert mask_of(e for C in comps for e in elements(C)) == m.ground
    for C in m.circuits:
        assert sum(1 for K in comps if K & C) == 1
    o = oracle_of(m)
    brute = {frozenset(C) for C in oracles.subsets(o.E)
             if C and not o.independent(C) and all(o.independent(C - {e}) for e in C)}
    assert as_sets(m.circuits) == brute
