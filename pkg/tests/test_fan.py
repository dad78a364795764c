import itertools
from math import comb

import pytest
import sympy
from hypothesis import given, settings

import oracles
from smk import fan
from smk.corpus import generate_corpus, resolve
from smk.matroid import Matroid, uniform
from smk.sympcore import uniform_symp
from strategies import matroid_bases


def maximal_chains(members):
    """Maximal chains of proper members of a lattice of frozensets, by brute force."""
    proper = [F for F in members if F and F != max(members, key=len)]
    out = []

    def grow(chain):
        nxt = [G for G in proper if chain[-1] < G] if chain else [G for G in proper]
        nxt = [G for G in nxt if not any(chain and chain[-1] < H < G for H in proper)]
        if chain and not nxt:
            out.append(tuple(chain))
        for G in nxt:
            if not chain or not any(chain[-1] < H < G for H in proper):
                grow(chain + [G])
    for F in proper:
        if not any(H < F for H in proper):
            grow([F])
    return out


def oracle_mw_rank(S):
    """Rank of the top Minkowski weights from brute-force chains and a sympy linear system."""
    n = S.gs.n
    o = oracles.Oracle(oracles.ground(n), [frozenset(S.gs.mask_to_signed(B)) for B in S.env.bases])
    members = {F for F in o.flats() if oracles.admissible(F)} | {frozenset(o.E)}
    chains = maximal_chains(members)
    pos = {c: i for i, c in enumerate(chains)}
    taus = {}
    for c in chains:
        for i in range(len(c)):
            taus.setdefault(c[:i] + c[i + 1:], []).append((c, c[i]))
    rows = []
    for tau, ups in taus.items():
        T = sympy.Matrix([list(oracles.signed_vector(n, F)) for F in tau]) if tau else sympy.zeros(0, n)
        complement = T.nullspace() if tau else [sympy.eye(n)[:, i] for i in range(n)]
        for q in complement:
            row = [0] * len(chains)
            for c, F in ups:
                row[pos[c]] += sum(q[i] * oracles.signed_vector(n, F)[i] for i in range(n))
            rows.append(row)
    rank = sympy.Matrix(rows).rank() if rows else 0
    return len(chains) - rank


# --- examples ---------------------------------------------------------------

def test_ray_examples(U22, S1, U33):
    assert set(fan.bergman_fan(U22).rays) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert set(fan.bergman_fan(S1).rays) == {(1, 1), (-1, 0), (0, -1)}
    F = fan.bergman_fan(U33)
    assert len(F.rays) == 18 and len(F.maximal_cones()) == 24


def test_unimodular_examples(U22, S1, U33):
    for S in (U22, S1, U33):
        assert fan.unimodularity_check(fan.bergman_fan(S))
        assert fan.env_fan_check(S)
        assert fan.refinement_check(S, samples=5)


def test_balancing_examples(U22):
    F = fan.bergman_fan(U22)
    gs = U22.gs
    chain = {gs.signed_vector(c.chain[0]): c.chain for c in F.of_dim(1)}
    e1, m1, e2, m2 = chain[(1, 0)], chain[(-1, 0)], chain[(0, 1)], chain[(0, -1)]
    assert fan.balancing_check(F, {e1: 1, m1: 1, e2: 1, m2: 1}, 1)
    assert fan.balancing_check(F, {e1: 1, m1: 1, e2: 2, m2: 2}, 1)
    assert not fan.balancing_check(F, {e1: 1, m1: 2, e2: 1, m2: 1}, 1)


def test_mw_rank_examples(U22, U23):
    assert fan.mw_group(fan.bergman_fan(U22), 1)[0] == 2
    assert fan.mw_group(fan.bergman_fan(U23), 1)[0] == 3
    with pytest.raises(ValueError):
        fan.mw_group(fan.bergman_fan(U22), 2)


@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4)])
def test_mw_rank_of_uniforms_is_binomial(k, n):
    F = fan.bergman_fan(uniform_symp(k, n))
    assert fan.mw_group(F, F.top_dim)[0] == comb(n, k - 1)


def test_type_class_examples(U22, U23):
    assert len(fan.type_classes(U22, "d_plus_1")) == 2
    assert len(fan.type_classes(U22, "d")) == 4
    assert len(fan.type_classes(U23, "d_plus_1")) == 3
    with pytest.raises(ValueError):
        fan.type_classes(U22, "other")


def test_loopless_face_examples():
    m = uniform(2, 4)
    assert fan.in_bergman_support(m, (0, 0, 0, 0))
    assert fan.in_bergman_support(m, (1, 0, 0, 0))
    assert fan.loopless_face_check(m, samples=20)


# --- oracle comparisons -------------------------------------------------

def test_mw_rank_matches_oracle_over_corpus(resolved3):
    for inst, S in resolved3:
        F = fan.bergman_fan(S)
        rank, gens = fan.mw_group(F, F.top_dim)
        assert rank == oracle_mw_rank(S), inst.label
        for g in gens:
            assert fan.balancing_check(F, g, F.top_dim)


def test_unimodularity_matches_smith_form(resolved3):
    for inst, S in resolved3:
        for F in (fan.bergman_fan(S), fan.bergman_fan_ordinary(S.env)):
            for cone in F.cones.values():
                rows = list(cone.rays) + F.lineality
                assert fan._is_unimodular(rows) == oracles.extends_to_lattice_basis(rows), inst.label


def test_fan_properties_over_corpus(resolved3):
    for inst, S in resolved3:
        F = fan.bergman_fan(S)
        assert fan.unimodularity_check(F), inst.label
        assert fan.env_fan_check(S), inst.label
        assert fan.refinement_check(S, samples=10, seed=0), inst.label
        assert fan.loopless_face_check(S.env, samples=10, seed=0), inst.label
        assert fan.balancing_check(F, {c.chain: 1 for c in F.maximal_cones()}, F.top_dim), inst.label
        assert fan.generators_respect_moves(S), inst.label
        assert fan.cones_meet_in_faces(F), inst.label
        assert fan.fan_codim1_connected(F), inst.label
        rank, _ = fan.mw_group(F, F.top_dim)
        assert rank == len(fan.type_classes(S, "d_plus_1")), inst.label
        if fan.has_transversal_flat(S):
            assert rank == 1, inst.label


@settings(max_examples=40, deadline=None)
@given(matroid_bases(5, loops=False))
def test_bergman_support_against_flat_definition(bases):
    m = Matroid(5, bases, check=False)
    o = oracles.Oracle(range(5), [frozenset(i for i in range(5) if B >> i & 1) for B in bases])
    flats = o.flats()
    for nu in itertools.product(range(-1, 2), repeat=5):
        levels = {frozenset(e for e in range(5) if nu[e] >= c) for c in set(nu)}
        assert fan.in_bergman_support(m, nu) == all(L in flats for L in levels)
    assert fan.loopless_face_check(m, samples=10)
