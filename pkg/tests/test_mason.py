from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from smk import mason
from smk.errors import ParityViolation


def oracle_counts(S):
    n, r = S.gs.n, S.rank
    o = oracles.Oracle(oracles.ground(n), [frozenset(S.gs.mask_to_signed(B)) for B in S.env.bases])
    sub = [A for A in oracles.subsets(o.E) if o.independent(A)]
    s_counts = tuple(sum(1 for A in sub if len(A) == k and any(A <= B for B in o.bases if oracles.admissible(B)))
                     for k in range(r + 1))
    i_counts = tuple(sum(1 for A in sub if len(A) == k) for k in range(r + 1))
    strong = oracles.strong_sets(o)
    j_counts = tuple(sum(1 for A in strong if len(A) == k) for k in range(r))
    return s_counts, i_counts, j_counts


def test_count_examples(U33, U22):
    rep = mason.count_report(U33)
    assert rep.S_counts == (1, 6, 12, 8)
    assert rep.I_counts == (1, 6, 15, 20)
    assert rep.J_counts == (1, 6, 12)
    assert mason.counting_identity_check(U33)
    assert mason.counting_identity_check(U22)
    assert mason.count_report(U22).S_counts[2] == 4 == 6 - 4 // 2


def test_class_size_examples(U33, U22):
    assert mason.class_size_check(U33)
    assert mason.class_size_check(U22)


def test_log_concavity_examples():
    assert mason.log_concavity_report((1, 6, 15, 20), 3, 6)[2]
    assert 15 ** 2 == Fraction(3, 2) * Fraction(5, 4) * 6 * 20
    assert all(mason.log_concavity_report((1, 6, 12, 8), 1).values())
    assert all(mason.log_concavity_report((1, 1, 1), 1).values())
    assert not mason.log_concavity_report((1, 1, 2), 1)[1]
    with pytest.raises(ValueError):
        mason.log_concavity_report((1, 2, 1), 4)
    with pytest.raises(ValueError):
        mason.log_concavity_report((1, 2, 1), 3)


def test_rank3_anchor(U33):
    result = mason.rank3_check(U33)
    assert all(result.values())
    rep = mason.count_report(U33)
    I2, I3, J2, n = rep.I_counts[2], rep.I_counts[3], rep.J_counts[2], 3
    assert 2 * n * (I3 - J2) == 48 and (I2 - n) ** 2 == 144
    assert 2 * n * I3 == 120 and Fraction(2, 3) * I2 ** 2 == 150


def test_rank3_requires_rank3(U22):
    with pytest.raises(ValueError):
        mason.rank3_check(U22)


def test_counts_match_oracle_over_corpus(resolved3):
    for inst, S in resolved3:
        rep = mason.count_report(S)
        assert (rep.S_counts, rep.I_counts, rep.J_counts) == oracle_counts(S), inst.label
        assert mason.counting_identity_check(S), inst.label
        assert mason.class_size_check(S), inst.label
        assert rep.I_log_concave["variant_3"], inst.label
        if S.rank == 3:
            assert all(mason.rank3_check(S).values()), inst.label


def test_parity_violation_guard(U33, monkeypatch):
    real = mason.count_report(U33)
    fake = mason.CountReport(real.S_counts, real.I_counts, (1, 7, 12), real.I_log_concave, real.S_log_concave)
    monkeypatch.setattr(mason, "count_report", lambda S: fake)
    with pytest.raises(ParityViolation):
        mason.counting_identity_check(U33)


@given(st.lists(st.integers(1, 40), min_size=3, max_size=7))
def test_log_concavity_variants_are_nested(seq):
    n = len(seq) + 2
    v1 = mason.log_concavity_report(seq, 1)
    v2 = mason.log_concavity_report(seq, 2)
    v3 = mason.log_concavity_report(seq, 3, n)
    for k in v3:
        assert v3[k] <= v2[k] <= v1[k]
        assert v1[k] == (seq[k] ** 2 >= seq[k - 1] * seq[k + 1])
