"""Moebius functions of symplectic flat lattices and their recursions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import CoLoopInput, DegenerateMinor
from .groundset import GroundSet, elements, popcount
from .matroid import Matroid, boolean_expansion
from .sympcore import (RankedSympMatroid, admissible_bases, contraction_matroid, symp_lattice,
                       uniform_envelope)


def mobius_s(S: RankedSympMatroid) -> int:
    return S.lattice.mobius_top()


def symp_mobius_of_matroid(gs: GroundSet, m: Matroid) -> int:
    """mu of the admissible flats of ``m`` plus its ground; zero if ``m`` has loops."""
    if m.loops:
        return 0
    return symp_lattice(gs, m).mobius_top()


@dataclass(frozen=True)
class XCorrection:
    terms: tuple[tuple[int, ...], ...]
    value: int


def x_correction(S: RankedSympMatroid) -> XCorrection:
    """Atom sets of L(env) whose join is a proper inadmissible flat."""
    L = S.env.lattice
    atoms = L.atoms
    joins = [L.bottom] * (1 << len(atoms))
    terms = []
    value = 0
    for s in range(1, 1 << len(atoms)):
        low = (s & -s).bit_length() - 1
        joins[s] = L.join(joins[s & (s - 1)], atoms[low])
        J = joins[s]
        if J != L.top and not S.gs.is_admissible(J):
            terms.append(tuple(atoms[i] for i in elements(s)))
            value += -1 if popcount(s) % 2 else 1
    return XCorrection(tuple(terms), value)


def identity_check(S: RankedSympMatroid) -> bool:
    return mobius_s(S) == S.env.lattice.mobius_top() + x_correction(S).value


def boolean_expansion_check(S: RankedSympMatroid) -> bool:
    return boolean_expansion(S.lattice) == mobius_s(S)


def flat_sum_identity(S: RankedSympMatroid, a: int, k: int) -> bool:
    if not 1 <= k < S.rank:
        raise ValueError("k must satisfy 1 <= k < rank")
    L = S.lattice
    row = L.mobius_row(L.bottom)
    b = S.gs.star_elem(a)

    def total(x):
        return sum(row[L.index[F]] for F in L.members if L.rank[F] == k and F >> x & 1 and F != L.top)

    return total(a) == total(b)


def pair_deletion_matroid(S: RankedSympMatroid, a: int) -> Matroid:
    """env restricted away from the closure of {a, a*}."""
    return S.env.delete(S.env.closure(S.gs.pair(a)))


def is_coloop_pair(S: RankedSympMatroid, a: int) -> bool:
    """Deleting cl{a, a*} leaves U*_{m,m}: rank m on m pairs, admissible bases all transversals."""
    gs = S.gs
    m = pair_deletion_matroid(S, a)
    if not m.ground:
        raise DegenerateMinor(f"cl{{{gs.label(a)}, {gs.label(gs.star_elem(a))}}} is all of J")
    if not gs.is_star_closed(m.ground):
        return False
    pairs = popcount(gs.pairs_of(m.ground))
    if m.r != pairs or m.loops:
        return False
    transversals = frozenset(B for B in gs.admissible_sets(pairs) if B & ~m.ground == 0)
    return admissible_bases(gs, m) == transversals


def deletion_contraction_terms(S: RankedSympMatroid, a: int) -> tuple[int, int, int, int]:
    """(mu(S), mu(S minus cl{a,a*}), mu(S/cl a), mu(S/cl a*))."""
    gs = S.gs
    return (mobius_s(S),
            symp_mobius_of_matroid(gs, pair_deletion_matroid(S, a)),
            symp_mobius_of_matroid(gs, contraction_matroid(S, a)),
            symp_mobius_of_matroid(gs, contraction_matroid(S, gs.star_elem(a))))


def deletion_contraction_check(S: RankedSympMatroid, a: int) -> bool:
    if S.rank < 3:
        raise ValueError("needs rank >= 3")
    if is_coloop_pair(S, a):
        raise CoLoopInput(f"{{{S.gs.label(a)}, {S.gs.label(S.gs.star_elem(a))}}} is a coloop pair")
    mu, deleted, c1, c2 = deletion_contraction_terms(S, a)
    return mu == deleted - c1 - c2


def sign_alternation_check(S: RankedSympMatroid) -> bool:
    L = S.lattice
    for x in L.members:
        row = L.mobius_row(x)
        for y in L.members:
            if L.leq(x, y):
                sign = -1 if (L.rank[y] - L.rank[x]) % 2 else 1
                if sign * row[L.index[y]] <= 0:
                    return False
    return True


def coloop_correction_term(n: int) -> tuple[Fraction, Fraction]:
    """(closed form, alternating sum) for the correction term of the coloop case.

    closed: (-1)^n (n/2) C(2n-4, n-2); sum: -sum_{k=0}^{n-4} (-1)^k n C(2n-4, k).
    The two are returned side by side; they are not assumed equal.
    """
    if n < 2:
        raise ValueError("n >= 2")
    closed = Fraction((-1) ** n * n * comb(2 * n - 4, n - 2), 2)
    total = -sum((-1) ** k * n * comb(2 * n - 4, k) for k in range(0, n - 3))
    return closed, Fraction(total)


def coloop_truncation_value(n: int) -> int:
    """-mu(T(M minus {a,a*})) + mu(T(S minus {a,a*})) for S = U*_{n,n}, T the truncation."""
    gs = GroundSet(n)
    M = uniform_envelope(gs, n)
    D = M.delete(gs.pair(0))
    T = D.truncate()
    return -T.lattice.mobius_top() + symp_lattice(gs, T).mobius_top()
