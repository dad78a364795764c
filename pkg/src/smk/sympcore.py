"""Admissible matroids and ranked symplectic matroids.

A ranked symplectic matroid is stored through its enveloping matroid: an
ordinary matroid on J whose rank function is recovered from its
admissible independent sets.  Everything else (bases, the lattice of
flats L(S), minors) is derived from that matroid.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (DecompositionFailure, DegenerateMinor, ExchangeViolation, MultipleMinima,
                     NoAdmissibleBasis, NotAdmissible, NotFound)
from .groundset import (GroundSet, elements, enumerate_admissible_orders, gale_maximum,
                        mask_of, popcount, submasks)
from .matroid import Lattice, Matroid


# ----------------------------------------------------------------------
# admissibility of an ordinary matroid
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    reason: str = ""
    subset: int | None = None
    formula: int | None = None
    rank: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def admissible_closure_sets(gs: GroundSet, m: Matroid) -> frozenset[int]:
    """Independent sets of ``m`` whose closure is admissible."""
    return frozenset(I for I in m.independent_sets if gs.is_admissible(m.closure(I)))


def closure_extension_sets(gs: GroundSet, m: Matroid) -> frozenset[int]:
    """Independent sets with admissible closure, together with every non-loop singleton.

    Singletons are always strongly admissible, and in an admissible matroid
    their closures (the atoms) are admissible.  Counting them here is what
    makes an inadmissible atom fail the rank formula instead of slipping
    through it.
    """
    return admissible_closure_sets(gs, m) | frozenset(1 << e for e in elements(m.ground & ~m.loops))


def strong_extension_sets(gs: GroundSet, m: Matroid) -> frozenset[int]:
    """Strongly admissible sets that do not span."""
    return frozenset(I for I in strongly_admissible_family(gs, m) if m.rank(I) < m.r)


def derived_rank_table(gs: GroundSet, m: Matroid, extension: frozenset[int]) -> dict[int, int]:
    """The rank every subset of the ground set gets from the admissible sets.

    For A, maximise over admissible independent I inside A: |I| + 2 when A
    holds a pair {a, a*} such that I + a and I + a* both lie in
    ``extension``, and |I| otherwise.
    """
    candidates = []
    for I in m.independent_sets:
        if not gs.is_admissible(I):
            continue
        bonus = 0
        for p in range(gs.n):
            a, b = 1 << p, 1 << (p + gs.n)
            if not I & (a | b) and (I | a) in extension and (I | b) in extension:
                bonus |= 1 << p
        candidates.append((I, popcount(I), bonus))
    table = {}
    for A in submasks(m.ground):
        inside = gs.pairs_inside(A)
        best = 0
        for I, size, bonus in candidates:
            if I & ~A:
                continue
            value = size + 2 if bonus & inside else size
            if value > best:
                best = value
        table[A] = best
    return table


def is_admissible_matroid(gs: GroundSet, m: Matroid) -> AdmissibilityReport:
    """Check the derived-rank condition on every subset; report the first failure.

    The extension family is taken both as the sets with admissible closure
    and as the non-spanning strongly admissible sets; the two agree on
    admissible matroids, and the formula must reproduce the rank under
    each.
    """
    if m.loops:
        loop = m.loops & -m.loops
        return AdmissibilityReport(False, "loop", loop, None, 0)
    for name, family in (("closure", closure_extension_sets), ("strong", strong_extension_sets)):
        table = derived_rank_table(gs, m, family(gs, m))
        for A in sorted(table):
            r = m.rank(A)
            if table[A] != r:
                return AdmissibilityReport(False, f"rank formula ({name} sets)", A, table[A], r)
    return AdmissibilityReport(True)


# ----------------------------------------------------------------------
# strong admissibility
# ----------------------------------------------------------------------

def strongly_admissible_family(gs: GroundSet, m: Matroid) -> frozenset[int]:
    """Sets built from the empty set by adding a with a, a* outside the closure."""
    level = {0}
    out = {0}
    while level:
        nxt = set()
        for B in level:
            cl = m.closure(B)
            for a in elements(m.ground & ~cl):
                if not cl >> gs.star_elem(a) & 1:
                    nxt.add(B | (1 << a))
        nxt -= out
        out |= nxt
        level = nxt
    return frozenset(out)


def symp_lattice(gs: GroundSet, m: Matroid) -> Lattice:
    """Admissible flats of ``m`` plus its whole ground set."""
    members = [F for F in m.flats if gs.is_admissible(F)]
    members.append(m.ground)
    return Lattice(members, m.rank)


def admissible_bases(gs: GroundSet, m: Matroid) -> frozenset[int]:
    return frozenset(B for B in m.bases if gs.is_admissible(B))


def compress(gs: GroundSet, m: Matroid) -> tuple[GroundSet, Matroid, dict[int, int]]:
    """Re-index a matroid on a union of pairs onto a smaller standard J."""
    if not gs.is_star_closed(m.ground):
        raise DegenerateMinor(f"ground {gs.fmt(m.ground)} is not a union of pairs")
    kept = [i for i in range(gs.n) if m.ground >> i & 1]
    new = GroundSet(len(kept))
    mapping = {}
    for j, i in enumerate(kept):
        mapping[i] = j
        mapping[i + gs.n] = j + new.n
    return new, m.relabel(mapping, new.size), mapping


class RankedSympMatroid:
    """The admissible bases of an admissible enveloping matroid ``env``."""

    def __init__(self, gs: GroundSet, env: Matroid, *, check: bool = True):
        if env.ground != gs.full:
            raise ValueError("the enveloping matroid must live on all of J")
        if check:
            report = is_admissible_matroid(gs, env)
            if not report:
                raise NotAdmissible(report)
        self.gs = gs
        self.env = env
        self.bases = admissible_bases(gs, env)
        if not self.bases:
            raise NoAdmissibleBasis("the enveloping matroid has no admissible basis")
        self.rank = env.r

    def __repr__(self) -> str:
        return f"RankedSympMatroid(n={self.gs.n}, rank={self.rank}, bases={len(self.bases)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RankedSympMatroid) and (self.gs, self.env) == (other.gs, other.env)

    def __hash__(self) -> int:
        return hash((self.gs, self.env))

    @cached_property
    def lattice(self) -> Lattice:
        return symp_lattice(self.gs, self.env)

    @cached_property
    def strongly_admissible(self) -> frozenset[int]:
        return strongly_admissible_family(self.gs, self.env)

    @cached_property
    def independent_sets(self) -> frozenset[int]:
        """Subsets of admissible bases."""
        out = set()
        for B in self.bases:
            out.update(submasks(B))
        return frozenset(out)

    def fmt_bases(self) -> list[str]:
        return sorted(self.gs.fmt(B) for B in self.bases)


def ranked_symp(gs: GroundSet, m: Matroid) -> RankedSympMatroid:
    return RankedSympMatroid(gs, m)


def uniform_envelope(gs: GroundSet, k: int) -> Matroid:
    """Envelope of U*_{k,n}: the k-subsets of J holding at most one pair."""
    bases = [sum(1 << e for e in c) for c in itertools.combinations(range(gs.size), k)]
    return Matroid(gs.size, [B for B in bases if popcount(gs.pairs_inside(B)) <= 1], check=False)


def uniform_symp(k: int, n: int) -> RankedSympMatroid:
    gs = GroundSet(n)
    return RankedSympMatroid(gs, uniform_envelope(gs, k))


def strongly_admissible_sets(S: RankedSympMatroid, k: int) -> frozenset[int]:
    """Strongly admissible independent sets of size k.

    Below full rank these are the independent sets with admissible
    closure; the recursive construction is run alongside and must agree.
    A spanning set has closure J, so at k == rank only the recursive
    construction applies.
    """
    if not 0 <= k <= S.rank:
        raise ValueError("k out of range")
    recursive = frozenset(A for A in S.strongly_admissible if popcount(A) == k)
    if k == S.rank:
        return recursive
    by_closure = frozenset(I for I in S.env.independent_sets
                           if popcount(I) == k and S.gs.is_admissible(S.env.closure(I)))
    if by_closure != recursive:
        raise AssertionError(f"strong admissibility mismatch at k={k}")
    return by_closure


# ----------------------------------------------------------------------
# lattice and symplectic axioms
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: int | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def check_cn_lattice(gs: GroundSet, L: Lattice | Iterable[int]) -> AxiomReport:
    """The four C_n lattice axioms on a family of subsets of J."""
    family = set(L.members if isinstance(L, Lattice) else L)
    J = gs.full
    if 0 not in family or J not in family:
        return AxiomReport(False, 1)
    for A in sorted(family):
        if A != J and not gs.is_admissible(A):
            return AxiomReport(False, 2, (A,))
    for A, B in itertools.combinations(sorted(family), 2):
        if A & B not in family:
            return AxiomReport(False, 3, (A, B))
    for A in sorted(family):
        above = [B for B in family if A & B == A and B != A]
        covers = [B for B in above if not any(C != B and C & B == C and A & C == A and C != A for C in above)]
        for B1, B2 in itertools.combinations(covers, 2):
            if B1 & B2 != A:
                return AxiomReport(False, 4, (A, B1, B2))
        union = 0
        for B in covers:
            union |= B
        need = J & ~gs.star(A)
        if union & need != need:
            return AxiomReport(False, 4, (A,))
    return AxiomReport(True)


def is_symplectic(gs: GroundSet, bases: Iterable[int]) -> bool:
    """Every C order has a unique Gale-maximal member of ``bases``."""
    fam = list(bases)
    return all(gale_maximum(fam, w) is not None for w in enumerate_admissible_orders(gs, "C"))


def maximal_basis_admissible_check(S: RankedSympMatroid) -> bool:
    env_bases = list(S.env.bases)
    for w in enumerate_admissible_orders(S.gs, "C"):
        top = gale_maximum(env_bases, w)
        if top is None or not S.gs.is_admissible(top):
            return False
    return True


# ----------------------------------------------------------------------
# structure lemmas
# ----------------------------------------------------------------------

def flat_dichotomy_check(gs: GroundSet, m: Matroid) -> bool:
    return all(gs.is_admissible(F) or gs.is_totally_inadmissible(F) for F in m.flats)


def strong_closure_check(S: RankedSympMatroid) -> bool:
    """Recursive strong admissibility agrees with admissible closure below full rank."""
    gs, env = S.gs, S.env
    for I in env.independent_sets:
        if popcount(I) == S.rank:
            continue
        if (I in S.strongly_admissible) != gs.is_admissible(env.closure(I)):
            return False
    return True


def atoms_admissible_check(S: RankedSympMatroid) -> bool:
    return all(S.gs.is_admissible(F) for F in S.env.lattice.atoms)


def inadmissible_deletion_check(S: RankedSympMatroid) -> bool:
    gs, env = S.gs, S.env
    for F in env.flats:
        if gs.is_admissible(F) or F == env.ground:
            continue
        if not is_admissible_matroid(gs, env.delete(F)):
            return False
    return True


def _symp_minor(S: RankedSympMatroid, m: Matroid, what: str) -> RankedSympMatroid:
    gs, small, _ = compress(S.gs, m)
    report = is_admissible_matroid(gs, small)
    if not report:
        raise DegenerateMinor(f"{what} is not admissible", report)
    try:
        return RankedSympMatroid(gs, small, check=False)
    except NoAdmissibleBasis:
        raise DegenerateMinor(f"{what} has no admissible basis") from None


def deletion_matroid(S: RankedSympMatroid, a: int) -> Matroid:
    return S.env.delete(S.gs.pair(a))


def contraction_matroid(S: RankedSympMatroid, a: int) -> Matroid:
    """(M / cl(a)) minus cl(a*); equal to (M / a) minus cl(a*) when a has no parallels."""
    env = S.env
    return env.contract(env.closure(1 << a)).delete(env.closure(1 << S.gs.star_elem(a)))


def delete_pair(S: RankedSympMatroid, a: int) -> RankedSympMatroid:
    return _symp_minor(S, deletion_matroid(S, a), f"deletion of {S.gs.label(a)}")


def contract_elem(S: RankedSympMatroid, a: int) -> RankedSympMatroid:
    return _symp_minor(S, contraction_matroid(S, a), f"contraction of {S.gs.label(a)}")


def inadmissible_flat_matroid(S: RankedSympMatroid) -> Matroid:
    """The matroid whose bases are the strongly admissible sets of size rank-1."""
    if S.rank < 2:
        raise ValueError("needs rank >= 2")
    bases = strongly_admissible_sets(S, S.rank - 1)
    return Matroid(S.gs.size, bases, check=True)


def inadmissible_lattice_check(S: RankedSympMatroid) -> bool:
    """Flats of the strongly-admissible matroid are the inadmissible flats plus a bottom."""
    N = inadmissible_flat_matroid(S)
    inadmissible = {F for F in S.env.flats if not S.gs.is_admissible(F)}
    return set(N.flats) == inadmissible | {N.closure(0)} and N.closure(0) == 0


def codim1_connected(L: Lattice) -> bool:
    """Maximal chains, joined when they differ in one member, form a connected graph."""
    chains = L.maximal_chains()
    if len(chains) <= 1:
        return True
    lengths = {len(c) for c in chains}
    if len(lengths) != 1:
        return False
    by_hole: dict[tuple, list[int]] = {}
    for idx, c in enumerate(chains):
        for pos in range(1, len(c) - 1):
            by_hole.setdefault(c[:pos] + (None,) + c[pos + 1:], []).append(idx)
    adj: dict[int, set[int]] = {i: set() for i in range(len(chains))}
    for group in by_hole.values():
        for i in group:
            adj[i].update(group)
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in adj[i] - seen:
            seen.add(j)
            queue.append(j)
    return len(seen) == len(chains)


def covered_flats_check(S: RankedSympMatroid) -> bool:
    """Covers of proper inadmissible flats split as F + F*, with matching intervals."""
    gs, env = S.gs, S.env
    L = env.lattice
    for Fp in L.members:
        if gs.is_admissible(Fp) or Fp == env.ground:
            continue
        for F in L.lower_covers[Fp]:
            if not gs.is_admissible(F):
                continue
            if Fp != F | gs.star(F) or F & gs.star(F):
                return False
            for a in elements(F):
                if not _interval_map_ok(gs, L, env, a, F, Fp):
                    return False
    return True


def _interval_map_ok(gs, L, env, a, F, Fp) -> bool:
    low_adm = env.closure(1 << a)
    low_inad = env.closure(gs.pair(a))
    source = L.interval(low_adm, F)
    target = set(L.interval(low_inad, Fp))
    image = {}
    for G in source:
        ups = [H for H in L.upper_covers[G] if not gs.is_admissible(H) and H in target]
        if len(ups) != 1:
            return False
        image[G] = ups[0]
    if set(image.values()) != target or len(set(image.values())) != len(source):
        return False
    return all(L.leq(G1, G2) == L.leq(image[G1], image[G2]) for G1 in source for G2 in source)


def connectivity_check(S: RankedSympMatroid) -> bool:
    return S.env.is_connected() or S.rank == 2


# ----------------------------------------------------------------------
# the psi map between contractions
# ----------------------------------------------------------------------

def psi_bijection(S: RankedSympMatroid, a: int, reading: str = "bases") -> tuple[dict[int, int], bool]:
    """psi from bases of S/a to bases of S/a*, and whether it is a bijection.

    With ``reading="truncation"`` both contractions are truncated first,
    so psi acts on their admissible independent sets of size rank - 2.
    """
    if S.rank < 3:
        raise ValueError("needs rank >= 3")
    if reading not in ("bases", "truncation"):
        raise ValueError("reading must be 'bases' or 'truncation'")
    gs = S.gs
    ma = contraction_matroid(S, a)
    mb = contraction_matroid(S, gs.star_elem(a))
    if reading == "truncation":
        ma, mb = ma.truncate(), mb.truncate()
    sa = strongly_admissible_family(gs, ma)
    source = admissible_bases(gs, ma)
    target = admissible_bases(gs, mb)
    psi = {}
    for B in sorted(source):
        if B in sa:
            psi[B] = B
            continue
        splits = [b for b in elements(B) if B & ~(1 << b) in sa]
        if len(splits) != 1:
            raise DecompositionFailure(B, splits)
        b = splits[0]
        psi[B] = (B & ~(1 << b)) | (1 << gs.star_elem(b))
    images = list(psi.values())
    bijective = len(set(images)) == len(images) and set(images) == set(target)
    return psi, bijective


# ----------------------------------------------------------------------
# enveloping matroids of a basis family
# ----------------------------------------------------------------------

def direct_sum(gs1: GroundSet, bases1: Iterable[int], gs2: GroundSet, bases2: Iterable[int]):
    """Direct sum of two families; pairs of the second follow those of the first."""
    gs = GroundSet(gs1.n + gs2.n)
    shift = {}
    for i in range(gs1.n):
        shift[i], shift[i + gs1.n] = i, i + gs.n
    for i in range(gs2.n):
        shift[(2 * gs1.n) + i] = gs1.n + i
        shift[(2 * gs1.n) + i + gs2.n] = gs1.n + i + gs.n

    def move1(B):
        return mask_of(shift[e] for e in elements(B))

    def move2(B):
        return mask_of(shift[2 * gs1.n + e] for e in elements(B))

    return gs, frozenset(move1(A) | move2(B) for A in bases1 for B in bases2)


def admissible_envelopes(gs: GroundSet, bases: Iterable[int], *, max_ground: int = 8,
                         node_budget: int = 2_000_000) -> list[Matroid]:
    """All admissible matroids of fewest bases whose admissible bases are ``bases``.

    Exhaustive branch-and-bound over the inadmissible sets that may be
    added.  Sets with two or more pairs are never candidates: the derived
    rank of such a set is below its size.
    """
    fixed = frozenset(bases)
    if not fixed:
        raise ValueError("empty family")
    if gs.size > max_ground:
        raise ValueError(f"brute-force envelope search limited to |J| <= {max_ground}")
    (k,) = {popcount(B) for B in fixed}
    if not all(gs.is_admissible(B) for B in fixed):
        raise ValueError("input bases must be admissible")
    cands = sorted(sum(1 << e for e in c) for c in itertools.combinations(range(gs.size), k)
                   if popcount(gs.pairs_inside(sum(1 << e for e in c))) == 1)
    full = gs.full
    best = [float("inf")]
    found: dict[frozenset, Matroid] = {}
    nodes = [0]

    def propagate(inc: set, und: set) -> bool:
        changed = True
        while changed:
            changed = False
            cover = 0
            for B in inc | und:
                cover |= B
            if cover != full:
                return False
            for B1 in list(inc):
                for B2 in list(inc):
                    if B1 == B2:
                        continue
                    for x in elements(B1 & ~B2):
                        rest = B1 & ~(1 << x)
                        opts = [rest | (1 << y) for y in elements(B2 & ~B1)]
                        if any(o in inc for o in opts):
                            continue
                        live = [o for o in opts if o in und]
                        if not live:
                            return False
                        if len(live) == 1:
                            und.discard(live[0])
                            inc.add(live[0])
                            changed = True
            if len(inc) > best[0]:
                return False
        return True

    def search(inc: set, und: set) -> None:
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise RuntimeError("envelope search budget exhausted")
        if not propagate(inc, und):
            return
        if not und:
            m = Matroid(gs.size, inc, check=False)
            try:
                m._check_exchange()
            except ExchangeViolation:
                return
            if is_admissible_matroid(gs, m):
                if len(inc) < best[0]:
                    best[0] = len(inc)
                    found.clear()
                found[frozenset(inc)] = m
            return
        c = min(und)
        search(set(inc), und - {c})
        search(set(inc) | {c}, und - {c})

    search(set(fixed), set(cands))
    return [found[key] for key in sorted(found, key=lambda f: sorted(f))]


def minimal_enveloping(gs: GroundSet, bases: Iterable[int], **kw) -> Matroid:
    """The unique admissible envelope with fewest bases."""
    sols = admissible_envelopes(gs, bases, **kw)
    if not sols:
        raise NotFound("no admissible matroid envelopes this family")
    if len(sols) > 1:
        raise MultipleMinima(sols)
    return sols[0]
