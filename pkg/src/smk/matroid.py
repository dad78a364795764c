"""Ordinary matroids given by explicit basis families, and finite lattices.

A :class:`Matroid` lives on a subset ``ground`` of a universe of ``size``
bits.  Minors keep the universe, so elements never change their names
unless :meth:`Matroid.relabel` is asked to compress them.
"""
from __future__ import annotations

import itertools
from functools import cached_property
from typing import Callable, Iterable, Iterator

from .errors import CoLoopInput, EmptyFamily, ExchangeViolation
from .groundset import elements, popcount, submasks


class Lattice:
    """A finite lattice of bitmasks ordered by inclusion.

    ``rank`` assigns the grading used by callers (matroid rank for flat
    lattices).  Covers, joins and the Moebius function are computed from
    the inclusion order alone; ``rank`` is only a label.
    """

    def __init__(self, members: Iterable[int], rank: Callable[[int], int]):
        self.members: list[int] = sorted(set(members), key=lambda m: (popcount(m), m))
        self.index = {m: i for i, m in enumerate(self.members)}
        self.rank = {m: rank(m) for m in self.members}
        N = len(self.members)
        up = [0] * N
        down = [0] * N
        for i, x in enumerate(self.members):
            for j in range(i + 1, N):
                y = self.members[j]
                if x & y == x:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self._up, self._down = up, down
        self._mobius_rows: dict[int, list[int]] = {}
        bottoms = [i for i in range(N) if down[i] == 0]
        tops = [i for i in range(N) if up[i] == 0]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("not a bounded poset")
        self.bottom = self.members[bottoms[0]]
        self.top = self.members[tops[0]]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.index

    def leq(self, x: int, y: int) -> bool:
        return x & y == x

    def above(self, x: int) -> list[int]:
        """Members strictly above x."""
        return [self.members[j] for j in elements(self._up[self.index[x]])]

    def below(self, x: int) -> list[int]:
        return [self.members[j] for j in elements(self._down[self.index[x]])]

    def interval(self, x: int, y: int) -> list[int]:
        i, j = self.index[x], self.index[y]
        mask = ((self._up[i] | 1 << i) & (self._down[j] | 1 << j))
        return [self.members[k] for k in elements(mask)]

    @cached_property
    def upper_covers(self) -> dict[int, list[int]]:
        out = {}
        for i, x in enumerate(self.members):
            ups = self._up[i]
            out[x] = [self.members[j] for j in elements(ups) if ups & self._down[j] == 0]
        return out

    @cached_property
    def lower_covers(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {x: [] for x in self.members}
        for x, ys in self.upper_covers.items():
            for y in ys:
                out[y].append(x)
        return out

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (i, j) as indices into ``members``."""
        return [(self.index[x], self.index[y]) for x in self.members for y in self.upper_covers[x]]

    @property
    def atoms(self) -> list[int]:
        return self.upper_covers[self.bottom]

    @property
    def coatoms(self) -> list[int]:
        return self.lower_covers[self.top]

    def join(self, x: int, y: int) -> int:
        i, j = self.index[x], self.index[y]
        common = (self._up[i] | 1 << i) & (self._up[j] | 1 << j)
        for k in elements(common):
            # least element of the common upper set
            if common & ~(self._up[k] | 1 << k) == 0:
                return self.members[k]
        raise ValueError("no join: not a lattice")

    def meet(self, x: int, y: int) -> int:
        i, j = self.index[x], self.index[y]
        common = (self._down[i] | 1 << i) & (self._down[j] | 1 << j)
        for k in reversed(list(elements(common))):
            if common & ~(self._down[k] | 1 << k) == 0:
                return self.members[k]
        raise ValueError("no meet: not a lattice")

    def join_all(self, xs: Iterable[int]) -> int:
        out = self.bottom
        for x in xs:
            out = self.join(out, x)
        return out

    def mobius_row(self, x: int) -> list[int]:
        """mu(x, y) for every member y (indexed like ``members``)."""
        i = self.index[x]
        row = self._mobius_rows.get(i)
        if row is None:
            row = [0] * len(self.members)
            row[i] = 1
            ups = self._up[i]
            for j in elements(ups):
                # members below j and at or above x: their mu values are final
                between = (self._down[j] & (ups | 1 << i))
                row[j] = -sum(row[k] for k in elements(between))
            self._mobius_rows[i] = row
        return row

    def mobius(self, x: int, y: int) -> int:
        if not self.leq(x, y):
            return 0
        return self.mobius_row(x)[self.index[y]]

    def mobius_top(self) -> int:
        return self.mobius(self.bottom, self.top)

    def is_graded(self) -> bool:
        lo = {self.bottom: 0}
        hi = {self.bottom: 0}
        for x in self.members:
            for y in self.upper_covers[x]:
                lo[y] = min(lo.get(y, 10**9), lo[x] + 1)
                hi[y] = max(hi.get(y, -1), hi[x] + 1)
        return all(lo[x] == hi[x] for x in self.members)

    def rank_respects_covers(self) -> bool:
        return all(self.rank[y] == self.rank[x] + 1
                   for x in self.members for y in self.upper_covers[x])

    def is_semimodular(self) -> bool:
        r = self.rank
        for x, y in itertools.combinations(self.members, 2):
            if r[x] + r[y] < r[self.meet(x, y)] + r[self.join(x, y)]:
                return False
        return True

    def is_atomistic(self) -> bool:
        atoms = self.atoms
        for x in self.members:
            if self.join_all(a for a in atoms if self.leq(a, x)) != x:
                return False
        return True

    def maximal_chains(self) -> list[tuple[int, ...]]:
        out = []

        def walk(chain):
            last = chain[-1]
            if last == self.top:
                out.append(tuple(chain))
                return
            for y in self.upper_covers[last]:
                walk(chain + [y])

        walk([self.bottom])
        return out

    def chains(self, proper: bool = True) -> list[tuple[int, ...]]:
        """All chains x1 < ... < xk of members (excluding bottom/top if proper)."""
        pool = [x for x in self.members if not proper or x not in (self.bottom, self.top)]
        allowed = {x for x in pool}
        out: list[tuple[int, ...]] = [()]

        def extend(chain):
            last = chain[-1]
            for y in self.above(last):
                if y in allowed:
                    nxt = chain + (y,)
                    out.append(nxt)
                    extend(nxt)

        for x in pool:
            out.append((x,))
            extend((x,))
        return out


def weisner_check(L: Lattice, atom: int) -> bool:
    """Sum of mu(0, F) over F with F v atom = 1 vanishes."""
    row = L.mobius_row(L.bottom)
    return sum(row[L.index[F]] for F in L.members if L.join(F, atom) == L.top) == 0


def boolean_expansion(L: Lattice) -> int:
    """Sum of (-1)^|B| over sets B of atoms whose join is the top."""
    atoms = L.atoms
    total = 0
    # joins of atom subsets, built incrementally by subset bitmask
    joins = [L.bottom] * (1 << len(atoms))
    for s in range(1, 1 << len(atoms)):
        low = (s & -s).bit_length() - 1
        joins[s] = L.join(joins[s & (s - 1)], atoms[low])
        if joins[s] == L.top:
            total += -1 if popcount(s) % 2 else 1
    if L.bottom == L.top:
        total += 1
    return total


class Matroid:
    """A matroid on ``ground`` (a bitmask within ``size`` bits) given by bases."""

    def __init__(self, size: int, bases: Iterable[int], ground: int | None = None, *, check: bool = True):
        self.size = size
        self.ground = (1 << size) - 1 if ground is None else ground
        self.bases = frozenset(bases)
        if not self.bases:
            raise EmptyFamily("a matroid needs at least one basis")
        ranks = {popcount(B) for B in self.bases}
        if len(ranks) != 1:
            raise ValueError("bases must be equicardinal")
        (self.r,) = ranks
        if any(B & ~self.ground for B in self.bases):
            raise ValueError("a basis leaves the ground set")
        if check:
            self._check_exchange()

    def __repr__(self) -> str:
        return f"Matroid(rank={self.r}, ground={self.ground:#x}, bases={len(self.bases)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Matroid) and (self.ground, self.bases) == (other.ground, other.bases)

    def __hash__(self) -> int:
        return hash((self.ground, self.bases))

    def _check_exchange(self) -> None:
        for B1 in sorted(self.bases):
            for B2 in sorted(self.bases):
                if B1 == B2:
                    continue
                for a in elements(B1 & ~B2):
                    rest = B1 & ~(1 << a)
                    if not any(rest | (1 << b) in self.bases for b in elements(B2 & ~B1)):
                        raise ExchangeViolation(B1, B2, a)

    # -- oracles -----------------------------------------------------------
    @cached_property
    def independent_sets(self) -> frozenset[int]:
        seen = set(self.bases)
        stack = list(self.bases)
        while stack:
            A = stack.pop()
            for e in elements(A):
                sub = A & ~(1 << e)
                if sub not in seen:
                    seen.add(sub)
                    stack.append(sub)
        return frozenset(seen)

    @cached_property
    def _rank_table(self) -> dict[int, int]:
        indep = self.independent_sets
        table: dict[int, int] = {}
        for A in sorted(submasks(self.ground)):
            if A in indep:
                table[A] = popcount(A)
            else:
                table[A] = max(table[A & ~(1 << e)] for e in elements(A))
        return table

    def rank(self, A: int) -> int:
        return self._rank_table[A & self.ground]

    def is_independent(self, A: int) -> bool:
        return A & ~self.ground == 0 and A in self.independent_sets

    def closure(self, A: int) -> int:
        A &= self.ground
        r = self.rank(A)
        out = A
        for e in elements(self.ground & ~A):
            if self.rank(A | (1 << e)) == r:
                out |= 1 << e
        return out

    def is_flat(self, A: int) -> bool:
        return self.closure(A) == A

    @cached_property
    def flats(self) -> frozenset[int]:
        return frozenset(self.closure(A) for A in submasks(self.ground))

    @cached_property
    def lattice(self) -> Lattice:
        return Lattice(self.flats, self.rank)

    @cached_property
    def loops(self) -> int:
        covered = 0
        for B in self.bases:
            covered |= B
        return self.ground & ~covered

    @cached_property
    def coloops(self) -> int:
        common = self.ground
        for B in self.bases:
            common &= B
        return common

    def is_loopless(self) -> bool:
        return self.loops == 0

    @cached_property
    def circuits(self) -> frozenset[int]:
        out = set()
        for C in submasks(self.ground):
            if C == 0 or self.rank(C) == popcount(C):
                continue
            if all(self.rank(C & ~(1 << e)) == popcount(C) - 1 for e in elements(C)):
                out.add(C)
        return frozenset(out)

    def components(self) -> list[int]:
        """Connected components as bitmasks, sorted by lowest element."""
        parent = {e: e for e in elements(self.ground)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for C in self.circuits:
            els = list(elements(C))
            for e in els[1:]:
                parent[find(e)] = find(els[0])
        comps: dict[int, int] = {}
        for e in elements(self.ground):
            comps[find(e)] = comps.get(find(e), 0) | (1 << e)
        return sorted(comps.values(), key=lambda m: m & -m)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- minors --------------------------------------------------------------
    def delete(self, X: int) -> "Matroid":
        keep = self.ground & ~X
        restricted = {B & keep for B in self.bases}
        top = max(popcount(B) for B in restricted)
        return Matroid(self.size, (B for B in restricted if popcount(B) == top), keep, check=False)

    def restrict(self, Y: int) -> "Matroid":
        return self.delete(self.ground & ~Y)

    def contract(self, X: int) -> "Matroid":
        X &= self.ground
        rx = self.rank(X)
        bases = {B & ~X for B in self.bases if popcount(B & X) == rx}
        return Matroid(self.size, bases, self.ground & ~X, check=False)

    def truncate(self) -> "Matroid":
        if self.r == 0:
            raise ValueError("cannot truncate a rank-0 matroid")
        bases = {I for I in self.independent_sets if popcount(I) == self.r - 1}
        return Matroid(self.size, bases, self.ground, check=False)

    def relabel(self, mapping: dict[int, int], size: int) -> "Matroid":
        """Rename elements through ``mapping`` (old -> new) into a new universe."""

        def move(A):
            out = 0
            for e in elements(A):
                out |= 1 << mapping[e]
            return out

        return Matroid(size, (move(B) for B in self.bases), move(self.ground), check=False)

    def count_independent(self, k: int) -> int:
        return sum(1 for I in self.independent_sets if popcount(I) == k)


def from_bases(size: int, bases: Iterable[int], ground: int | None = None) -> Matroid:
    """Build a matroid, validating the basis exchange axiom exhaustively."""
    bases = list(bases)
    if not bases:
        raise EmptyFamily("empty basis family")
    return Matroid(size, bases, ground, check=True)


def uniform(r: int, size: int) -> Matroid:
    return Matroid(size, (sum(1 << e for e in c) for c in itertools.combinations(range(size), r)), check=False)


def mobius(L: Lattice, x: int, y: int) -> int:
    return L.mobius(x, y)


def mobius_of_matroid(M: Matroid) -> int:
    """mu(0, 1) of the lattice of flats; zero when M has loops."""
    if M.loops:
        return 0
    return M.lattice.mobius_top()


def ordinary_mobius_identities_check(M: Matroid, a: int) -> bool:
    """Deletion-contraction for mu and the hyperplane sum avoiding ``a``."""
    if M.loops:
        raise ValueError("matroid must be loopless")
    if M.coloops >> a & 1:
        raise CoLoopInput(f"element {a} is a coloop")
    mu = mobius_of_matroid(M)
    deletion = mobius_of_matroid(M.delete(1 << a)) - mobius_of_matroid(M.contract(1 << a))
    L = M.lattice
    hyper = -sum(L.mobius(L.bottom, F) for F in L.members
                 if not F >> a & 1 and L.rank[F] == M.r - 1)
    return mu == deletion and mu == hyper
