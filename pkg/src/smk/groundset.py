"""The signed ground set J = [n] + [n]* and admissible orders on it.

Elements are encoded as integers: i in [n] is ``i - 1`` and i* is
``n + i - 1``.  Subsets of J are bitmasks (plain ``int``), which keeps
the combinatorics fast at the sizes we care about (2n <= 10).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

ElementSet = int


def popcount(x: int) -> int:
    return bin(x).count("1")


def elements(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for e in items:
        m |= 1 << e
    return m


@dataclass(frozen=True)
class GroundSet:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")

    @property
    def size(self) -> int:
        return 2 * self.n

    @property
    def full(self) -> int:
        return (1 << (2 * self.n)) - 1

    @property
    def low(self) -> int:
        return (1 << self.n) - 1

    # -- the star involution -------------------------------------------
    def star_elem(self, e: int) -> int:
        return (e + self.n) % (2 * self.n)

    def star(self, A: ElementSet) -> ElementSet:
        n = self.n
        return ((A & self.low) << n) | (A >> n)

    def pair(self, e: int) -> int:
        """Mask of the pair {e, e*}."""
        return (1 << e) | (1 << self.star_elem(e))

    def pair_index(self, e: int) -> int:
        return e % self.n

    def pairs_of(self, A: ElementSet) -> int:
        """Bitmask over [n] of the pairs that meet ``A``."""
        return (A | (A >> self.n)) & self.low

    def pairs_inside(self, A: ElementSet) -> int:
        """Bitmask over [n] of the pairs fully contained in ``A``."""
        return A & (A >> self.n) & self.low

    # -- predicates ----------------------------------------------------
    def is_admissible(self, A: ElementSet) -> bool:
        return A & self.star(A) == 0

    def is_totally_inadmissible(self, A: ElementSet) -> bool:
        return A == self.star(A)

    def is_star_closed(self, A: ElementSet) -> bool:
        return self.is_totally_inadmissible(A)

    def is_transversal(self, A: ElementSet, scope: ElementSet | None = None) -> bool:
        """A is admissible and A | A* covers ``scope`` (default: all of J)."""
        if scope is None:
            scope = self.full
        return self.is_admissible(A) and (A | self.star(A)) & scope == scope

    # -- vectors ---------------------------------------------------------
    def unsigned_vector(self, A: ElementSet) -> tuple[int, ...]:
        return tuple((A >> e) & 1 for e in range(2 * self.n))

    def signed_vector(self, A: ElementSet) -> tuple[int, ...]:
        if not self.is_admissible(A):
            raise ValueError(f"signed vector undefined for inadmissible set {self.fmt(A)}")
        return tuple(((A >> i) & 1) - ((A >> (i + self.n)) & 1) for i in range(self.n))

    def sign(self, e: int) -> int:
        return 1 if e < self.n else -1

    # -- labels ----------------------------------------------------------
    def to_signed(self, e: int) -> int:
        return e + 1 if e < self.n else -(e - self.n + 1)

    def from_signed(self, s: int) -> int:
        if s == 0 or abs(s) > self.n:
            raise ValueError(f"element code {s} out of range for n={self.n}")
        return s - 1 if s > 0 else self.n + (-s) - 1

    def mask_to_signed(self, A: ElementSet) -> list[int]:
        return sorted(self.to_signed(e) for e in elements(A))

    def mask_from_signed(self, items: Iterable[int]) -> ElementSet:
        return mask_of(self.from_signed(s) for s in items)

    def label(self, e: int) -> str:
        return f"{e + 1}" if e < self.n else f"{e - self.n + 1}*"

    def fmt(self, A: ElementSet) -> str:
        order = sorted(elements(A), key=lambda e: (e % self.n, e >= self.n))
        return "{" + ",".join(self.label(e) for e in order) + "}"

    def admissible_sets(self, k: int | None = None) -> Iterator[ElementSet]:
        """All admissible subsets of J (of size k, if given)."""
        n = self.n
        for choice in itertools.product((0, 1, 2), repeat=n):
            if k is not None and sum(1 for c in choice if c) != k:
                continue
            m = 0
            for i, c in enumerate(choice):
                if c == 1:
                    m |= 1 << i
                elif c == 2:
                    m |= 1 << (i + n)
            yield m


# ----------------------------------------------------------------------
# admissible orders
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibleOrder:
    """An order on J given by a height per element.

    ``x < y`` iff ``height[x] < height[y]``.  For C orders all heights are
    distinct; for D orders exactly one pair {i, i*} shares height 0 and
    is therefore unrelated.
    """

    kind: str
    height: tuple[int, ...]

    def lt(self, x: int, y: int) -> bool:
        return self.height[x] < self.height[y]

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.height[x] < self.height[y]

    @property
    def unrelated_pair(self) -> tuple[int, int] | None:
        if self.kind != "D":
            return None
        zero = [e for e, h in enumerate(self.height) if h == 0]
        return (zero[0], zero[1])


def c_order(gs: GroundSet, top: Sequence[int]) -> AdmissibleOrder:
    """C order whose n largest elements are ``top`` (largest first)."""
    n = gs.n
    height = [0] * (2 * n)
    for j, e in enumerate(top):
        height[e] = n - j
        height[gs.star_elem(e)] = -(n - j)
    return AdmissibleOrder("C", tuple(height))


def d_order(gs: GroundSet, top: Sequence[int]) -> AdmissibleOrder:
    """D order with the admissible (n-1)-chain ``top`` (largest first)."""
    n = gs.n
    height = [0] * (2 * n)
    for j, e in enumerate(top):
        height[e] = n - 1 - j
        height[gs.star_elem(e)] = -(n - 1 - j)
    return AdmissibleOrder("D", tuple(height))


def enumerate_admissible_orders(gs: GroundSet, kind: str) -> Iterator[AdmissibleOrder]:
    """Every C order (2^n n! of them) or every D order (2^(n-1) n!)."""
    n = gs.n
    if kind == "C":
        for perm in itertools.permutations(range(n)):
            for signs in itertools.product((0, 1), repeat=n):
                yield c_order(gs, [i + n * s for i, s in zip(perm, signs)])
    elif kind == "D":
        for free in range(n):
            rest = [i for i in range(n) if i != free]
            for perm in itertools.permutations(rest):
                for signs in itertools.product((0, 1), repeat=n - 1):
                    yield d_order(gs, [i + n * s for i, s in zip(perm, signs)])
    else:
        raise ValueError(f"unknown order kind {kind!r}")


# ----------------------------------------------------------------------
# Gale order
# ----------------------------------------------------------------------

def gale_leq(A: ElementSet, B: ElementSet, order: AdmissibleOrder) -> bool:
    """A <= B in the Gale order: a bijection phi: A -> B with a <= phi(a).

    Decided by bipartite matching, so it is valid for partial orders too.
    """
    xs, ys = list(elements(A)), list(elements(B))
    if len(xs) != len(ys):
        raise ValueError("Gale comparison needs equicardinal sets")
    match: dict[int, int] = {}

    def augment(x: int, seen: set[int]) -> bool:
        for y in ys:
            if y in seen or not order.leq(x, y):
                continue
            seen.add(y)
            if y not in match or augment(match[y], seen):
                match[y] = x
                return True
        return False

    return all(augment(x, set()) for x in xs)


def gale_leq_total(A: ElementSet, B: ElementSet, order: AdmissibleOrder) -> bool:
    """Gale comparison for a total order: compare sorted sequences."""
    h = order.height
    a = sorted((h[e] for e in elements(A)), reverse=True)
    b = sorted((h[e] for e in elements(B)), reverse=True)
    return all(x <= y for x, y in zip(a, b))


def gale_maximum(family: Iterable[ElementSet], order: AdmissibleOrder) -> ElementSet | None:
    """The greatest member of ``family`` in the Gale order, or None."""
    fam = list(family)
    cmp = gale_leq_total if order.kind == "C" else gale_leq
    for B in fam:
        if all(cmp(A, B, order) for A in fam):
            return B
    return None
