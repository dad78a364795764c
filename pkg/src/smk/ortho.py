"""Lagrangian orthogonal matroids: D-order maximality, parity, and admissible envelopes."""
from __future__ import annotations

import random
from typing import Iterable, Iterator

from .groundset import GroundSet, enumerate_admissible_orders, gale_maximum, popcount
from .errors import NotFound
from .sympcore import admissible_bases, admissible_envelopes


def is_orthogonal(gs: GroundSet, bases: Iterable[int]) -> bool:
    """A Gale-greatest basis exists for every D order."""
    fam = list(bases)
    if not fam:
        raise ValueError("empty family")
    if len({popcount(B) for B in fam}) != 1 or not all(gs.is_admissible(B) for B in fam):
        raise ValueError("bases must be admissible and equicardinal")
    return all(gale_maximum(fam, w) is not None for w in enumerate_admissible_orders(gs, "D"))


def starred_count(gs: GroundSet, B: int) -> int:
    return popcount(B >> gs.n)


def parity_check(gs: GroundSet, bases: Iterable[int]) -> bool:
    return len({starred_count(gs, B) % 2 for B in bases}) <= 1


def envelopes(gs: GroundSet, bases: Iterable[int]) -> list:
    """Minimal admissible matroids whose admissible bases are exactly ``bases``."""
    fam = frozenset(bases)
    return [m for m in admissible_envelopes(gs, fam) if admissible_bases(gs, m) == fam]


def envelope_theorem_check(gs: GroundSet, bases: Iterable[int]) -> bool:
    """True when an admissible envelope exists; NotFound otherwise."""
    fam = frozenset(bases)
    if not envelopes(gs, fam):
        raise NotFound(f"no admissible envelope for {sorted(gs.mask_to_signed(B) for B in fam)}")
    return True


def enumerate_lagrangian(n: int, *, samples: int | None = None, seed: int = 0) -> Iterator[frozenset[int]]:
    """Lagrangian orthogonal matroids on n pairs: all of them for n <= 3, else a seeded sample."""
    gs = GroundSet(n)
    transversals = sorted(gs.admissible_sets(n))
    if samples is None:
        if n > 3:
            raise ValueError("exhaustive enumeration only for n <= 3; pass samples")
        for bits in range(1, 1 << len(transversals)):
            fam = frozenset(transversals[i] for i in range(len(transversals)) if bits >> i & 1)
            if is_orthogonal(gs, fam):
                yield fam
        return
    rng = random.Random(seed)
    seen = set()
    for _ in range(samples):
        # orthogonal families are parity-closed, so draw inside one parity class
        parity = rng.randint(0, 1)
        pool = [B for B in transversals if starred_count(gs, B) % 2 == parity]
        fam = frozenset(B for B in pool if rng.random() < 0.5) or frozenset([rng.choice(pool)])
        if fam not in seen and is_orthogonal(gs, fam):
            seen.add(fam)
            yield fam
