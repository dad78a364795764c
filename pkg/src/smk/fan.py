"""Bergman fans of matroids and ranked symplectic matroids, and their Minkowski weights."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .geometry import env, face_matroid, face_symp
from .groundset import GroundSet, popcount
from .matroid import Lattice, Matroid
from .sympcore import RankedSympMatroid


@dataclass(frozen=True)
class Cone:
    chain: tuple[int, ...]
    rays: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.chain)


@dataclass
class Fan:
    kind: str
    ambient: int
    cones: dict[tuple[int, ...], Cone]
    lineality: list[tuple[int, ...]] = field(default_factory=list)
    ray_of: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def of_dim(self, k: int) -> list[Cone]:
        return [c for c in self.cones.values() if c.dim == k]

    @property
    def top_dim(self) -> int:
        return max(c.dim for c in self.cones.values())

    @property
    def rays(self) -> list[tuple[int, ...]]:
        return sorted({c.rays[0] for c in self.of_dim(1)})

    def maximal_cones(self) -> list[Cone]:
        return self.of_dim(self.top_dim)


def _fan_from_lattice(kind, ambient, L: Lattice, ray, lineality) -> Fan:
    cones = {}
    ray_of = {F: ray(F) for F in L.members if F not in (L.bottom, L.top)}
    for chain in L.chains(proper=True):
        cones[chain] = Cone(chain, tuple(ray_of[F] for F in chain))
    return Fan(kind, ambient, cones, lineality, ray_of)


def bergman_fan(S: RankedSympMatroid) -> Fan:
    """Cones spanned by the signed indicators of chains of proper flats of L(S)."""
    return _fan_from_lattice("symplectic", S.gs.n, S.lattice, S.gs.signed_vector, [])


def bergman_fan_ordinary(M: Matroid) -> Fan:
    """Cones spanned by indicators of chains of proper flats, modulo the all-ones vector."""
    def ray(F):
        return tuple((F >> e) & 1 for e in range(M.size))

    return _fan_from_lattice("ordinary", M.size, M.lattice, ray, [ray(M.ground)])


def _is_unimodular(rows: Sequence[Sequence[int]]) -> bool:
    if not rows:
        return True
    if linalg.rank(rows) < len(rows):
        return False
    return linalg.maximal_minor_gcd(rows) == 1


def unimodularity_check(F: Fan) -> bool:
    """Each cone's rays (with the lineality space) extend to a lattice basis."""
    return all(_is_unimodular(list(c.rays) + F.lineality) for c in F.cones.values())


def env_fan_check(S: RankedSympMatroid) -> bool:
    """env maps each cone of B(env) onto the B(S) cone of its admissible prefix, and onto all of B(S)."""
    gs = S.gs
    symp = bergman_fan(S)
    ordinary = bergman_fan_ordinary(S.env)
    images = set()
    for chain, cone in ordinary.cones.items():
        prefix = tuple(F for F in chain if gs.is_admissible(F))
        if chain[:len(prefix)] != prefix:
            return False
        if prefix not in symp.cones:
            return False
        image_rays = {env(r) for r in cone.rays} - {tuple([0] * gs.n)}
        if image_rays != set(symp.cones[prefix].rays):
            return False
        images.add(prefix)
    return images == set(symp.cones)


def _positive_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 30), rng.randint(1, 7))


def refinement_check(S: RankedSympMatroid, samples: int = 10, seed: int = 0) -> bool:
    """The face of P(S) picked out by a point is constant on each open maximal cone."""
    if samples < 1:
        raise ValueError("samples >= 1")
    rng = random.Random(seed)
    fan = bergman_fan(S)
    for cone in fan.maximal_cones():
        reference = face_symp(S, [sum(col) for col in zip(*cone.rays)])
        for _ in range(samples):
            coeffs = [_positive_fraction(rng) for _ in cone.rays]
            omega = [sum(c * r[i] for c, r in zip(coeffs, cone.rays)) for i in range(S.gs.n)]
            if face_symp(S, omega) != reference:
                return False
    return True


def in_bergman_support(M: Matroid, nu: Sequence) -> bool:
    """nu lies in B(M)_R iff every nonempty superlevel set of nu is a flat."""
    values = sorted({nu[e] for e in range(M.size) if M.ground >> e & 1})
    for c in values:
        level = 0
        for e in range(M.size):
            if M.ground >> e & 1 and nu[e] >= c:
                level |= 1 << e
        if not M.is_flat(level):
            return False
    return True


def loopless_face_check(M: Matroid, samples: int = 20, seed: int = 0) -> bool:
    """M_nu is loopless exactly when nu lies in the Bergman fan (ray sums and random points)."""
    rng = random.Random(seed)
    fan = bergman_fan_ordinary(M)
    probes = [tuple([0] * M.size)]
    for cone in fan.cones.values():
        if cone.rays:
            probes.append(tuple(sum(col) for col in zip(*cone.rays)))
    for _ in range(samples):
        probes.append(tuple(rng.randint(-2, 2) for _ in range(M.size)))
    for nu in probes:
        if face_matroid(M, nu).is_loopless() != in_bergman_support(M, nu):
            return False
    return True


# ----------------------------------------------------------------------
# Minkowski weights
# ----------------------------------------------------------------------

def _annihilator(rows: list, ambient: int) -> list[list[Fraction]]:
    return linalg.nullspace(rows, ambient) if rows else [
        [Fraction(int(i == j)) for j in range(ambient)] for i in range(ambient)]


def _neighbours(F: Fan, k: int):
    """For each (k-1)-cone tau: the k-cones containing it and the flat each adds."""
    out = {}
    for sigma in F.of_dim(k):
        for pos in range(k):
            tau = sigma.chain[:pos] + sigma.chain[pos + 1:]
            out.setdefault(tau, []).append((sigma.chain, sigma.chain[pos]))
    return out


def balancing_check(F: Fan, c: dict, k: int) -> bool:
    """sum over sigma > tau of c(sigma) e_{sigma/tau} lies in span(tau) for every (k-1)-cone tau."""
    for tau, ups in _neighbours(F, k).items():
        total = [0] * F.ambient
        for chain, added in ups:
            ray = F.ray_of[added]
            total = [t + c[chain] * x for t, x in zip(total, ray)]
        span = [list(r) for r in F.cones[tau].rays] + [list(v) for v in F.lineality]
        if not linalg.in_span(span, total):
            return False
    return True


def mw_constraints(F: Fan, k: int) -> tuple[list[tuple[int, ...]], list[list[Fraction]]]:
    index = sorted(c.chain for c in F.of_dim(k))
    pos = {ch: i for i, ch in enumerate(index)}
    rows = []
    for tau, ups in sorted(_neighbours(F, k).items()):
        span = [list(r) for r in F.cones[tau].rays] + [list(v) for v in F.lineality]
        for q in _annihilator(span, F.ambient):
            row = [Fraction(0)] * len(index)
            for chain, added in ups:
                row[pos[chain]] += sum(a * b for a, b in zip(q, F.ray_of[added]))
            if any(row):
                rows.append(row)
    return index, rows


def mw_group(F: Fan, k: int) -> tuple[int, list[dict]]:
    """Rank of MW_k and an integer basis of its rational span (kernel of the balancing map)."""
    if not 1 <= k <= F.top_dim:
        raise ValueError("k out of range")
    index, rows = mw_constraints(F, k)
    kernel = linalg.nullspace(rows, len(index)) if rows else [
        [Fraction(int(i == j)) for j in range(len(index))] for i in range(len(index))]
    gens = [dict(zip(index, linalg.clear_denominators(v))) for v in kernel]
    return len(kernel), gens


# ----------------------------------------------------------------------
# type classes of maximal cones
# ----------------------------------------------------------------------

def _components(nodes, adjacent) -> list[list]:
    seen, comps = set(), []
    for start in nodes:
        if start in seen:
            continue
        comp, queue = [], deque([start])
        seen.add(start)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in nodes:
                if y not in seen and adjacent(x, y):
                    seen.add(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return sorted(comps)


def type_classes(S: RankedSympMatroid, interpretation: str) -> list[list[tuple[int, ...]]]:
    """Classes of maximal cones linked when rank((F u F*) n (G u G*)) hits the target.

    F, G are the top flats of the two chains; the target is d = rank - 1
    ("d") or rank ("d_plus_1").
    """
    if interpretation not in ("d", "d_plus_1"):
        raise ValueError("interpretation must be 'd' or 'd_plus_1'")
    target = S.rank - 1 if interpretation == "d" else S.rank
    gs, env_m = S.gs, S.env
    chains = sorted(c.chain for c in bergman_fan(S).maximal_cones())

    def adjacent(x, y):
        F, G = x[-1], y[-1]
        return env_m.rank((F | gs.star(F)) & (G | gs.star(G))) == target

    return _components(chains, adjacent)


def type_pair(S: RankedSympMatroid, x: tuple[int, ...], y: tuple[int, ...]) -> int | None:
    """1 if the top flats agree, 2 if the next ones agree and F_d meets G_d*, else None."""
    if x == y:
        return None
    if x[-1] == y[-1]:
        return 1
    if len(x) >= 2 and x[-2] == y[-2] and x[-1] & S.gs.star(y[-1]):
        return 2
    if len(x) == 1 and x[-1] & S.gs.star(y[-1]):
        return 2
    return None


def move_classes(S: RankedSympMatroid) -> list[list[tuple[int, ...]]]:
    chains = sorted(c.chain for c in bergman_fan(S).maximal_cones())
    return _components(chains, lambda x, y: type_pair(S, x, y) is not None)


def generators_respect_moves(S: RankedSympMatroid) -> bool:
    F = bergman_fan(S)
    _, gens = mw_group(F, F.top_dim)
    chains = sorted(c.chain for c in F.maximal_cones())
    for x in chains:
        for y in chains:
            if type_pair(S, x, y) is not None and any(g[x] != g[y] for g in gens):
                return False
    return True


def cones_meet_in_faces(F: Fan) -> bool:
    """Two maximal cones meet exactly in the cone on their common rays (exact LP per pair)."""
    maxi = F.maximal_cones()
    lin = F.lineality
    for i in range(len(maxi)):
        for j in range(i + 1, len(maxi)):
            a, b = maxi[i], maxi[j]
            common = set(a.chain) & set(b.chain)
            cols = [list(r) for r in a.rays] + [[-x for x in r] for r in b.rays]
            cols += [list(v) for v in lin] + [[-x for x in v] for v in lin]
            weights = [int(ch not in common) for ch in a.chain] + [int(ch not in common) for ch in b.chain]
            weights += [0] * (2 * len(lin))
            A = [[col[d] for col in cols] + [0] for d in range(F.ambient)]
            A.append([1] * (len(a.rays) + len(b.rays)) + [0] * (2 * len(lin)) + [1])
            res = linalg.linprog_max(weights + [0], A, [0] * F.ambient + [1])
            if res.status != "optimal" or res.value != 0:
                return False
    return True


def fan_codim1_connected(F: Fan) -> bool:
    chains = sorted(c.chain for c in F.maximal_cones())
    if not chains:
        return True
    comps = _components(chains, lambda x, y: len(set(x) ^ set(y)) == 2)
    return len(comps) == 1


def has_transversal_flat(S: RankedSympMatroid) -> bool:
    return any(popcount(F) == S.gs.n and S.gs.is_transversal(F) for F in S.lattice.members)
