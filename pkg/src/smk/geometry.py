"""Matroid polytopes, their H-descriptions, and the env projection."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .groundset import GroundSet, elements, popcount
from .matroid import Matroid
from .sympcore import RankedSympMatroid


def env(v: Sequence) -> tuple:
    """(x_1..x_n, x_1*..x_n*) -> (x_1 - x_1*, ..., x_n - x_n*)."""
    if len(v) % 2:
        raise ValueError("env needs a vector of even length")
    n = len(v) // 2
    return tuple(v[i] - v[i + n] for i in range(n))


@dataclass
class VPolytope:
    vertices: list[tuple]

    def __post_init__(self):
        self.vertices = sorted(set(tuple(v) for v in self.vertices))

    @property
    def ambient(self) -> int:
        return len(self.vertices[0])

    def dim(self) -> int:
        base = self.vertices[0]
        return linalg.rank([[a - b for a, b in zip(v, base)] for v in self.vertices[1:]])

    def contains(self, point: Sequence) -> bool:
        return linalg.convex_combination(self.vertices, point) is not None

    def irredundant(self) -> bool:
        """No listed vertex lies in the hull of the others."""
        for i, v in enumerate(self.vertices):
            others = self.vertices[:i] + self.vertices[i + 1:]
            if others and linalg.convex_combination(others, v) is not None:
                return False
        return True

    def edges(self) -> list[tuple[tuple, tuple]]:
        """Pairs of vertices spanning a 1-face.

        [u, v] is an edge exactly when its midpoint has no convex
        representation putting weight on a third vertex.
        """
        V = self.vertices
        out = []
        for i, j in itertools.combinations(range(len(V)), 2):
            mid = [Fraction(a + b, 2) for a, b in zip(V[i], V[j])]
            others = [k for k in range(len(V)) if k not in (i, j)]
            if not others:
                out.append((V[i], V[j]))
                continue
            order = [i, j] + others
            A = [[V[k][c] for k in order] for c in range(self.ambient)] + [[1] * len(order)]
            b = mid + [1]
            res = linalg.linprog_max([0, 0] + [1] * len(others), A, b)
            if res.status == "optimal" and res.value == 0:
                out.append((V[i], V[j]))
        return out


def polytope(S: RankedSympMatroid) -> VPolytope:
    return VPolytope([S.gs.signed_vector(B) for B in S.bases])


def polytope_of_bases(gs: GroundSet, bases: Iterable[int]) -> VPolytope:
    return VPolytope([gs.signed_vector(B) for B in bases])


def polytope_ordinary(M: Matroid) -> VPolytope:
    return VPolytope([tuple((B >> e) & 1 for e in range(M.size)) for B in M.bases])


def edge_direction_ok(d: Sequence) -> bool:
    """Parallel to e^±_a - e^±_b for some a != b: one nonzero entry, or two of equal size."""
    support = [x for x in d if x != 0]
    if len(support) == 1:
        return True
    return len(support) == 2 and abs(support[0]) == abs(support[1])


def gelfand_serganova_check(gs: GroundSet, bases: Iterable[int]) -> bool:
    P = polytope_of_bases(gs, bases)
    if len(P.vertices) == 1:
        return True
    return all(edge_direction_ok([a - b for a, b in zip(u, v)]) for u, v in P.edges())


def env_membership_check(S: RankedSympMatroid, B: int) -> tuple[bool, bool]:
    """(predicted, actual) for env(e_B) lying in P(S), B an inadmissible basis."""
    gs = S.gs
    inside = gs.pairs_inside(B)
    if B not in S.env.bases or popcount(inside) != 1:
        raise ValueError("B must be an inadmissible basis with exactly one pair")
    p = inside.bit_length() - 1
    pair = gs.pair(p)
    scope = gs.full & ~pair
    predicted = not gs.is_transversal(S.env.closure(B & ~pair), scope)
    actual = polytope(S).contains(env(gs.unsigned_vector(B)))
    return predicted, actual


# ----------------------------------------------------------------------
# H-descriptions
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Inequality:
    normal: tuple
    bound: Fraction
    source: str
    flat: int | None = None
    phi: int = 0

    def holds(self, x: Sequence) -> bool:
        return sum(a * b for a, b in zip(self.normal, x)) <= self.bound

    def tight(self, x: Sequence) -> bool:
        return sum(a * b for a, b in zip(self.normal, x)) == self.bound


@dataclass
class HPolytope:
    inequalities: list[Inequality]
    equations: list[Inequality] = field(default_factory=list)

    def contains(self, x: Sequence) -> bool:
        return all(h.holds(x) for h in self.inequalities) and all(e.tight(x) for e in self.equations)


def phi(S: RankedSympMatroid, F: int) -> int:
    return int(popcount(F) == S.gs.n - 1 and S.env.rank(F) == S.rank - 2)


def h_representation(S: RankedSympMatroid) -> HPolytope:
    gs, r = S.gs, S.rank
    ineqs = [Inequality(tuple(signs), Fraction(r), "cross-polytope")
             for signs in itertools.product((1, -1), repeat=gs.n)]
    L = S.lattice
    for F in L.members:
        if F in (L.bottom, L.top):
            continue
        f = phi(S, F)
        ineqs.append(Inequality(gs.signed_vector(F), Fraction(S.env.rank(F) - f), "flat", F, f))
    return HPolytope(ineqs)


def h_representation_ordinary(M: Matroid) -> HPolytope:
    """x >= 0, x(F) <= rank(F) for proper flats, x(ground) = rank."""
    size = M.size
    ineqs = []
    for e in range(size):
        normal = [0] * size
        normal[e] = -1
        ineqs.append(Inequality(tuple(normal), Fraction(0), "simplex"))
    for F in M.flats:
        if F == M.ground or F == 0:
            continue
        ineqs.append(Inequality(tuple((F >> e) & 1 for e in range(size)), Fraction(M.rank(F)), "flat", F))
    eq = Inequality(tuple((M.ground >> e) & 1 for e in range(size)), Fraction(M.r), "simplex")
    return HPolytope(ineqs, [eq])


def h_vertices(H: HPolytope, dim: int) -> list[tuple]:
    """Vertices of an H-polytope by solving every full-rank set of active constraints."""
    eqs = [(list(e.normal), e.bound) for e in H.equations]
    need = dim - linalg.rank([e[0] for e in eqs]) if eqs else dim
    ineqs = []
    seen = set()
    for h in H.inequalities:
        key = (h.normal, h.bound)
        if key not in seen:
            seen.add(key)
            ineqs.append(h)
    found = set()

    def extend(start, chosen, rows):
        if len(chosen) == need:
            A = [list(h.normal) for h in chosen] + [e[0] for e in eqs]
            b = [h.bound for h in chosen] + [e[1] for e in eqs]
            sol = _solve_full(A, b, dim)
            if sol is not None and sol not in found and H.contains(sol):
                found.add(sol)
            return
        for i in range(start, len(ineqs) - (need - len(chosen)) + 1):
            cand = rows + [list(ineqs[i].normal)]
            if linalg.rank(cand) < len(cand):
                continue
            extend(i + 1, chosen + [ineqs[i]], cand)

    extend(0, [], [e[0] for e in eqs])
    return sorted(found)


def _solve_full(A, b, dim):
    R, pivots = linalg.row_reduce([row + [bi] for row, bi in zip(A, b)])
    if dim in pivots or pivots != list(range(dim)):
        return None
    return tuple(R[i][dim] for i in range(dim))


def affine_hull(P: VPolytope) -> list[tuple[tuple, Fraction]]:
    """Equations u.x = c cutting out the affine hull of P."""
    base = P.vertices[0]
    diffs = [[a - b for a, b in zip(v, base)] for v in P.vertices[1:]]
    normals = linalg.nullspace(diffs, P.ambient) if diffs else [
        [Fraction(int(i == j)) for j in range(P.ambient)] for i in range(P.ambient)]
    return [(tuple(u), sum(a * b for a, b in zip(u, base))) for u in normals]


def facets(P: VPolytope) -> list[tuple[tuple, Fraction]]:
    """Facet inequalities a.x <= b of P inside its affine hull, with a in the direction space."""
    d = P.dim()
    if d == 0:
        return []
    ortho = [linalg.clear_denominators(u) for u, _ in affine_hull(P)]
    out = set()
    for subset in itertools.combinations(P.vertices, d):
        base = subset[0]
        rows = [[int(a - b) for a, b in zip(v, base)] for v in subset[1:]] + ortho
        normal = _cross(rows, P.ambient)
        if not any(normal):
            continue
        a = tuple(linalg.primitive(normal))
        values = [sum(x * y for x, y in zip(a, v)) for v in P.vertices]
        b = sum(x * y for x, y in zip(a, base))
        if all(v <= b for v in values):
            out.add((a, b))
        elif all(v >= b for v in values):
            out.add((tuple(-x for x in a), -b))
    return sorted(out)


def _cross(rows: list[list[int]], size: int) -> list[int]:
    """Generalised cross product of size-1 integer rows: signed maximal minors."""
    return [(-1) ** i * linalg.determinant([r[:i] + r[i + 1:] for r in rows]) for i in range(size)]


def maximize_over(H: HPolytope, c: Sequence, dim: int) -> linalg.LPResult:
    """Maximise c.x over an H-polytope with free variables x = p - q."""
    rows, rhs = [], []
    m = len(H.inequalities)
    for i, h in enumerate(H.inequalities):
        slack = [0] * m
        slack[i] = 1
        rows.append(list(h.normal) + [-x for x in h.normal] + slack)
        rhs.append(h.bound)
    for e in H.equations:
        rows.append(list(e.normal) + [-x for x in e.normal] + [0] * m)
        rhs.append(e.bound)
    res = linalg.linprog_max(list(c) + [-x for x in c] + [0] * m, rows, rhs)
    if res.status == "optimal":
        res = linalg.LPResult(res.status, res.value, [p - q for p, q in zip(res.x[:dim], res.x[dim:2 * dim])])
    return res


def h_eq_v_check(S: RankedSympMatroid, *, enumerate_vertices: bool = False) -> dict:
    """Compare P(S) with the region cut out by h_representation(S).

    H is contained in P(S) exactly when every facet inequality and affine
    hull equation of P(S) is bounded by its value over H, which is one
    exact LP per facet.  An LP optimum that breaks a facet is a point of
    H outside P(S) and is reported as a witness.  With
    ``enumerate_vertices`` the full vertex list of H is also computed by
    brute force.
    """
    n = S.gs.n
    P = polytope(S)
    H = h_representation(S)
    v_in_h = all(H.contains(v) for v in P.vertices)
    witnesses = set()
    for u, c in affine_hull(P):
        for sign in (1, -1):
            res = maximize_over(H, [sign * x for x in u], n)
            if res.value != sign * c:
                witnesses.add(tuple(res.x))
    for a, b in facets(P):
        res = maximize_over(H, a, n)
        if res.value > b:
            witnesses.add(tuple(res.x))
    if not v_in_h:
        verdict = "inconsistent"
    elif witnesses:
        verdict = "V_subset_H"
    else:
        verdict = "equal"
    report = {"verdict": verdict, "v_in_h": v_in_h, "witnesses": sorted(witnesses)}
    if enumerate_vertices:
        hv = h_vertices(H, n)
        vset = set(P.vertices)
        report["h_vertices"] = hv
        report["extra_vertices"] = [x for x in hv if x not in vset]
    return report


def ordinary_h_eq_v_check(M: Matroid) -> bool:
    P = polytope_ordinary(M)
    H = h_representation_ordinary(M)
    if not all(H.contains(v) for v in P.vertices):
        return False
    return set(h_vertices(H, M.size)) == set(P.vertices)


def face_bases(gs_or_size, bases: Iterable[int], direction: Sequence, signed: bool = True) -> frozenset[int]:
    """Bases whose (signed) indicator maximises the functional ``direction``."""
    bases = list(bases)
    if signed:
        gs = gs_or_size
        vec = {B: gs.signed_vector(B) for B in bases}
    else:
        vec = {B: tuple((B >> e) & 1 for e in range(gs_or_size)) for B in bases}
    value = {B: sum(Fraction(a) * b for a, b in zip(direction, vec[B])) for B in bases}
    top = max(value.values())
    return frozenset(B for B in bases if value[B] == top)


def face_matroid(M: Matroid, direction: Sequence) -> Matroid:
    return Matroid(M.size, face_bases(M.size, M.bases, direction, signed=False), M.ground, check=False)


def face_symp(S: RankedSympMatroid, direction: Sequence) -> frozenset[int]:
    return face_bases(S.gs, S.bases, direction)


def ordinary_dimension_check(M: Matroid) -> bool:
    """dim P(M) = |ground| - number of connected components."""
    return polytope_ordinary(M).dim() == popcount(M.ground) - len(M.components())
