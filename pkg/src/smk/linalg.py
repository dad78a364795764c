"""Exact linear algebra and linear programming over the rationals."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple


def as_fractions(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    A = as_fractions(rows)
    if not A:
        return [], []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        _eliminate(A, r, c)
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """A basis of {x : rows . x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    return rank(list(vectors) + [list(v)]) == rank(vectors) if vectors else False


def solve_unique(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """The unique solution of a square system, or None if singular."""
    n = len(A)
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = row_reduce(aug)
    if pivots != list(range(n)):
        return None
    return [R[i][n] for i in range(n)]


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def clear_denominators(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest integer multiple of a rational vector with coprime entries."""
    lcm = 1
    for x in v:
        d = Fraction(x).denominator
        lcm = lcm * d // gcd(lcm, d)
    return primitive([int(Fraction(x) * lcm) for x in v])


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free elimination (Bareiss)."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def maximal_minor_gcd(rows: Sequence[Sequence[int]]) -> int:
    """gcd of all k x k minors of a k x m integer matrix (k = number of rows)."""
    from itertools import combinations

    k = len(rows)
    if k == 0:
        return 1
    m = len(rows[0])
    g = 0
    for cols in combinations(range(m), k):
        g = gcd(g, determinant([[row[c] for c in cols] for row in rows]))
        if g == 1:
            return 1
    return g


# ----------------------------------------------------------------------
# simplex
# ----------------------------------------------------------------------

class LPResult:
    def __init__(self, status: str, value: Fraction | None = None, x: list[Fraction] | None = None):
        self.status, self.value, self.x = status, value, x

    def __repr__(self) -> str:
        return f"LPResult({self.status!r}, value={self.value})"


def _eliminate(A, r, c):
    """Scale row r to lead 1 at column c and clear column c elsewhere, touching only nonzeros."""
    lead = A[r][c]
    row = A[r]
    nz = [j for j, x in enumerate(row) if x != 0]
    for j in nz:
        row[j] = row[j] / lead
    for i in range(len(A)):
        if i != r:
            f = A[i][c]
            if f != 0:
                target = A[i]
                for j in nz:
                    target[j] = target[j] - f * row[j]


def _pivot(T, basis, r, c):
    _eliminate(T, r, c)
    basis[r] = c


def _run(T, basis, cost_row, allowed):
    """Maximise with Bland's rule; the objective row holds reduced costs."""
    while True:
        obj = T[cost_row]
        enter = next((j for j in allowed if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best, leave = None, None
        for i in range(cost_row):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return "unbounded"
        _pivot(T, basis, leave, enter)


def linprog_max(c: Sequence, A_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Maximise c.x subject to A_eq x = b_eq and x >= 0, exactly (two-phase simplex)."""
    m, n = len(A_eq), len(c)
    A = as_fractions(A_eq)
    b = [Fraction(x) for x in b_eq]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # columns: n originals, m artificials, rhs
    T = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    phase1 = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        phase1 = [p - t for p, t in zip(phase1, T[i])]
    for j in range(n, n + m):
        phase1[j] = Fraction(0)
    T.append(phase1)
    _run(T, basis, m, list(range(n + m)))
    if T[m][-1] != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, basis, i, col)
    T.pop()
    obj = [Fraction(0)] * (n + m + 1)
    for j in range(n):
        obj[j] = -Fraction(c[j])
    for i in range(m):
        if basis[i] < n and obj[basis[i]] != 0:
            f = obj[basis[i]]
            obj = [o - f * t for o, t in zip(obj, T[i])]
    T.append(obj)
    status = _run(T, basis, m, [j for j in range(n)])
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][-1]
    return LPResult("optimal", T[m][-1], x)


def convex_combination(points: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Weights lambda >= 0 summing to 1 with sum lambda_i p_i = target, if any."""
    if not points:
        return None
    dim = len(target)
    A = [[p[k] for p in points] for k in range(dim)] + [[1] * len(points)]
    b = list(target) + [1]
    res = linprog_max([0] * len(points), A, b)
    return res.x if res.status == "optimal" else None
