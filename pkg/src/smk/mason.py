"""Independent-set counts and log-concavity."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParityViolation
from .groundset import popcount
from .matroid import Matroid
from .sympcore import RankedSympMatroid, inadmissible_flat_matroid


def count_independent(X: Matroid | RankedSympMatroid, k: int) -> int:
    """Independent sets of size k; for S these are the subsets of its bases."""
    if isinstance(X, RankedSympMatroid):
        return sum(1 for I in X.independent_sets if popcount(I) == k)
    return X.count_independent(k)


def counts(X: Matroid | RankedSympMatroid) -> tuple[int, ...]:
    r = X.rank if isinstance(X, RankedSympMatroid) else X.r
    return tuple(count_independent(X, k) for k in range(r + 1))


@dataclass(frozen=True)
class CountReport:
    S_counts: tuple[int, ...]
    I_counts: tuple[int, ...]
    J_counts: tuple[int, ...]
    I_log_concave: dict
    S_log_concave: bool

    def as_dict(self) -> dict:
        return {
            "S_counts": list(self.S_counts),
            "I_counts": list(self.I_counts),
            "J_counts": list(self.J_counts),
            "I_log_concave": self.I_log_concave,
            "S_log_concave": self.S_log_concave,
        }


def count_report(S: RankedSympMatroid) -> CountReport:
    s_counts = counts(S)
    i_counts = counts(S.env)
    j_counts = counts(inadmissible_flat_matroid(S)) if S.rank >= 2 else (1,)
    size = S.gs.size
    i_lc = {f"variant_{v}": all(log_concavity_report(i_counts, v, size).values()) for v in (1, 2, 3)}
    return CountReport(s_counts, i_counts, j_counts, i_lc, all(log_concavity_report(s_counts, 1).values()))


def counting_identity_check(S: RankedSympMatroid) -> bool:
    """S_k = I_k - (k-1)/2 J_{k-1} for every k."""
    rep = count_report(S)
    for k in range(S.rank + 1):
        j = rep.J_counts[k - 1] if 1 <= k <= len(rep.J_counts) else 0
        if (k - 1) * j % 2:
            raise ParityViolation(f"(k-1) J_(k-1) is odd at k={k}")
        if rep.S_counts[k] != rep.I_counts[k] - (k - 1) * j // 2:
            return False
    return True


def class_size_check(S: RankedSympMatroid) -> bool:
    """Classes under I ~ I' iff I u I* = I' u I'*, for inadmissible independent k-sets of env
    (size 2^(k-2)(k-1)) and independent (k-1)-sets of N (size 2^(k-1)), matched by support."""
    if S.rank < 2:
        raise ValueError("needs rank >= 2")
    gs = S.gs
    N = inadmissible_flat_matroid(S)
    for k in range(2, S.rank + 1):
        env_classes: dict[int, int] = {}
        for I in S.env.independent_sets:
            if popcount(I) == k and not gs.is_admissible(I):
                key = I | gs.star(I)
                env_classes[key] = env_classes.get(key, 0) + 1
        n_classes: dict[int, int] = {}
        for I in N.independent_sets:
            if popcount(I) == k - 1:
                key = I | gs.star(I)
                n_classes[key] = n_classes.get(key, 0) + 1
        if any(v != 2 ** (k - 2) * (k - 1) for v in env_classes.values()):
            return False
        if any(v != 2 ** (k - 1) for v in n_classes.values()):
            return False
        if set(env_classes) != set(n_classes):
            return False
    return True


def log_concavity_report(seq: Sequence[int], variant: int, n: int | None = None) -> dict[int, bool]:
    """Per interior k: a_k^2 >= factor * a_(k-1) a_(k+1) with the variant's factor."""
    if variant not in (1, 2, 3):
        raise ValueError("variant must be 1, 2 or 3")
    if variant == 3 and n is None:
        raise ValueError("variant 3 needs n")
    out = {}
    for k in range(1, len(seq) - 1):
        factor = Fraction(1)
        if variant >= 2:
            factor *= 1 + Fraction(1, k)
        if variant == 3:
            if n - k <= 0:
                continue
            factor *= 1 + Fraction(1, n - k)
        out[k] = seq[k] ** 2 >= factor * seq[k - 1] * seq[k + 1]
    return out


def rank3_check(S: RankedSympMatroid) -> dict[str, bool]:
    """Log-concavity of S_counts at rank 3 and the inequalities used to prove it."""
    if S.rank != 3:
        raise ValueError("needs rank 3")
    rep = count_report(S)
    n = S.gs.n
    I2, I3, J2 = rep.I_counts[2], rep.I_counts[3], rep.J_counts[2]
    s = rep.S_counts
    return {
        "log_concave": s[2] ** 2 >= s[1] * s[3],
        "aux_I3": 2 * n * I3 <= Fraction(2, 3) * I2 ** 2,
        "aux_J2": J2 >= n,
        "chain_left": (I2 - n) ** 2 >= Fraction(2, 3) * I2 ** 2 - 2 * n ** 2,
        "chain_right": Fraction(2, 3) * I2 ** 2 - 2 * n ** 2 >= 2 * n * (I3 - J2),
        "final": (I2 - n) ** 2 >= 2 * n * (I3 - J2),
    }
