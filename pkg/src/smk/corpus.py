"""Instances on disk and the test corpus.

An instance is a JSON object with ``n``, ``kind`` and a payload:

* ``uniform``: ``k`` with 1 <= k <= n, meaning U*_{k,n};
* ``enveloping_bases``: the bases of the enveloping matroid;
* ``symplectic_bases`` / ``orthogonal``: admissible bases only, the
  envelope being found by search.

Elements are signed integers: ``i`` for i and ``-i`` for i*.
"""
from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import DegenerateMinor, NoAdmissibleBasis, NotAdmissible, ParseError, ValidationError
from .groundset import GroundSet, elements, mask_of, popcount
from .matroid import Matroid
from .sympcore import (RankedSympMatroid, contract_elem, delete_pair, is_admissible_matroid,
                       minimal_enveloping, uniform_symp)

KINDS = ("enveloping_bases", "symplectic_bases", "uniform", "orthogonal")


def max_ground() -> int:
    """Largest |J| accepted; SMK_MAX_GROUND overrides the default of 10."""
    raw = os.environ.get("SMK_MAX_GROUND", "10")
    try:
        return int(raw)
    except ValueError:
        raise ValidationError("SMK_MAX_GROUND", f"not an integer: {raw!r}") from None


@dataclass(frozen=True)
class Instance:
    n: int
    kind: str
    bases: tuple[tuple[int, ...], ...] = ()
    k: int | None = None
    label: str = ""
    provenance: str = ""

    @property
    def gs(self) -> GroundSet:
        return GroundSet(self.n)

    def masks(self) -> list[int]:
        gs = self.gs
        return [gs.mask_from_signed(B) for B in self.bases]

    def to_dict(self) -> dict:
        out = {"n": self.n, "kind": self.kind}
        if self.kind == "uniform":
            out["k"] = self.k
        else:
            out["bases"] = [list(B) for B in self.bases]
        if self.label:
            out["label"] = self.label
        if self.provenance:
            out["provenance"] = self.provenance
        return out


def _signed_bases(gs: GroundSet, masks: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(gs.mask_to_signed(B)) for B in masks))


def from_matroid(gs: GroundSet, m: Matroid, label: str = "", provenance: str = "") -> Instance:
    return Instance(gs.n, "enveloping_bases", _signed_bases(gs, m.bases), label=label, provenance=provenance)


def from_dict(data, path: str = "$") -> Instance:
    if not isinstance(data, dict):
        raise ValidationError(path, "expected an object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError(f"{path}.n", "expected a positive integer")
    if 2 * n > max_ground():
        raise ValidationError(f"{path}.n", f"|J| = {2 * n} exceeds the limit {max_ground()} (SMK_MAX_GROUND)")
    kind = data.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"{path}.kind", f"expected one of {', '.join(KINDS)}")
    label = data.get("label", "")
    provenance = data.get("provenance", "")
    for key, value in (("label", label), ("provenance", provenance)):
        if not isinstance(value, str):
            raise ValidationError(f"{path}.{key}", "expected a string")
    if kind == "uniform":
        k = data.get("k")
        if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= n:
            raise ValidationError(f"{path}.k", f"expected an integer with 1 <= k <= {n}")
        return Instance(n, kind, k=k, label=label, provenance=provenance)
    raw = data.get("bases")
    if not isinstance(raw, list) or not raw:
        raise ValidationError(f"{path}.bases", "expected a non-empty list")
    bases = []
    for i, B in enumerate(raw):
        if not isinstance(B, list):
            raise ValidationError(f"{path}.bases[{i}]", "expected a list")
        for j, x in enumerate(B):
            if not isinstance(x, int) or isinstance(x, bool) or x == 0 or abs(x) > n:
                raise ValidationError(f"{path}.bases[{i}][{j}]", f"invalid element code {x!r}")
        if len(set(B)) != len(B):
            raise ValidationError(f"{path}.bases[{i}]", "repeated element")
        bases.append(tuple(sorted(B)))
    if len({len(B) for B in bases}) != 1:
        raise ValidationError(f"{path}.bases", "bases have different sizes")
    if kind != "enveloping_bases":
        for i, B in enumerate(bases):
            if len({abs(x) for x in B}) != len(B):
                raise ValidationError(f"{path}.bases[{i}]", "basis is not admissible")
    if kind == "orthogonal" and len(bases[0]) != n:
        raise ValidationError(f"{path}.bases", "orthogonal instances are Lagrangian: bases of size n")
    return Instance(n, kind, tuple(sorted(set(bases))), label=label, provenance=provenance)


def loads(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_dict(data)


def load(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def save(instance: Instance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(instance.to_dict()))


def resolve(instance: Instance) -> RankedSympMatroid:
    """The ranked symplectic matroid described by an instance."""
    gs = instance.gs
    if instance.kind == "uniform":
        return uniform_symp(instance.k, instance.n)
    masks = instance.masks()
    if instance.kind == "enveloping_bases":
        return RankedSympMatroid(gs, Matroid(gs.size, masks, check=True))
    return RankedSympMatroid(gs, minimal_enveloping(gs, masks), check=False)


# ----------------------------------------------------------------------
# isomorphism up to signed permutations
# ----------------------------------------------------------------------

def signed_permutations(gs: GroundSet):
    """Maps e -> image for every relabelling of pairs with optional swaps i <-> i*."""
    n = gs.n
    for perm in itertools.permutations(range(n)):
        for flips in itertools.product((0, 1), repeat=n):
            g = {}
            for i in range(n):
                j = perm[i]
                g[i], g[i + n] = (j + n, j) if flips[i] else (j, j + n)
            yield g


def canonical_form(gs: GroundSet, bases: Iterable[int]) -> tuple[int, ...]:
    fam = list(bases)
    return min(tuple(sorted(mask_of(g[e] for e in elements(B)) for B in fam))
               for g in signed_permutations(gs))


# ----------------------------------------------------------------------
# corpus
# ----------------------------------------------------------------------

S1_BASES = ((1, -2), (-1, 2), (-2, -1))
EXC_BASES = ((1, 2), (-2, -1))


def _e2_envelope() -> Matroid:
    """Rank 2 on n=3 with parallel classes {1,2}, {1*,2*}, {3}, {3*}."""
    gs = GroundSet(3)
    classes = [gs.mask_from_signed(c) for c in ((1, 2), (-1, -2), (3,), (-3,))]
    return _parallel_class_matroid(gs, classes)


def _parallel_class_matroid(gs: GroundSet, classes: list[int]) -> Matroid:
    bases = [(1 << a) | (1 << b) for X, Y in itertools.combinations(classes, 2)
             for a in elements(X) for b in elements(Y)]
    return Matroid(gs.size, bases, check=False)


def _normal(bases) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(B)) for B in bases))


def worked_examples(max_n: int) -> list[Instance]:
    out = [Instance(2, "symplectic_bases", _normal(S1_BASES), label="S1", provenance="worked example"),
           Instance(2, "symplectic_bases", _normal(EXC_BASES), label="EXC", provenance="worked example")]
    if max_n >= 3:
        out.append(from_matroid(GroundSet(3), _e2_envelope(), "E2", "worked example"))
    return out


def _random_rank2(gs: GroundSet, rng: random.Random) -> Matroid | None:
    classes_n = rng.randint(2, gs.size)
    label = [rng.randrange(classes_n) for _ in range(gs.size)]
    classes = [mask_of(e for e in range(gs.size) if label[e] == c) for c in range(classes_n)]
    classes = [c for c in classes if c]
    if len(classes) < 2:
        return None
    return _parallel_class_matroid(gs, classes)


def _random_sparse_paving3(gs: GroundSet, rng: random.Random) -> Matroid:
    triples = [mask_of(c) for c in itertools.combinations(range(gs.size), 3)]
    rng.shuffle(triples)
    density = rng.random()
    hyper: list[int] = []
    for T in triples:
        if rng.random() < density and all(popcount(T & H) <= 1 for H in hyper):
            hyper.append(T)
    return Matroid(gs.size, [T for T in triples if T not in hyper], check=False)


def _search_hits(max_n: int, seed: int, samples: int, per_family: int) -> list[Instance]:
    rng = random.Random(seed)
    out = []
    for n in range(2, max_n + 1):
        gs = GroundSet(n)
        for family, draw in (("rank-2 parallel classes", _random_rank2),
                             ("rank-3 sparse paving", _random_sparse_paving3)):
            if family.startswith("rank-3") and gs.size < 4:
                continue
            hits = 0
            for _ in range(samples):
                m = draw(gs, rng)
                if m is None or not is_admissible_matroid(gs, m):
                    continue
                if not any(gs.is_admissible(B) for B in m.bases):
                    continue
                hits += 1
                out.append(from_matroid(gs, m, f"search-n{n}-r{m.r}-{hits}", f"search: {family}"))
                if hits >= per_family:
                    break
    return out


def _minors(inst: Instance) -> list[Instance]:
    S = resolve(inst)
    out = []
    for a in range(S.gs.size):
        for op, tag in ((delete_pair, "\\"), (contract_elem, "/")):
            if op is delete_pair and a >= S.gs.n:
                continue
            try:
                minor = op(S, a)
            except (DegenerateMinor, NotAdmissible, NoAdmissibleBasis):
                continue
            if minor.rank < 2:
                continue
            label = f"{inst.label}{tag}{S.gs.label(a)}"
            out.append(from_matroid(minor.gs, minor.env, label, f"minor of {inst.label}"))
    return out


def generate_corpus(max_n: int = 3, seed: int = 0, *, samples: int = 60, per_family: int = 2) -> list[Instance]:
    """Uniforms, worked examples, their surviving minors, and seeded search hits, up to isomorphism."""
    if not 2 <= max_n <= 4:
        raise ValueError("max_n must be between 2 and 4")
    base = [Instance(n, "uniform", k=k, label=f"U*_{{{k},{n}}}", provenance="uniform family")
            for n in range(2, max_n + 1) for k in range(2, n + 1)]
    base += worked_examples(max_n)
    candidates = list(base)
    for inst in base:
        candidates += _minors(inst)
    candidates += _search_hits(max_n, seed, samples, per_family)
    seen = set()
    out = []
    for inst in candidates:
        S = resolve(inst)
        if S.gs.n > max_n:
            continue
        key = (S.gs.n, canonical_form(S.gs, S.env.bases))
        if key in seen:
            continue
        seen.add(key)
        out.append(inst)
    return out


def is_exc(S: RankedSympMatroid) -> bool:
    """Isomorphic to {{1,2},{1*,2*}}."""
    if S.gs.n != 2:
        return False
    gs = S.gs
    return canonical_form(gs, S.bases) == canonical_form(gs, [gs.mask_from_signed(B) for B in EXC_BASES])


def corpus_to_json(instances: list[Instance]) -> list[dict]:
    return [inst.to_dict() for inst in instances]


def corpus_from_json(data) -> list[Instance]:
    if not isinstance(data, list):
        raise ValidationError("$", "expected a list of instances")
    return [from_dict(item, f"$[{i}]") for i, item in enumerate(data)]
