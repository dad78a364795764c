"""Small shared helpers for building instances in tests."""
from smk.corpus import Instance, resolve


def signed(gs, *sets):
    return [gs.mask_from_signed(s) for s in sets]


def to_signed_sets(gs, masks):
    return {frozenset(gs.mask_to_signed(B)) for B in masks}


def resolve_bases(n, bases):
    return resolve(Instance(n, "symplectic_bases", tuple(sorted(tuple(sorted(B)) for B in bases))))


def parallel_class_bases(size, labels):
    """Rank-2 matroid whose parallel classes are given by ``labels`` (None = loop)."""
    classes = {}
    for e, c in enumerate(labels):
        if c is not None:
            classes.setdefault(c, []).append(e)
    groups = list(classes.values())
    return [(1 << a) | (1 << b) for i, X in enumerate(groups) for Y in groups[i + 1:] for a in X for b in Y]


def sparse_paving_bases(size, order):
    """Rank-3 sparse paving matroid: greedily keep triples from ``order`` as circuit-hyperplanes."""
    triples = [mask for mask in range(1 << size) if bin(mask).count("1") == 3]
    hyper = []
    for i in order:
        T = triples[i % len(triples)]
        if all(bin(T & H).count("1") <= 1 for H in hyper):
            hyper.append(T)
    return [T for T in triples if T not in hyper]
