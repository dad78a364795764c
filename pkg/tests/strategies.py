"""Hypothesis strategies for small matroids given as basis bitmasks."""
import itertools

from hypothesis import strategies as st

from helpers import parallel_class_bases, sparse_paving_bases


@st.composite
def rank2(draw, size, loops=True):
    choices = st.one_of(st.none(), st.integers(0, size - 1)) if loops else st.integers(0, size - 1)
    labels = draw(st.lists(choices, min_size=size, max_size=size))
    bases = parallel_class_bases(size, labels)
    if not bases:
        labels = [0] + [1] * (size - 1)
        bases = parallel_class_bases(size, labels)
    return bases


@st.composite
def paving3(draw, size):
    order = draw(st.lists(st.integers(0, 200), max_size=6))
    return sparse_paving_bases(size, order)


@st.composite
def uniform_any(draw, size):
    r = draw(st.integers(1, size))
    return [sum(1 << e for e in c) for c in itertools.combinations(range(size), r)]


def matroid_bases(size, loops=True):
    return st.one_of(rank2(size, loops), paving3(size), uniform_any(size))
