"""Shared strategies and builders for the test suite."""

import random

from hypothesis import strategies as st

from condgreedy.coloring import PartialColoring
from condgreedy.generators import NAMED
from condgreedy.multigraph import build


def named(name):
    n, edges = NAMED[name]
    return build(n, edges, name)


@st.composite
def multigraphs(draw, min_n=2, max_n=7, max_edges=14, min_edges=0):
    n = draw(st.integers(min_n, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, min_size=min_edges, max_size=max_edges))
    return build(n, edges)


def random_partial_coloring(g, k, rng, density=0.6):
    """Proper partial coloring: visit edges in random order, color some of them."""
    assignment = [None] * g.m
    order = list(range(g.m))
    rng.shuffle(order)
    for e in order:
        if rng.random() > density:
            continue
        blocked = {assignment[f] for f in g.adjacent_edges(e)}
        free = [c for c in range(1, k + 1) if c not in blocked]
        if free:
            assignment[e] = rng.choice(free)
    return PartialColoring(k, tuple(assignment))


@st.composite
def colored_multigraphs(draw, max_n=7, max_edges=14):
    g = draw(multigraphs(max_n=max_n, max_edges=max_edges, min_edges=1))
    k = draw(st.integers(1, 6))
    rng = random.Random(draw(st.integers(0, 2**32)))
    return g, random_partial_coloring(g, k, rng, density=draw(st.floats(0.0, 1.0)))
