import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from condgreedy.coloring import (AdmissibilityViolation, ColoringError, PartialColoring,
                                 check_admissible, conditional_greedy, cover_value, dump_coloring,
                                 dump_trace, extend, free_vertices, is_free_edge, load_coloring,
                                 uncolored_inside)
from condgreedy.density import density
from condgreedy.generators import random_multigraph
from condgreedy.multigraph import is_connected
from condgreedy.oracles import naive_admissible, validate_coloring
from condgreedy.ordering import reorder

from .helpers import colored_multigraphs, multigraphs, random_partial_coloring


def col(g, k, colors):
    return PartialColoring.from_dict(g, k, colors)


def test_is_free_edge(k3):
    phi = col(k3, 3, {0: 1})
    assert not is_free_edge(k3, phi, 1, 1)
    assert is_free_edge(k3, phi, 1, 2)
    total = col(k3, 3, {0: 1, 1: 2, 2: 3})
    assert not any(is_free_edge(k3, total, e, i) for e in range(3) for i in (1, 2, 3))


def test_free_vertices(k3, k2):
    phi = col(k3, 3, {0: 1})
    assert free_vertices(k3, phi, 2, {0, 1, 2}) == [0, 1, 2]
    assert free_vertices(k3, phi, 1, {0, 1, 2}) == []
    assert free_vertices(k2, PartialColoring.empty(k2, 1), 1, {0, 1}) == [0, 1]


def test_free_vertices_witness_may_leave_subset(star):
    phi = PartialColoring.empty(star, 2)
    # vertex 0 is 1-free through edges that all leave {0}
    assert free_vertices(star, phi, 1, {0}) == [0]
    assert free_vertices(star, phi, 1, {0}, strict=True) == []


def test_cover_value(k3, star):
    assert cover_value(k3, PartialColoring.empty(k3, 3), range(3)) == 3
    assert cover_value(k3, col(k3, 3, {0: 1}), range(3)) == 2
    assert cover_value(star, col(star, 2, {0: 1}), []) == 0


def test_uncolored_inside(k3, star):
    assert uncolored_inside(k3, PartialColoring.empty(k3, 3), range(3)) == 3
    assert uncolored_inside(k3, col(k3, 3, {0: 1}), {0, 1}) == 0
    assert uncolored_inside(star, col(star, 2, {0: 1}), {0, 2, 3}) == 2


def test_check_admissible_examples(k3, star):
    assert check_admissible(k3, PartialColoring.empty(k3, 3)) is None
    bad = check_admissible(star, col(star, 2, {0: 1}))
    assert bad == AdmissibilityViolation((0, 2, 3), 1, 2)
    assert check_admissible(k3, col(k3, 3, {0: 1, 1: 2, 2: 3})) is None


def test_extend(k2, k3):
    phi = extend(k2, PartialColoring.empty(k2, 1), 0, 1)
    assert phi.assignment == (1,)
    base = col(k3, 3, {0: 1})
    with pytest.raises(ColoringError):
        extend(k3, base, 1, 1)
    nxt = extend(k3, base, 1, 2)
    assert nxt.assignment == (1, 2, None)
    assert base.assignment == (1, None, None)
    with pytest.raises(ColoringError):
        extend(k3, base, 0, 2)
    with pytest.raises(ColoringError):
        extend(k3, base, 1, 4)


def test_greedy_k3(k3):
    trace = conditional_greedy(k3, 3)
    assert trace.complete
    assert trace.colors == [1, 2, 3]
    assert [r.reason for r in trace.steps[1].rejections] == ["improper"]


def test_greedy_star_halts(star):
    trace = conditional_greedy(star, 2)
    assert not trace.complete
    assert trace.halt_step == 1
    assert trace.final.num_colored == 0
    step = trace.steps[0]
    assert [r.reason for r in step.rejections] == ["violation", "violation"]
    assert step.violation == AdmissibilityViolation((0, 2, 3), 1, 2)


def test_greedy_k2(k2):
    trace = conditional_greedy(k2, 1)
    assert trace.complete and trace.colors == [1]


def test_greedy_shannon(sh):
    trace = conditional_greedy(sh, 6)
    assert trace.complete
    assert validate_coloring(sh, trace.final)
    assert sorted(trace.final.assignment) == [1, 2, 3, 4, 5, 6]


def test_greedy_rejects_empty_palette(k2):
    with pytest.raises(ColoringError):
        conditional_greedy(k2, 0)


def test_audit_failure_raises(k3):
    with pytest.raises(AssertionError):
        conditional_greedy(k3, 3, audit=lambda g, phi: "boom")


def test_trace_format(star, k3):
    records = [json.loads(line) for line in dump_trace(star, conditional_greedy(star, 2)).splitlines()]
    assert records == [{"step": 1, "edge": 0, "u": 0, "v": 1, "color": "halt",
                        "rejected": [{"color": 1, "reason": "violation"},
                                     {"color": 2, "reason": "violation"}],
                        "violation": {"subset": [0, 2, 3], "cover": 1, "uncolored_inside": 2}}]
    lines = dump_trace(k3, conditional_greedy(k3, 3)).splitlines()
    assert [json.loads(x)["color"] for x in lines] == [1, 2, 3]


def test_coloring_file_roundtrip(k3):
    phi = col(k3, 3, {0: 1, 2: 3})
    text = dump_coloring(phi)
    assert text == "0 1\n2 3\n"
    assert load_coloring(text, k3, 3) == phi
    for bad in ("0 4\n", "5 1\n", "0 1\n0 2\n", "zero one\n"):
        with pytest.raises(ColoringError):
            load_coloring(bad, k3, 3)


@settings(max_examples=300, deadline=None)
@given(colored_multigraphs(), st.booleans())
def test_pruned_matches_naive(case, strict):
    g, phi = case
    assert check_admissible(g, phi, strict) == naive_admissible(g, phi, strict)


@settings(max_examples=200, deadline=None)
@given(colored_multigraphs(max_n=6, max_edges=10))
def test_definitional_functions_agree_with_naive(case):
    g, phi = case
    bad = naive_admissible(g, phi)
    if bad is not None:
        assert cover_value(g, phi, bad.subset) == bad.cover
        assert uncolored_inside(g, phi, bad.subset) == bad.uncolored_inside
        assert bad.cover < bad.uncolored_inside


@settings(max_examples=150, deadline=None)
@given(colored_multigraphs(), st.data(), st.booleans())
def test_coloring_an_edge_only_damages(case, data, strict):
    g, phi = case
    e = data.draw(st.sampled_from(phi.uncolored)) if phi.uncolored else None
    if e is None:
        return
    blocked = {phi[f] for f in g.adjacent_edges(e)}
    choices = [c for c in range(1, phi.k + 1) if c not in blocked]
    if not choices:
        return
    after = extend(g, phi, e, data.draw(st.sampled_from(choices)))
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert cover_value(g, after, s, strict) <= cover_value(g, phi, s, strict)
    assert uncolored_inside(g, after, s) <= uncolored_inside(g, phi, s)


@settings(max_examples=200, deadline=None)
@given(multigraphs(max_n=8, max_edges=16, min_edges=1), st.booleans())
def test_empty_coloring_admissible_at_density(g, strict):
    phi = PartialColoring.empty(g, density(g).omega)
    assert check_admissible(g, phi, strict) is None


@settings(max_examples=80, deadline=None)
@given(multigraphs(max_n=6, max_edges=12, min_edges=1).filter(is_connected), st.booleans())
def test_greedy_run_invariants(g, strict):
    k = density(g).omega
    trace = conditional_greedy(g, k, strict=strict,
                               audit=lambda h, phi: naive_admissible(h, phi, strict))
    again = conditional_greedy(g, k, strict=strict)
    assert trace == again
    order = reorder(g).edge_order
    assert [s.edge for s in trace.steps] == list(order[:len(trace.steps)])
    assert validate_coloring(g, trace.final)
    assert all(c is None or 1 <= c <= k for c in trace.final.assignment)
    assert trace.complete == (trace.final.num_colored == g.m)
    if not trace.complete:
        assert trace.steps[-1].halted and trace.final.num_colored == len(trace.steps) - 1


def test_strict_mode_differs_somewhere():
    # the two readings of i-free vertices are not interchangeable
    rng = random.Random(5)
    differ = 0
    for seed in range(200):
        g = random_multigraph(6, 0.5, 2, seed=seed)
        phi = random_partial_coloring(g, density(g).omega, rng, 0.4)
        differ += check_admissible(g, phi) != check_admissible(g, phi, strict=True)
    assert differ > 0
