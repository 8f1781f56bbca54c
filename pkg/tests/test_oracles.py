from itertools import product

import pytest
from hypothesis import given, settings

from condgreedy.coloring import AdmissibilityViolation, PartialColoring
from condgreedy.density import ScaleGuardError, density
from condgreedy.multigraph import build, stats
from condgreedy.oracles import chromatic_index, k_edge_coloring, naive_admissible, validate_coloring

from .helpers import multigraphs


def brute_chromatic_index(g):
    """Try every assignment of k colors for k = 1, 2, ..."""
    k = 1
    while True:
        for colors in product(range(k), repeat=g.m):
            if all(colors[e] != colors[f] for x in range(g.n)
                   for i, e in enumerate(g.incident[x]) for f in g.incident[x][i + 1:]):
                return k
        k += 1


@pytest.mark.parametrize("fixture, chi", [("k3", 3), ("star", 3), ("petersen", 4), ("sh", 6), ("k2", 1)])
def test_examples(request, fixture, chi):
    g = request.getfixturevalue(fixture)
    res = chromatic_index(g)
    assert res.chi_prime == chi
    phi = res.optimal_coloring
    assert phi.is_complete and validate_coloring(g, phi)
    assert set(phi.assignment) == set(range(1, chi + 1))


def test_petersen_not_3_colorable(petersen):
    assert k_edge_coloring(petersen, 3) is None
    assert k_edge_coloring(petersen, 4) is not None


def test_scale_guard():
    g = build(2, [(0, 1)] * 41)
    with pytest.raises(ScaleGuardError):
        chromatic_index(g)
    assert chromatic_index(g, force=True).chi_prime == 41


@settings(max_examples=120, deadline=None)
@given(multigraphs(max_n=5, max_edges=7, min_edges=1))
def test_matches_brute_force(g):
    assert chromatic_index(g).chi_prime == brute_chromatic_index(g)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=7, max_edges=18, min_edges=1))
def test_sandwich(g):
    st = stats(g)
    res = chromatic_index(g)
    omega = density(g).omega
    assert max(st.max_degree, omega) <= res.chi_prime <= st.max_degree + st.max_multiplicity
    assert validate_coloring(g, res.optimal_coloring)
    assert len(set(res.optimal_coloring.assignment)) == res.chi_prime
    if res.chi_prime > st.max_degree + 1:
        assert res.chi_prime == omega


def test_naive_examples(k3, star):
    assert naive_admissible(k3, PartialColoring.empty(k3, 3)) is None
    phi = PartialColoring.from_dict(star, 2, {0: 1})
    assert naive_admissible(star, phi) == AdmissibilityViolation((0, 2, 3), 1, 2)
    assert naive_admissible(k3, PartialColoring(3, (1, 2, 3))) is None


def test_naive_guard():
    g = build(21, [(i, i + 1) for i in range(20)])
    with pytest.raises(ScaleGuardError):
        naive_admissible(g, PartialColoring.empty(g, 2))


def test_validate_coloring(k3):
    assert validate_coloring(k3, PartialColoring(3, (1, 2, 3)))
    assert not validate_coloring(k3, PartialColoring(3, (1, 1, None)))
    assert validate_coloring(k3, PartialColoring.empty(k3, 3))
