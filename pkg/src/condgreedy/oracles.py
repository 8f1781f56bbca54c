"""Brute-force ground truth: exact chromatic index, unpruned admissibility, properness."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .coloring import AdmissibilityViolation, PartialColoring, is_free_edge
from .density import ScaleGuardError, density
from .multigraph import Multigraph, is_connected, stats
from .ordering import reorder

MAX_CHI_EDGES = 40
MAX_NAIVE_VERTICES = 20


@dataclass(frozen=True)
class OracleResult:
    chi_prime: int
    optimal_coloring: PartialColoring


def validate_coloring(g: Multigraph, phi: PartialColoring) -> bool:
    """True iff no two colored edges sharing a vertex carry the same color."""
    for x in range(g.n):
        seen = set()
        for e in g.incident[x]:
            c = phi[e]
            if c is None:
                continue
            if c in seen:
                return False
            seen.add(c)
    return True


def naive_admissible(g: Multigraph, phi: PartialColoring,
                     strict: bool = False) -> Optional[AdmissibilityViolation]:
    """Check every vertex subset, smallest first (ties: smaller bitmask)."""
    if g.n > MAX_NAIVE_VERTICES:
        raise ScaleGuardError(f"naive admissibility is limited to n <= {MAX_NAIVE_VERTICES}")
    colors = range(1, phi.k + 1)
    free = {i: [e for e in range(g.m) if is_free_edge(g, phi, e, i)] for i in colors}
    free_vertex_sets = {i: {x for e in free[i] for x in g.edges[e]} for i in colors}
    uncolored = [g.edges[e] for e in range(g.m) if phi[e] is None]

    for mask in sorted(range(1 << g.n), key=lambda s: (s.bit_count(), s)):
        s = {x for x in range(g.n) if mask >> x & 1}
        un = sum(1 for u, v in uncolored if u in s and v in s)
        if un == 0:
            continue
        cov = 0
        for i in colors:
            if strict:
                fv = {x for e in free[i] for x in g.edges[e] if set(g.edges[e]) <= s}
            else:
                fv = free_vertex_sets[i] & s
            cov += len(fv) // 2
        if cov < un:
            return AdmissibilityViolation(tuple(sorted(s)), cov, un)
    return None


def _edge_classes(g: Multigraph) -> List[Tuple[int, int, List[int]]]:
    classes: Dict[Tuple[int, int], List[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        classes.setdefault((min(u, v), max(u, v)), []).append(e)
    return [(u, v, ids) for (u, v), ids in classes.items()]


def k_edge_coloring(g: Multigraph, k: int) -> Optional[PartialColoring]:
    """A proper k-edge-coloring found by backtracking, or None if none exists.

    Parallel edges are colored together as one class receiving a set of colors,
    which removes the permutations inside a class. Colors never used so far are
    interchangeable, so a class only ever takes the lowest unused ones. The next
    class is the one with the least slack (available colors minus multiplicity),
    ties to larger multiplicity, then to the earlier position in the Reorder
    sequence.
    """
    if g.m == 0:
        return PartialColoring(k, ())
    rank = reorder(g).rank if is_connected(g) else tuple(range(g.m))
    classes = _edge_classes(g)
    classes.sort(key=lambda c: min(rank[e] for e in c[2]))
    full = (1 << k) - 1
    used = [0] * g.n
    chosen: List[int] = [0] * len(classes)
    todo = set(range(len(classes)))

    def search(ever: int) -> bool:
        if not todo:
            return True
        best, best_key = None, None
        for ci in todo:
            u, v, ids = classes[ci]
            slack = (full & ~(used[u] | used[v])).bit_count() - len(ids)
            if slack < 0:
                return False
            key = (slack, -len(ids), ci)
            if best_key is None or key < best_key:
                best, best_key = ci, key
        u, v, ids = classes[best]
        mu = len(ids)
        avail = full & ~(used[u] | used[v])
        old_colors = [c for c in range(k) if avail >> c & 1 and ever >> c & 1]
        new_colors = [c for c in range(k) if not ever >> c & 1]
        todo.discard(best)
        for j in range(min(mu, len(new_colors)) + 1):
            fresh = sum(1 << c for c in new_colors[:j])
            for combo in combinations(old_colors, mu - j):
                pick = fresh | sum(1 << c for c in combo)
                used[u] |= pick
                used[v] |= pick
                chosen[best] = pick
                if search(ever | pick):
                    return True
                used[u] &= ~pick
                used[v] &= ~pick
        todo.add(best)
        return False

    if not search(0):
        return None
    assignment: List[Optional[int]] = [None] * g.m
    for (u, v, ids), pick in zip(classes, chosen):
        cols = [c + 1 for c in range(k) if pick >> c & 1]
        for e, c in zip(sorted(ids), cols):
            assignment[e] = c
    return PartialColoring(k, tuple(assignment))


def chromatic_index(g: Multigraph, force: bool = False) -> OracleResult:
    """Exact chromatic index, searching k upward from max(Delta, omega).

    Vizing's bound Delta + p(G) caps the search.
    """
    if g.m == 0:
        raise ValueError("chromatic index needs at least one edge")
    if g.m > MAX_CHI_EDGES and not force:
        raise ScaleGuardError(f"exact chromatic index is limited to m <= {MAX_CHI_EDGES} without force")
    st = stats(g)
    lower = max(st.max_degree, density(g, force=force).omega)
    upper = st.max_degree + st.max_multiplicity
    for k in range(lower, upper + 1):
        phi = k_edge_coloring(g, k)
        if phi is not None:
            return OracleResult(k, phi)
    raise AssertionError(f"no coloring within Vizing's bound {upper}; search is broken")
