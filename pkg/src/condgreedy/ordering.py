"""Procedure Reorder: greedy max-back-degree vertex order, then lexicographic edges."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .multigraph import Multigraph, is_connected


@dataclass(frozen=True)
class EdgeOrder:
    vertex_order: Tuple[int, ...]
    edge_order: Tuple[int, ...]

    @property
    def rank(self) -> Tuple[int, ...]:
        """Inverse of ``edge_order``: position of each edge id."""
        r = [0] * len(self.edge_order)
        for pos, e in enumerate(self.edge_order):
            r[e] = pos
        return tuple(r)


def back_degree(g: Multigraph, z: int, placed: Iterable[int]) -> int:
    placed = set(placed)
    total = 0
    for e in g.incident[z]:
        u, v = g.edges[e]
        if (v if u == z else u) in placed:
            total += 1
    return total


def edge_key(g: Multigraph, e: int, position) -> Tuple[int, int]:
    a, b = position[g.edges[e][0]], position[g.edges[e][1]]
    return (a, b) if a < b else (b, a)


def reorder(g: Multigraph, seed: Optional[int] = None) -> EdgeOrder:
    """Order the vertices and edges of a connected multigraph.

    Deterministic ties: x_1 is the lowest id among maximum-degree vertices;
    later x_i maximize back-degree, then total degree, then take the lowest id;
    parallel edges follow edge id. With ``seed`` every tie left open by the
    procedure itself (equal degree for x_1, equal back-degree for x_i, parallel
    edges) is broken by a seeded RNG instead.
    """
    if g.m == 0:
        raise ValueError("reorder needs at least one edge")
    if not is_connected(g):
        raise ValueError("reorder needs a connected multigraph")
    rng = random.Random(seed) if seed is not None else None

    def pick(cands, primary):
        best = max(primary(z) for z in cands)
        tied = [z for z in cands if primary(z) == best]
        if rng is not None:
            return rng.choice(tied)
        return min(tied, key=lambda z: (-g.degree(z), z))

    remaining = set(range(g.n))
    back = [0] * g.n
    order = []
    x = pick(sorted(remaining), g.degree)
    while True:
        order.append(x)
        remaining.discard(x)
        if not remaining:
            break
        for e in g.incident[x]:
            u, v = g.edges[e]
            back[v if u == x else u] += 1
        x = pick(sorted(remaining), back.__getitem__)

    position = [0] * g.n
    for i, z in enumerate(order):
        position[z] = i
    tiebreak = list(range(g.m))
    if rng is not None:
        rng.shuffle(tiebreak)
    edges = sorted(range(g.m), key=lambda e: (edge_key(g, e, position), tiebreak[e]))
    return EdgeOrder(tuple(order), tuple(edges))
