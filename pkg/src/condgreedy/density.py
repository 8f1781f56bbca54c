"""Multigraph density by exhaustive vertex-subset enumeration.

    omega(G) = max over S, |S| >= 2, of ceil(e(S) / floor(|S| / 2))

Only induced subgraphs are enumerated: dropping edges from a subgraph never
raises its ratio. Sets with |S| = 1 are excluded because floor(1/2) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .multigraph import Multigraph, from_mask, stats

MAX_DENSITY_VERTICES = 26


class ScaleGuardError(RuntimeError):
    """Instance exceeds a desk-scale guard; pass ``force=True`` to override."""


@dataclass(frozen=True)
class DensityResult:
    omega: int
    witness: Tuple[int, ...]
    witness_edges: int
    fractional_index: int

    @property
    def witness_mask(self) -> int:
        return sum(1 << x for x in self.witness)


def subset_tables(g: Multigraph) -> Tuple[np.ndarray, np.ndarray]:
    """Return ``(edge_count, size)`` indexed by bitmask over all 2**n subsets.

    Built by doubling: the masks with top bit ``b`` are the masks below ``2**b``
    plus vertex ``b``, which adds its edges into the lower part.
    """
    n = g.n
    mult = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        mult[u, v] += 1
        mult[v, u] += 1
    edges = np.zeros(1 << n, dtype=np.int32)
    size = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        lo = 1 << b
        # into[mask] = number of edges from b into mask, for mask < 2**b
        into = np.zeros(lo, dtype=np.int32)
        for u in range(b):
            w = 1 << u
            into[w:2 * w] = into[:w] + mult[b, u]
        edges[lo:2 * lo] = edges[:lo] + into
        size[lo:2 * lo] = size[:lo] + 1
    return edges, size


def density(g: Multigraph, prune: bool = True, force: bool = False) -> DensityResult:
    """Exact density with a maximizing witness.

    Ties go to the smaller subset, then to the smaller bitmask.

    With ``prune`` only |S| = 2 and odd |S| are scored. That is lossless: for
    even |S| = 2j >= 4, deleting a vertex of least inner degree loses at most
    e(S)/j edges, so the odd remainder has ratio e(S')/(j-1) >= e(S)/j and is
    strictly smaller, hence it also wins every tie.
    """
    if g.m == 0:
        raise ValueError("density is undefined for a graph without edges")
    if g.n > MAX_DENSITY_VERTICES and not force:
        raise ScaleGuardError(
            f"density enumerates 2**{g.n} subsets; refusing n > {MAX_DENSITY_VERTICES} without force"
        )
    edges, size = subset_tables(g)
    half = (size // 2).astype(np.int32)
    keep = half > 0
    if prune:
        keep &= (size == 2) | (size % 2 == 1)
    masks = np.flatnonzero(keep)
    e, h = edges[masks], half[masks]
    ratio = -(-e // h)
    omega = int(ratio.max())
    best = masks[ratio == omega]
    # best is ascending, so argmin returns the smallest bitmask of the smallest size
    winner = int(best[np.argmin(size[best])])
    return DensityResult(
        omega=omega,
        witness=tuple(from_mask(winner)),
        witness_edges=int(edges[winner]),
        fractional_index=max(stats(g).max_degree, omega),
    )


def density_lower_bound_check(g: Multigraph, chi: int) -> bool:
    return density(g).omega <= chi
