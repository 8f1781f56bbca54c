"""Deterministic instance families for conjecture testing."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

from .multigraph import Multigraph, build, is_connected, read

NAMED = {
    "k2": (2, [(0, 1)]),
    "k3": (3, [(0, 1), (0, 2), (1, 2)]),
    "k4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "star3": (4, [(0, 1), (0, 2), (0, 3)]),
    "path3": (3, [(0, 1), (1, 2)]),
    "c5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    "petersen": (10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                      (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                      (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]),
    "shannon2": (3, [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)]),
}

FAMILIES = ("fat_triangle", "thick_ring", "random", "named", "file")


@dataclass(frozen=True)
class InstanceSpec:
    """A replayable recipe for one instance.

    ``params`` by family: fat_triangle (p, q, r); thick_ring (length, mult);
    random (n, prob, max_mult, max_edges); named (name,); file (path,).
    """

    family: str
    params: Tuple = ()
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")

    @property
    def label(self) -> str:
        args = ",".join(str(p) for p in self.params)
        if self.family == "random":
            return f"random({args};seed={self.seed})"
        return f"{self.family}({args})"


def fat_triangle(p: int, q: int, r: int) -> Multigraph:
    """Triangle with p edges 0-1, q edges 0-2 and r edges 1-2."""
    if min(p, q, r) < 1:
        raise ValueError("fat_triangle multiplicities must be >= 1")
    return build(3, [(0, 1)] * p + [(0, 2)] * q + [(1, 2)] * r, f"fat_triangle({p},{q},{r})")


def thick_ring(length: int, mult: int) -> Multigraph:
    """Odd cycle of the given length with every edge repeated ``mult`` times."""
    if length < 3 or length % 2 == 0:
        raise ValueError("thick_ring length must be odd and >= 3")
    if mult < 1:
        raise ValueError("thick_ring multiplicity must be >= 1")
    edges = [(i, (i + 1) % length) for i in range(length) for _ in range(mult)]
    return build(length, edges, f"thick_ring({length},{mult})")


def random_multigraph(n: int, prob: float, max_mult: int, max_edges: Optional[int] = 36,
                      seed: int = 0, retries: int = 1000) -> Multigraph:
    """Connected G(n, prob) base graph, each edge given a multiplicity in [1, max_mult].

    Samples are redrawn (from the same RNG stream) until the base graph is
    connected and the multigraph has at most ``max_edges`` edges.
    """
    if n < 2:
        raise ValueError("random family needs n >= 2")
    if not 0.0 <= prob <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    if max_mult < 1:
        raise ValueError("max multiplicity must be >= 1")
    rng = random.Random(seed)
    for _ in range(retries):
        base = [pair for pair in combinations(range(n), 2) if rng.random() < prob]
        edges = [pair for pair in base for _ in range(rng.randint(1, max_mult))]
        if not edges or (max_edges is not None and len(edges) > max_edges):
            continue
        g = build(n, edges, f"random(n={n},p={prob},mult={max_mult},seed={seed})")
        if is_connected(g):
            return g
    raise ValueError(f"no connected sample within {retries} draws for seed {seed}")


def generate(spec: InstanceSpec) -> Multigraph:
    f, p = spec.family, spec.params
    if f == "fat_triangle":
        return fat_triangle(*p)
    if f == "thick_ring":
        return thick_ring(*p)
    if f == "random":
        return random_multigraph(*p, seed=spec.seed)
    if f == "named":
        name = p[0]
        if name not in NAMED:
            raise ValueError(f"unknown named graph {name!r}; known: {sorted(NAMED)}")
        n, edges = NAMED[name]
        return build(n, edges, name)
    return read(p[0])


def random_specs(seed: int, count: int, min_vertices: int = 3, max_vertices: int = 7,
                 prob: float = 0.5, max_mult: int = 3, max_edges: Optional[int] = 36):
    """``count`` random-family specs; sizes and per-instance seeds come from one master seed."""
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        n = rng.randint(min_vertices, max_vertices)
        specs.append(InstanceSpec("random", (n, prob, max_mult, max_edges), rng.getrandbits(63)))
    return specs
