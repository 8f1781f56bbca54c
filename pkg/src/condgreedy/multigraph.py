"""Loop-free undirected multigraphs on dense integer vertex ids.

Edges keep the position they were given at construction; that position is the
edge id used everywhere else (colorings, orders, traces).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed instance text or invalid edge lists."""


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: Tuple[Edge, ...]
    name: Optional[str] = None
    # per-vertex tuple of incident edge ids, derived
    incident: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError(f"vertex count must be >= 1, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge {eid} = ({u}, {v}): vertex out of range [0, {self.n})")
            if u == v:
                raise GraphFormatError(f"edge {eid} = ({u}, {v}): self-loop")
            inc[u].append(eid)
            inc[v].append(eid)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "incident", tuple(tuple(x) for x in inc))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, x: int) -> int:
        return len(self.incident[x])

    def edge_mask(self, e: int) -> int:
        u, v = self.edges[e]
        return (1 << u) | (1 << v)

    def adjacent_edges(self, e: int) -> List[int]:
        """Edge ids sharing at least one endpoint with ``e`` (``e`` excluded)."""
        u, v = self.edges[e]
        seen = set(self.incident[u]) | set(self.incident[v])
        seen.discard(e)
        return sorted(seen)

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for e in self.incident[u] if v in self.edges[e])

    def __str__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"{label}Multigraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    max_multiplicity: int
    degree_sequence: Tuple[int, ...]


def build(n: int, edge_list: Iterable[Sequence[int]], name: Optional[str] = None) -> Multigraph:
    return Multigraph(n, tuple(tuple(e) for e in edge_list), name)


def stats(g: Multigraph) -> GraphStats:
    degrees = tuple(g.degree(x) for x in range(g.n))
    pairs = Counter((min(u, v), max(u, v)) for u, v in g.edges)
    return GraphStats(
        max_degree=max(degrees, default=0),
        max_multiplicity=max(pairs.values(), default=0),
        degree_sequence=degrees,
    )


def to_mask(s: Iterable[int]) -> int:
    mask = 0
    for x in s:
        mask |= 1 << x
    return mask


def from_mask(mask: int) -> List[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def induced_edge_count(g: Multigraph, s) -> int:
    """Number of edges with both endpoints in ``s`` (a vertex iterable or a bitmask)."""
    mask = s if isinstance(s, int) else to_mask(s)
    return sum(1 for e in range(g.m) if g.edge_mask(e) & mask == g.edge_mask(e))


def connected_components(g: Multigraph) -> List[List[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for e in g.incident[x]:
                u, v = g.edges[e]
                y = v if u == x else u
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Multigraph) -> bool:
    return len(connected_components(g)) == 1


def subgraph(g: Multigraph, vertices: Sequence[int]) -> Tuple[Multigraph, List[int]]:
    """Induced subgraph relabelled to 0..len-1.

    Returns the subgraph and the original ids of its edges, in new edge-id order.
    """
    relabel = {x: i for i, x in enumerate(vertices)}
    edges, origin = [], []
    for eid, (u, v) in enumerate(g.edges):
        if u in relabel and v in relabel:
            edges.append((relabel[u], relabel[v]))
            origin.append(eid)
    return Multigraph(len(vertices), tuple(edges), g.name), origin


# -- text format -------------------------------------------------------------

def parse(text: str, name: Optional[str] = None) -> Multigraph:
    """Parse the line format ``p multigraph <n> <m>`` / ``e <u> <v>``.

    The first ``c`` comment line becomes the instance name unless ``name`` is given.
    """
    header = None
    edges: List[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            if name is None and line.startswith("c "):
                name = line[2:].strip() or None
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "multigraph":
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}") from None
        elif parts[0] == "e":
            if header is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}")
            try:
                edges.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}") from None
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise GraphFormatError("missing 'p multigraph <n> <m>' header")
    n, m = header
    if m != len(edges):
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Multigraph(n, tuple(edges), name)


def serialize(g: Multigraph) -> str:
    lines = []
    if g.name:
        lines.append(f"c {g.name}")
    lines.append(f"p multigraph {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read(path) -> Multigraph:
    with open(path) as fh:
        text = fh.read()
    return parse(text)


def write(g: Multigraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize(g))
