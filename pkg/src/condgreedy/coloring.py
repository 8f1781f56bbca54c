"""Partial edge-colorings, cover values, admissibility and Conditional_Greedy.

Colors are the integers 1..k; an uncolored edge holds ``None``.

An edge is *i-free* when it is uncolored and no adjacent edge has color i; a
vertex is i-free when some incident edge is. For a vertex set S the cover value
is the sum over colors of floor(#i-free vertices of S / 2), and a coloring
covers S when that value is at least the number of uncolored edges inside S.
A coloring is admissible when it covers every vertex set.

By default a vertex of S counts as i-free even if its i-free edge leaves S.
``strict=True`` only counts i-free edges with both ends in S.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .multigraph import Multigraph, from_mask, to_mask
from .ordering import EdgeOrder, reorder


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class PartialColoring:
    k: int
    assignment: Tuple[Optional[int], ...]

    @classmethod
    def empty(cls, g: Multigraph, k: int) -> "PartialColoring":
        if g.m == 0 or k < 1:
            raise ColoringError("coloring needs at least one edge and k >= 1")
        return cls(k, (None,) * g.m)

    @classmethod
    def from_dict(cls, g: Multigraph, k: int, colors: dict) -> "PartialColoring":
        assignment = [None] * g.m
        for e, c in colors.items():
            assignment[e] = c
        return cls(k, tuple(assignment))

    def __getitem__(self, e: int) -> Optional[int]:
        return self.assignment[e]

    @property
    def uncolored(self) -> List[int]:
        return [e for e, c in enumerate(self.assignment) if c is None]

    @property
    def num_colored(self) -> int:
        return sum(c is not None for c in self.assignment)

    @property
    def is_complete(self) -> bool:
        return all(c is not None for c in self.assignment)


@dataclass(frozen=True)
class AdmissibilityViolation:
    subset: Tuple[int, ...]
    cover: int
    uncolored_inside: int

    def as_dict(self) -> dict:
        return {"subset": list(self.subset), "cover": self.cover,
                "uncolored_inside": self.uncolored_inside}


def color_masks(g: Multigraph, phi: PartialColoring) -> List[int]:
    """``masks[i]`` = vertices incident to an edge colored i (index 0 unused)."""
    masks = [0] * (phi.k + 1)
    for e, c in enumerate(phi.assignment):
        if c is not None:
            masks[c] |= g.edge_mask(e)
    return masks


def is_free_edge(g: Multigraph, phi: PartialColoring, e: int, i: int) -> bool:
    if phi[e] is not None:
        return False
    return all(phi[f] != i for f in g.adjacent_edges(e))


def free_vertices(g: Multigraph, phi: PartialColoring, i: int, s: Iterable[int],
                  strict: bool = False) -> List[int]:
    s = set(s)
    out = set()
    for e in range(g.m):
        u, v = g.edges[e]
        if strict and not (u in s and v in s):
            continue
        if is_free_edge(g, phi, e, i):
            out.update(x for x in (u, v) if x in s)
    return sorted(out)


def cover_value(g: Multigraph, phi: PartialColoring, s: Iterable[int], strict: bool = False) -> int:
    s = list(s)
    return sum(len(free_vertices(g, phi, i, s, strict)) // 2 for i in range(1, phi.k + 1))


def uncolored_inside(g: Multigraph, phi: PartialColoring, s: Iterable[int]) -> int:
    mask = to_mask(s)
    return sum(1 for e in phi.uncolored if g.edge_mask(e) & mask == g.edge_mask(e))


def extend(g: Multigraph, phi: PartialColoring, e: int, c: int) -> PartialColoring:
    if not 1 <= c <= phi.k:
        raise ColoringError(f"color {c} outside [1, {phi.k}]")
    if phi[e] is not None:
        raise ColoringError(f"edge {e} is already colored {phi[e]}")
    if any(phi[f] == c for f in g.adjacent_edges(e)):
        raise ColoringError(f"color {c} on edge {e} clashes with an adjacent edge")
    a = list(phi.assignment)
    a[e] = c
    return PartialColoring(phi.k, tuple(a))


class CoverTable:
    """Bitmask view of a partial coloring for fast cover / uncolored counts."""

    def __init__(self, g: Multigraph, phi: PartialColoring, strict: bool = False):
        self.strict = strict
        used = color_masks(g, phi)
        self.uncolored = [g.edge_mask(e) for e in phi.uncolored]
        # free[i-1]: masks of i-free edges
        self.free = [[m for m in self.uncolored if not m & used[i]] for i in range(1, phi.k + 1)]
        self.free_vertices = []
        for edges in self.free:
            acc = 0
            for m in edges:
                acc |= m
            self.free_vertices.append(acc)

    def cover(self, s: int) -> int:
        total = 0
        if self.strict:
            for edges in self.free:
                acc = 0
                for m in edges:
                    if m & s == m:
                        acc |= m
                total += acc.bit_count() // 2
        else:
            for fv in self.free_vertices:
                total += (fv & s).bit_count() // 2
        return total

    def uncolored_inside(self, s: int) -> int:
        return sum(1 for m in self.uncolored if m & s == m)


def connected_subsets_by_size(n: int, edge_masks: Sequence[int]):
    """Yield, level by level, the sorted bitmasks of vertex sets of size >= 2
    that induce a connected subgraph of the graph given by ``edge_masks``."""
    nbr = [0] * n
    for m in edge_masks:
        u, v = from_mask(m)
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    level = set(edge_masks)
    while level:
        yield sorted(level)
        nxt = set()
        for s in level:
            reach = 0
            rest = s
            while rest:
                low = rest & -rest
                reach |= nbr[low.bit_length() - 1]
                rest ^= low
            reach &= ~s
            while reach:
                low = reach & -reach
                nxt.add(s | low)
                reach ^= low
        level = nxt


def check_admissible(g: Multigraph, phi: PartialColoring,
                     strict: bool = False) -> Optional[AdmissibilityViolation]:
    """Return a violated vertex set of least size (then least bitmask), or None.

    Only vertex sets connected through uncolored edges are examined. A smallest
    violation always has that form: a vertex with no uncolored edge inside S can
    be dropped without changing the uncolored count or raising the cover value,
    and if S splits into parts with no uncolored edge between them the uncolored
    counts add while floor(a/2) + floor(b/2) <= floor((a+b)/2) makes the cover
    value superadditive, so one part already violates.
    """
    table = CoverTable(g, phi, strict)
    if not table.uncolored:
        return None
    for level in connected_subsets_by_size(g.n, table.uncolored):
        for s in level:
            un = table.uncolored_inside(s)
            cov = table.cover(s)
            if cov < un:
                return AdmissibilityViolation(tuple(from_mask(s)), cov, un)
    return None


# -- the greedy driver ---------------------------------------------------------

IMPROPER = "improper"
VIOLATION = "violation"


@dataclass(frozen=True)
class Rejection:
    color: int
    reason: str
    violation: Optional[AdmissibilityViolation] = None


@dataclass(frozen=True)
class Step:
    edge: int
    color: Optional[int]  # None means the run halted on this edge
    rejections: Tuple[Rejection, ...] = ()

    @property
    def halted(self) -> bool:
        return self.color is None

    @property
    def violation(self) -> Optional[AdmissibilityViolation]:
        """Witness for the first color rejected by admissibility."""
        for r in self.rejections:
            if r.violation is not None:
                return r.violation
        return None


@dataclass
class RunTrace:
    order: EdgeOrder
    steps: List[Step] = field(default_factory=list)
    final: Optional[PartialColoring] = None

    @property
    def complete(self) -> bool:
        return self.final is not None and self.final.is_complete

    @property
    def halt_step(self) -> Optional[int]:
        """1-based index of the halting step, if the run halted."""
        if self.steps and self.steps[-1].halted:
            return len(self.steps)
        return None

    @property
    def colors(self) -> List[int]:
        return [s.color for s in self.steps if s.color is not None]


def conditional_greedy(g: Multigraph, k: int, order: Optional[EdgeOrder] = None,
                       strict: bool = False,
                       audit: Optional[Callable] = None) -> RunTrace:
    """Color edges in ``order`` with the smallest color keeping the coloring admissible.

    Colors clashing with an already colored neighbour are skipped before the
    admissibility test. ``audit(g, phi)`` is called on every accepted partial
    coloring; a non-None return is treated as a broken invariant.
    """
    if order is None:
        order = reorder(g)
    phi = PartialColoring.empty(g, k)
    trace = RunTrace(order)
    for e in order.edge_order:
        blocked = {phi[f] for f in g.adjacent_edges(e)}
        rejections = []
        chosen = None
        for c in range(1, k + 1):
            if c in blocked:
                rejections.append(Rejection(c, IMPROPER))
                continue
            candidate = extend(g, phi, e, c)
            bad = check_admissible(g, candidate, strict)
            if bad is None:
                chosen = candidate
                break
            rejections.append(Rejection(c, VIOLATION, bad))
        if chosen is None:
            trace.steps.append(Step(e, None, tuple(rejections)))
            break
        if audit is not None:
            found = audit(g, chosen)
            if found is not None:
                raise AssertionError(f"prefix coloring after edge {e} is not admissible: {found}")
        phi = chosen
        trace.steps.append(Step(e, phi[e], tuple(rejections)))
    trace.final = phi
    return trace


# -- file formats ----------------------------------------------------------------

def trace_records(g: Multigraph, trace: RunTrace) -> List[dict]:
    records = []
    for i, step in enumerate(trace.steps, 1):
        u, v = g.edges[step.edge]
        rec = {"step": i, "edge": step.edge, "u": u, "v": v,
               "color": "halt" if step.halted else step.color,
               "rejected": [{"color": r.color, "reason": r.reason} for r in step.rejections]}
        if step.halted:
            bad = step.violation
            rec["violation"] = bad.as_dict() if bad is not None else None
        records.append(rec)
    return records


def dump_trace(g: Multigraph, trace: RunTrace) -> str:
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in trace_records(g, trace))


def dump_coloring(phi: PartialColoring) -> str:
    return "".join(f"{e} {c}\n" for e, c in enumerate(phi.assignment) if c is not None)


def load_coloring(text: str, g: Multigraph, k: int) -> PartialColoring:
    colors = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        try:
            e, c = map(int, line.split())
        except ValueError:
            raise ColoringError(f"line {lineno}: expected '<edge_id> <color>', got {line!r}") from None
        if not 0 <= e < g.m:
            raise ColoringError(f"line {lineno}: edge id {e} out of range")
        if e in colors:
            raise ColoringError(f"line {lineno}: edge {e} colored twice")
        if not 1 <= c <= k:
            raise ColoringError(f"line {lineno}: color {c} outside [1, {k}]")
        colors[e] = c
    return PartialColoring.from_dict(g, k, colors)
