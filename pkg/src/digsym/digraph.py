"""Explicit digraphs: antisymmetric, irreflexive arc relations.

An s-arc is any walk (v_0, ..., v_s) along s consecutive arcs; vertices
may repeat, so a directed p-cycle has exactly p s-arcs for every s.
Direct products use the fixed row-major vertex encoding
(u, v) -> u * |V(Sigma)| + v, making product constructions byte
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .bounds import DEFAULT_BOUNDS, SearchBounds
from .errors import BoundExceededError, DigraphValidationError, PointRangeError


class Digraph:
    """Immutable digraph given by sorted out-neighbor lists."""

    __slots__ = ("vertex_count", "out_neighbors", "_in_neighbors", "_arcs")

    def __init__(self, vertex_count: int, out_neighbors):
        self.vertex_count = vertex_count
        self.out_neighbors = tuple(tuple(sorted(ns)) for ns in out_neighbors)
        self._in_neighbors: Optional[tuple] = None
        self._arcs: Optional[frozenset] = None

    @property
    def in_neighbors(self) -> tuple:
        if self._in_neighbors is None:
            ins = [[] for _ in range(self.vertex_count)]
            for u, outs in enumerate(self.out_neighbors):
                for v in outs:
                    ins[v].append(u)
            self._in_neighbors = tuple(tuple(ns) for ns in ins)
        return self._in_neighbors

    @property
    def arc_set(self) -> frozenset:
        if self._arcs is None:
            self._arcs = frozenset(
                (u, v) for u, outs in enumerate(self.out_neighbors) for v in outs)
        return self._arcs

    @property
    def arc_count(self) -> int:
        return sum(len(outs) for outs in self.out_neighbors)

    def arcs(self) -> list:
        return sorted(self.arc_set)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Digraph)
                and self.vertex_count == other.vertex_count
                and self.out_neighbors == other.out_neighbors)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.out_neighbors))

    def __repr__(self) -> str:
        return f"Digraph(n={self.vertex_count}, arcs={self.arc_count})"


def build_digraph(n: int, arcs, bounds: SearchBounds = DEFAULT_BOUNDS) -> Digraph:
    """Validated digraph on n vertices from an iterable of ordered pairs."""
    if n < 1:
        raise PointRangeError("vertex count must be positive")
    if n > bounds.digraph_vertices:
        raise BoundExceededError("digraph_vertices", bounds.digraph_vertices, n)
    arc_set = set()
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphValidationError(f"arc ({u}, {v}) out of range 0..{n - 1}")
        if u == v:
            raise DigraphValidationError(f"self-loop at vertex {u}")
        if (v, u) in arc_set:
            raise DigraphValidationError(
                f"antisymmetry violated: both ({v}, {u}) and ({u}, {v})")
        arc_set.add((u, v))
    if len(arc_set) > bounds.digraph_arcs:
        raise BoundExceededError("digraph_arcs", bounds.digraph_arcs, len(arc_set))
    outs = [[] for _ in range(n)]
    for u, v in arc_set:
        outs[u].append(v)
    return Digraph(n, outs)


@dataclass(frozen=True)
class RegularityReport:
    valency: Optional[int]                 # k when k-regular, else None
    offender: Optional[tuple]              # (vertex, in_degree, out_degree)


def valency_profile(digraph: Digraph) -> RegularityReport:
    """The valency k if in- and out-degrees all equal k, else an offender."""
    ins = digraph.in_neighbors
    k = len(digraph.out_neighbors[0])
    for v in range(digraph.vertex_count):
        dout = len(digraph.out_neighbors[v])
        din = len(ins[v])
        if dout != k or din != k:
            return RegularityReport(valency=None, offender=(v, din, dout))
    return RegularityReport(valency=k, offender=None)


def enumerate_s_arcs(digraph: Digraph, s: int,
                     bounds: SearchBounds = DEFAULT_BOUNDS) -> list:
    """All s-arcs in lexicographic order; s = 0 lists the vertices."""
    if s < 0:
        raise PointRangeError("s must be nonnegative")
    total = count_s_arcs(digraph, s)
    if total > bounds.s_arc_enumeration:
        raise BoundExceededError("s_arc_enumeration", bounds.s_arc_enumeration, total)
    out = []
    outs = digraph.out_neighbors
    stack: list = [(v,) for v in range(digraph.vertex_count - 1, -1, -1)]
    while stack:
        walk = stack.pop()
        if len(walk) == s + 1:
            out.append(walk)
            continue
        for w in reversed(outs[walk[-1]]):
            stack.append(walk + (w,))
    return out


def count_s_arcs(digraph: Digraph, s: int) -> int:
    """Exact s-arc count by dynamic programming on arc extensions."""
    if s < 0:
        raise PointRangeError("s must be nonnegative")
    counts = [1] * digraph.vertex_count
    outs = digraph.out_neighbors
    for _ in range(s):
        counts = [sum(counts[w] for w in outs[v]) for v in range(digraph.vertex_count)]
    return sum(counts)


def is_s_arc(digraph: Digraph, walk) -> bool:
    outs = digraph.out_neighbors
    return all(b in outs[a] for a, b in zip(walk, walk[1:]))


def _reachable(n: int, neighbors, start: int) -> int:
    seen = bytearray(n)
    seen[start] = 1
    frontier = [start]
    count = 1
    while frontier:
        nxt = []
        for v in frontier:
            for w in neighbors[v]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    nxt.append(w)
        frontier = nxt
    return count


def is_strongly_connected(digraph: Digraph) -> bool:
    n = digraph.vertex_count
    if n == 1:
        return True
    return (_reachable(n, digraph.out_neighbors, 0) == n
            and _reachable(n, digraph.in_neighbors, 0) == n)


def is_directed_cycle(digraph: Digraph) -> bool:
    """Strongly connected and 1-regular."""
    report = valency_profile(digraph)
    return report.valency == 1 and is_strongly_connected(digraph)


def direct_product(a: Digraph, b: Digraph,
                   bounds: SearchBounds = DEFAULT_BOUNDS) -> Digraph:
    """(u1, v1) -> (u2, v2) iff u1 -> u2 and v1 -> v2; vertex (u, v) = u*|V(b)|+v."""
    n = a.vertex_count * b.vertex_count
    if n > bounds.digraph_vertices:
        raise BoundExceededError("digraph_vertices", bounds.digraph_vertices, n)
    arc_total = a.arc_count * b.arc_count
    if arc_total > bounds.digraph_arcs:
        raise BoundExceededError("digraph_arcs", bounds.digraph_arcs, arc_total)
    nb = b.vertex_count
    outs = []
    for u in range(a.vertex_count):
        a_outs = a.out_neighbors[u]
        for v in range(nb):
            b_outs = b.out_neighbors[v]
            outs.append([u2 * nb + v2 for u2 in a_outs for v2 in b_outs])
    return Digraph(n, outs)


def power(digraph: Digraph, m: int, bounds: SearchBounds = DEFAULT_BOUNDS) -> Digraph:
    """Direct product of m copies; power(S, 1) is S itself."""
    if m < 1:
        raise PointRangeError("m must be >= 1")
    result = digraph
    for _ in range(m - 1):
        result = direct_product(result, digraph, bounds)
    return result


# -- text formats -------------------------------------------------------------

def to_edge_list(digraph: Digraph) -> str:
    """First line "n m", then one "u v" line per arc, sorted; 0-based."""
    lines = [f"{digraph.vertex_count} {digraph.arc_count}"]
    lines.extend(f"{u} {v}" for u, v in digraph.arcs())
    return "\n".join(lines) + "\n"

def from_edge_list(text: str, bounds: SearchBounds = DEFAULT_BOUNDS) -> Digraph:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise DigraphValidationError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2:
        raise DigraphValidationError(f"bad header line: {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    arcs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise DigraphValidationError(f"bad arc line: {ln!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    if len(arcs) != m:
        raise DigraphValidationError(
            f"header promises {m} arcs, found {len(arcs)}")
    return build_digraph(n, arcs, bounds)


def to_dot(digraph: Digraph, name: str = "digraph_export") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(digraph.vertex_count):
        lines.append(f"  {v};")
    lines.extend(f"  {u} -> {v};" for u, v in digraph.arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"
