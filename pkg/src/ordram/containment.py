"""Order-preserving subgraph containment.

A pattern on vertices 1..r embeds into a host when some strictly increasing
map sends every pattern edge to a host edge (of the demanded color when the
host is an edge coloring).  The search is backtracking over pattern vertices
left to right with bitmask candidate filtering, so the returned embedding is
always the lexicographically smallest one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import EdgeColoring, OrderedGraph, ParameterError


@dataclass(frozen=True)
class Embedding:
    """Strictly increasing map from pattern vertices 1..r to host vertices."""

    mapping: tuple

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))

    def __iter__(self):
        return iter(self.mapping)

    def __len__(self):
        return len(self.mapping)

    def is_valid(self, pattern: OrderedGraph, host_has_edge) -> bool:
        m = self.mapping
        if len(m) != pattern.n:
            return False
        if any(m[t] >= m[t + 1] for t in range(len(m) - 1)):
            return False
        return all(host_has_edge(m[i - 1], m[j - 1]) for i, j in pattern.edges)


def _pattern_plan(pattern: OrderedGraph):
    """Per-vertex bitmasks of the pattern's left neighbors (0-based bits)."""
    left = [0] * pattern.n
    for i, j in pattern.edges:
        left[j - 1] |= 1 << (i - 1)
    return left


def _embed_into_rows(rows: list, N: int, pattern: OrderedGraph):
    """Lexicographically least increasing embedding of pattern into the graph
    given by bitmask rows, or None."""
    r = pattern.n
    if r == 0:
        return ()
    if r > N:
        return None
    left = _pattern_plan(pattern)
    chosen = [0] * r

    def extend(v: int, floor_mask: int) -> bool:
        # floor_mask has ones at positions <= previously chosen vertex
        cands = ~floor_mask & ((1 << N) - 1)
        lm = left[v]
        while lm:
            u = (lm & -lm).bit_length() - 1
            lm &= lm - 1
            cands &= rows[chosen[u]]
        # leave room for the remaining pattern vertices
        cands &= (1 << (N - (r - 1 - v))) - 1
        while cands:
            x = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            chosen[v] = x
            if v == r - 1 or extend(v + 1, (1 << (x + 1)) - 1):
                return True
        return False

    if extend(0, 0):
        return tuple(x + 1 for x in chosen)
    return None


def find_embedding(host: OrderedGraph, pattern: OrderedGraph):
    """Some order-preserving copy of pattern in host, or None."""
    if pattern.n < 1:
        raise ParameterError("pattern", "pattern needs at least one vertex")
    m = _embed_into_rows(host.neighbor_masks(), host.n, pattern)
    return Embedding(m) if m is not None else None


def find_monochromatic(coloring: EdgeColoring, pattern: OrderedGraph, color: int):
    """Copy of pattern inside one color class of the coloring, or None."""
    if not (1 <= color <= coloring.c):
        raise ParameterError("color", f"color {color} out of range 1..{coloring.c}")
    m = _embed_into_rows(coloring.adjacency(color), coloring.N, pattern)
    return Embedding(m) if m is not None else None


def longest_monotone_path(coloring: EdgeColoring, color: int) -> int:
    """Vertex count of the longest monotone path in the color class."""
    rows = coloring.adjacency(color)
    N = coloring.N
    if N == 0:
        return 0
    best = [1] * N
    for j in range(N):
        m = rows[j] & ((1 << j) - 1)
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            if best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best)


def longest_monotone_cycle(coloring: EdgeColoring, color: int) -> int:
    """Vertex count of the longest monotone cycle in the color class.

    A length-2 "cycle" is a single edge (the closing pair coincides with the
    path edge); returns 0 when the color class has no edges.  Maximizes, over
    closing pairs (u, v), the longest monotone path from u to v.
    """
    rows = coloring.adjacency(color)
    N = coloring.N
    best = 0
    for u in range(N):
        # reach[v] = longest path from u to v using only this color
        reach = [0] * N
        reach[u] = 1
        for v in range(u + 1, N):
            m = rows[v] & ((1 << v) - 1) & ~((1 << u) - 1)
            top = 0
            while m:
                x = (m & -m).bit_length() - 1
                m &= m - 1
                if reach[x] > top:
                    top = reach[x]
            if top:
                reach[v] = top + 1
                if rows[u] & (1 << v) and reach[v] > best:
                    best = reach[v]
    return best


@dataclass(frozen=True)
class Violation:
    """First demand realized by a coloring, with the embedding that shows it."""

    demand_index: int
    pattern: OrderedGraph
    color: int
    embedding: Embedding


def avoids(coloring: EdgeColoring, demands):
    """Check a list of (pattern, color) demands against a coloring.

    Returns (True, None) when no demanded pattern occurs monochromatically in
    its color, else (False, violation) for the first demand in list order.
    """
    for idx, (pattern, color) in enumerate(demands):
        emb = find_monochromatic(coloring, pattern, color)
        if emb is not None:
            return False, Violation(idx, pattern, color, emb)
    return True, None
