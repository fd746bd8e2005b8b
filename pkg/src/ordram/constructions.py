"""Generators for explicit avoiding colorings.

Every generator returns a CertifiedColoring: the coloring together with the
demand list it is built to avoid, so `containment.avoids` can machine-check
the certificate.  Nothing here is trusted: the test suite re-verifies every
demand list.

Color 1 is red, color 2 is blue throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (
    BLUE,
    RED,
    EdgeColoring,
    OrderedGraph,
    ParameterError,
    alternating_path,
    coloring_to_oc,
    complete,
    monotone_cycle,
    monotone_path,
    star,
)
from . import containment


@dataclass(frozen=True)
class CertifiedColoring:
    """An edge coloring plus the demands it is certified to avoid."""

    coloring: EdgeColoring
    avoided: tuple  # of (OrderedGraph, color)
    name: str
    params: tuple

    def __post_init__(self):
        object.__setattr__(self, "avoided", tuple(self.avoided))
        object.__setattr__(self, "params", tuple(self.params))

    def verify(self) -> bool:
        ok, _ = containment.avoids(self.coloring, self.avoided)
        return ok

    def to_oc(self) -> str:
        return coloring_to_oc(self.coloring)

    def write_oc(self, path) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.to_oc())


def monotone_path_grid(*rs: int) -> CertifiedColoring:
    """Product coloring avoiding the monotone path P_{r_i} in color i.

    Vertices are the mixed-radix tuples (a_1..a_c), a_i in 1..r_i-1, in
    lexicographic order; a pair is colored by the first coordinate at which
    the lex-smaller endpoint is strictly smaller.  Along a color-i monotone
    path the first i-1 coordinates stay fixed while coordinate i strictly
    increases, so the path has at most r_i - 1 vertices.
    """
    if not rs:
        raise ParameterError("rs", "need at least one path length")
    for r in rs:
        if r < 2:
            raise ParameterError("rs", f"path length {r} < 2")
    c = max(len(rs), 2)
    tuples = list(itertools.product(*(range(1, r) for r in rs)))
    N = len(tuples)

    def fn(i, j):
        u, v = tuples[i - 1], tuples[j - 1]
        for axis in range(len(rs)):
            if u[axis] != v[axis]:
                return axis + 1
        raise AssertionError("distinct vertices share all coordinates")

    coloring = EdgeColoring.from_function(N, c, fn)
    demands = tuple((monotone_path(r), i + 1) for i, r in enumerate(rs))
    return CertifiedColoring(coloring, demands, "mon-path-grid", rs)


def star_coloring(*rs: int) -> CertifiedColoring:
    """Gap-block coloring avoiding the star S_{1,r_i} in color i.

    Each vertex's right neighbors split into consecutive blocks, the i-th of
    size r_i - 2 in color i; the color of a pair depends only on the index
    gap, so every vertex has at most r_i - 2 neighbors of color i on each
    side.
    """
    if not rs:
        raise ParameterError("rs", "need at least one star size")
    for r in rs:
        if r < 2:
            raise ParameterError("rs", f"star size {r} < 2")
    c = max(len(rs), 2)
    N = 1 - 2 * len(rs) + sum(rs)
    cuts = []
    acc = 0
    for r in rs:
        acc += r - 2
        cuts.append(acc)

    def fn(i, j):
        gap = j - i
        for color, cut in enumerate(cuts, start=1):
            if gap <= cut:
                return color
        raise AssertionError(f"gap {gap} beyond block budget {acc}")

    coloring = EdgeColoring.from_function(N, c, fn)
    demands = tuple((star(1, r), i + 1) for i, r in enumerate(rs))
    return CertifiedColoring(coloring, demands, "star", rs)


def alternating_parity(n: int) -> CertifiedColoring:
    """Parity coloring of K_{2n-3} avoiding the alternating path P_n in both
    colors: red when the index gap is even, blue when odd."""
    if n < 3:
        raise ParameterError("n", "need n >= 3")
    N = 2 * n - 3
    coloring = EdgeColoring.from_function(N, 2, lambda i, j: RED if (j - i) % 2 == 0 else BLUE)
    pattern = alternating_path(n)
    demands = ((pattern, RED), (pattern, BLUE))
    return CertifiedColoring(coloring, demands, "alt-parity", (n,))


def _cycle_interval_sizes(r: int, s: int) -> list:
    if r % 2:
        outer, inner = (r - 1) // 2, r - 2
        return [s - 1] * outer + [s - 2] * inner + [s - 1] * outer
    outer, inner = (r - 2) // 2, r - 1
    return [s - 2] * outer + [s - 1] * inner + [s - 2] * outer


def monotone_cycle_construction(r: int, s: int) -> CertifiedColoring:
    """Interval coloring of K_{2rs-3r-3s+5} with no red monotone cycle of
    length at least r and no blue one of length at least s.

    The vertex set splits into 2r-3 consecutive intervals; edges inside an
    interval are blue and edges between intervals are colored by comparing
    the endpoints' within-interval indices, with the comparison direction
    chosen by the interval distance and the two interval sizes.
    """
    if r < 2:
        raise ParameterError("r", "need r >= 2")
    if s < 2:
        raise ParameterError("s", "need s >= 2")
    sizes = _cycle_interval_sizes(r, s)
    N = sum(sizes)
    assert N == 2 * r * s - 3 * r - 3 * s + 5
    interval_of = []
    index_in = []
    for which, size in enumerate(sizes):
        for pos in range(1, size + 1):
            interval_of.append(which)
            index_in.append(pos)

    def fn(u, v):
        a, b = interval_of[u - 1], interval_of[v - 1]
        if a == b:
            return BLUE
        k, l = index_in[u - 1], index_in[v - 1]
        near = (b - a) <= r - 2
        if near:
            blue = k < l if sizes[a] <= sizes[b] else k <= l
        else:
            blue = k >= l if sizes[a] < sizes[b] else k > l
        return BLUE if blue else RED

    coloring = EdgeColoring.from_function(N, 2, fn)
    demands = ((monotone_cycle(r), RED), (monotone_cycle(s), BLUE))
    return CertifiedColoring(coloring, demands, "monotone-cycle", (r, s))


def pentagon_coloring() -> EdgeColoring:
    """The 5-vertex coloring with no monochromatic triangle (both color
    classes are 5-cycles)."""
    return monotone_cycle_construction(3, 3).coloring


def star_blowup(d: int, c: int, r: int) -> CertifiedColoring:
    """Recursive blow-up on (d-1)^(c-1) * (r-1) vertices.

    Base is K_{r-1} in color 1; each level splits into d-1 equal consecutive
    intervals colored recursively, with all cross edges in the level's color.
    Color i >= 2 then induces complete (d-1)-partite graphs with interval
    parts, which contain no monotone path on d vertices; the same holds for
    color 1 when d > r - 1, since color 1 lives on cliques of r - 1 vertices.
    """
    if d < 3:
        raise ParameterError("d", "need d >= 3")
    if c < 1:
        raise ParameterError("c", "need c >= 1")
    if r < 2:
        raise ParameterError("r", "need r >= 2")
    N = (d - 1) ** (c - 1) * (r - 1)

    def fn(i, j):
        level = c
        lo, hi = 0, N  # current block, half-open 0-based
        while level > 1:
            width = (hi - lo) // (d - 1)
            bi = (i - 1 - lo) // width
            bj = (j - 1 - lo) // width
            if bi != bj:
                return level
            lo += bi * width
            hi = lo + width
            level -= 1
        return 1

    coloring = EdgeColoring.from_function(N, max(c, 2), fn)
    demands = [(monotone_path(d), i) for i in range(2, c + 1)]
    if d > r - 1:
        demands.insert(0, (monotone_path(d), 1))
    return CertifiedColoring(coloring, tuple(demands), "star-blowup", (d, c, r))


# ---------------------------------------------------------------------------
# Matchings with super-polynomial Ramsey growth
# ---------------------------------------------------------------------------


def block_matching(r: int, R: int) -> OrderedGraph:
    """The basic matching on t = r(r-1)R vertices.

    Built on r blocks of rR slots: slot j + ar of block i pairs with slot
    i + ar of block j; the rR diagonal slots stay isolated and are removed,
    relabeling the rest compactly.
    """
    if r < 2:
        raise ParameterError("r", "need r >= 2")
    if R < 1:
        raise ParameterError("R", "need R >= 1")
    raw_edges = []
    l = [(i - 1) * r * R for i in range(1, r + 1)]
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            for a in range(R):
                raw_edges.append((l[i - 1] + j + a * r, l[j - 1] + i + a * r))
    used = sorted({v for e in raw_edges for v in e})
    relabel = {v: idx + 1 for idx, v in enumerate(used)}
    t = r * (r - 1) * R
    assert len(used) == t
    edges = frozenset((relabel[u], relabel[v]) for u, v in raw_edges)
    return OrderedGraph(t, edges)


@dataclass(frozen=True)
class MatchingLevel:
    """One level of the matching construction: the pattern, its avoiding
    coloring and the size parameters."""

    matching: OrderedGraph
    certified: CertifiedColoring
    R: int
    t: int
    n: int
    N: int


def _next_matching(prev: OrderedGraph, block: OrderedGraph, r: int, R: int) -> OrderedGraph:
    """Interleave r-1 copies of prev with one copy of block spread over the r
    gap intervals J_1..J_r of size (r-1)R each."""
    n_prev = prev.n
    jw = (r - 1) * R
    positions = []  # 0-based start of each interval, J and L alternating
    total = 0
    j_hosts = []
    l_starts = []
    for idx in range(2 * r - 1):
        if idx % 2 == 0:
            j_hosts.extend(range(total + 1, total + jw + 1))
            total += jw
        else:
            l_starts.append(total)
            total += n_prev
    edges = set()
    for start in l_starts:
        for u, v in prev.edges:
            edges.add((start + u, start + v))
    for u, v in block.edges:
        edges.add((j_hosts[u - 1], j_hosts[v - 1]))
    return OrderedGraph(total, frozenset(edges))


def matching_construction(r: int, k: int, base: EdgeColoring | None = None) -> MatchingLevel:
    """Level-k matching pattern and its avoiding coloring.

    The base coloring must avoid a monochromatic K_r in both colors; this is
    verified, not trusted.  For r = 3 the pentagon coloring is used when no
    base is given.  The coloring c_{k+1} consists of R consecutive blocks
    carrying c_k, with cross edges colored by the base through block indices.
    """
    if r < 3:
        raise ParameterError("r", "need r >= 3")
    if k < 1:
        raise ParameterError("k", "need k >= 1")
    if base is None:
        if r != 3:
            raise ParameterError("base", f"no built-in K_{r}-avoiding base; supply one")
        base = pentagon_coloring()
    if base.c != 2:
        raise ParameterError("base", "base must be 2-colored")
    clique = complete(r)
    ok, violation = containment.avoids(base, [(clique, RED), (clique, BLUE)])
    if not ok:
        raise ParameterError(
            "base",
            f"base contains a monochromatic K_{r} in color {violation.color} "
            f"at {list(violation.embedding)}",
        )
    R = base.N
    t = r * (r - 1) * R
    block = block_matching(r, R)

    matching = block
    n_k = t
    coloring = base
    N_k = R
    for _ in range(1, k):
        matching = _next_matching(matching, block, r, R)
        n_k = (r - 1) * n_k + t
        coloring = _stack_coloring(coloring, base)
        N_k = R * N_k
    assert matching.n == n_k and coloring.N == N_k
    certified = CertifiedColoring(
        coloring, ((matching, RED), (matching, BLUE)), "matching", (r, k)
    )
    return MatchingLevel(matching, certified, R, t, n_k, N_k)


def _stack_coloring(inner: EdgeColoring, base: EdgeColoring) -> EdgeColoring:
    """base.N consecutive blocks each colored by inner; cross edges take the
    base color of their block indices."""
    Nk = inner.N
    N = base.N * Nk

    def fn(i, j):
        bi, bj = (i - 1) // Nk, (j - 1) // Nk
        if bi == bj:
            off = bi * Nk
            return inner.color(i - off, j - off)
        return base.color(bi + 1, bj + 1)

    return EdgeColoring.from_function(N, 2, fn)


@dataclass(frozen=True)
class MatchingLowerBoundParams:
    """Result of instantiating the matching lower bound for one (r, R)."""

    r: int
    R: int
    c: float
    k: int
    applicable: bool
    n: int | None
    N: int | None
    inequality_holds: bool
    margin: float | None


def matching_lb_params(r: int, R: int) -> MatchingLowerBoundParams:
    """Evaluate the super-polynomial matching bound exactly for one (r, R).

    Computes c = log2(R)/r, k = floor(c*r / log2(r)) - 2, the exact sizes
    n = n_k and N = R^k, and checks log2(N) - log2(n)^2 / (5 log2 log2 n) > 0.
    """
    if r < 3:
        raise ParameterError("r", "need r >= 3")
    if R < 2:
        raise ParameterError("R", "need R >= 2")
    c = math.log2(R) / r
    k = math.floor(c * r / math.log2(r)) - 2
    if k < 1:
        return MatchingLowerBoundParams(r, R, c, k, False, None, None, False, None)
    t = r * (r - 1) * R
    n = t * ((r - 1) ** k - 1) // (r - 2)
    N = R**k
    log_n = math.log2(n)
    margin = math.log2(N) - log_n * log_n / (5 * math.log2(log_n))
    return MatchingLowerBoundParams(r, R, c, k, True, n, N, margin > 0, margin)
