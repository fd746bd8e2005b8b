"""Ordered graphs, edge colorings and their structural analyzers.

Vertices are the integers 1..n and the vertex order is the integer order, so
two ordered graphs are equal exactly when they have the same vertex count and
the same edge set.  All values in this module are immutable after
construction and every function is pure.

Color convention used across the package: color 1 is "red", color 2 is
"blue".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

RED = 1
BLUE = 2


class ParameterError(ValueError):
    """A scheme or construction parameter is outside its valid range."""

    def __init__(self, field_name: str, message: str):
        self.field_name = field_name
        super().__init__(f"{field_name}: {message}")


class FormatError(ValueError):
    """A .og/.oc text payload does not match the documented format."""


@dataclass(frozen=True)
class OrderedGraph:
    """Graph on vertices 1..n with edges (i, j), i < j, under the index order."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("n", "vertex count must be nonnegative")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            i, j = e
            if not (1 <= i < j <= self.n):
                raise ParameterError("edges", f"edge {e} violates 1 <= i < j <= n")

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def neighbor_masks(self) -> list:
        """Bitmask adjacency rows; bit v-1 of row u-1 is set iff {u, v} is an edge."""
        rows = [0] * self.n
        for i, j in self.edges:
            rows[i - 1] |= 1 << (j - 1)
            rows[j - 1] |= 1 << (i - 1)
        return rows

    def left_degree(self, v: int) -> int:
        return sum(1 for i, j in self.edges if j == v)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __repr__(self):
        return f"OrderedGraph(n={self.n}, edges={self.sorted_edges()})"


def pair_index(i: int, j: int, n: int) -> int:
    """Index of the pair (i, j), i < j, in ascending lexicographic order."""
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


def all_pairs(n: int):
    """All pairs (i, j), 1 <= i < j <= n, in ascending lexicographic order."""
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yield (i, j)


class EdgeColoring:
    """A complete ordered graph on N vertices with every pair colored 1..c.

    The color table is stored in ascending lexicographic pair order.  Values
    are immutable; adjacency bitmask rows per color are computed lazily and
    cached.
    """

    __slots__ = ("N", "c", "_table", "_adj")

    def __init__(self, N: int, c: int, table: bytes):
        if N < 0:
            raise ParameterError("N", "vertex count must be nonnegative")
        if c < 2:
            raise ParameterError("c", "need at least 2 colors")
        expected = N * (N - 1) // 2
        if len(table) != expected:
            raise ParameterError("table", f"expected {expected} pair colors, got {len(table)}")
        for col in table:
            if not (1 <= col <= c):
                raise ParameterError("table", f"color {col} out of range 1..{c}")
        self.N = N
        self.c = c
        self._table = bytes(table)
        self._adj = None

    @classmethod
    def from_function(cls, N: int, c: int, fn) -> "EdgeColoring":
        """Build from fn(i, j) -> color, called on every pair with i < j."""
        table = bytearray()
        for i, j in all_pairs(N):
            table.append(fn(i, j))
        return cls(N, c, bytes(table))

    def color(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        if not (1 <= i < j <= self.N):
            raise ParameterError("pair", f"({i}, {j}) is not a vertex pair")
        return self._table[pair_index(i, j, self.N)]

    def table(self) -> bytes:
        return self._table

    def adjacency(self, color: int) -> list:
        """Bitmask rows of the given color class; bit v-1 of row u-1 set iff
        the pair {u, v} carries the color."""
        if not (1 <= color <= self.c):
            raise ParameterError("color", f"color {color} out of range 1..{self.c}")
        if self._adj is None:
            rows = [[0] * self.N for _ in range(self.c + 1)]
            t = self._table
            idx = 0
            for i in range(self.N):
                for j in range(i + 1, self.N):
                    col = t[idx]
                    idx += 1
                    rows[col][i] |= 1 << j
                    rows[col][j] |= 1 << i
            self._adj = rows
        return self._adj[color]

    def color_class(self, color: int) -> OrderedGraph:
        """The subgraph formed by the pairs of one color."""
        edges = [(i, j) for (i, j) in all_pairs(self.N) if self.color(i, j) == color]
        return OrderedGraph(self.N, frozenset(edges))

    def __eq__(self, other):
        return (
            isinstance(other, EdgeColoring)
            and self.N == other.N
            and self.c == other.c
            and self._table == other._table
        )

    def __hash__(self):
        return hash((self.N, self.c, self._table))

    def __repr__(self):
        return f"EdgeColoring(N={self.N}, c={self.c})"


# ---------------------------------------------------------------------------
# Ordering schemes
# ---------------------------------------------------------------------------

SCHEME_VARIANTS = (
    "mon-path",
    "alt-path",
    "mon-cycle",
    "star",
    "c4",
    "matching-shift",
    "matching-nest",
    "complete",
    "multipartite",
)

# The three orderings of the 4-cycle, written on positions 1..4.  A is the
# monotone one; B has two vertices sharing two common right neighbors; C is
# the remaining ordering.
C4_EDGES = {
    "A": frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}),
    "B": frozenset({(1, 3), (1, 4), (2, 3), (2, 4)}),
    "C": frozenset({(1, 2), (1, 3), (2, 4), (3, 4)}),
}


@dataclass(frozen=True)
class SchemeSpec:
    """Symbolic description of a named ordered-graph family."""

    variant: str
    params: tuple

    def __post_init__(self):
        if self.variant not in SCHEME_VARIANTS:
            raise ParameterError("variant", f"unknown scheme variant {self.variant!r}")
        object.__setattr__(self, "params", tuple(self.params))

    def build(self) -> OrderedGraph:
        return build_scheme(self)


def alternating_order(n: int) -> list:
    """Path vertices v_1..v_n listed in the alternating vertex order: odd
    indices ascending, then even indices descending."""
    odds = list(range(1, n + 1, 2))
    evens = list(range(2, n + 1, 2))
    return odds + evens[::-1]


def monotone_path(n: int) -> OrderedGraph:
    if n < 1:
        raise ParameterError("n", "monotone path needs n >= 1")
    return OrderedGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def alternating_path(n: int) -> OrderedGraph:
    if n < 1:
        raise ParameterError("n", "alternating path needs n >= 1")
    order = alternating_order(n)
    pos = {v: k + 1 for k, v in enumerate(order)}
    edges = []
    for v in range(1, n):
        a, b = pos[v], pos[v + 1]
        edges.append((min(a, b), max(a, b)))
    return OrderedGraph(n, frozenset(edges))


def monotone_cycle(n: int) -> OrderedGraph:
    # n = 2 degenerates to a single edge: the closing pair coincides with the
    # only path edge.
    if n < 2:
        raise ParameterError("n", "monotone cycle needs n >= 2")
    edges = {(i, i + 1) for i in range(1, n)}
    edges.add((1, n))
    return OrderedGraph(n, frozenset(edges))


def star(r: int, s: int) -> OrderedGraph:
    """Star with center at position s: s-1 left neighbors, r-1 right neighbors."""
    if r < 1:
        raise ParameterError("r", "star needs r >= 1")
    if s < 1:
        raise ParameterError("s", "star needs s >= 1")
    n = r + s - 1
    center = s
    edges = [(i, center) for i in range(1, center)]
    edges += [(center, j) for j in range(center + 1, n + 1)]
    return OrderedGraph(n, frozenset(edges))


def c4_ordering(which: str) -> OrderedGraph:
    if which not in C4_EDGES:
        raise ParameterError("which", "C4 ordering must be A, B or C")
    return OrderedGraph(4, C4_EDGES[which])


def matching_shift(n: int) -> OrderedGraph:
    """Matching {(i, n/2 + i)}: every edge jumps across the middle."""
    if n < 2 or n % 2:
        raise ParameterError("n", "shift matching needs even n >= 2")
    h = n // 2
    return OrderedGraph(n, frozenset((i, h + i) for i in range(1, h + 1)))


def matching_nest(n: int) -> OrderedGraph:
    """Matching {(i, n+1-i)}: edges nested around the middle."""
    if n < 2 or n % 2:
        raise ParameterError("n", "nested matching needs even n >= 2")
    return OrderedGraph(n, frozenset((i, n + 1 - i) for i in range(1, n // 2 + 1)))


def complete(n: int) -> OrderedGraph:
    if n < 1:
        raise ParameterError("n", "complete graph needs n >= 1")
    return OrderedGraph(n, frozenset(all_pairs(n)))


def complete_multipartite(sizes) -> OrderedGraph:
    """Complete multipartite graph whose parts are consecutive intervals."""
    sizes = tuple(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ParameterError("sizes", "part sizes must be positive")
    n = sum(sizes)
    part = []
    for k, s in enumerate(sizes):
        part += [k] * s
    edges = [(i, j) for (i, j) in all_pairs(n) if part[i - 1] != part[j - 1]]
    return OrderedGraph(n, frozenset(edges))


_BUILDERS = {
    "mon-path": lambda p: monotone_path(*p),
    "alt-path": lambda p: alternating_path(*p),
    "mon-cycle": lambda p: monotone_cycle(*p),
    "star": lambda p: star(*p),
    "c4": lambda p: c4_ordering(*p),
    "matching-shift": lambda p: matching_shift(*p),
    "matching-nest": lambda p: matching_nest(*p),
    "complete": lambda p: complete(*p),
    "multipartite": lambda p: complete_multipartite(p),
}


def build_scheme(spec: SchemeSpec) -> OrderedGraph:
    """Canonical ordered graph of the named family; deterministic and pure."""
    builder = _BUILDERS[spec.variant]
    try:
        return builder(spec.params)
    except TypeError as exc:
        raise ParameterError("params", f"bad arity for {spec.variant}: {spec.params}") from exc


# ---------------------------------------------------------------------------
# Structural analyzers
# ---------------------------------------------------------------------------


def edge_lengths(g: OrderedGraph) -> list:
    """Sorted multiset of edge lengths |i - j|."""
    return sorted(j - i for i, j in g.edges)


def bandwidth(g: OrderedGraph) -> int:
    """Maximum edge length; 0 for edgeless graphs."""
    return max((j - i for i, j in g.edges), default=0)


def interval_chromatic_number(g: OrderedGraph) -> int:
    """Minimum number of consecutive intervals with no edge inside any of them.

    Left-greedy sweep: grow the current interval until the next vertex has a
    neighbor inside it.  The greedy interval always ends no earlier than the
    corresponding interval of an optimal partition, so the sweep is optimal.
    """
    if g.n == 0:
        return 0
    rows = g.neighbor_masks()
    count = 1
    interval_mask = 0
    for v in range(g.n):
        if rows[v] & interval_mask:
            count += 1
            interval_mask = 0
        interval_mask |= 1 << v
    return count


def interval_partition(g: OrderedGraph) -> list:
    """The greedy optimal partition, as a list of (start, end) intervals."""
    if g.n == 0:
        return []
    rows = g.neighbor_masks()
    parts = []
    start = 1
    interval_mask = 0
    for v in range(g.n):
        if rows[v] & interval_mask:
            parts.append((start, v))
            start = v + 1
            interval_mask = 0
        interval_mask |= 1 << v
    parts.append((start, g.n))
    return parts


def degeneracy(g: OrderedGraph):
    """Minimum k such that repeated minimum-degree deletion never exceeds k.

    Returns (k, order) where order lists all vertices so that each has at
    most k neighbors earlier in the list.
    """
    if g.n == 0:
        return 0, []
    rows = g.neighbor_masks()
    alive = (1 << g.n) - 1
    deg = [bin(rows[v]).count("1") for v in range(g.n)]
    removal = []
    k = 0
    for _ in range(g.n):
        best = -1
        best_deg = g.n + 1
        m = alive
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if deg[v] < best_deg:
                best_deg = deg[v]
                best = v
        k = max(k, best_deg)
        removal.append(best + 1)
        alive &= ~(1 << best)
        nm = rows[best] & alive
        while nm:
            u = (nm & -nm).bit_length() - 1
            nm &= nm - 1
            deg[u] -= 1
    removal.reverse()
    return k, removal


@dataclass(frozen=True)
class DecompositionNode:
    """Witness node for a (k,q)-decomposition: splitting interval plus sides."""

    lo: int
    hi: int
    split: tuple | None = None  # (a, b) of the middle interval I
    left: "DecompositionNode | None" = None
    right: "DecompositionNode | None" = None


def is_decomposable(g: OrderedGraph, k: int, q: int):
    """Whether g splits recursively by <= k-vertex intervals into sides of
    size <= n*(q-1)/q with no cross edge.

    Returns (flag, witness) where witness is a DecompositionNode tree on
    success and None otherwise.  Memoized on vertex intervals: the recursion
    only ever descends into intervals of the original vertex range.
    """
    if k < 1:
        raise ParameterError("k", "need k >= 1")
    if q < 2:
        raise ParameterError("q", "need q >= 2")
    edges = g.sorted_edges()

    @lru_cache(maxsize=None)
    def solve(lo: int, hi: int):
        size = hi - lo + 1
        if size <= k:
            return DecompositionNode(lo, hi)
        limit = size * (q - 1) // q  # floor(n*(q-1)/q) >= sides
        for a in range(lo, hi + 1):
            if a - lo > limit:
                break
            for b in range(a, min(a + k - 1, hi) + 1):
                if hi - b > limit:
                    continue
                if any(i < a and b < j for i, j in edges if lo <= i and j <= hi):
                    continue
                left = solve(lo, a - 1) if a > lo else DecompositionNode(lo, a - 1)
                if left is None:
                    continue
                right = solve(b + 1, hi) if b < hi else DecompositionNode(b + 1, hi)
                if right is None:
                    continue
                return DecompositionNode(lo, hi, (a, b), left, right)
        return None

    if g.n == 0:
        return True, DecompositionNode(1, 0)
    witness = solve(1, g.n)
    return witness is not None, witness


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def graph_to_og(g: OrderedGraph) -> str:
    """Serialize to the .og text format (header + lex-sorted edge lines)."""
    lines = [f"og {g.n} {g.m}"]
    lines += [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def og_to_graph(text: str) -> OrderedGraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty .og payload")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "og":
        raise FormatError(f"bad .og header: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError(f"bad .og header: {lines[0]!r}") from exc
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {ln!r}")
        i, j = int(parts[0]), int(parts[1])
        if not (1 <= i < j <= n):
            raise FormatError(f"edge ({i}, {j}) out of range")
        edges.append((i, j))
    if edges != sorted(edges):
        raise FormatError("edge lines not in ascending lexicographic order")
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge lines")
    return OrderedGraph(n, frozenset(edges))


def coloring_to_oc(coloring: EdgeColoring) -> str:
    """Serialize to the .oc text format (header + lex-ordered pair colors)."""
    lines = [f"oc {coloring.N} {coloring.c}"]
    t = coloring.table()
    for idx, (i, j) in enumerate(all_pairs(coloring.N)):
        lines.append(f"{i} {j} {t[idx]}")
    return "\n".join(lines) + "\n"


def oc_to_coloring(text: str) -> EdgeColoring:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty .oc payload")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "oc":
        raise FormatError(f"bad .oc header: {lines[0]!r}")
    try:
        N, c = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError(f"bad .oc header: {lines[0]!r}") from exc
    body = [ln for ln in lines[1:] if ln.strip()]
    expected = N * (N - 1) // 2
    if len(body) != expected:
        raise FormatError(f"expected {expected} pair lines, found {len(body)}")
    table = bytearray()
    for ln, (i, j) in zip(body, all_pairs(N)):
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad pair line: {ln!r}")
        pi, pj, col = int(parts[0]), int(parts[1]), int(parts[2])
        if (pi, pj) != (i, j):
            raise FormatError(f"pair line out of order: {ln!r}, expected ({i}, {j})")
        if not (1 <= col <= c):
            raise FormatError(f"color {col} out of range 1..{c}")
        table.append(col)
    return EdgeColoring(N, c, bytes(table))
