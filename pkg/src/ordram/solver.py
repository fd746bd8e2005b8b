"""Exact Ramsey computation by complete branch-and-prune search.

Pairs are assigned colors in the order sorted by (max endpoint, min
endpoint), so every search prefix colors a complete graph on the first few
vertices plus part of the next column.  A branch dies the moment some
demanded pattern appears monochromatically; because the previous prefix was
clean, any new occurrence must use the pair just colored, so the check is
anchored at that pair:

  * monotone path demands ride an incremental longest-path table,
  * monotone cycle demands additionally track longest paths between fixed
    endpoints,
  * everything else runs a small anchored backtracking search over bitmask
    candidate rows.

Single-threaded search is deterministic; the optional process fan-out only
splits the top of the tree and re-verifies any witness it returns.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from . import bounds as bounds_mod
from .core import (
    EdgeColoring,
    OrderedGraph,
    ParameterError,
    alternating_path,
    complete,
    monotone_cycle,
    monotone_path,
    pair_index,
    star,
)
from .constructions import CertifiedColoring
from .containment import avoids

FOUND = "found"
NONE_EXISTS = "none"
BUDGET_EXHAUSTED = "budget"


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass(frozen=True)
class SearchResult:
    status: str
    coloring: EdgeColoring | None
    nodes: int
    seconds: float


@dataclass(frozen=True)
class PartialColoring:
    """Search-state snapshot: colors of an assignment-order prefix of pairs."""

    N: int
    c: int
    assigned: tuple

    def __post_init__(self):
        if len(self.assigned) > self.N * (self.N - 1) // 2:
            raise ParameterError("assigned", "more colors than pairs")
        if any(not 1 <= col <= self.c for col in self.assigned):
            raise ParameterError("assigned", "color out of range")


def assignment_order(N: int) -> list:
    """Pairs (i, j), 0-based, sorted by (max endpoint, min endpoint)."""
    return [(i, j) for j in range(1, N) for i in range(j)]


class _BudgetStop(Exception):
    pass


def _classify(pattern: OrderedGraph):
    """Return ("path" | "cycle" | "altpath", n) or ("generic", None)."""
    n = pattern.n
    if pattern.edges == monotone_path(n).edges:
        return "path", n
    if n >= 3 and pattern.edges == monotone_cycle(n).edges:
        return "cycle", n
    if n >= 3 and pattern.edges == alternating_path(n).edges:
        return "altpath", n
    return "generic", None


class _GenericPlan:
    """Precompiled anchored-search data for one generic pattern.

    For every pattern edge (p, q) usable as the anchor, `anchors` stores the
    fill schedule of the remaining vertices in pattern order: each step is
    (v, placed neighbor ids, window kind, offset) where the window upper
    bound is i - off / j - off / N - off for kind 0/1/2, leaving room for the
    unfilled vertices between v and the next anchored position.
    """

    __slots__ = ("n", "anchors", "h", "masks")

    def __init__(self, pattern: OrderedGraph):
        n = self.n = pattern.n
        edges = [(i - 1, j - 1) for i, j in pattern.sorted_edges()]
        nbrs = [set() for _ in range(n)]
        for i, j in edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        self.h = [-1] * n
        self.masks = [0] * n
        self.anchors = []
        for p, q in edges:
            placed = {p, q}
            unplaced = [v for v in range(n) if v not in placed]
            steps = []
            while unplaced:
                # most-constrained first: masks then shrink fastest
                v = min(unplaced, key=lambda u: (-len(nbrs[u] & placed), u))
                pred = max((w for w in placed if w < v), default=-1)
                succ = min((w for w in placed if w > v), default=n)
                lo_slack = sum(1 for w in unplaced if pred < w < v)
                hi_slack = sum(1 for w in unplaced if v < w < succ)
                steps.append(
                    (v, tuple(sorted(nbrs[v] & placed)), pred, lo_slack, succ, hi_slack)
                )
                placed.add(v)
                unplaced.remove(v)
            self.anchors.append((p, q, tuple(steps)))
        self.anchors = tuple(self.anchors)


def _anchored_hit(plan: _GenericPlan, i: int, j: int, rows: list, N: int) -> bool:
    """Does the pattern embed using host pair (i, j) as some edge image, with
    all pattern edges inside the adjacency rows?"""
    n = plan.n
    h = plan.h
    masks = plan.masks
    span = j - i - 1
    tail = N - 1 - j
    for p, q, steps in plan.anchors:
        if p > i or q - p - 1 > span or n - 1 - q > tail:
            continue
        total = len(steps)
        if not total:
            return True
        h[p] = i
        h[q] = j
        _v, placed, pred, lo_slack, succ, hi_slack = steps[0]
        hi = (h[succ] - hi_slack) if succ < n else (N - hi_slack)
        cands = (1 << hi) - 1 if hi > 0 else 0
        lo = (h[pred] + 1 + lo_slack) if pred >= 0 else lo_slack
        if lo:
            cands &= -1 << lo
        for u in placed:
            cands &= rows[h[u]]
        masks[0] = cands
        depth = 0
        while depth >= 0:
            m = masks[depth]
            if not m:
                depth -= 1
                continue
            x = m & -m
            masks[depth] = m ^ x
            h[steps[depth][0]] = x.bit_length() - 1
            depth += 1
            if depth == total:
                return True
            _v, placed, pred, lo_slack, succ, hi_slack = steps[depth]
            hi = (h[succ] - hi_slack) if succ < n else (N - hi_slack)
            cands = (1 << hi) - 1 if hi > 0 else 0
            lo = (h[pred] + 1 + lo_slack) if pred >= 0 else lo_slack
            if lo:
                cands &= -1 << lo
            for u in placed:
                cands &= rows[h[u]]
            masks[depth] = cands
    return False


def _prepare_demands(demands, N: int):
    """Split demands per color into path thresholds, cycle thresholds and
    generic plans; returns (c, per_color, forced) where forced means some
    edgeless demand fits and every coloring contains it."""
    if not demands:
        raise ParameterError("demands", "need at least one demand")
    c = 0
    for pattern, color in demands:
        if color < 1:
            raise ParameterError("demands", f"color {color} out of range")
        if pattern.n < 1:
            raise ParameterError("demands", "patterns need at least one vertex")
        c = max(c, color)
    c = max(c, 2)
    path_r = [None] * (c + 1)
    cycle_r = [None] * (c + 1)
    alt_r = [None] * (c + 1)
    generic = [[] for _ in range(c + 1)]
    forced = False
    for pattern, color in demands:
        if pattern.n > N:
            continue
        if not pattern.edges:
            forced = True
            continue
        kind, r = _classify(pattern)
        if kind == "path":
            if path_r[color] is None or r < path_r[color]:
                path_r[color] = r
        elif kind == "cycle":
            if cycle_r[color] is None or r < cycle_r[color]:
                cycle_r[color] = r
        elif kind == "altpath":
            if alt_r[color] is None or r < alt_r[color]:
                alt_r[color] = r
        else:
            generic[color].append(_GenericPlan(pattern))
    return c, path_r, cycle_r, alt_r, generic, forced


def _color_symmetric(demands, c: int) -> bool:
    """True when every demanded pattern is demanded in all c colors, making
    the demand set invariant under any color permutation."""
    per_pattern = {}
    for pattern, color in demands:
        per_pattern.setdefault(pattern, set()).add(color)
    return all(colors == set(range(1, c + 1)) for colors in per_pattern.values())


def exists_avoiding(
    demands,
    N: int,
    budget: Budget | None = None,
    prefix: PartialColoring | None = None,
    symmetry_break: bool = True,
) -> SearchResult:
    """Complete search for a coloring of K_N avoiding every demand.

    Found results are re-verified against the demand list before being
    returned; NoneExists certifies exhaustive refutation (impossible when a
    budget fires, which yields BudgetExhausted instead).
    """
    if N < 1:
        raise ParameterError("N", "need N >= 1")
    budget = budget or Budget()
    start = time.monotonic()
    c, path_r, cycle_r, alt_r, generic, forced = _prepare_demands(demands, N)
    if prefix is not None and (prefix.N != N or prefix.c != c):
        raise ParameterError("prefix", "prefix shape does not match instance")
    if forced:
        return SearchResult(NONE_EXISTS, None, 0, time.monotonic() - start)
    active = any(
        path_r[col] or cycle_r[col] or alt_r[col] or generic[col]
        for col in range(1, c + 1)
    )
    pairs = assignment_order(N)
    if not active:
        table = bytearray(b"\x01" * len(pairs))
        coloring = EdgeColoring(N, c, bytes(table))
        ok, _ = avoids(coloring, demands)
        assert ok
        return SearchResult(FOUND, coloring, 0, time.monotonic() - start)

    symmetric = symmetry_break and prefix is None and _color_symmetric(demands, c)

    adj = [[0] * N for _ in range(c + 1)]
    longest = [[1] * N for _ in range(c + 1)]  # longest path ending at v
    need_lp = [cycle_r[col] is not None for col in range(c + 1)]
    lp = [
        [[0] * N for _ in range(N)] if need_lp[col] else None for col in range(c + 1)
    ]
    for col in range(1, c + 1):
        if need_lp[col]:
            table = lp[col]
            for v in range(N):
                table[v][v] = 1
    # alternating paths embed as an outside-in zigzag, so the check anchors at
    # the second-outermost pair: altL[col][a][b] = longest inner zigzag inside
    # the window (a, b) whose next vertex attaches to b from the left
    need_alt = [alt_r[col] is not None for col in range(c + 1)]
    altL = [
        [[0] * N for _ in range(N)] if need_alt[col] else None for col in range(c + 1)
    ]
    lex_colors = bytearray(len(pairs))
    lex_of = [pair_index(i + 1, j + 1, N) for i, j in pairs]
    node_count = 0
    max_nodes = budget.max_nodes if budget.max_nodes is not None else float("inf")
    deadline = (
        start + budget.max_seconds if budget.max_seconds is not None else float("inf")
    )

    colors_all = tuple(range(1, c + 1))

    def alt_realized(i: int, j: int, col: int) -> bool:
        # anchored at (i, j) = second-smallest and largest embedding vertices:
        # a smaller left neighbor of j plus an inner zigzag of alt_r - 3 steps
        if not adj[col][j] & ((1 << i) - 1):
            return False
        need = alt_r[col] - 3
        if need <= 0:
            return True
        level = need - 1
        row_i = altL[col][i]
        m = adj[col][i] & ((1 << j) - 1) & (-1 << (i + 1))
        while m:
            z = (m & -m).bit_length() - 1
            m &= m - 1
            if row_i[z] >= level:
                return True
        return False

    only_generic = all(
        path_r[col] is None
        and cycle_r[col] is None
        and alt_r[col] is None
        and len(generic[col]) == 1
        for col in range(1, c + 1)
    )
    only_alt = all(
        path_r[col] is None and cycle_r[col] is None and not generic[col]
        and alt_r[col] is not None
        for col in range(1, c + 1)
    )
    if only_generic:
        plans = [None] + [generic[col][0] for col in range(1, c + 1)]

        def realized(i: int, j: int, col: int) -> bool:
            return _anchored_hit(plans[col], i, j, adj[col], N)

    elif only_alt:
        realized = alt_realized

    else:

        def realized(i: int, j: int, col: int) -> bool:
            pr = path_r[col]
            if pr is not None and longest[col][i] + 1 >= pr:
                return True
            cr = cycle_r[col]
            if cr is not None:
                lp_col = lp[col]
                m = adj[col][j] & ((1 << i) - 1)
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    d = lp_col[u][i]
                    if d and d + 1 >= cr:
                        return True
            if need_alt[col] and alt_realized(i, j, col):
                return True
            rows = adj[col]
            for plan in generic[col]:
                if _anchored_hit(plan, i, j, rows, N):
                    return True
            return False

    def apply(i: int, j: int, col: int, trail: list):
        adj[col][i] |= 1 << j
        adj[col][j] |= 1 << i
        if path_r[col] is not None or need_lp[col]:
            cand = longest[col][i] + 1
            if cand > longest[col][j]:
                trail.append((1, col, j, longest[col][j]))
                longest[col][j] = cand
        if need_lp[col]:
            lp_col = lp[col]
            row_j_updates = []
            for u in range(i + 1):
                d = lp_col[u][i]
                if d and d + 1 > lp_col[u][j]:
                    row_j_updates.append((u, lp_col[u][j]))
                    lp_col[u][j] = d + 1
            if row_j_updates:
                trail.append((2, col, j, row_j_updates))
        if need_alt[col]:
            # longest right-attaching chain from (i, j): pick z inside, then
            # continue with the stored left-attaching chains
            table = altL[col]
            row_i = table[i]
            rij = 0
            m = adj[col][i] & ((1 << j) - 1) & (-1 << (i + 1))
            while m:
                z = (m & -m).bit_length() - 1
                m &= m - 1
                if row_i[z] >= rij:
                    rij = row_i[z] + 1
            # altL[.][j] is non-increasing in the first index, so the rows to
            # lift form a suffix of 0..i-1
            lift = rij + 1
            col_j_updates = []
            a = i - 1
            while a >= 0:
                row_a = table[a]
                if lift <= row_a[j]:
                    break
                col_j_updates.append((a, row_a[j]))
                row_a[j] = lift
                a -= 1
            if col_j_updates:
                trail.append((3, col, j, col_j_updates))

    def undo(i: int, j: int, col: int, trail: list):
        adj[col][i] &= ~(1 << j)
        adj[col][j] &= ~(1 << i)
        for entry in reversed(trail):
            kind, col_e, v, payload = entry
            if kind == 1:
                longest[col_e][v] = payload
            elif kind == 2:
                lp_col = lp[col_e]
                for u, old in payload:
                    lp_col[u][v] = old
            else:
                table = altL[col_e]
                for a, old in payload:
                    table[a][v] = old

    prefix_len = 0
    if prefix is not None:
        for t, col in enumerate(prefix.assigned):
            i, j = pairs[t]
            if realized(i, j, col):
                return SearchResult(NONE_EXISTS, None, 0, time.monotonic() - start)
            apply(i, j, col, [])
            lex_colors[lex_of[t]] = col
        prefix_len = len(prefix.assigned)

    total = len(pairs)
    monotonic = time.monotonic

    def dfs(t: int):
        nonlocal node_count
        if t == total:
            return EdgeColoring(N, c, bytes(lex_colors))
        i, j = pairs[t]
        choices = (1,) if (symmetric and t == 0) else colors_all
        for col in choices:
            node_count += 1
            if node_count > max_nodes:
                raise _BudgetStop()
            if not node_count & 1023 and monotonic() > deadline:
                raise _BudgetStop()
            if realized(i, j, col):
                continue
            trail = []
            apply(i, j, col, trail)
            lex_colors[lex_of[t]] = col
            hit = dfs(t + 1)
            undo(i, j, col, trail)
            if hit is not None:
                return hit
        return None

    try:
        witness = dfs(prefix_len)
    except _BudgetStop:
        return SearchResult(BUDGET_EXHAUSTED, None, node_count, time.monotonic() - start)
    elapsed = time.monotonic() - start
    if witness is None:
        return SearchResult(NONE_EXISTS, None, node_count, elapsed)
    ok, violation = avoids(witness, demands)
    assert ok, f"searcher produced an invalid witness: {violation}"
    return SearchResult(FOUND, witness, node_count, elapsed)


# ---------------------------------------------------------------------------
# Parallel fan-out
# ---------------------------------------------------------------------------


def _clean_prefixes(demands, N: int, depth: int, symmetric_allowed: bool) -> list:
    """All prefix assignments of the first `depth` pairs that keep every
    demand unrealized, honoring the color-symmetry break on the first pair."""
    c, *_ = _prepare_demands(demands, N)
    depth = min(depth, N * (N - 1) // 2)
    symmetric = symmetric_allowed and _color_symmetric(demands, c)
    prefixes = []

    def grow(assigned: tuple):
        if len(assigned) == depth:
            prefixes.append(PartialColoring(N, c, assigned))
            return
        choices = (1,) if (symmetric and not assigned) else range(1, c + 1)
        for col in choices:
            candidate = PartialColoring(N, c, assigned + (col,))
            probe = exists_avoiding(
                demands, N, Budget(max_nodes=0), prefix=candidate, symmetry_break=False
            )
            if probe.status != NONE_EXISTS:
                grow(assigned + (col,))

    grow(())
    return prefixes


def _subtree_worker(args):
    demands, N, assigned, max_nodes, max_seconds = args
    c, *_ = _prepare_demands(demands, N)
    res = exists_avoiding(
        demands,
        N,
        Budget(max_nodes, max_seconds),
        prefix=PartialColoring(N, c, assigned),
        symmetry_break=False,
    )
    return res.status, res.coloring.table() if res.coloring else None, res.nodes, res.seconds


def exists_avoiding_parallel(
    demands, N: int, budget: Budget | None = None, workers: int = 1
) -> SearchResult:
    """Fan the top of the search tree out to worker processes.

    The Found/NoneExists verdict is schedule-independent; a Found witness is
    re-verified here before being returned.
    """
    if workers <= 1:
        return exists_avoiding(demands, N, budget)
    import multiprocessing

    budget = budget or Budget()
    start = time.monotonic()
    c, *_ = _prepare_demands(demands, N)
    # enough fan-out levels to keep every worker busy
    depth = 1
    while c ** (depth - 1) < 4 * workers and depth < N * (N - 1) // 2:
        depth += 1
    prefixes = _clean_prefixes(demands, N, depth, symmetric_allowed=True)
    if not prefixes:
        return SearchResult(NONE_EXISTS, None, 0, time.monotonic() - start)
    jobs = [
        (tuple(demands), N, p.assigned, budget.max_nodes, budget.max_seconds)
        for p in prefixes
    ]
    nodes = 0
    exhausted = False
    witness_table = None
    with multiprocessing.Pool(processes=workers) as pool:
        for status, table, job_nodes, _secs in pool.imap_unordered(_subtree_worker, jobs):
            nodes += job_nodes
            if status == FOUND:
                witness_table = table
                pool.terminate()
                break
            if status == BUDGET_EXHAUSTED:
                exhausted = True
    elapsed = time.monotonic() - start
    if witness_table is not None:
        c, *_ = _prepare_demands(demands, N)
        coloring = EdgeColoring(N, c, witness_table)
        ok, violation = avoids(coloring, demands)
        assert ok, f"parallel witness failed verification: {violation}"
        return SearchResult(FOUND, coloring, nodes, elapsed)
    if exhausted:
        return SearchResult(BUDGET_EXHAUSTED, None, nodes, elapsed)
    return SearchResult(NONE_EXISTS, None, nodes, elapsed)


# ---------------------------------------------------------------------------
# Ramsey numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RamseyResult:
    demands: tuple
    status: str  # "exact" | "bounds"
    value: int | None
    lo: int
    hi: int | None
    witness: CertifiedColoring | None
    nodes: int
    seconds: float

    def __post_init__(self):
        if self.hi is not None and self.lo > self.hi:
            raise ParameterError("bounds", f"lo {self.lo} exceeds hi {self.hi}")


def _known_bounds(demands):
    """Seed (lower, upper) from the formula oracles when the demand set is a
    family they cover; upper may be None."""
    demands = list(demands)
    colors = sorted(col for _, col in demands)
    if colors != list(range(1, len(demands) + 1)):
        return 1, None
    by_color = {col: pattern for pattern, col in demands}
    patterns = [by_color[col] for col in sorted(by_color)]
    kinds = [_classify(p) for p in patterns]
    if all(k == "path" for k, _ in kinds):
        return bounds_mod.monotone_paths_exact(*(p.n for p in patterns)).value, None
    if len(patterns) == 2:
        (k1, _r1), (k2, _r2) = kinds
        p1, p2 = patterns
        if k1 == "cycle" and k2 == "cycle":
            return bounds_mod.monotone_cycles_exact(p1.n, p2.n).value, None
        if k1 == "path" and p2.edges == complete(p2.n).edges:
            return bounds_mod.path_vs_clique_exact(p1.n, p2.n).value, None
        if p1.edges == complete(p1.n).edges and k2 == "path":
            return bounds_mod.path_vs_clique_exact(p2.n, p1.n).value, None
        star1 = _as_star(p1)
        star2 = _as_star(p2)
        if star1 and star2:
            return bounds_mod.stars_pair_exact(*star1, *star2).value, None
        if p1 == p2:
            alt = alternating_path(p1.n)
            if p1.edges == alt.edges and p1.n >= 2:
                ab = bounds_mod.alt_path_bounds(p1.n)
                return ab.lower.value, ab.upper.value
    return 1, None


def _as_star(pattern: OrderedGraph):
    """(r, s) if the pattern is the ordered star S_{r,s}, else None."""
    n = pattern.n
    for s in range(1, n + 1):
        r = n - s + 1
        if pattern.edges == star(r, s).edges:
            return (r, s)
    return None


def ramsey_number(
    demands,
    N_start: int | None = None,
    budget: Budget | None = None,
    workers: int = 1,
) -> RamseyResult:
    """Smallest N such that every coloring of K_N realizes some demand.

    Iterates N upward from max(known lower bound - 1, N_start), so the last
    Found below the answer supplies the stored witness; returns Bounds when
    the budget runs out.  N_start above 1 only skips known-refutable sizes
    and must not exceed the true value.
    """
    demands = tuple(demands)
    budget = budget or Budget()
    start_time = time.monotonic()
    known_lo, known_hi = _known_bounds(demands)
    N = max(known_lo - 1, N_start or 1, 1)
    total_nodes = 0
    witness = None
    witness_n = None
    lo = 1

    def remaining() -> Budget:
        if budget.max_seconds is None and budget.max_nodes is None:
            return budget
        secs = None
        if budget.max_seconds is not None:
            secs = max(0.0, budget.max_seconds - (time.monotonic() - start_time))
        nodes = None
        if budget.max_nodes is not None:
            nodes = max(0, budget.max_nodes - total_nodes)
        return Budget(nodes, secs)

    while True:
        result = exists_avoiding_parallel(demands, N, remaining(), workers)
        total_nodes += result.nodes
        elapsed = time.monotonic() - start_time
        if result.status == FOUND:
            witness = result.coloring
            witness_n = N
            lo = N + 1
            N += 1
            continue
        if result.status == NONE_EXISTS:
            if witness_n == N - 1 or N == 1:
                cert = None
                if witness is not None:
                    cert = CertifiedColoring(witness, demands, "solver-witness", (N - 1,))
                return RamseyResult(
                    demands, "exact", N, N, N, cert, total_nodes, elapsed
                )
            # seeded too high: walk down to recover the witness
            N -= 1
            continue
        cert = None
        if witness is not None:
            cert = CertifiedColoring(witness, demands, "solver-witness", (witness_n,))
        return RamseyResult(
            demands, "bounds", None, lo, known_hi, cert, total_nodes, elapsed
        )


# ---------------------------------------------------------------------------
# Bipartite Turan numbers by exhaustive matrix search
# ---------------------------------------------------------------------------


def pattern_matrix(pattern: OrderedGraph) -> list:
    """0/1 matrix of a 2-interval-chromatic pattern: rows are the first
    greedy interval, columns the second."""
    from .core import interval_partition

    parts = interval_partition(pattern)
    if len(parts) != 2:
        raise ParameterError("pattern", "pattern must have interval chromatic number 2")
    (alo, ahi), (blo, bhi) = parts
    rows = []
    for a in range(alo, ahi + 1):
        rows.append([1 if (a, b) in pattern.edges else 0 for b in range(blo, bhi + 1)])
    return rows


def _matrix_contains(grid: list, m: int, n: int, pat: list) -> bool:
    """Does the m x n bitmask-row grid contain pat as a pattern submatrix?"""
    p = len(pat)
    q = len(pat[0])
    if p > m or q > n:
        return False
    pat_masks = [sum(1 << b for b in range(q) if row[b]) for row in pat]
    for cols in itertools.combinations(range(n), q):
        a = 0
        for row in range(m):
            mask = pat_masks[a]
            sub = 0
            for idx, col in enumerate(cols):
                if grid[row] >> col & 1:
                    sub |= 1 << idx
            if sub & mask == mask:
                a += 1
                if a == p:
                    return True
    return False


def turan_bipartite(pattern: OrderedGraph, m: int, n: int) -> int:
    """Maximum number of ones in an m x n 0/1 matrix avoiding the pattern's
    matrix, by exhaustive search with monotone pruning."""
    if m < 1 or n < 1:
        raise ParameterError("m" if m < 1 else "n", "need positive dimensions")
    if m * n > 25:
        raise ParameterError("m*n", "brute-force envelope is m*n <= 25")
    pat = pattern_matrix(pattern)
    grid = [0] * m
    cells = [(i, j) for i in range(m) for j in range(n)]
    best = 0

    def search(idx: int, ones: int):
        nonlocal best
        if ones + (len(cells) - idx) <= best:
            return
        if idx == len(cells):
            if ones > best:
                best = ones
            return
        i, j = cells[idx]
        grid[i] |= 1 << j
        if not _matrix_contains(grid, m, n, pat):
            search(idx + 1, ones + 1)
        grid[i] &= ~(1 << j)
        search(idx + 1, ones)

    search(0, 0)
    return best
