"""Shared brute-force oracles used across the test suite.

Everything here is deliberately naive: plain enumeration with no pruning, no
bitmasks and no shared code with the implementation, so it can serve as an
independent reference.
"""

from __future__ import annotations

import itertools
import random

from ordram.core import EdgeColoring, OrderedGraph, all_pairs


def brute_has_embedding(host_edges: set, host_n: int, pattern: OrderedGraph) -> bool:
    """Enumerate every increasing tuple and test all pattern edges."""
    r = pattern.n
    if r > host_n:
        return False
    for combo in itertools.combinations(range(1, host_n + 1), r):
        if all((combo[i - 1], combo[j - 1]) in host_edges for i, j in pattern.edges):
            return True
    return False


def brute_embeddings(host_edges: set, host_n: int, pattern: OrderedGraph) -> list:
    out = []
    for combo in itertools.combinations(range(1, host_n + 1), pattern.n):
        if all((combo[i - 1], combo[j - 1]) in host_edges for i, j in pattern.edges):
            out.append(combo)
    return out


def color_class_edges(coloring: EdgeColoring, color: int) -> set:
    return {
        (i, j) for (i, j) in all_pairs(coloring.N) if coloring.color(i, j) == color
    }


def brute_interval_chromatic(g: OrderedGraph) -> int:
    """Minimum over all consecutive-interval partitions, by direct enumeration
    of the cut positions."""
    if g.n == 0:
        return 0
    best = g.n
    positions = list(range(1, g.n))  # cut after these vertices
    for cut_count in range(g.n):
        if cut_count + 1 >= best:
            break
        for cuts in itertools.combinations(positions, cut_count):
            boundaries = [0, *cuts, g.n]
            ok = True
            for a, b in zip(boundaries, boundaries[1:]):
                if any(a < i <= b and a < j <= b for i, j in g.edges):
                    ok = False
                    break
            if ok:
                best = cut_count + 1
                break
    return best


def brute_exists_avoiding(demands, N: int, c: int = 2) -> bool:
    """Enumerate every coloring of K_N and test each demand naively."""
    pairs = list(all_pairs(N))
    for assignment in itertools.product(range(1, c + 1), repeat=len(pairs)):
        table = dict(zip(pairs, assignment))
        good = True
        for pattern, color in demands:
            edges = {p for p, col in table.items() if col == color}
            if brute_has_embedding(edges, N, pattern):
                good = False
                break
        if good:
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> OrderedGraph:
    edges = [e for e in all_pairs(n) if rng.random() < p]
    return OrderedGraph(n, frozenset(edges))


def random_coloring(rng: random.Random, N: int, c: int = 2) -> EdgeColoring:
    table = bytes(rng.randint(1, c) for _ in range(N * (N - 1) // 2))
    return EdgeColoring(N, c, table)
