"""Constructive embed-or-biclique dichotomy for 2-colored hosts.

Given a red/blue coloring of K_N with N >= n^2 and a pattern of degeneracy
at most k, either build a blue order-preserving copy of the pattern with the
i-th pattern vertex inside the i-th length-floor(N/n) host interval, or
exhibit a red complete bipartite K_{t,t} with t = floor((N/n^2)^(1/(k+1))).

Vertices are processed in an elimination order in which every vertex has at
most k earlier neighbors; each vertex keeps a candidate set inside its
interval that shrinks at most k times, once per placed earlier neighbor.  A
candidate x is "starved" for a later neighbor u when t*(deg+1) <= |U(u)|,
deg being x's blue degree into U(u); t starved candidates yield the red
biclique, and otherwise the surviving candidates keep every U(u) large
enough for the count inequality |U(w)| * n * t^k >= N - n^2 * t^(k+1) >= 0,
which is asserted at every placement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BLUE, RED, EdgeColoring, OrderedGraph, ParameterError
from .containment import Embedding
from .core import degeneracy as core_degeneracy


@dataclass(frozen=True)
class BicliqueWitness:
    """A red K_{t,t}: every left vertex precedes and is red-adjacent to every
    right vertex."""

    left: tuple
    right: tuple

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))


@dataclass(frozen=True)
class PlacedEmbedding:
    """Blue copy of the pattern with each vertex inside its own interval."""

    embedding: Embedding
    intervals: tuple  # (start, end) 1-based inclusive, per pattern vertex


def _biclique_side(mask: int, count: int) -> tuple:
    out = []
    while mask and len(out) < count:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length())  # 1-based vertex
    return tuple(out)


def host_intervals(N: int, n: int) -> list:
    """The n candidate intervals, 1-based inclusive; surplus host vertices
    beyond n*floor(N/n) belong to no interval and are never used."""
    width = N // n
    return [(v * width + 1, (v + 1) * width) for v in range(n)]


def embedding_threshold(N: int, n: int, k: int) -> int:
    """Largest t with t^(k+1) * n^2 <= N (integer root, floored)."""
    t = 1
    while (t + 1) ** (k + 1) * n * n <= N:
        t += 1
    return t


def embed_or_biclique(host: EdgeColoring, pattern: OrderedGraph, k: int):
    """Blue PlacedEmbedding or red BicliqueWitness, exactly one of the two.

    Raises ParameterError when N < n^2, the host is not 2-colored, or the
    pattern's degeneracy exceeds k.
    """
    if host.c != 2:
        raise ParameterError("host", "host must be 2-colored")
    n = pattern.n
    if n < 1:
        raise ParameterError("pattern", "pattern needs at least one vertex")
    N = host.N
    if N < n * n:
        raise ParameterError("N", f"need N >= n^2 = {n * n}, got {N}")
    if k < 1:
        raise ParameterError("k", "need k >= 1")
    pattern_k, elim = core_degeneracy(pattern)
    if pattern_k > k:
        raise ParameterError("k", f"pattern degeneracy {pattern_k} exceeds bound {k}")

    blue = host.adjacency(BLUE)
    intervals = host_intervals(N, n)
    t = embedding_threshold(N, n, k)
    width = N // n

    nbr_sets = [set() for _ in range(n + 1)]
    for a, b in pattern.edges:
        nbr_sets[a].add(b)
        nbr_sets[b].add(a)
    elim_pos = {v: idx for idx, v in enumerate(elim)}
    later = {
        v: [u for u in elim[elim_pos[v] + 1 :] if u in nbr_sets[v]] for v in elim
    }

    cand = [0] * (n + 1)  # candidate masks per pattern vertex, bit v-1 = host v
    for v in range(1, n + 1):
        lo, hi = intervals[v - 1]
        cand[v] = ((1 << hi) - 1) & ~((1 << (lo - 1)) - 1)

    placed = {}
    for w in elim:
        shrink_count = min(len([u for u in nbr_sets[w] if elim_pos[u] < elim_pos[w]]), k)
        u_w = cand[w]
        size_w = bin(u_w).count("1")
        # candidate-size ledger: |U(w)| * n * t^k >= N - n^2 * t^(k+1)
        assert size_w * n * t**k >= N - n * n * t ** (k + 1), (
            f"candidate ledger violated at {w}: |U|={size_w} after "
            f"{shrink_count} shrinks"
        )
        starved_union = 0
        for u in later[w]:
            u_u = cand[u]
            a = bin(u_u).count("1")
            starved = 0
            probe = u_w
            while probe:
                bit = probe & -probe
                probe ^= bit
                x = bit.bit_length() - 1
                deg = bin(blue[x] & u_u).count("1")
                if t * (deg + 1) <= a:
                    starved |= bit
            if bin(starved).count("1") >= t:
                left_mask = 0
                picked = starved
                for _ in range(t):
                    bit = picked & -picked
                    picked ^= bit
                    left_mask |= bit
                rem = u_u
                probe = left_mask
                while probe:
                    bit = probe & -probe
                    probe ^= bit
                    rem &= ~blue[bit.bit_length() - 1]
                assert bin(rem).count("1") >= t, "starved extraction came up short"
                side_w = _biclique_side(left_mask, t)
                side_u = _biclique_side(rem, t)
                if side_w[-1] < side_u[0]:
                    return BicliqueWitness(side_w, side_u)
                assert side_u[-1] < side_w[0]
                return BicliqueWitness(side_u, side_w)
            starved_union |= starved
        c_w = u_w & ~starved_union
        assert c_w, "placement candidates exhausted"
        h_bit = c_w & -c_w
        h_w = h_bit.bit_length() - 1
        placed[w] = h_w + 1
        for u in later[w]:
            cand[u] &= blue[h_w]

    mapping = tuple(placed[v] for v in range(1, n + 1))
    return PlacedEmbedding(Embedding(mapping), tuple(intervals))


def check_outcome(host: EdgeColoring, pattern: OrderedGraph, k: int, outcome) -> bool:
    """Independent validity check of an embed_or_biclique outcome."""
    n = pattern.n
    t = embedding_threshold(host.N, n, k)
    if isinstance(outcome, BicliqueWitness):
        if len(outcome.left) != t or len(outcome.right) != t:
            return False
        if len(set(outcome.left)) != t or len(set(outcome.right)) != t:
            return False
        if max(outcome.left) >= min(outcome.right):
            return False
        return all(
            host.color(a, b) == RED for a in outcome.left for b in outcome.right
        )
    if isinstance(outcome, PlacedEmbedding):
        emb = outcome.embedding
        if not emb.is_valid(pattern, lambda a, b: host.color(a, b) == BLUE):
            return False
        intervals = host_intervals(host.N, n)
        return all(
            lo <= x <= hi for x, (lo, hi) in zip(emb.mapping, intervals)
        )
    return False
