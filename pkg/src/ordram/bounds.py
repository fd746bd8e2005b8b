"""Closed-form oracles for Ramsey values and bounds.

Each oracle returns a BoundValue stating whether it is exact, a lower bound,
an upper bound or a conjecture.  All integer formulas are evaluated exactly:
floors of irrational square-root expressions go through math.isqrt, never
through floating point.  Only the probabilistic estimate is inherently real-
valued; it reports the ceiling with the real value attached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ParameterError

EXACT = "exact"
LOWER = "lower"
UPPER = "upper"
CONJECTURED = "conjectured"


@dataclass(frozen=True)
class BoundValue:
    kind: str
    value: int
    source: str
    real: float | None = None

    def __post_init__(self):
        if self.kind not in (EXACT, LOWER, UPPER, CONJECTURED):
            raise ParameterError("kind", f"unknown bound kind {self.kind!r}")
        if self.kind == EXACT and self.value < 1:
            raise ParameterError("value", "exact Ramsey values are positive")


def _floor_half_sqrt(addend: int, radicand: int) -> int:
    """floor((addend + sqrt(radicand)) / 2) in exact integer arithmetic."""
    return (addend + math.isqrt(radicand)) // 2


def monotone_paths_exact(*rs: int) -> BoundValue:
    """Ramsey number of monotone paths P_{r_1}, ..., P_{r_c}."""
    if not rs:
        raise ParameterError("rs", "need at least one path length")
    if any(r < 1 for r in rs):
        raise ParameterError("rs", "path lengths must be >= 1")
    value = 1 + math.prod(r - 1 for r in rs)
    return BoundValue(EXACT, value, "monotone paths: 1 + prod(r_i - 1)")


def stars_multicolor_exact(*rs: int) -> BoundValue:
    """Ramsey number of the stars S_{1,r_1}, ..., S_{1,r_c}."""
    if not rs:
        raise ParameterError("rs", "need at least one star size")
    if any(r < 1 for r in rs):
        raise ParameterError("rs", "star sizes must be >= 1")
    if any(r == 1 for r in rs):
        # S_{1,1} is a single vertex, present in every K_N with N >= 1
        return BoundValue(EXACT, 1, "one-sided stars: degenerate single-vertex demand")
    value = 2 * (1 - len(rs)) + sum(rs)
    return BoundValue(EXACT, value, "one-sided stars: 2(1-c) + sum(r_i)")


def _star_pair(pr: int, ps: int, qr: int, qs: int) -> int:
    """R(S_{pr,ps}, S_{qr,qs}); S_{r,s} has r-1 right and s-1 left leaves."""
    if (pr, ps) == (1, 1) or (qr, qs) == (1, 1):
        return 1
    if pr >= 2 and ps >= 2:
        return _star_pair(pr, 1, qr, qs) + _star_pair(1, ps, qr, qs) - 1
    if ps == 1:
        # mirror both stars left-to-right
        return _star_pair(1, pr, qs, qr)
    # first star is S_{1,a}
    a = ps
    if qr >= 2 and qs >= 2:
        return _star_pair(1, a, qr, 1) + a + qs - 3
    if qr == 1:
        return a + qs - 2
    b = qr
    return (math.isqrt(1 + 8 * (a - 2) * (b - 2)) - 1) // 2 + a + b - 2


def stars_pair_exact(r1: int, s1: int, r2: int, s2: int) -> BoundValue:
    """Ramsey number of an arbitrary pair of ordered stars."""
    for name, v in (("r1", r1), ("s1", s1), ("r2", r2), ("s2", s2)):
        if v < 1:
            raise ParameterError(name, "star parameters must be >= 1")
    value = _star_pair(r1, s1, r2, s2)
    return BoundValue(
        EXACT,
        value,
        "star pair: floor((-1+sqrt(1+8(a-2)(b-2)))/2)+a+b-2 composed through "
        "the two reduction equations",
    )


def monotone_cycles_exact(r: int, s: int) -> BoundValue:
    if r < 2 or s < 2:
        raise ParameterError("r" if r < 2 else "s", "need cycle lengths >= 2")
    return BoundValue(EXACT, 2 * r * s - 3 * r - 3 * s + 6, "monotone cycles: 2rs-3r-3s+6")


def geometric_cycle_exact(n: int) -> BoundValue:
    if n < 3:
        raise ParameterError("n", "need n >= 3")
    return BoundValue(EXACT, 2 * (n - 2) * (n - 1) + 2, "geometric cycles: 2(n-2)(n-1)+2")


def path_vs_clique_exact(r: int, s: int) -> BoundValue:
    if r < 1 or s < 1:
        raise ParameterError("r" if r < 1 else "s", "need parameters >= 1")
    return BoundValue(EXACT, (r - 1) * (s - 1) + 1, "monotone path vs clique: (r-1)(s-1)+1")


@dataclass(frozen=True)
class AltPathBounds:
    lower: BoundValue
    upper: BoundValue
    conjectured: BoundValue
    upper_proof_side: int


def alt_path_bounds(n: int) -> AltPathBounds:
    """Lower/upper/conjectured values for the 2-colored alternating path P_n.

    The upper bound uses the stated constant 4n-3; the derivation actually
    supports 4n-5, which is exposed as upper_proof_side for comparison.
    """
    if n < 2:
        raise ParameterError("n", "need n >= 2")
    radicand = 8 * n * n - 8 * n - 7
    lower = BoundValue(LOWER, 2 * n - 2, "alternating path lower: 2n-2")
    upper = BoundValue(
        UPPER,
        _floor_half_sqrt(4 * n - 3, radicand),
        "alternating path upper: (4n-3+sqrt(8n^2-8n-7))/2; the derivation "
        "supports 4n-5 in place of 4n-3",
    )
    conjectured = BoundValue(
        CONJECTURED,
        _floor_half_sqrt(n - 2, 5 * (n - 2) ** 2) + n,
        "alternating path conjecture: floor((n-2)(1+sqrt(5))/2) + n",
    )
    return AltPathBounds(lower, upper, conjectured, _floor_half_sqrt(4 * n - 5, radicand))


def probabilistic_lower(n: int, m: int, c: int) -> BoundValue:
    """Random-coloring lower bound (2*pi*n)^(1/n) * (n/e) * c^((m-1)/n)."""
    if n < 1:
        raise ParameterError("n", "need n >= 1")
    if m < 1:
        raise ParameterError("m", "need m >= 1")
    if c < 2:
        raise ParameterError("c", "need c >= 2")
    log_value = (
        math.log(2 * math.pi * n) / n + math.log(n) - 1 + (m - 1) / n * math.log(c)
    )
    value = math.exp(log_value)
    return BoundValue(
        LOWER,
        math.ceil(value),
        "probabilistic: (2 pi n)^(1/n) (n/e) c^((m-1)/n)",
        real=value,
    )


def star_blowup_lower(d: int, c: int, r: int) -> BoundValue:
    """Blow-up lower bound (d-1)^(c-1) (r-1) + 1 for patterns containing a
    monotone path on d vertices."""
    if d < 3:
        raise ParameterError("d", "need d >= 3")
    if c < 1:
        raise ParameterError("c", "need c >= 1")
    if r < 2:
        raise ParameterError("r", "need r >= 2")
    return BoundValue(
        LOWER, (d - 1) ** (c - 1) * (r - 1) + 1, "blow-up: (d-1)^(c-1) (max r_i - 1) + 1"
    )


def _ceil_log(base_num: int, base_den: int, x: int) -> int:
    """Smallest t >= 0 with (base_num/base_den)^t >= x, exactly."""
    t = 0
    num, den = 1, 1
    while num < x * den:
        num *= base_num
        den *= base_den
        t += 1
    return t


def decomposable_upper(k: int, q: int, r: int, s: int, c_k: int) -> BoundValue:
    """Conditional bound C_k * 2^(64k(ceil(log_{q/(q-1)} r) + ceil(log_{q/(q-1)} s)))
    for a pair of (k,q)-decomposable graphs; C_k is supplied by the caller."""
    if k < 1:
        raise ParameterError("k", "need k >= 1")
    if q < 2:
        raise ParameterError("q", "need q >= 2")
    if r < 1 or s < 1:
        raise ParameterError("r" if r < 1 else "s", "need sizes >= 1")
    if c_k < 1:
        raise ParameterError("c_k", "need a positive constant")
    exponent = 64 * k * (_ceil_log(q, q - 1, r) + _ceil_log(q, q - 1, s))
    return BoundValue(
        UPPER,
        c_k * 2**exponent,
        f"decomposable pair: C_k * 2^(64k(...)) with caller C_k={c_k}; parameterized",
    )


def bandwidth_upper(k: int, n: int, c_k: int) -> BoundValue:
    """Conditional bound C_k * 2^(256k ceil(log2 n)) for n-vertex graphs of
    bandwidth at most k."""
    if k < 1:
        raise ParameterError("k", "need k >= 1")
    if n < 1:
        raise ParameterError("n", "need n >= 1")
    if c_k < 1:
        raise ParameterError("c_k", "need a positive constant")
    exponent = 256 * k * max(n - 1, 0).bit_length()
    return BoundValue(
        UPPER,
        c_k * 2**exponent,
        f"bandwidth: C_k * 2^(256k ceil(log2 n)) with caller C_k={c_k}; parameterized",
    )


def degenerate_upper(k: int, p: int, n: int) -> BoundValue:
    """Bound n^((1+2/k)(k+1)^ceil(log2 p) - 2/k) for k-degenerate graphs of
    interval chromatic number p; the exponent is an exact integer."""
    if k < 1 or p < 1 or n < 1:
        raise ParameterError("k" if k < 1 else ("p" if p < 1 else "n"), "need >= 1")
    level = (p - 1).bit_length()  # ceil(log2 p)
    numerator = (k + 2) * (k + 1) ** level - 2
    assert numerator % k == 0
    exponent = numerator // k
    return BoundValue(
        UPPER, n**exponent, "degenerate x interval-chromatic: n^((1+2/k)(k+1)^ceil(log2 p)-2/k)"
    )


def partition_count(d: int, n: int, max_entry: int) -> int:
    """Number of d-dimensional n x ... x n arrays with entries 0..max_entry,
    weakly decreasing along every axis line.

    Closed form for d = 1; exhaustive lattice walk for d = 2 with n <= 5.
    """
    if max_entry < 0:
        raise ParameterError("max_entry", "need max_entry >= 0")
    if n < 0:
        raise ParameterError("n", "need n >= 0")
    if d < 1:
        raise ParameterError("d", "need dimension >= 1")
    if n == 0:
        return 1
    if n == 1:
        # a single cell regardless of dimension
        return max_entry + 1
    if d == 1:
        return math.comb(n + max_entry, n)
    if d == 2:
        if n > 5:
            raise ParameterError("n", "exhaustive mode handles n <= 5 only")
        rows = list(_nonincreasing_rows(n, max_entry))
        counts = {row: 1 for row in rows}
        for _ in range(n - 1):
            nxt = {}
            for row, ways in counts.items():
                for lower in rows:
                    if all(a >= b for a, b in zip(row, lower)):
                        nxt[lower] = nxt.get(lower, 0) + ways
            counts = nxt
        return sum(counts.values())
    raise ParameterError("d", "only dimensions 1 and 2 are supported")


def _nonincreasing_rows(n: int, max_entry: int):
    if n == 0:
        yield ()
        return
    for first in range(max_entry, -1, -1):
        for rest in _nonincreasing_rows(n - 1, first):
            yield (first,) + rest


def hyperpath_exact(n: int, c: int) -> BoundValue:
    """Ramsey number of the 3-uniform monotone hyperpath on n vertices with c
    colors, via the partition correspondence P_{c-1}(n-2) + 1."""
    if n < 2:
        raise ParameterError("n", "need n >= 2")
    if c < 2:
        raise ParameterError("c", "need c >= 2")
    value = partition_count(c - 1, n - 2, n - 2) + 1
    return BoundValue(EXACT, value, "monotone hyperpaths: P_{c-1}(n-2) + 1")
