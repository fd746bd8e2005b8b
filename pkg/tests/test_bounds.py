import itertools
import math

import pytest

from ordram.bounds import (
    BoundValue,
    alt_path_bounds,
    bandwidth_upper,
    decomposable_upper,
    degenerate_upper,
    geometric_cycle_exact,
    hyperpath_exact,
    monotone_cycles_exact,
    monotone_paths_exact,
    partition_count,
    path_vs_clique_exact,
    probabilistic_lower,
    star_blowup_lower,
    stars_multicolor_exact,
    stars_pair_exact,
)
from ordram.core import ParameterError

# known two-color alternating path values (exact for n <= 8)
ALT_PATH_TABLE = {2: 2, 3: 4, 4: 7, 5: 9, 6: 12, 7: 15, 8: 17}


def test_monotone_paths_exact():
    assert monotone_paths_exact(3, 3).value == 5
    assert monotone_paths_exact(2, 7).value == 7
    assert monotone_paths_exact(3, 3, 3).value == 9
    assert monotone_paths_exact(1, 9).value == 1
    with pytest.raises(ParameterError):
        monotone_paths_exact(0, 3)


def test_stars_multicolor_exact():
    assert stars_multicolor_exact(2, 2).value == 2
    assert stars_multicolor_exact(4, 4).value == 6
    assert stars_multicolor_exact(1, 99).value == 1


def test_stars_pair_exact_base_cases():
    assert stars_pair_exact(1, 3, 3, 1).value == 5
    # single-vertex degenerate
    assert stars_pair_exact(1, 1, 4, 4).value == 1
    # an edge against a one-sided star: R(S_{r,1}, S_{1,2}) = r
    for r in range(2, 8):
        assert stars_pair_exact(r, 1, 1, 2).value == r
    # two last-centered stars: gap coloring gives a + b - 2
    for a in range(2, 6):
        for b in range(2, 6):
            assert stars_pair_exact(1, a, 1, b).value == a + b - 2


def test_stars_pair_mirror_invariance():
    for params in itertools.product(range(1, 5), repeat=4):
        r1, s1, r2, s2 = params
        assert (
            stars_pair_exact(r1, s1, r2, s2).value
            == stars_pair_exact(s1, r1, s2, r2).value
        )


def test_stars_pair_symmetric_diagonal_linear_bound():
    # R(S_{t,t}, S_{t,t}) < (8 + 2*sqrt(2)) t, checked in exact arithmetic
    for t in range(2, 60):
        v = stars_pair_exact(t, t, t, t).value
        excess = v - 8 * t
        assert excess < 0 or excess * excess < 8 * t * t


def test_monotone_cycles_exact():
    assert monotone_cycles_exact(3, 3).value == 6
    assert monotone_cycles_exact(4, 4).value == 14
    assert monotone_cycles_exact(5, 5).value == 26
    assert monotone_cycles_exact(2, 5).value == 5


def test_geometric_cycle_matches_diagonal_cycles():
    for n in range(3, 12):
        assert geometric_cycle_exact(n).value == monotone_cycles_exact(n, n).value
    assert geometric_cycle_exact(3).value == 6


def test_path_vs_clique():
    assert path_vs_clique_exact(3, 3).value == 5
    assert path_vs_clique_exact(2, 7).value == 7
    assert path_vs_clique_exact(4, 3).value == 7
    assert path_vs_clique_exact(1, 9).value == 1


def test_alt_path_bounds_bracket_table():
    for n, known in ALT_PATH_TABLE.items():
        ab = alt_path_bounds(n)
        assert ab.lower.value <= known <= ab.upper.value
        assert ab.conjectured.value == known
        assert ab.upper_proof_side <= ab.upper.value


def test_alt_path_examples():
    ab = alt_path_bounds(7)
    assert ab.lower.value == 12
    assert ab.conjectured.value == 15
    assert alt_path_bounds(3).lower.value == 4
    assert alt_path_bounds(8).conjectured.value == 17


def test_probabilistic_lower():
    bv = probabilistic_lower(4, 6, 2)
    assert bv.value == 8
    assert abs(bv.real - 7.836) < 0.01
    # m = 1 collapses the color term
    bv = probabilistic_lower(5, 1, 3)
    assert abs(bv.real - (2 * math.pi * 5) ** 0.2 * 5 / math.e) < 1e-9


def test_probabilistic_dense_growth():
    # with m = n^1.5 edges the bound grows like n * 2^(sqrt(n))
    for n in (16, 32, 64):
        m = int(n**1.5)
        bv = probabilistic_lower(n, m, 2)
        assert bv.real >= 0.25 * n * 2 ** math.sqrt(n)


def test_star_blowup_lower():
    assert star_blowup_lower(3, 4, 3).value == 17
    assert star_blowup_lower(5, 1, 7).value == 7
    # two-color star corollary: > 2^(c-1) (r + s - 2) for the star S_{r,s}
    for c in (1, 2, 3):
        for r, s in ((2, 2), (3, 4), (5, 2)):
            n = r + s - 1
            assert star_blowup_lower(3, c, n).value > 2 ** (c - 1) * (n - 1)


def test_decomposable_upper():
    assert decomposable_upper(1, 2, 2, 2, 1).value == 2**128
    v1 = decomposable_upper(2, 2, 8, 8, 7).value
    v2 = decomposable_upper(2, 2, 16, 8, 7).value
    assert v2 == v1 * 2 ** (64 * 2)  # one extra halving level on one side
    assert decomposable_upper(1, 2, 1, 1, 3).value == 3


def test_bandwidth_upper_dominates_pair_bound():
    for k in (1, 2):
        for n in (2, 5, 16):
            assert (
                bandwidth_upper(k, n, 11).value
                >= decomposable_upper(k, 2, n, n, 11).value
            )
    assert bandwidth_upper(1, 4, 1).value == 2**512


def test_degenerate_upper():
    for k in range(1, 6):
        for n in (2, 3, 10):
            assert degenerate_upper(k, 2, n).value == n ** (k + 3)
    assert degenerate_upper(1, 2, 4).value == 256
    assert degenerate_upper(3, 1, 9).value == 9


def test_partition_count_line_partitions():
    assert partition_count(1, 3, 3) == math.comb(6, 3) == 20
    assert partition_count(1, 1, 1) == 2
    for n in range(0, 6):
        assert partition_count(1, n, n) == math.comb(2 * n, n)


def test_partition_count_planar_brute_force():
    def brute(n, max_entry):
        count = 0
        for values in itertools.product(range(max_entry + 1), repeat=n * n):
            grid = [values[r * n : (r + 1) * n] for r in range(n)]
            ok = all(
                grid[r][c] >= grid[r][c + 1] for r in range(n) for c in range(n - 1)
            ) and all(
                grid[r][c] >= grid[r + 1][c] for r in range(n - 1) for c in range(n)
            )
            count += ok
        return count

    for n, max_entry in ((2, 2), (2, 3), (3, 2)):
        assert partition_count(2, n, max_entry) == brute(n, max_entry)
    assert partition_count(2, 2, 2) == 20


def test_partition_count_envelope():
    with pytest.raises(ParameterError):
        partition_count(3, 3, 3)
    with pytest.raises(ParameterError):
        partition_count(2, 6, 2)
    with pytest.raises(ParameterError):
        partition_count(0, 2, 2)
    # single cell works in any dimension
    assert partition_count(4, 1, 1) == 2


def test_hyperpath_exact():
    assert hyperpath_exact(4, 2).value == 7
    assert hyperpath_exact(3, 2).value == 3
    assert hyperpath_exact(3, 4).value == 3
    assert hyperpath_exact(2, 3).value == 2
    assert hyperpath_exact(5, 2).value == math.comb(6, 3) + 1


def test_bound_value_validation():
    with pytest.raises(ParameterError):
        BoundValue("sideways", 3, "nope")
    with pytest.raises(ParameterError):
        BoundValue("exact", 0, "positive only")
