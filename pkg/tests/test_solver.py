import itertools
import random

import pytest

from ordram.core import (
    EdgeColoring,
    OrderedGraph,
    ParameterError,
    alternating_path,
    c4_ordering,
    complete,
    matching_nest,
    matching_shift,
    monotone_cycle,
    monotone_path,
    star,
)
from ordram.containment import avoids
from ordram.solver import (
    BUDGET_EXHAUSTED,
    FOUND,
    NONE_EXISTS,
    Budget,
    PartialColoring,
    exists_avoiding,
    exists_avoiding_parallel,
    ramsey_number,
    turan_bipartite,
)
from helpers import brute_exists_avoiding, random_graph

TRIANGLE = monotone_cycle(3)


def test_exists_avoiding_triangle_examples():
    demands = [(TRIANGLE, 1), (TRIANGLE, 2)]
    res = exists_avoiding(demands, 5)
    assert res.status == FOUND
    ok, _ = avoids(res.coloring, demands)
    assert ok
    assert exists_avoiding(demands, 6).status == NONE_EXISTS


def test_exists_avoiding_single_edge():
    edge = monotone_path(2)
    assert exists_avoiding([(edge, 1), (edge, 2)], 2).status == NONE_EXISTS
    assert exists_avoiding([(edge, 1), (edge, 2)], 1).status == FOUND


def test_exists_avoiding_edgeless_pattern_forced():
    res = exists_avoiding([(OrderedGraph(2), 1)], 3)
    assert res.status == NONE_EXISTS
    # too large to embed: trivially avoidable
    res = exists_avoiding([(OrderedGraph(9), 1)], 3)
    assert res.status == FOUND


def test_exists_avoiding_matches_brute_force():
    rng = random.Random(20240819)
    pool = [
        monotone_path(2),
        monotone_path(3),
        monotone_path(4),
        alternating_path(3),
        alternating_path(4),
        monotone_cycle(3),
        monotone_cycle(4),
        c4_ordering("B"),
        c4_ordering("C"),
        star(2, 2),
        star(3, 1),
        matching_nest(4),
        matching_shift(4),
    ]
    for _ in range(300):
        N = rng.randint(2, 5)
        demands = [
            (rng.choice(pool), rng.randint(1, 2)) for _ in range(rng.randint(1, 3))
        ]
        got = exists_avoiding(demands, N).status
        want = FOUND if brute_exists_avoiding(demands, N) else NONE_EXISTS
        assert got == want, (demands, N)


def test_exists_avoiding_deterministic_witness():
    demands = [(TRIANGLE, 1), (TRIANGLE, 2)]
    a = exists_avoiding(demands, 5)
    b = exists_avoiding(demands, 5)
    assert a.coloring == b.coloring


def test_exists_avoiding_monotone_in_n():
    rng = random.Random(77)
    pool = [monotone_path(3), alternating_path(4), monotone_cycle(3)]
    for _ in range(30):
        demands = [(rng.choice(pool), col) for col in (1, 2)]
        statuses = [exists_avoiding(demands, N).status for N in range(1, 7)]
        seen_none = False
        for st in statuses:
            if st == NONE_EXISTS:
                seen_none = True
            elif seen_none:
                pytest.fail(f"found after refutation: {demands} {statuses}")


def test_symmetry_break_preserves_verdict():
    rng = random.Random(31)
    pool = [monotone_path(3), alternating_path(4), monotone_cycle(3), c4_ordering("B")]
    for _ in range(40):
        pattern = rng.choice(pool)
        demands = [(pattern, 1), (pattern, 2)]
        N = rng.randint(2, 6)
        sym = exists_avoiding(demands, N, symmetry_break=True).status
        raw = exists_avoiding(demands, N, symmetry_break=False).status
        assert sym == raw


def test_budget_exhaustion_reports_bounds_never_wrong_exact():
    demands = [(c4_ordering("B"), 1), (c4_ordering("B"), 2)]
    res = exists_avoiding(demands, 10, budget=Budget(max_nodes=50))
    assert res.status == BUDGET_EXHAUSTED
    rr = ramsey_number(demands, budget=Budget(max_nodes=200))
    assert rr.status == "bounds"
    assert rr.lo <= 10
    assert rr.value is None


def test_partial_coloring_prefix():
    demands = [(TRIANGLE, 1), (TRIANGLE, 2)]
    # an all-red triangle prefix is immediately refuted
    dead = PartialColoring(4, 2, (1, 1, 1))
    assert exists_avoiding(demands, 4, prefix=dead).status == NONE_EXISTS
    live = PartialColoring(4, 2, (1, 1, 2))
    assert exists_avoiding(demands, 4, prefix=live).status == FOUND
    with pytest.raises(ParameterError):
        PartialColoring(3, 2, (3,))
    with pytest.raises(ParameterError):
        PartialColoring(2, 2, (1, 1, 1))


def test_ramsey_number_monotone_paths():
    res = ramsey_number([(monotone_path(3), 1), (monotone_path(3), 2)])
    assert res.status == "exact" and res.value == 5
    assert res.witness is not None and res.witness.verify()
    res = ramsey_number([(monotone_path(3), 1), (monotone_path(4), 2)])
    assert res.value == 7


def test_ramsey_number_triangle_and_c4b():
    assert ramsey_number([(TRIANGLE, 1), (TRIANGLE, 2)]).value == 6
    res = ramsey_number([(c4_ordering("B"), 1), (c4_ordering("B"), 2)])
    assert res.value == 10
    assert res.witness.coloring.N == 9


def test_ramsey_number_alt_path_small():
    for n, expect in ((2, 2), (3, 4), (4, 7)):
        pat = alternating_path(n)
        res = ramsey_number([(pat, 1), (pat, 2)])
        assert res.value == expect, n


def test_ramsey_number_seed_too_high_recovers():
    res = ramsey_number([(TRIANGLE, 1), (TRIANGLE, 2)], N_start=8)
    assert res.status == "exact" and res.value == 6
    assert res.witness.coloring.N == 5


def test_ramsey_number_single_vertex():
    res = ramsey_number([(OrderedGraph(1), 1)])
    assert res.value == 1 and res.witness is None


def test_parallel_verdicts_match_single():
    demands = [(TRIANGLE, 1), (TRIANGLE, 2)]
    assert exists_avoiding_parallel(demands, 6, workers=3).status == NONE_EXISTS
    res = exists_avoiding_parallel(demands, 5, workers=3)
    assert res.status == FOUND
    ok, _ = avoids(res.coloring, demands)
    assert ok


def test_turan_examples():
    assert turan_bipartite(alternating_path(3), 3, 3) == 3
    assert turan_bipartite(monotone_path(2), 2, 2) == 0
    assert turan_bipartite(alternating_path(5), 4, 4) == 10
    with pytest.raises(ParameterError):
        turan_bipartite(alternating_path(3), 6, 5)
    with pytest.raises(ParameterError):
        turan_bipartite(monotone_path(3), 3, 3)  # interval chromatic number 3


def test_turan_against_direct_enumeration():
    def brute(pat_rows, m, n):
        p, q = len(pat_rows), len(pat_rows[0])
        best = 0
        for bits in itertools.product((0, 1), repeat=m * n):
            grid = [bits[r * n : (r + 1) * n] for r in range(m)]
            contains = False
            for rows in itertools.combinations(range(m), p):
                for cols in itertools.combinations(range(n), q):
                    if all(
                        grid[rows[a]][cols[b]] >= pat_rows[a][b]
                        for a in range(p)
                        for b in range(q)
                    ):
                        contains = True
                        break
                if contains:
                    break
            if not contains:
                best = max(best, sum(bits))
        return best

    from ordram.solver import pattern_matrix

    for pattern, m, n in (
        (alternating_path(3), 2, 3),
        (alternating_path(3), 3, 2),
        (alternating_path(4), 3, 3),
        (alternating_path(5), 3, 3),
        (monotone_path(2), 3, 3),
    ):
        assert turan_bipartite(pattern, m, n) == brute(pattern_matrix(pattern), m, n)


def test_matching_ordering_values():
    # both canonical matchings have two-interval matrices with linear extremal
    # functions; their small Ramsey values are close together
    assert ramsey_number([(matching_shift(4), 1), (matching_shift(4), 2)]).value == 5
    assert ramsey_number([(matching_nest(4), 1), (matching_nest(4), 2)]).value == 6
