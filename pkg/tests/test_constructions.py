import math
import random

import pytest

from ordram.constructions import (
    alternating_parity,
    block_matching,
    matching_construction,
    matching_lb_params,
    monotone_cycle_construction,
    monotone_path_grid,
    pentagon_coloring,
    star_blowup,
    star_coloring,
)
from ordram.containment import (
    avoids,
    find_monochromatic,
    longest_monotone_cycle,
    longest_monotone_path,
)
from ordram.core import EdgeColoring, ParameterError, monotone_path, star
from helpers import brute_has_embedding, color_class_edges


def test_every_generator_output_passes_its_own_certificate():
    certs = [
        monotone_path_grid(3, 3),
        monotone_path_grid(2, 5),
        monotone_path_grid(4, 4),
        monotone_path_grid(3, 3, 3),
        star_coloring(2, 2),
        star_coloring(3, 3),
        star_coloring(4, 4),
        star_coloring(3, 4, 5),
        alternating_parity(3),
        alternating_parity(5),
        alternating_parity(8),
        monotone_cycle_construction(3, 3),
        monotone_cycle_construction(3, 4),
        monotone_cycle_construction(4, 4),
        monotone_cycle_construction(2, 5),
        star_blowup(3, 1, 4),
        star_blowup(3, 2, 3),
        star_blowup(3, 4, 3),
        star_blowup(4, 3, 4),
    ]
    for cert in certs:
        assert cert.verify(), (cert.name, cert.params)


def test_monotone_path_grid_sizes_and_degenerate_radix():
    assert monotone_path_grid(3, 3).coloring.N == 4
    cert = monotone_path_grid(2, 5)
    assert cert.coloring.N == 4
    # first coordinate has a single value, so every pair is colored 2
    assert not color_class_edges(cert.coloring, 1)
    with pytest.raises(ParameterError):
        monotone_path_grid(1, 3)


def test_monotone_path_grid_44_longest_paths():
    cert = monotone_path_grid(4, 4)
    assert cert.coloring.N == 9
    assert longest_monotone_path(cert.coloring, 1) == 3
    assert longest_monotone_path(cert.coloring, 2) == 3


def test_star_coloring_sizes():
    assert star_coloring(2, 2).coloring.N == 1
    assert star_coloring(3, 3).coloring.N == 3
    assert star_coloring(4, 4).coloring.N == 5
    # the gap construction also avoids the mirror star on the other side
    cert = star_coloring(3, 3)
    for color in (1, 2):
        assert find_monochromatic(cert.coloring, star(3, 1), color) is None


def test_alternating_parity_sizes_and_table_row():
    assert alternating_parity(3).coloring.N == 3
    assert alternating_parity(5).coloring.N == 7
    # n = 4: a 5-vertex avoiding coloring is consistent with the known value 7
    assert alternating_parity(4).coloring.N == 5
    assert alternating_parity(4).verify()


def test_alternating_parity_color_depends_only_on_gap_and_alternates():
    cert = alternating_parity(6)
    coloring = cert.coloring
    by_gap = {}
    for i in range(1, coloring.N + 1):
        for j in range(i + 1, coloring.N + 1):
            by_gap.setdefault(j - i, set()).add(coloring.color(i, j))
    assert all(len(v) == 1 for v in by_gap.values())
    gaps = sorted(by_gap)
    for g in gaps[:-1]:
        assert by_gap[g] != by_gap[g + 1]


def test_cycle_construction_sizes_and_pentagon():
    assert monotone_cycle_construction(3, 3).coloring.N == 5
    assert monotone_cycle_construction(4, 4).coloring.N == 13
    assert monotone_cycle_construction(3, 4).coloring.N == 8
    # r = 2 degenerates to a single all-blue clique on s-1 vertices
    cert = monotone_cycle_construction(2, 5)
    assert cert.coloring.N == 4
    assert not color_class_edges(cert.coloring, 1)
    pent = pentagon_coloring()
    red = color_class_edges(pent, 1)
    blue = color_class_edges(pent, 2)
    assert len(red) == 5 and len(blue) == 5


def test_cycle_construction_stronger_claim_small_grid():
    for r in range(3, 6):
        for s in range(3, 6):
            cert = monotone_cycle_construction(r, s)
            assert longest_monotone_cycle(cert.coloring, 1) < r, (r, s)
            assert longest_monotone_cycle(cert.coloring, 2) < s, (r, s)


def test_star_blowup_structure():
    cert = star_blowup(3, 1, 4)
    assert cert.coloring.N == 3
    assert not color_class_edges(cert.coloring, 2)

    cert = star_blowup(3, 4, 3)
    coloring = cert.coloring
    assert coloring.N == 16
    # top level: two blocks of 8, cross edges color 4
    for i in range(1, 9):
        for j in range(9, 17):
            assert coloring.color(i, j) == 4
    # second level inside the first block: two blocks of 4, color 3
    for i in range(1, 5):
        for j in range(5, 9):
            assert coloring.color(i, j) == 3

    cert = star_blowup(3, 2, 3)
    assert cert.coloring.N == 4
    assert find_monochromatic(cert.coloring, monotone_path(3), 2) is None


def test_star_blowup_demand_list_shape():
    # d <= r-1: color 1 cliques are big enough to hold monotone P_d,
    # so only colors >= 2 are certified
    cert = star_blowup(3, 3, 4)
    assert {(p.n, c) for p, c in cert.avoided} == {(3, 2), (3, 3)}
    # d > r-1: color-1 components are too small, so color 1 is certified too
    cert = star_blowup(4, 2, 3)
    assert {(p.n, c) for p, c in cert.avoided} == {(4, 1), (4, 2)}


def test_block_matching_hand_derivation_r3():
    m = block_matching(3, 5)
    assert m.n == 30 and m.m == 15
    expected = {
        (1, 11), (3, 13), (5, 15), (7, 17), (9, 19),
        (2, 21), (4, 23), (6, 25), (8, 27), (10, 29),
        (12, 22), (14, 24), (16, 26), (18, 28), (20, 30),
    }
    assert m.edges == frozenset(expected)


def test_matching_construction_level1():
    lvl = matching_construction(3, 1)
    assert (lvl.R, lvl.t, lvl.n, lvl.N) == (5, 30, 30, 5)
    assert all(lvl.matching.degree(v) <= 1 for v in range(1, lvl.matching.n + 1))
    assert lvl.certified.verify()


def test_matching_construction_level2():
    lvl1 = matching_construction(3, 1)
    lvl2 = matching_construction(3, 2)
    assert lvl2.N == lvl1.R * lvl1.N == 25
    assert lvl2.n == 2 * lvl1.n + lvl1.t == 90
    assert lvl2.n < 3**4 * 5
    assert all(lvl2.matching.degree(v) <= 1 for v in range(1, lvl2.matching.n + 1))
    assert lvl2.certified.verify()
    # block layout of the level-2 coloring
    pent = pentagon_coloring()
    c2 = lvl2.certified.coloring
    for i in range(1, 26):
        for j in range(i + 1, 26):
            bi, bj = (i - 1) // 5, (j - 1) // 5
            if bi == bj:
                assert c2.color(i, j) == pent.color(i - 5 * bi, j - 5 * bj)
            else:
                assert c2.color(i, j) == pent.color(bi + 1, bj + 1)


def test_matching_construction_rejects_bad_base():
    bad = EdgeColoring.from_function(5, 2, lambda i, j: 1)
    with pytest.raises(ParameterError):
        matching_construction(3, 1, bad)
    # wrong r without a base
    with pytest.raises(ParameterError):
        matching_construction(4, 1)


def test_matching_interleaving_preserves_copies():
    # every level-2 interval L_i carries an order-preserving copy of M_1
    lvl1 = matching_construction(3, 1)
    lvl2 = matching_construction(3, 2)
    m2_edges = set(lvl2.matching.edges)
    jw = (3 - 1) * 5
    for block in range(2):  # L_1 starts after J_1, L_2 after J_1 L_1 J_2
        start = jw + block * (lvl1.n + jw)
        shifted = {(start + a, start + b) for a, b in lvl1.matching.edges}
        assert shifted <= m2_edges


def test_matching_lb_params():
    p = matching_lb_params(3, 5)
    assert not p.applicable and p.k == -1 and not p.inequality_holds
    with pytest.raises(ParameterError):
        matching_lb_params(2, 5)
    with pytest.raises(ParameterError):
        matching_lb_params(3, 1)


def test_matching_lb_threshold_scan():
    # with the random-coloring bound R = 2^(r/2), the count inequality first
    # holds at r = 92 (where the block level k jumps to 5)
    first = None
    for r in range(3, 130):
        p = matching_lb_params(r, math.isqrt(2**r))
        if p.applicable and p.inequality_holds:
            first = r
            break
    assert first == 92
    p = matching_lb_params(92, math.isqrt(2**92))
    assert p.k == 5 and p.N == math.isqrt(2**92) ** 5


def test_certificates_are_bit_exact():
    a = monotone_cycle_construction(4, 4).to_oc()
    b = monotone_cycle_construction(4, 4).to_oc()
    assert a == b
    assert a.startswith("oc 13 2\n")
