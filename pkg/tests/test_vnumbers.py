import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from vnum.errors import GraphInputError, UnsupportedRegimeError
from vnum.enumeration import closed_graphs, cm_closed_graphs, connected_graphs_up_to_iso
from vnum.graphs import (
    build_graph,
    complete_graph,
    cut_set_from_vertices,
    enumerate_cut_sets,
    find_closed_labeling,
    graph_from_intervals,
    path_graph,
)
from vnum.vnumbers import (
    AnchorGraph,
    CONJECTURED,
    PROVED,
    _anchor_graph_cm,
    _anchor_graph_general,
    build_anchor_graph,
    classify_small_v,
    cm_v_formula,
    local_v_number,
    local_v_number_of_power,
    minimal_slice_partition,
    optimal_cut_set,
    probe_power_shift,
    v_number,
    v_number_of_power,
    witness_spec,
)
from conftest import T_42


# -- anchor graphs -------------------------------------------------------------

def test_anchor_graph_42(g42):
    cs = find_closed_labeling(g42)
    cut = cut_set_from_vertices(g42, T_42, cs)
    L = build_anchor_graph(cs, cut)
    assert L.path_components == ((1, 6, 11, 14, 19), (27, 31, 37))
    assert set(L.isolated) == {21, 24, 40}
    assert L.alphas == (1, 6, 11, 14, 27, 31)
    assert L.betas == (6, 11, 14, 19, 31, 37)


def test_anchor_graph_27(g27):
    cs = find_closed_labeling(g27)
    cut = cut_set_from_vertices(g27, [3, 6, 9, 18, 21], cs)
    L = build_anchor_graph(cs, cut)
    assert sorted(L.vertices()) == [1, 4, 7, 12, 13, 15, 19, 22, 24, 26]
    assert L.edges == [(1, 4), (4, 7), (7, 12), (15, 19), (19, 22)]
    assert set(L.isolated) == {13, 24, 26}


def test_anchor_graph_p4_hand():
    P4 = path_graph(4)
    cs = find_closed_labeling(P4)
    L = build_anchor_graph(cs, cut_set_from_vertices(P4, [2], cs))
    assert L.path_components == ((1, 3),)
    assert L.isolated == ()


def test_anchor_constructions_agree_on_overlap():
    # both variants are defined on one-vertex-overlap closed graphs and
    # must produce the same graph
    for n in range(3, 8):
        for G, cs in cm_closed_graphs(n):
            for cut in enumerate_cut_sets(G, cs):
                if not cut.vertices:
                    continue
                a = _anchor_graph_cm(cs, cut)
                b = _anchor_graph_general(cs, cut)
                assert a == b, (cs.cliques, cut.vertices)


def test_anchor_graph_rejects_empty(g27):
    cs = find_closed_labeling(g27)
    with pytest.raises(GraphInputError):
        build_anchor_graph(cs, cut_set_from_vertices(g27, [], cs))


# -- slice partitions -----------------------------------------------------------

def exhaustive_min_degree(edge_counts, isolated, m):
    """Reference oracle: enumerate all m-compatible partitions."""

    def comp_options(e):
        best = []

        def rec(rest, parts):
            if rest == 0:
                best.append(e + len(parts))
                return
            for take in range(1, min(m - 1, rest) + 1):
                rec(rest - take, parts + [take])

        rec(e, [])
        return min(best)

    return sum(comp_options(e) for e in edge_counts) + isolated


def lgraph(edge_counts, isolated):
    comps = []
    v = 1
    for e in edge_counts:
        comps.append(tuple(range(v, v + e + 1)))
        v += e + 2
    iso = tuple(range(v, v + isolated))
    return AnchorGraph(
        path_components=tuple(comps),
        isolated=iso,
        alphas=tuple(x for c in comps for x in c[:-1]),
        betas=tuple(x for c in comps for x in c[1:]),
        dominating_sets=(iso,),
    )


def test_partition_examples():
    assert minimal_slice_partition(lgraph([2], 0), 2).degree == 4
    assert minimal_slice_partition(lgraph([], 1), 5).degree == 1


def test_partition_optimizer_matches_exhaustive():
    for e in range(1, 9):
        for m in range(2, 6):
            got = minimal_slice_partition(lgraph([e], 0), m).degree
            assert got == exhaustive_min_degree([e], 0, m), (e, m)
    # a couple of mixed shapes
    for counts, iso in [([2, 3], 2), ([1, 1, 4], 1), ([5, 2], 0)]:
        for m in range(2, 6):
            got = minimal_slice_partition(lgraph(counts, iso), m).degree
            assert got == exhaustive_min_degree(counts, iso, m)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 8), min_size=0, max_size=3),
    st.integers(0, 3),
    st.integers(2, 5),
)
def test_partition_optimizer_property(counts, iso, m):
    got = minimal_slice_partition(lgraph(counts, iso), m)
    assert got.degree == exhaustive_min_degree(counts, iso, m)
    assert all(1 <= len(s) - 1 <= m - 1 for s in got.slices)
    covered = sum(len(s) - 1 for s in got.slices)
    assert covered == sum(counts)


def test_witness_spec_27(g27):
    cs = find_closed_labeling(g27)
    cut = cut_set_from_vertices(g27, [3, 6, 9, 18, 21], cs)
    L = build_anchor_graph(cs, cut)
    part = minimal_slice_partition(L, 3)
    spec = witness_spec(L, part)
    assert spec.degree == 11 == part.degree
    assert spec.minor_blocks == ((1, 4, 7), (7, 12), (15, 19, 22))
    assert set(spec.isolated_vars) == {13, 24, 26}
    # the leading monomial is the product of block diagonals and isolated vars
    from vnum.algebra import RingSpec, witness_polynomial

    R = RingSpec(3, 27)
    f = witness_polynomial(R, spec.minor_blocks, spec.isolated_vars)
    want = 0
    for block in spec.minor_blocks:
        for r, c in enumerate(block, start=1):
            want += R.var_mono(R.var_index(r, c))
    for v in spec.isolated_vars:
        want += R.var_mono(R.var_index(1, v))
    assert f.lt() == want


# -- the closed formula -----------------------------------------------------------

def test_formula_examples():
    assert cm_v_formula(3, 14) == 8
    for m in range(2, 6):
        assert cm_v_formula(m, 1) == 0
    for t in range(1, 1001):
        assert cm_v_formula(2, t) == math.ceil(2 * (t - 1) / 3)


def test_local_value_examples(g27):
    P5 = path_graph(5)
    cs5 = find_closed_labeling(P5)
    res = local_v_number(P5, cs5, [3], 3)
    assert res.value == 2 and res.status == PROVED
    cs27 = find_closed_labeling(g27)
    res27 = local_v_number(g27, cs27, [3, 6, 9, 18, 21], 3)
    assert res27.value == 11 and res27.status == PROVED
    for m in (2, 3, 4, 7):
        res_e = local_v_number(path_graph(4), find_closed_labeling(path_graph(4)), [], m)
        assert res_e.value == 2 and res_e.status == PROVED


def test_conjectured_status_non_overlap_m3(g42):
    cs = find_closed_labeling(g42)
    cut = cut_set_from_vertices(g42, T_42, cs)
    res = local_v_number(g42, cs, cut, 3)
    assert res.status == CONJECTURED
    res2 = local_v_number(g42, cs, cut, 2)
    assert res2.status == PROVED
    assert res2.value == 2 * 6 + 3  # six anchor edges, three isolated


def test_optimal_cut_set_examples(g27):
    cs = find_closed_labeling(g27)
    assert optimal_cut_set(cs, 3).vertices == (6, 9, 15, 19, 24)
    k5 = find_closed_labeling(complete_graph(5))
    assert optimal_cut_set(k5, 2).vertices == ()
    # degenerate remainder: t=3, m=2 boxes nothing; the empty cut set
    # attains the formula value 2
    P4 = path_graph(4)
    cs4 = find_closed_labeling(P4)
    T = optimal_cut_set(cs4, 2)
    assert local_v_number(P4, cs4, T, 2).value == cm_v_formula(2, 3) == 2


def test_min_over_cut_sets_equals_formula():
    # overlap-one closed graphs with t <= 9: local minimum equals the
    # closed formula and the constructed cut set attains it
    cases = []
    for n in range(2, 8):
        cases.extend(cm_closed_graphs(n))
    for t in (8, 9):
        cases.append((path_graph(t + 1), find_closed_labeling(path_graph(t + 1))))
    rng = random.Random(5)
    for _ in range(4):
        t = rng.randint(6, 9)
        spine = [1]
        for _ in range(t):
            spine.append(spine[-1] + rng.randint(1, 3))
        G = graph_from_intervals(spine[-1], list(zip(spine, spine[1:])))
        cases.append((G, find_closed_labeling(G)))
    for G, cs in cases:
        if cs.t > 9:
            continue
        for m in (2, 3, 4):
            best = min(
                local_v_number(G, cs, cut, m).value
                for cut in enumerate_cut_sets(G, cs)
            )
            assert best == cm_v_formula(m, cs.t), (cs.cliques, m)
            attained = local_v_number(G, cs, optimal_cut_set(cs, m), m).value
            assert attained == best


def test_empty_cut_set_value_independent_of_m():
    for n in range(3, 7):
        for G, cs in closed_graphs(n):
            vals = {local_v_number(G, cs, [], m).value for m in (2, 3, 5)}
            assert len(vals) == 1


# -- global v-number ---------------------------------------------------------------

def test_v_number_paths():
    for n in range(3, 31):
        res = v_number(path_graph(n), 2)
        assert res.value == math.ceil(2 * (n - 2) / 3)
        assert res.status == PROVED


def test_v_number_27(g27):
    res = v_number(g27, 3)
    assert res.value == 8
    assert res.cut_set.vertices == (6, 9, 15, 19, 24)


def test_v_number_disjoint_union():
    G = complete_graph(5).disjoint_union(path_graph(3))
    res = v_number(G, 2)
    assert res.value == 1 and res.regime == "disjoint-union"
    assert len(res.parts) == 2


def test_v_number_additivity_sampled():
    pool = [G for n in range(2, 6) for G, _ in closed_graphs(n)]
    rng = random.Random(9)
    for _ in range(8):
        A, B = rng.choice(pool), rng.choice(pool)
        lhs = v_number(A.disjoint_union(B), 2).value
        assert lhs == v_number(A, 2).value + v_number(B, 2).value


def test_v_number_cone_not_closed():
    # the 4-star is a cone over three isolated vertices and is not closed
    star = build_graph(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
    assert find_closed_labeling(star) is None
    res = v_number(star, 3)
    assert res.value == 1 and res.regime == "cone"


def test_v_number_generic_oracle(c5):
    res = v_number(c5, 2)
    assert res.regime == "generic-oracle"
    assert res.value == 3 and res.status == PROVED


def test_v_number_relabeled_closed():
    H = path_graph(5).relabel((3, 1, 4, 2, 5))
    res = v_number(H, 2)
    assert res.value == 2
    assert res.regime.endswith("relabeled")


# -- classification -----------------------------------------------------------------

def test_classify_examples(c5):
    assert classify_small_v(path_graph(3), 2) == "1"
    assert classify_small_v(path_graph(4), 2) == "2"
    assert classify_small_v(complete_graph(6), 2) == "0"
    assert classify_small_v(c5, 2) == ">2"
    # u=1 cones the triangle {1,6,7}, v=2 is a lone tip, S = {3,4} is their
    # common neighborhood and a cut set; pendants 5 and 8 hang off opposite
    # sides of S so no two-vertex connected dominating set exists
    two_cones = build_graph(
        8,
        [(1, 3), (1, 4), (2, 3), (2, 4), (1, 6), (1, 7), (6, 7), (5, 4), (8, 3)],
    )
    from vnum.graphs import reduced_connected_domination_number

    assert reduced_connected_domination_number(two_cones) > 2
    assert classify_small_v(two_cones, 2) == "2"


# -- powers -------------------------------------------------------------------------

def test_power_formula():
    cs5 = find_closed_labeling(path_graph(5))
    assert v_number_of_power(cs5, 1) == 2
    assert v_number_of_power(cs5, 3) == 6
    cs27 = find_closed_labeling(
        graph_from_intervals(
            27, [(a, b) for a, b in zip(
                [1,3,6,7,9,12,13,15,18,19,21,22,24,26],
                [3,6,7,9,12,13,15,18,19,21,22,24,26,27])]
        )
    )
    assert v_number_of_power(cs27, 2) == math.ceil(26 / 3) + 2 == 11
    with pytest.raises(GraphInputError):
        v_number_of_power(cs5, 0)


def test_power_formula_rejects_two_vertex_overlap(g42):
    with pytest.raises(UnsupportedRegimeError):
        v_number_of_power(find_closed_labeling(g42), 2)


def test_local_power_examples():
    cs4 = find_closed_labeling(path_graph(4))
    assert local_v_number_of_power(cs4, [2], 2) == 4
    assert local_v_number_of_power(cs4, [2], 1) == 2
    cs5 = find_closed_labeling(path_graph(5))
    assert local_v_number_of_power(cs5, [], 2) == 5
    G = graph_from_intervals(7, [(1, 3), (3, 5), (5, 7)])
    cs = find_closed_labeling(G)
    # {3,5} is a cut set of the graph but not of its spine
    assert [c.vertices for c in enumerate_cut_sets(G, cs)].count((3, 5)) == 1
    with pytest.raises(UnsupportedRegimeError):
        local_v_number_of_power(cs, [3, 5], 2)
    assert local_v_number_of_power(cs, [3], 2) == local_v_number(G, cs, [3], 2).value + 2


def test_v_number_unsupported_component():
    cycle8 = build_graph(8, [(i, i + 1) for i in range(1, 8)] + [(1, 8)])
    with pytest.raises(UnsupportedRegimeError):
        v_number(cycle8, 2, oracle_n_limit=6)


def test_v_number_42_global(g42):
    # frozen regression value: exact minimum of the theorem-backed local
    # values over all 5760 cut sets (the per-cut-set machinery is
    # oracle-validated exhaustively at n <= 7)
    from vnum.errors import InstanceTooLargeError

    res = v_number(g42, 2)
    assert res.value == 9 and res.status == PROVED
    # the minimization is exponential in the clique count and capped
    with pytest.raises(InstanceTooLargeError):
        v_number(g42, 2, max_cut_t=10)


def test_witness_spec_rejects_oversized_slice():
    from vnum.vnumbers import SlicePartition

    L = lgraph([3], 0)
    part = SlicePartition(slices=(L.path_components[0],), m=2, isolated=(), degree=4)
    with pytest.raises(GraphInputError):
        witness_spec(L, part)


def test_probe_power_shift_cases():
    cs5 = find_closed_labeling(path_graph(5))
    rep = probe_power_shift(cs5, 3, (3,), 2)
    assert rep["upper_bound"] == 4
    assert rep["witness_found"]["degree"] == 3
    assert rep["shift_formula_fails"] is True
    rep2 = probe_power_shift(cs5, 2, (3,), 2)
    assert rep2["witness_found"]["degree"] == 4
    assert rep2["shift_formula_fails"] is False
    rep1 = probe_power_shift(cs5, 2, (3,), 1)
    assert rep1["witness_found"]["degree"] == rep1["upper_bound"] == 2
