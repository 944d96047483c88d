import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_cover_p, literal_verify_p_ecc
from pcomp import (
    REASON_FAMILY_SMALLER_THAN_P,
    REASON_NONEDGE_IN_P_SETS,
    REASON_UNCOVERED_EDGE,
    CliqueCover,
    Graph,
    InfeasibleError,
    InvalidParameterError,
    complement,
    complement_cycle_cover,
    cover_from_json_dict,
    cover_to_json_dict,
    cycle_cover,
    lift_cover,
    make_cycle,
    p_competition_graph,
    realize,
    verify_ecc,
    verify_p_ecc,
)


def co_occurrences(f, u, v):
    return sum(1 for s in f.sets if u in s and v in s)


class TestVerifyEcc:
    def test_c6_complement_family(self):
        f = CliqueCover(6, [(0, 2, 4), (1, 3, 5), (2, 5), (1, 4), (0, 3)])
        assert verify_ecc(complement(make_cycle(6)), f).valid

    def test_c8_complement_family(self):
        f = CliqueCover(
            8,
            [(0, 3, 5), (2, 5, 7), (4, 1, 7), (6, 1, 3), (0, 2, 4, 6), (1, 3, 5, 7)],
        )
        assert verify_ecc(complement(make_cycle(8)), f).valid

    def test_non_clique_set_rejected_with_witness(self):
        verdict = verify_ecc(make_cycle(4), CliqueCover(4, [(0, 1, 2)]))
        assert not verdict.valid
        assert verdict.reason == REASON_NONEDGE_IN_P_SETS
        assert verdict.pair == (0, 2)

    def test_uncovered_edge_rejected(self):
        verdict = verify_ecc(make_cycle(4), CliqueCover(4, [(0, 1)]))
        assert not verdict.valid
        assert verdict.reason == REASON_UNCOVERED_EDGE
        assert verdict.pair in make_cycle(4).edges

    def test_empty_family_covers_edgeless_graph(self):
        assert verify_ecc(Graph(3), CliqueCover(3, ())).valid


class TestVerifyPEcc:
    def test_cycle_cover_is_valid_2_cover(self):
        assert verify_p_ecc(make_cycle(5), cycle_cover(5, 2), 2).valid

    def test_repeated_edge_set_leaves_edges_uncovered(self):
        f = CliqueCover(4, [(0, 1)] * 4)
        verdict = verify_p_ecc(make_cycle(4), f, 2)
        assert not verdict.valid
        assert verdict.reason == REASON_UNCOVERED_EDGE
        assert verdict.pair in make_cycle(4).edges
        assert co_occurrences(f, *verdict.pair) < 2

    def test_c7_p4_counts(self):
        f = cycle_cover(7, 4)
        assert verify_p_ecc(make_cycle(7), f, 4).valid
        assert co_occurrences(f, 0, 2) == 3
        assert co_occurrences(f, 0, 1) == 4

    def test_mismatched_host_rejected(self):
        with pytest.raises(InvalidParameterError):
            verify_p_ecc(make_cycle(5), CliqueCover(6, ()), 1)

    def test_family_smaller_than_p(self):
        verdict = verify_p_ecc(make_cycle(4), CliqueCover(4, [(0, 1)]), 2)
        assert not verdict.valid
        assert verdict.reason == REASON_FAMILY_SMALLER_THAN_P

    def test_small_family_fine_without_edges(self):
        # fewer than p sets cannot cover an edge, but with no edges the
        # p-subset conditions hold vacuously
        assert verify_p_ecc(Graph(4), CliqueCover(4, [(0, 1)]), 3).valid

    def test_nonedge_saturation_detected(self):
        f = CliqueCover(4, [(0, 2)] * 2)
        verdict = verify_p_ecc(make_cycle(4), f, 2)
        assert not verdict.valid
        assert verdict.reason == REASON_NONEDGE_IN_P_SETS
        assert verdict.pair == (0, 2)

    @settings(max_examples=300)
    @given(graph_cover_p())
    def test_matches_literal_definition(self, instance):
        g, f, p = instance
        assert verify_p_ecc(g, f, p).valid == literal_verify_p_ecc(g, f, p)

    @given(graph_cover_p(max_n=6, max_sets=6, max_p=3))
    def test_families_from_realizations_always_verify(self, instance):
        # the graph defined by "pairs sharing >= p sets" turns any family
        # into a valid p-cover of itself; widen the host when hypothesis
        # draws more sets than vertices so realization stays legal
        _, f, p = instance
        padded = CliqueCover(max(f.n, len(f.sets)), f.sets)
        g = p_competition_graph(realize(padded), p)
        assert verify_p_ecc(g, padded, p).valid


class TestCycleCover:
    def test_5_2_sets(self):
        assert [sorted(s) for s in cycle_cover(5, 2).sets] == [
            [0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4], [0, 1, 4]]

    def test_6_3_shape(self):
        f = cycle_cover(6, 3)
        assert len(f.sets) == 6
        assert all(len(s) == 4 for s in f.sets)
        assert sorted(f.sets[0]) == [0, 1, 2, 3]

    def test_infeasible_below_p_plus_3(self):
        with pytest.raises(InfeasibleError, match="n >= p\\+3"):
            cycle_cover(4, 2)

    def test_p_below_one_rejected(self):
        with pytest.raises(InvalidParameterError):
            cycle_cover(5, 0)

    @pytest.mark.parametrize("n", range(4, 25))
    def test_valid_over_full_range(self, n):
        for p in range(1, n - 2):
            f = cycle_cover(n, p)
            assert verify_p_ecc(make_cycle(n), f, p).valid

    @given(st.integers(4, 24), st.data())
    def test_pair_count_is_window_overlap(self, n, data):
        # a window of p+1 consecutive vertices holds a pair at cyclic
        # distance d iff it covers one of the two arcs between them, of
        # lengths d and n-d; the wraparound term only appears for d >= n-p
        p = data.draw(st.integers(1, n - 3))
        f = cycle_cover(n, p)
        i = data.draw(st.integers(0, n - 2))
        j = data.draw(st.integers(i + 1, n - 1))
        d = min(j - i, n - (j - i))
        expected = max(0, p + 1 - d) + max(0, p + 1 - (n - d))
        assert co_occurrences(f, i, j) == expected
        if d >= 2:
            # within the feasible range the sum stays below p, which is
            # exactly what keeps nonadjacent pairs legal
            assert expected <= p - 1


class TestComplementCycleCover:
    def test_n7_family_as_given(self):
        f = complement_cycle_cover(7)
        assert [sorted(s) for s in f.sets] == [
            [0, 2, 5], [1, 3, 6], [0, 2, 4], [1, 3, 5], [2, 4, 6], [0, 3], [1, 4]]

    def test_n9_family(self):
        f = complement_cycle_cover(9)
        assert [sorted(s) for s in f.sets] == [
            [0, 2, 4, 6], [0, 3, 5, 7], [1, 3, 5, 7],
            [1, 4, 6, 8], [3, 6, 8], [2, 5, 8], [2, 4, 7]]

    def test_n10_family(self):
        f = complement_cycle_cover(10)
        assert [sorted(s) for s in f.sets] == [
            [0, 2, 4, 6, 8], [0, 3, 5, 7], [2, 5, 7, 9],
            [1, 4, 7, 9], [1, 3, 6, 9], [1, 3, 5, 8]]

    def test_small_n_rejected(self):
        with pytest.raises(InvalidParameterError):
            complement_cycle_cover(4)

    @pytest.mark.parametrize("n", range(5, 27))
    def test_sizes_validity_and_independence(self, n):
        f = complement_cycle_cover(n)
        expected = {5: 5, 6: 5, 7: 7, 8: 6}.get(
            n, (n + 5) // 2 if n % 2 else n // 2 + 1)
        assert len(f.sets) == expected
        assert verify_ecc(complement(make_cycle(n)), f).valid
        cyc = make_cycle(n)
        for s in f.sets:
            assert all(not cyc.has_edge(u, v) for u, v in combinations(sorted(s), 2))


class TestLiftCover:
    def test_p1_identity(self):
        f = complement_cycle_cover(6)
        assert lift_cover(f, 1) is f

    def test_size_arithmetic(self):
        f = complement_cycle_cover(6)
        assert len(lift_cover(f, 4).sets) == len(f.sets) + 3
        assert len(lift_cover(f, 2).sets) == 6

    def test_appends_full_vertex_sets(self):
        lifted = lift_cover(complement_cycle_cover(10), 3)
        assert lifted.sets[-2:] == (frozenset(range(10)),) * 2

    def test_lifted_cover_verifies(self):
        g = complement(make_cycle(10))
        lifted = lift_cover(complement_cycle_cover(10), 5)
        assert len(lifted.sets) == 10
        assert verify_p_ecc(g, lifted, 5).valid

    @given(st.integers(5, 16), st.integers(1, 5))
    def test_lift_of_valid_ecc_is_valid_p_cover(self, n, p):
        g = complement(make_cycle(n))
        f = complement_cycle_cover(n)
        lifted = lift_cover(f, p)
        assert len(lifted.sets) == len(f.sets) + p - 1
        assert verify_p_ecc(g, lifted, p).valid


class TestCoverSerialization:
    def test_roundtrip_preserves_order_and_repetition(self):
        f = CliqueCover(5, [(1, 3), (0,), (1, 3), ()])
        data = json.loads(json.dumps(cover_to_json_dict(f)))
        assert cover_from_json_dict(data) == f
        assert data["sets"] == [[1, 3], [0], [1, 3], []]

    def test_rejects_out_of_range_member(self):
        with pytest.raises(InvalidParameterError):
            cover_from_json_dict({"n": 3, "sets": [[0, 3]]})
