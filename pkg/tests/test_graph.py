from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symbicost import (
    GraphValidationError,
    ViolationKind,
    build_graph,
    closeness_centrality,
    closeness_vector,
    graph_from_matrix,
    graph_violations,
    hop_distances,
)

from helpers import (
    FIG1_EDGES,
    FIG1_FIRMS,
    complete_graph,
    fig1_graph,
    floyd_warshall_hops,
    relabel,
    seeded_graphs,
    two_firm_graph,
)


def kinds(firms, edges):
    return {v.kind for v in graph_violations(firms, edges)}


class TestValidation:
    def test_fig1_is_valid(self, fig1):
        assert fig1.firm_count == 6
        assert len(fig1.edges) == 7
        assert graph_violations(FIG1_FIRMS, FIG1_EDGES) == ()

    def test_matrix_invariants_hold_after_build(self, fig1):
        n = fig1.firm_count
        for i in range(n):
            assert fig1.weights[i][i] == 0
            assert fig1.incident_weight[i] > 0
            for j in range(n):
                assert fig1.weights[i][j] == fig1.weights[j][i]
                assert fig1.weights[i][j] >= 0

    def test_single_firm_reports_both_problems(self):
        assert kinds(["A"], []) == {
            ViolationKind.TOO_FEW_FIRMS,
            ViolationKind.ISOLATED_FIRM,
        }

    def test_two_components_is_disconnected_only(self):
        edges = [("A", "B", 1), ("C", "D", 1)]
        assert kinds(["A", "B", "C", "D"], edges) == {ViolationKind.DISCONNECTED_GRAPH}

    def test_negative_weight(self):
        assert kinds(["A", "B"], [("A", "B", -3)]) == {ViolationKind.NEGATIVE_WEIGHT}

    def test_self_loop(self):
        edges = [("A", "A", 2), ("A", "B", 1)]
        assert kinds(["A", "B"], edges) == {ViolationKind.SELF_LOOP}

    def test_asymmetric_directions(self):
        edges = [("A", "B", 1), ("B", "A", 2)]
        assert kinds(["A", "B"], edges) == {ViolationKind.ASYMMETRIC_WEIGHT}

    def test_conflicting_duplicate_entry(self):
        edges = [("A", "B", 1), ("A", "B", 2)]
        assert kinds(["A", "B"], edges) == {ViolationKind.ASYMMETRIC_WEIGHT}

    def test_duplicate_firm_id(self):
        assert ViolationKind.DUPLICATE_FIRM_ID in kinds(["A", "A", "B"], [("A", "B", 1)])

    def test_all_violations_reported_together(self):
        edges = [("A", "B", -1), ("C", "C", 2)]
        found = kinds(["A", "B", "C", "C"], edges)
        assert {
            ViolationKind.NEGATIVE_WEIGHT,
            ViolationKind.SELF_LOOP,
            ViolationKind.DUPLICATE_FIRM_ID,
            ViolationKind.ISOLATED_FIRM,
        } <= found

    def test_build_raises_with_full_list(self):
        with pytest.raises(GraphValidationError) as err:
            build_graph(["A"], [])
        assert {v.kind for v in err.value.violations} == {
            ViolationKind.TOO_FEW_FIRMS,
            ViolationKind.ISOLATED_FIRM,
        }

    def test_one_direction_is_mirrored(self):
        g = build_graph(["A", "B"], [("A", "B", 3)])
        assert g.weights[0][1] == g.weights[1][0] == 3

    def test_equal_weights_in_both_directions_accepted(self):
        g = build_graph(["A", "B"], [("A", "B", 3), ("B", "A", 3)])
        assert g.weights[0][1] == 3

    def test_zero_weight_means_no_edge(self):
        edges = [("A", "B", 1), ("B", "C", 0)]
        assert kinds(["A", "B", "C"], edges) == {
            ViolationKind.ISOLATED_FIRM,
            ViolationKind.DISCONNECTED_GRAPH,
        }

    def test_unknown_endpoint_is_a_caller_error(self):
        with pytest.raises(ValueError, match="not in the firm list"):
            build_graph(["A", "B"], [("A", "X", 1)])

    def test_weights_accepted_as_strings(self):
        g = build_graph(["A", "B"], [("A", "B", "1/4")])
        assert g.weights[0][1] == Fraction(1, 4)

    def test_float_weight_rejected(self):
        with pytest.raises(TypeError, match="binary float"):
            build_graph(["A", "B"], [("A", "B", 0.25)])

    def test_graph_from_matrix(self):
        g = graph_from_matrix(["A", "B"], [[0, 5], [5, 0]])
        assert g.weights[0][1] == 5

    def test_graph_from_matrix_collects_violations(self):
        with pytest.raises(GraphValidationError) as err:
            graph_from_matrix(["A", "B"], [[1, -2], [3, 0]])
        found = {v.kind for v in err.value.violations}
        assert {
            ViolationKind.SELF_LOOP,
            ViolationKind.ASYMMETRIC_WEIGHT,
            ViolationKind.NEGATIVE_WEIGHT,
        } <= found


class TestDistances:
    def test_fig1_hop_distances(self, fig1):
        dist = hop_distances(fig1)
        assert dist[4][5] == 2  # firms 5 and 6 meet through firm 4
        assert dist[1][2] == 2
        for i in range(6):
            assert dist[i][i] == 0
            for j in range(6):
                assert (dist[i][j] == 1) == (fig1.weights[i][j] > 0)

    def test_path3(self, path3):
        dist = hop_distances(path3)
        assert dist[0][2] == dist[2][0] == 2
        assert dist[0][1] == dist[1][2] == 1

    def test_matches_floyd_warshall_oracle(self):
        for g in seeded_graphs(30, sizes=(2, 4, 6, 9, 12), base_seed=300):
            assert hop_distances(g) == floyd_warshall_hops(g)

    def test_symmetry_and_triangle_inequality(self):
        for g in seeded_graphs(10, sizes=(5, 7), base_seed=77):
            dist = hop_distances(g)
            n = g.firm_count
            for i in range(n):
                for j in range(n):
                    assert dist[i][j] == dist[j][i]
                    for k in range(n):
                        assert dist[i][j] <= dist[i][k] + dist[k][j]


class TestCloseness:
    def test_fig1_golden_values(self, fig1):
        expected = (
            Fraction(5, 7),
            Fraction(5, 8),
            Fraction(5, 8),
            Fraction(1),
            Fraction(5, 9),
            Fraction(5, 9),
        )
        assert closeness_vector(fig1) == expected
        assert closeness_centrality(fig1, 0) == Fraction(5, 7)
        assert closeness_centrality(fig1, 3) == 1

    def test_fig1_total(self, fig1):
        assert sum(closeness_vector(fig1)) == Fraction(1027, 252)

    def test_two_firm(self):
        assert closeness_vector(two_firm_graph()) == (Fraction(1), Fraction(1))

    def test_path3(self, path3):
        assert closeness_vector(path3) == (Fraction(2, 3), Fraction(1), Fraction(2, 3))

    def test_bounds_and_adjacency_characterization(self):
        for g in seeded_graphs(20, sizes=(3, 5, 8), base_seed=41):
            n = g.firm_count
            for i, c in enumerate(closeness_vector(g)):
                assert 0 < c <= 1
                adjacent_to_all = len(g.adjacency[i]) == n - 1
                assert (c == 1) == adjacent_to_all

    def test_complete_graph_all_ones(self):
        assert set(closeness_vector(complete_graph(5))) == {Fraction(1)}

    @settings(max_examples=30, deadline=None)
    @given(order=st.permutations(list(range(6))))
    def test_label_invariance(self, order):
        g = fig1_graph()
        permuted = relabel(g, order)
        original = closeness_vector(g)
        assert closeness_vector(permuted) == tuple(original[o] for o in order)
