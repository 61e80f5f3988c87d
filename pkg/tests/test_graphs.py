import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rvd import (
    Graph,
    Graph6Error,
    complement,
    complete_bipartite_graph,
    complete_graph,
    common_neighbor_count,
    common_neighbors,
    components,
    cycle_graph,
    encode_edge_list,
    encode_graph6,
    graph_stats,
    is_connected,
    min_pairwise_common_neighbors,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
)


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, on in zip(pairs, picks) if on])


class TestGraphBasics:
    def test_loops_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(3, [(1, 1)])

    def test_duplicate_edges_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="range"):
            Graph(2, [(0, 2)])

    def test_edges_sorted(self):
        g = Graph(4, [(2, 3), (0, 1), (1, 3)])
        assert list(g.edges()) == [(0, 1), (1, 3), (2, 3)]

    def test_from_adjacency_masks_roundtrip(self):
        g = cycle_graph(5)
        h = Graph.from_adjacency_masks(5, [g.adj_mask(v) for v in range(5)])
        assert h == g

    def test_from_adjacency_masks_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Graph.from_adjacency_masks(2, [0b01, 0b01])

    @given(graphs())
    def test_degree_sum_is_twice_edges(self, g):
        assert sum(g.degrees()) == 2 * g.m


class TestGraph6:
    def test_hand_encoded_records(self):
        assert parse_graph6("A_") == complete_graph(2)
        assert parse_graph6("A?") == Graph(2)
        assert parse_graph6("Bw") == complete_graph(3)
        assert encode_graph6(complete_graph(2)) == "A_"
        assert encode_graph6(Graph(2)) == "A?"
        assert encode_graph6(complete_graph(3)) == "Bw"

    @given(graphs(max_n=12))
    def test_roundtrip(self, g):
        assert parse_graph6(encode_graph6(g)) == g

    def test_trailing_newline_tolerated(self):
        assert parse_graph6("Bw\n") == complete_graph(3)

    def test_long_form_rejected(self):
        with pytest.raises(Graph6Error, match="long-form"):
            parse_graph6("~??")

    def test_truncated_payload(self):
        with pytest.raises(Graph6Error, match="truncated"):
            parse_graph6("D")

    def test_trailing_garbage(self):
        with pytest.raises(Graph6Error, match="trailing"):
            parse_graph6("Bw~")

    def test_out_of_range_character(self):
        with pytest.raises(Graph6Error, match="outside graph6 range"):
            parse_graph6("B\x20")

    def test_nonzero_padding_rejected(self):
        # K_3 payload with a padding bit set: 0b111001 -> chr(57+63)
        with pytest.raises(Graph6Error, match="padding"):
            parse_graph6("B" + chr(0b111001 + 63))

    def test_error_reports_offset(self):
        err = None
        try:
            parse_graph6("%")
        except Graph6Error as exc:
            err = exc
        assert err is not None and err.offset == 0

    def test_encode_rejects_large_graphs(self):
        with pytest.raises(ValueError, match="62"):
            encode_graph6(Graph(63))


class TestEdgeList:
    def test_roundtrip(self):
        g = complete_bipartite_graph(2, 3)
        assert parse_edge_list(encode_edge_list(g)) == g

    def test_header_mismatch(self):
        with pytest.raises(ValueError, match="m=2"):
            parse_edge_list("3 2\n0 1\n")

    def test_loop_is_hard_error(self):
        with pytest.raises(ValueError, match="loop"):
            parse_edge_list("2 1\n1 1\n")


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(complete_graph(4)) == Graph(4)

    def test_p4_self_complementary(self):
        import networkx as nx
        g = path_graph(4)
        assert nx.is_isomorphic(nx.Graph(list(g.edges())),
                                nx.Graph(list(complement(g).edges())))

    def test_c5_self_complementary(self):
        import networkx as nx
        g = cycle_graph(5)
        assert nx.is_isomorphic(nx.Graph(list(g.edges())),
                                nx.Graph(list(complement(g).edges())))

    @given(graphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestCommonNeighbors:
    def test_complete_graph_pairs(self):
        assert common_neighbors(complete_graph(4), 0, 1) == [2, 3]

    def test_path_endpoints(self):
        assert common_neighbors(path_graph(3), 0, 2) == [1]

    def test_c5_adjacent_pair_empty(self):
        assert common_neighbors(cycle_graph(5), 0, 1) == []

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            common_neighbors(complete_graph(3), 1, 1)

    def test_min_pairwise(self):
        assert min_pairwise_common_neighbors(complete_graph(5)) == 3
        assert min_pairwise_common_neighbors(cycle_graph(4)) == 0
        octahedron = complement(Graph(6, [(0, 1), (2, 3), (4, 5)]))
        assert min_pairwise_common_neighbors(octahedron) == 2

    @given(graphs())
    def test_partition_identity(self, g):
        # the other n-2 vertices split into: common neighbors, common
        # non-neighbors, and one-sided neighbors
        gc = complement(g)
        for x in range(g.n):
            for y in range(x + 1, g.n):
                both = common_neighbor_count(g, x, y)
                neither = common_neighbor_count(gc, x, y)
                sym = (g.adj_mask(x) ^ g.adj_mask(y)) & ~(1 << x) & ~(1 << y)
                assert both + neither + sym.bit_count() == g.n - 2


class TestComponents:
    def test_path_single_component(self):
        assert components(path_graph(5)) == [[0, 1, 2, 3, 4]]

    def test_two_disjoint_edges(self):
        assert components(Graph(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]

    def test_component_order_by_least_vertex(self):
        g = Graph(5, [(4, 2), (1, 3)])
        assert components(g) == [[0], [1, 3], [2, 4]]

    def test_stats(self):
        st_ = graph_stats(path_graph(5))
        assert (st_.n, st_.m, st_.min_degree, st_.max_degree) == (5, 4, 1, 2)
        assert st_.is_connected and st_.is_tree
        assert not graph_stats(cycle_graph(4)).is_tree
        assert not graph_stats(Graph(3, [(0, 1)])).is_connected

    def test_star_stats(self):
        st_ = graph_stats(star_graph(4))
        assert st_.max_degree == 4 and st_.min_degree == 1 and st_.is_tree

    def test_empty_graph_not_connected(self):
        assert not is_connected(Graph(0))
