import itertools

import pytest

from rvd import (
    BlockKind,
    Graph,
    blocks,
    complement,
    complete_bipartite_graph,
    complete_graph,
    connectivity,
    cycle_graph,
    graph_stats,
    local_connectivity,
    path_graph,
    star_graph,
    upper_connectivity,
)
from rvd.connectivity import _min_separator, min_separator_bruteforce


class TestLocalConnectivity:
    def test_k4_adjacent_pair(self):
        assert local_connectivity(complete_graph(4), 0, 1) == 3

    def test_p3_endpoints(self):
        assert local_connectivity(path_graph(3), 0, 2) == 1

    def test_c5_adjacent_pair(self):
        assert local_connectivity(cycle_graph(5), 0, 1) == 2

    def test_bridge_pair(self):
        assert local_connectivity(path_graph(2), 0, 1) == 1

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            local_connectivity(complete_graph(3), 2, 2)


class TestUpperConnectivity:
    def test_cycles(self):
        for n in (4, 5, 6, 8):
            assert upper_connectivity(cycle_graph(n)) == 2

    def test_complete(self):
        assert upper_connectivity(complete_graph(5)) == 4

    def test_star(self):
        assert upper_connectivity(star_graph(4)) == 1

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            upper_connectivity(Graph(3, [(0, 1)]))


class TestConnectivity:
    def test_examples(self):
        assert connectivity(complete_graph(4)) == 3
        assert connectivity(cycle_graph(6)) == 2
        assert connectivity(path_graph(5)) == 1
        assert connectivity(star_graph(3)) == 1

    def test_trivial_and_disconnected(self):
        assert connectivity(Graph(1)) == 0
        assert connectivity(Graph(4, [(0, 1), (2, 3)])) == 0


class TestMengerCrossCheck:
    def test_flow_equals_bruteforce_separators(self, atlas_small):
        # separator enumeration vs max-flow on every pair, n <= 6
        for g in atlas_small[::3]:
            for x, y in itertools.combinations(range(g.n), 2):
                skip = (x, y) if g.has_edge(x, y) else None
                assert (_min_separator(g, x, y, skip)
                        == min_separator_bruteforce(g, x, y, skip))

    def test_kappa_le_kappa_plus(self, atlas_corpus):
        for g in atlas_corpus:
            assert connectivity(g) <= upper_connectivity(g)

    def test_min_degree_le_kappa_plus(self, atlas_corpus):
        for g in atlas_corpus:
            assert graph_stats(g).min_degree <= upper_connectivity(g)


class TestBlocks:
    def test_two_triangles_sharing_a_vertex(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        dec = blocks(g)
        assert len(dec.blocks) == 2
        assert set(dec.block_kinds) == {BlockKind.CYCLE}
        assert dec.cut_vertices == frozenset({2})
        assert dec.end_block == (True, True)

    def test_path_blocks(self):
        dec = blocks(path_graph(5))
        assert len(dec.blocks) == 4
        assert set(dec.block_kinds) == {BlockKind.K2}
        assert dec.cut_vertices == frozenset({1, 2, 3})
        assert sum(dec.end_block) == 2

    def test_k4_single_other_block(self):
        dec = blocks(complete_graph(4))
        assert dec.blocks == ((0, 1, 2, 3),)
        assert dec.block_kinds == (BlockKind.OTHER,)
        assert dec.cut_vertices == frozenset()
        assert dec.end_block == (False,)

    def test_cycle_is_single_cycle_block(self):
        dec = blocks(cycle_graph(7))
        assert dec.block_kinds == (BlockKind.CYCLE,)

    def test_theta_graph_is_other(self):
        # two vertices joined by three disjoint paths: 2-connected, not a cycle
        g = Graph(5, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
        assert blocks(g).block_kinds == (BlockKind.OTHER,)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            blocks(Graph(3, [(0, 1)]))

    def test_every_edge_in_exactly_one_block(self, atlas_small):
        for g in atlas_small[::5]:
            dec = blocks(g)
            cover = {}
            for bi, verts in enumerate(dec.blocks):
                vset = set(verts)
                for u, v in g.edges():
                    if u in vset and v in vset:
                        cover.setdefault((u, v), []).append(bi)
            # vertex-set membership over-approximates edge membership only
            # when two blocks share an edge, which must never happen
            assert all(len(v) == 1 for v in cover.values())
            assert len(cover) == g.m

    def test_end_block_flag_matches_cut_vertex_count(self, atlas_small):
        for g in atlas_small[::7]:
            dec = blocks(g)
            for verts, end in zip(dec.blocks, dec.end_block):
                cuts = sum(1 for v in verts if v in dec.cut_vertices)
                assert end == (cuts == 1)

    def test_k23_block(self):
        dec = blocks(complete_bipartite_graph(2, 3))
        assert dec.block_kinds == (BlockKind.OTHER,)
