import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rvd import (
    Graph,
    VertexColoring,
    complete_graph,
    conflict_graph,
    cycle_graph,
    exists_rainbow_cut,
    format_coloring,
    identity_coloring,
    is_rainbow,
    is_rvd_coloring,
    is_vertex_cut,
    monochromatic_coloring,
    parse_coloring,
    path_graph,
    star_graph,
    verify_certificate,
)

C4 = cycle_graph(4)  # 0-1-2-3-0; antipodal pairs (0,2) and (1,3)


def brute_force_rainbow_cut_exists(g: Graph, c: VertexColoring, x: int, y: int) -> bool:
    """Oracle: enumerate all subsets of V minus {x, y}."""
    others = [v for v in range(g.n) if v not in (x, y)]
    adjacent = g.has_edge(x, y)
    for r in range(len(others) + 1):
        for cut in itertools.combinations(others, r):
            if not is_vertex_cut(g, cut, x, y):
                continue
            if adjacent:
                if is_rainbow(c, list(cut) + [x]) or is_rainbow(c, list(cut) + [y]):
                    return True
            elif is_rainbow(c, cut):
                return True
    return False


class TestColoringType:
    def test_parse_format_roundtrip(self):
        c = parse_coloring("1,1,2,3")
        assert c.colors == (1, 1, 2, 3)
        assert format_coloring(c) == "1,1,2,3"

    def test_k_counts_distinct_colors(self):
        assert parse_coloring("1,3,1").k == 2

    def test_canonical_flag(self):
        assert parse_coloring("1,2,2").is_canonical
        assert not parse_coloring("1,3,3").is_canonical

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            parse_coloring("1,0,2")

    def test_classes(self):
        assert parse_coloring("1,2,1").color_classes() == {1: [0, 2], 2: [1]}


class TestIsRainbow:
    def test_empty_set(self):
        assert is_rainbow(parse_coloring("1,1,1"), [])

    def test_singleton(self):
        assert is_rainbow(parse_coloring("1,1,1"), [2])

    def test_duplicate_colors(self):
        assert not is_rainbow(parse_coloring("1,1,2"), [0, 1])
        assert is_rainbow(parse_coloring("1,1,2"), [1, 2])


class TestIsVertexCut:
    def test_path_center(self):
        assert is_vertex_cut(path_graph(3), [1], 0, 2)

    def test_triangle_adjacent_pair(self):
        assert is_vertex_cut(complete_graph(3), [2], 0, 1)

    def test_c4_adjacent_pair_needs_nonempty_cut(self):
        assert not is_vertex_cut(C4, [], 0, 1)
        assert is_vertex_cut(C4, [2, 3], 0, 1)

    def test_cut_containing_pair_rejected(self):
        with pytest.raises(ValueError, match="pair"):
            is_vertex_cut(path_graph(3), [0], 0, 2)


class TestExistsRainbowCut:
    def test_c4_monochromatic_adjacent_pair_has_none(self):
        assert exists_rainbow_cut(C4, monochromatic_coloring(4), 0, 1) is None

    def test_c4_two_coloring_certificate(self):
        # colors around the cycle 1,2,1,2: cut {2} with side witness 1
        cert = exists_rainbow_cut(C4, parse_coloring("1,2,1,2"), 0, 1)
        assert cert is not None
        assert cert.cut == (2,)
        assert cert.side_witness == 1
        assert verify_certificate(C4, parse_coloring("1,2,1,2"), cert)

    def test_star_bridge_pair_empty_cut(self):
        star = star_graph(3)
        cert = exists_rainbow_cut(star, monochromatic_coloring(4), 0, 1)
        assert cert is not None
        assert cert.cut == ()
        assert cert.side_witness in (0, 1)
        assert verify_certificate(star, monochromatic_coloring(4), cert)

    def test_nonadjacent_certificate_has_no_witness(self):
        cert = exists_rainbow_cut(C4, parse_coloring("1,2,1,2"), 0, 2)
        assert cert is not None and cert.side_witness is None

    def test_deterministic(self):
        c = parse_coloring("1,2,1,3,2")
        g = cycle_graph(5)
        certs = {exists_rainbow_cut(g, c, 0, 2) for _ in range(5)}
        assert len(certs) == 1

    def test_cut_is_inclusion_minimal(self):
        g = complete_graph(5)
        cert = exists_rainbow_cut(g, identity_coloring(5), 0, 1)
        assert cert is not None
        for v in cert.cut:
            smaller = [w for w in cert.cut if w != v]
            assert not is_vertex_cut(g, smaller, 0, 1)

    def test_matches_bruteforce_on_seeded_instances(self):
        rng = random.Random(1387)
        for _ in range(120):
            n = rng.randint(2, 7)
            edges = [e for e in itertools.combinations(range(n), 2)
                     if rng.random() < rng.choice([0.3, 0.5, 0.8])]
            g = Graph(n, edges)
            c = VertexColoring(tuple(rng.randint(1, max(1, rng.randint(1, n)))
                                     for _ in range(n)))
            x, y = rng.sample(range(n), 2)
            cert = exists_rainbow_cut(g, c, x, y)
            assert (cert is not None) == brute_force_rainbow_cut_exists(g, c, x, y)
            if cert is not None:
                assert verify_certificate(g, c, cert)


class TestIsRvdColoring:
    def test_tree_monochromatic_valid(self):
        for tree in (path_graph(6), star_graph(5)):
            chk = is_rvd_coloring(tree, monochromatic_coloring(tree.n))
            assert chk.valid
            assert len(chk.certificates) == tree.n * (tree.n - 1) // 2

    def test_c4_monochromatic_invalid(self):
        chk = is_rvd_coloring(C4, monochromatic_coloring(4))
        assert not chk.valid
        assert chk.failing_pair == (0, 1)

    def test_k4_identity_valid(self):
        assert is_rvd_coloring(complete_graph(4), identity_coloring(4)).valid

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="size"):
            is_rvd_coloring(C4, parse_coloring("1,2"))

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            is_rvd_coloring(Graph(4, [(0, 1), (2, 3)]), monochromatic_coloring(4))

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_refinement_preserves_validity(self, data):
        # a refinement splits classes and never merges, so every rainbow
        # set stays rainbow and every certificate keeps working
        n = data.draw(st.integers(min_value=3, max_value=6))
        g = cycle_graph(n)
        base = VertexColoring(tuple(data.draw(
            st.lists(st.integers(1, 2), min_size=n, max_size=n))))
        if not is_rvd_coloring(g, base).valid:
            return
        splits = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
        refined = VertexColoring(tuple(
            base.colors[v] + 2 * splits[v] * (v + 1) for v in range(n)))
        assert base.refine_check(refined)
        assert is_rvd_coloring(g, refined).valid


class TestConflictGraph:
    def test_complete_graph(self):
        assert conflict_graph(complete_graph(4)) == complete_graph(4)

    def test_c5_no_conflicts(self):
        assert conflict_graph(cycle_graph(5)).m == 0

    def test_c4_antipodal_matching(self):
        cg = conflict_graph(C4)
        assert sorted(cg.edges()) == [(0, 2), (1, 3)]
