"""Polynomial predicates for rvd in {1, 2, n-1, n} and extremal constructions.

The rvd = n-1 predicate tests three conditions on the "low pairs" (pairs
with at most one common neighbor):

  C1: at least one low pair exists.
  C2: every two vertex-disjoint low pairs {x,y}, {p,q} are covered by one
      of two patterns. P1: some u,v outside the four anchors carry three
      internally disjoint u-v paths u-a-v, u-b-v, u-a'-b'-v (in either
      orientation) with {a,a'} = {x,y} and {b,b'} = {p,q}. P2: some a in
      {x,y} and b in {p,q} are adjacent with the two length-2 a-b paths
      through the complementary anchors a' and b'.
  C3: every triple with all three pairs low is covered by P3 (a triangle
      on the triple) or P4 (some outside u,v with internally disjoint
      paths u-a-v and u-b-c-v using all three anchors).

If the low pairs carried equal colors, each pattern would pin a non-rainbow
set inside every candidate cut for the u-v (or a-b) pair, so the patterns
are exactly the obstructions that force extra colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .connectivity import BlockKind, blocks
from .graphs import Graph, is_connected, min_pairwise_common_neighbors


@dataclass(frozen=True)
class PatternMatch:
    pattern_id: str  # P1 | P2 | P3 | P4
    anchor_vertices: tuple[int, ...]
    auxiliary_vertices: tuple[int, ...]
    edges_used: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class NMinusOneCheck:
    holds: bool
    failed_condition: Optional[int]  # 1, 2 or 3 when holds is False
    offenders: tuple


def check_rvd_is_1(g: Graph) -> bool:
    """rvd(G) = 1 iff G is a tree."""
    _require_connected(g)
    return g.m == g.n - 1


def check_rvd_is_2(g: Graph) -> bool:
    """rvd(G) = 2 iff every block is K2 or a cycle and some block is a cycle."""
    _require_connected(g)
    if g.n < 2:
        return False
    kinds = blocks(g).block_kinds
    return (all(k in (BlockKind.K2, BlockKind.CYCLE) for k in kinds)
            and any(k == BlockKind.CYCLE for k in kinds))


def check_rvd_is_n(g: Graph) -> bool:
    """rvd(G) = n iff every pair has at least two common neighbors."""
    _require_connected(g)
    if g.n < 2:
        raise ValueError("need at least two vertices")
    return min_pairwise_common_neighbors(g) >= 2


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("characterizations require a connected graph")


def _edge(g: Graph, u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def find_pair_cover(g: Graph, pair1: tuple[int, int], pair2: tuple[int, int]
                    ) -> Optional[PatternMatch]:
    """P1 or P2 covering two vertex-disjoint low pairs, or None."""
    x, y = pair1
    p, q = pair2
    anchors = (x, y, p, q)
    if len(set(anchors)) != 4:
        raise ValueError("pairs must be vertex-disjoint")

    # P2: cheap, constant number of probes
    for a, a2 in ((x, y), (y, x)):
        for b, b2 in ((p, q), (q, p)):
            if (g.has_edge(a, b) and g.has_edge(a, a2) and g.has_edge(a2, b)
                    and g.has_edge(a, b2) and g.has_edge(b2, b)):
                edges = {_edge(g, a, b), _edge(g, a, a2), _edge(g, a2, b),
                         _edge(g, a, b2), _edge(g, b2, b)}
                return PatternMatch("P2", anchors, (), tuple(sorted(edges)))

    anchor_set = set(anchors)
    outside = [v for v in range(g.n) if v not in anchor_set]
    for i, u in enumerate(outside):
        au = g.adj_mask(u)
        for v in outside[i + 1:]:
            av = g.adj_mask(v)
            for a, a2 in ((x, y), (y, x)):
                if not (au >> a & 1 and av >> a & 1):
                    continue
                for b, b2 in ((p, q), (q, p)):
                    if not (au >> b & 1 and av >> b & 1):
                        continue
                    if not g.has_edge(a2, b2):
                        continue
                    third = None
                    if au >> a2 & 1 and av >> b2 & 1:
                        third = [(u, a2), (a2, b2), (b2, v)]
                    elif au >> b2 & 1 and av >> a2 & 1:
                        third = [(u, b2), (b2, a2), (a2, v)]
                    if third is None:
                        continue
                    edges = {_edge(g, u, a), _edge(g, a, v),
                             _edge(g, u, b), _edge(g, b, v)}
                    edges.update(_edge(g, s, t) for s, t in third)
                    return PatternMatch("P1", anchors, (u, v), tuple(sorted(edges)))
    return None


def find_triple_cover(g: Graph, triple: tuple[int, int, int]
                      ) -> Optional[PatternMatch]:
    """P3 or P4 covering a triple of pairwise-low vertices, or None."""
    x, y, z = triple
    if len({x, y, z}) != 3:
        raise ValueError("triple must consist of three distinct vertices")
    if g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z):
        edges = (_edge(g, x, y), _edge(g, x, z), _edge(g, y, z))
        return PatternMatch("P3", triple, (), tuple(sorted(edges)))

    anchor_set = {x, y, z}
    outside = [v for v in range(g.n) if v not in anchor_set]
    for i, u in enumerate(outside):
        au = g.adj_mask(u)
        for v in outside[i + 1:]:
            av = g.adj_mask(v)
            for a in triple:
                if not (au >> a & 1 and av >> a & 1):
                    continue
                rest = [w for w in triple if w != a]
                for b, c in (rest, rest[::-1]):
                    if au >> b & 1 and g.has_edge(b, c) and av >> c & 1:
                        edges = {_edge(g, u, a), _edge(g, a, v), _edge(g, u, b),
                                 _edge(g, b, c), _edge(g, c, v)}
                        return PatternMatch("P4", triple, (u, v), tuple(sorted(edges)))
    return None


def check_rvd_is_n_minus_1(g: Graph) -> NMinusOneCheck:
    """Three-condition predicate for rvd(G) = n - 1 (see module docstring)."""
    _require_connected(g)
    if g.n < 2:
        raise ValueError("need at least two vertices")
    n = g.n
    low_pairs = []
    low = set()
    for a in range(n):
        ma = g.adj_mask(a)
        for b in range(a + 1, n):
            if (ma & g.adj_mask(b)).bit_count() <= 1:
                low_pairs.append((a, b))
                low.add((a, b))
    if not low_pairs:
        return NMinusOneCheck(False, 1, ())

    for i, pair1 in enumerate(low_pairs):
        s1 = set(pair1)
        for pair2 in low_pairs[i + 1:]:
            if s1 & set(pair2):
                continue
            if find_pair_cover(g, pair1, pair2) is None:
                return NMinusOneCheck(False, 2, (pair1, pair2))

    for x, y, z in combinations(range(n), 3):
        if (x, y) in low and (x, z) in low and (y, z) in low:
            if find_triple_cover(g, (x, y, z)) is None:
                return NMinusOneCheck(False, 3, ((x, y, z),))

    return NMinusOneCheck(True, None, ())


# ---------------------------------------------------------------------------
# Extremal constructions
# ---------------------------------------------------------------------------

def build_extremal_n_minus_1(n: int) -> Graph:
    """Densest graph with rvd = n-1: K_n minus the n-3 edges from the last
    vertex to all but two others. Size is n(n-1)/2 - n + 3."""
    if n < 3:
        raise ValueError("construction needs n >= 3")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if not (j == n - 1 and i < n - 3)]
    return Graph(n, edges)


def build_ng_extremal(n: int) -> Graph:
    """Four-clique construction aimed at rvd(G) = rvd(complement) = n.

    Vertices split into cliques V1..V4 of sizes k,k,k,k+t for n = 4k+t;
    the i-th members of the four cliques form 4-cliques for i < k, and the
    k-th members together with the t extras form one more clique.

    Note: two vertices inside a size-3 clique share only one neighbor, so
    for k = 3 (n in 12..15) the graph does not reach rvd(G) = n; the
    all-pairs criterion holds from k >= 4 (n >= 16) on.
    """
    if n < 12:
        raise ValueError("construction needs n >= 12 (four cliques of size >= 3)")
    k, t = divmod(n, 4)
    groups = [list(range(0, k)), list(range(k, 2 * k)),
              list(range(2 * k, 3 * k)), list(range(3 * k, 4 * k + t))]
    cliques = [set(gr) for gr in groups]
    for i in range(k - 1):
        cliques.append({i, k + i, 2 * k + i, 3 * k + i})
    cliques.append({k - 1, 2 * k - 1, 3 * k - 1} | set(range(4 * k - 1, 4 * k + t)))
    edges = set()
    for cl in cliques:
        edges.update((a, b) for a, b in combinations(sorted(cl), 2))
    return Graph(n, sorted(edges))


def tree_complement_extremal(n: int) -> Graph:
    """Star K_{1,n-2} with one extra vertex pendant on a leaf; its complement
    attains rvd = n - 1."""
    if n < 4:
        raise ValueError("construction needs n >= 4")
    edges = [(0, i) for i in range(1, n - 1)]
    edges.append((1, n - 1))
    return Graph(n, edges)


def extremal_n_minus_1_size(n: int) -> int:
    """Maximum size of a graph with rvd = n-1 (1 when n = 2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return 1
    return n * (n - 1) // 2 - n + 3
