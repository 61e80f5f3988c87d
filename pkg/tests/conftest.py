"""Shared corpus fixtures.

The exhaustive corpus is every connected graph on 2..7 vertices (995
isomorphism classes, via the networkx atlas). Solver results over the
corpus are computed once per session and shared, since half the suite
audits properties of the same optimal colorings.
"""

from __future__ import annotations

import pytest

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from rvd import Graph, encode_graph6, rvd_exact, rvd_fast


def nx_to_graph(nxg) -> Graph:
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()])


@pytest.fixture(scope="session")
def atlas_corpus() -> list[Graph]:
    """All connected graphs with 2 <= n <= 7, one per isomorphism class."""
    return [
        nx_to_graph(g)
        for g in graph_atlas_g()
        if 2 <= g.number_of_nodes() <= 7 and nx.is_connected(g)
    ]


@pytest.fixture(scope="session")
def atlas_small(atlas_corpus) -> list[Graph]:
    return [g for g in atlas_corpus if g.n <= 6]


@pytest.fixture(scope="session")
def rvd_cache(atlas_corpus):
    """graph6 -> RvdReport for the whole corpus."""
    return {encode_graph6(g): rvd_exact(g) for g in atlas_corpus}


@pytest.fixture(scope="session")
def rvd_of(rvd_cache):
    """Memoized rvd lookup usable for arbitrary extra graphs (complements)."""
    memo = {g6: report.rvd for g6, report in rvd_cache.items()}

    def lookup(g: Graph) -> int:
        key = encode_graph6(g)
        if key not in memo:
            memo[key] = rvd_fast(g, want_certificates=False).rvd
        return memo[key]

    return lookup
