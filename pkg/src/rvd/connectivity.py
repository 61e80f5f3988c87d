"""Vertex connectivity (local, global, upper) and block decomposition.

Local connectivity of a nonadjacent pair is the minimum separator size,
computed as unit-capacity max flow on the vertex-split digraph (Menger).
For an adjacent pair it is the same quantity in G - xy, plus one. The
upper connectivity is the maximum of the local values over all pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, is_connected, reachable_mask


def local_connectivity(g: Graph, x: int, y: int) -> int:
    """kappa_G(x,y): separator size for nonadjacent x,y; +1 in G-xy if adjacent."""
    if x == y:
        raise ValueError("local connectivity requires two distinct vertices")
    if g.has_edge(x, y):
        return _min_separator(g, x, y, skip_edge=(x, y)) + 1
    return _min_separator(g, x, y, skip_edge=None)


def _min_separator(g: Graph, x: int, y: int, skip_edge: tuple[int, int] | None) -> int:
    """Max number of internally disjoint x-y paths (= min x-y separator).

    Unit-capacity augmenting paths on the split digraph: each vertex v
    becomes v_in -> v_out, each edge uv becomes u_out -> v_in and
    v_out -> u_in. Source is x_out, sink y_in; at most n augmentations.
    """
    n = g.n
    # node ids: in(v) = 2v, out(v) = 2v + 1
    source = 2 * x + 1
    sink = 2 * y
    skip = frozenset([skip_edge, (skip_edge[1], skip_edge[0])]) if skip_edge else frozenset()

    res: dict[tuple[int, int], int] = {}
    nbrs: list[list[int]] = [[] for _ in range(2 * n)]

    def add_arc(a: int, b: int) -> None:
        res[(a, b)] = 1
        res[(b, a)] = 0
        nbrs[a].append(b)
        nbrs[b].append(a)

    for v in range(n):
        add_arc(2 * v, 2 * v + 1)
    for u, w in g.edges():
        if (u, w) in skip:
            continue
        add_arc(2 * u + 1, 2 * w)
        add_arc(2 * w + 1, 2 * u)

    value = 0
    while True:
        prev: dict[int, int] = {source: -1}
        queue = [source]
        qi = 0
        while qi < len(queue) and sink not in prev:
            a = queue[qi]
            qi += 1
            for b in nbrs[a]:
                if b not in prev and res.get((a, b), 0) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return value
        b = sink
        while b != source:
            a = prev[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        value += 1


def connectivity(g: Graph) -> int:
    """kappa(G): minimum vertex deletions leaving a disconnected or trivial graph."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = n - 1
    for x in range(n):
        for y in range(x + 1, n):
            if not g.has_edge(x, y):
                best = min(best, _min_separator(g, x, y, None))
                if best == 1:
                    return 1
    return best


def upper_connectivity(g: Graph) -> int:
    """kappa^+(G): maximum local connectivity over all vertex pairs."""
    if g.n < 2:
        raise ValueError("upper connectivity needs at least two vertices")
    if not is_connected(g):
        raise ValueError("upper connectivity requires a connected graph")
    return max(
        local_connectivity(g, x, y)
        for x in range(g.n)
        for y in range(x + 1, g.n)
    )


class BlockKind(Enum):
    K2 = "K2"
    CYCLE = "CYCLE"
    OTHER = "OTHER"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    block_kinds: tuple[BlockKind, ...]
    end_block: tuple[bool, ...]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components (Hopcroft-Tarjan, iterative) with kind labels.

    Each edge lies in exactly one block; a block is K2 (a bridge), CYCLE
    (exactly a cycle: as many edges as vertices, all block-degrees 2), or
    OTHER. An end-block touches exactly one cut vertex.
    """
    if not is_connected(g):
        raise ValueError("block decomposition requires a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cut = [False] * n
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root:
                        cut[u] = True
                    blk = []
                    while edge_stack:
                        e = edge_stack.pop()
                        blk.append(e)
                        if e == (u, v):
                            break
                    raw_blocks.append(blk)
        if root_children > 1:
            cut[root] = True

    block_sets: list[tuple[int, ...]] = []
    kinds: list[BlockKind] = []
    for blk in raw_blocks:
        verts = sorted({v for e in blk for v in e})
        block_sets.append(tuple(verts))
        kinds.append(_classify(verts, blk))
    order = sorted(range(len(block_sets)), key=lambda i: block_sets[i])
    block_sets = [block_sets[i] for i in order]
    kinds = [kinds[i] for i in order]
    cut_set = frozenset(v for v in range(n) if cut[v])
    ends = tuple(sum(1 for v in bs if v in cut_set) == 1 for bs in block_sets)
    return BlockDecomposition(tuple(block_sets), cut_set, tuple(kinds), ends)


def _classify(verts: list[int], edges: list[tuple[int, int]]) -> BlockKind:
    if len(verts) == 2:
        return BlockKind.K2
    if len(edges) == len(verts):
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if all(d == 2 for d in deg.values()):
            return BlockKind.CYCLE
    return BlockKind.OTHER


def min_separator_bruteforce(g: Graph, x: int, y: int,
                             skip_edge: tuple[int, int] | None = None) -> int:
    """Smallest separator by subset enumeration; oracle for the flow path."""
    n = g.n
    others = [v for v in range(n) if v != x and v != y]
    full = (1 << n) - 1
    for size in range(len(others) + 1):
        from itertools import combinations
        for combo in combinations(others, size):
            banned = 0
            for v in combo:
                banned |= 1 << v
            if not (reachable_mask(g, x, full & ~banned, skip_edge) >> y & 1):
                return size
    return len(others)
