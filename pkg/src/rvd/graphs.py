"""Simple undirected graphs with bitset adjacency, plus graph6 I/O.

Vertices are dense integers 0..n-1. Adjacency is stored as one Python int
bitmask per vertex, so neighborhood intersections (the hot operation for
common-neighbor counting) are single word-parallel ``&`` operations.
Graphs are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Graph6Error(ValueError):
    """Malformed graph6 record. ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Loops and repeated edges are rejected outright rather than cleaned up:
    every operation downstream assumes a simple graph.
    """

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self.n = n
        self._adj = tuple(adj)
        self._m = m

    @classmethod
    def from_adjacency_masks(cls, n: int, masks: list[int]) -> "Graph":
        """Fast path for bulk construction (random sampling).

        ``masks`` must already be symmetric; only irreflexivity is checked.
        """
        if len(masks) != n:
            raise ValueError("need one mask per vertex")
        g = object.__new__(cls)
        total = 0
        for v, mask in enumerate(masks):
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v} not allowed")
            if mask >> n:
                raise ValueError(f"mask of vertex {v} addresses vertices >= n")
            total += mask.bit_count()
        if total % 2:
            raise ValueError("adjacency masks are not symmetric")
        g.n = n
        g._adj = tuple(masks)
        g._m = total // 2
        return g

    @property
    def m(self) -> int:
        return self._m

    def adj_mask(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitmask (bit u set iff uv is an edge)."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            while rest:
                low = rest & -rest
                yield (u, u + 1 + low.bit_length() - 1)
                rest ^= low

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# ---------------------------------------------------------------------------
# graph6 codec (short form, n <= 62)
#
# Record layout: one byte n+63, then the upper-triangle adjacency bits in
# column-major order (x01, x02, x12, x03, x13, x23, ...) packed into 6-bit
# groups, each stored as chr(group + 63). Padding bits must be zero so that
# parse/encode round-trips byte-identically.
# ---------------------------------------------------------------------------

def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 record (n <= 62)."""
    s = line.rstrip("\n")
    if not s:
        raise Graph6Error("empty record", 0)
    first = ord(s[0])
    if s[0] == "~":
        raise Graph6Error("long-form graph6 (n > 62) not supported", 0)
    if not (63 <= first <= 126):
        raise Graph6Error(f"header byte {first} outside graph6 range", 0)
    n = first - 63
    if n > 62:
        raise Graph6Error(f"header encodes n={n} > 62", 0)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(s) - 1 < nchars:
        raise Graph6Error(f"truncated payload: need {nchars} bytes, have {len(s) - 1}", len(s))
    if len(s) - 1 > nchars:
        raise Graph6Error("trailing characters after payload", 1 + nchars)
    edges = []
    bit = 0
    group = 0
    for j in range(1, n):
        for i in range(j):
            if bit % 6 == 0:
                c = ord(s[1 + bit // 6])
                if not (63 <= c <= 126):
                    raise Graph6Error(f"payload byte {c} outside graph6 range", 1 + bit // 6)
                group = c - 63
            if group >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    if nbits % 6:
        last = ord(s[-1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode as a short-form graph6 record; requires n <= 62."""
    if g.n > 62:
        raise ValueError("short-form graph6 supports n <= 62 only")
    out = [chr(g.n + 63)]
    group = 0
    nbit = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.adj_mask(i) >> j & 1)
            nbit += 1
            if nbit == 6:
                out.append(chr(group + 63))
                group = 0
                nbit = 0
    if nbit:
        out.append(chr((group << (6 - nbit)) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Edge-list text format: "n m" header line, then one "u v" line per edge.
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header says m={m} but {len(lines) - 1} edge lines follow")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Basic operations
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    """Graph with uv an edge iff u != v and uv is not an edge of g."""
    n = g.n
    full = (1 << n) - 1
    edges = []
    for u in range(n):
        rest = (full & ~g.adj_mask(u) & ~(1 << u)) >> (u + 1)
        base = u + 1
        while rest:
            low = rest & -rest
            edges.append((u, base + low.bit_length() - 1))
            rest ^= low
    return Graph(n, edges)


def common_neighbors(g: Graph, x: int, y: int) -> list[int]:
    """N(x) & N(y), sorted. x and y must be distinct."""
    if x == y:
        raise ValueError("common_neighbors requires two distinct vertices")
    return _bits(g.adj_mask(x) & g.adj_mask(y))


def common_neighbor_count(g: Graph, x: int, y: int) -> int:
    if x == y:
        raise ValueError("common_neighbor_count requires two distinct vertices")
    return (g.adj_mask(x) & g.adj_mask(y)).bit_count()


def min_pairwise_common_neighbors(g: Graph) -> int:
    """min over unordered pairs of |N(x) & N(y)|; requires n >= 2."""
    if g.n < 2:
        raise ValueError("need at least two vertices")
    best = g.n
    for x in range(g.n):
        ax = g.adj_mask(x)
        for y in range(x + 1, g.n):
            c = (ax & g.adj_mask(y)).bit_count()
            if c < best:
                best = c
                if best == 0:
                    return 0
    return best


def reachable_mask(g: Graph, start: int, allowed: int,
                   skip_edge: tuple[int, int] | None = None) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``.

    ``skip_edge`` removes one edge (both directions) for the traversal;
    this is how the adjacent-pair cut semantics (G - xy) are realized
    without materializing a new graph.
    """
    if not (allowed >> start & 1):
        return 0
    seen = 1 << start
    frontier = seen
    su = sv = -1
    if skip_edge is not None:
        su, sv = skip_edge
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            nb = g.adj_mask(v)
            if v == su:
                nb &= ~(1 << sv)
            elif v == sv:
                nb &= ~(1 << su)
            nxt |= nb
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[list[int]]:
    """Connected components, ordered by least vertex id, vertices sorted."""
    full = (1 << g.n) - 1
    remaining = full
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = reachable_mask(g, start, remaining)
        out.append(_bits(comp))
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    return reachable_mask(g, 0, full) == full


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    min_degree: int
    max_degree: int
    is_connected: bool
    is_tree: bool


def graph_stats(g: Graph) -> GraphStats:
    degs = g.degrees()
    conn = is_connected(g)
    return GraphStats(
        n=g.n,
        m=g.m,
        min_degree=min(degs) if degs else 0,
        max_degree=max(degs) if degs else 0,
        is_connected=conn,
        is_tree=conn and g.m == g.n - 1,
    )


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph, relabeled 0..len(vertices)-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    vset = set(vertices)
    for u in vertices:
        for w in g.neighbors(u):
            if w in vset and u < w:
                edges.append((index[u], index[w]))
    return Graph(len(vertices), edges)
