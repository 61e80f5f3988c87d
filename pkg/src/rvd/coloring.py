"""Vertex colorings, rainbow sets, and rainbow vertex-cut search.

The cut semantics: for a nonadjacent pair x,y a valid cut is a rainbow
set S (pairwise distinct colors, x,y excluded) separating x from y in
G - S. For an adjacent pair the separation happens in (G - xy) - S and
the rainbow condition moves to S+x or S+y; the vertex of the pair that
keeps S+vertex rainbow is recorded as the certificate's side witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import Graph, is_connected, reachable_mask


@dataclass(frozen=True)
class VertexColoring:
    """Per-vertex color ids. Canonical means the ids used are exactly 1..k."""

    colors: tuple[int, ...]

    def __post_init__(self):
        if any(c < 1 for c in self.colors):
            raise ValueError("color ids must be positive")

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def k(self) -> int:
        """Number of distinct colors used."""
        return len(set(self.colors))

    @property
    def is_canonical(self) -> bool:
        return set(self.colors) == set(range(1, self.k + 1))

    def color_classes(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            classes.setdefault(c, []).append(v)
        return classes

    def refine_check(self, other: "VertexColoring") -> bool:
        """True iff ``other`` refines this coloring (splits classes, never merges)."""
        if other.n != self.n:
            return False
        seen: dict[int, int] = {}
        for v in range(self.n):
            c = other.colors[v]
            if c in seen and seen[c] != self.colors[v]:
                return False
            seen[c] = self.colors[v]
        return True

    def __str__(self) -> str:
        return format_coloring(self)


def parse_coloring(text: str) -> VertexColoring:
    """Parse the comma-separated text form, e.g. "1,1,2,3"."""
    try:
        colors = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad coloring text {text!r}: {exc}") from None
    return VertexColoring(colors)


def format_coloring(c: VertexColoring) -> str:
    return ",".join(str(x) for x in c.colors)


def monochromatic_coloring(n: int) -> VertexColoring:
    return VertexColoring((1,) * n)


def identity_coloring(n: int) -> VertexColoring:
    return VertexColoring(tuple(range(1, n + 1)))


@dataclass(frozen=True)
class CutCertificate:
    """Witness that the pair (x, y) has a rainbow vertex-cut ``cut``.

    ``side_witness`` is set for adjacent pairs: the endpoint w with
    cut + w rainbow. For nonadjacent pairs it is None (the cut itself
    must be rainbow).
    """

    x: int
    y: int
    cut: tuple[int, ...]
    side_witness: Optional[int] = None


def is_rainbow(c: VertexColoring, vertices: Iterable[int]) -> bool:
    """True iff the colors on ``vertices`` are pairwise distinct."""
    seen = set()
    for v in vertices:
        col = c.colors[v]
        if col in seen:
            return False
        seen.add(col)
    return True


def is_vertex_cut(g: Graph, cut: Iterable[int], x: int, y: int) -> bool:
    """True iff removing ``cut`` separates x from y (in G - xy when adjacent)."""
    if x == y:
        raise ValueError("vertex cut requires two distinct vertices")
    banned = 0
    for v in cut:
        if v == x or v == y:
            raise ValueError(f"cut may not contain the pair vertex {v}")
        banned |= 1 << v
    allowed = ((1 << g.n) - 1) & ~banned
    skip = (x, y) if g.has_edge(x, y) else None
    return not (reachable_mask(g, x, allowed, skip) >> y & 1)


def _cut_mask_ok(g: Graph, mask: int, x: int, y: int, skip) -> bool:
    allowed = ((1 << g.n) - 1) & ~mask
    return not (reachable_mask(g, x, allowed, skip) >> y & 1)


def exists_rainbow_cut(g: Graph, c: VertexColoring, x: int, y: int
                       ) -> Optional[CutCertificate]:
    """Search for an x-y rainbow vertex-cut under coloring ``c``.

    A rainbow set picks at most one vertex per color class, so candidates
    are per-class selections from V minus {x,y} explored depth-first in
    class order (each class offers its vertices in id order, then the
    empty choice). For adjacent pairs, selections touching both the class
    of x and the class of y are pruned since neither S+x nor S+y could be
    rainbow. The first cut found is shrunk to an inclusion-minimal one.
    """
    if x == y:
        raise ValueError("rainbow cut requires two distinct vertices")
    if c.n != g.n:
        raise ValueError("coloring size does not match graph order")
    adjacent = g.has_edge(x, y)
    skip = (x, y) if adjacent else None
    pairbit = (1 << x) | (1 << y)

    classes = sorted(c.color_classes().items())
    choices: list[tuple[int, list[int]]] = []
    for color, members in classes:
        avail = [v for v in members if v != x and v != y]
        choices.append((color, avail))

    cx, cy = c.colors[x], c.colors[y]
    found: list[int] = []

    def search(idx: int, mask: int, used_cx: bool, used_cy: bool) -> bool:
        if adjacent and used_cx and used_cy:
            return False
        if idx == len(choices):
            if not _cut_mask_ok(g, mask, x, y, skip):
                return False
            found.append(mask)
            return True
        color, avail = choices[idx]
        for v in avail:
            if search(idx + 1, mask | (1 << v),
                      used_cx or color == cx, used_cy or color == cy):
                return True
        return search(idx + 1, mask, used_cx, used_cy)

    if not search(0, 0, False, False):
        return None

    mask = found[0]
    # greedy shrink: dropping vertices keeps rainbow-ness and the side
    # condition, so only the cut property needs rechecking
    v = 0
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        if _cut_mask_ok(g, mask & ~low, x, y, skip):
            mask &= ~low
    cut = []
    rest = mask
    while rest:
        low = rest & -rest
        cut.append(low.bit_length() - 1)
        rest ^= low

    witness = None
    if adjacent:
        in_cut_colors = {c.colors[v] for v in cut}
        witness = x if cx not in in_cut_colors else y
    return CutCertificate(x, y, tuple(cut), witness)


def verify_certificate(g: Graph, c: VertexColoring, cert: CutCertificate) -> bool:
    """Independent re-check of a certificate against the definitions."""
    if cert.x == cert.y:
        return False
    if any(v in (cert.x, cert.y) for v in cert.cut):
        return False
    if not is_vertex_cut(g, cert.cut, cert.x, cert.y):
        return False
    if g.has_edge(cert.x, cert.y):
        if cert.side_witness not in (cert.x, cert.y):
            return False
        return is_rainbow(c, list(cert.cut) + [cert.side_witness])
    return cert.side_witness is None and is_rainbow(c, cert.cut)


@dataclass(frozen=True)
class RvdColoringCheck:
    valid: bool
    certificates: dict[tuple[int, int], CutCertificate]
    failing_pair: Optional[tuple[int, int]]


def is_rvd_coloring(g: Graph, c: VertexColoring) -> RvdColoringCheck:
    """Check that every vertex pair admits a rainbow vertex-cut.

    Stops at the first failing pair; on success returns all per-pair
    certificates in lexicographic pair order.
    """
    if g.n < 2:
        raise ValueError("need at least two vertices")
    if not is_connected(g):
        raise ValueError("rainbow vertex-disconnection is defined for connected graphs")
    if c.n != g.n:
        raise ValueError("coloring size does not match graph order")
    certs: dict[tuple[int, int], CutCertificate] = {}
    for x in range(g.n):
        for y in range(x + 1, g.n):
            cert = exists_rainbow_cut(g, c, x, y)
            if cert is None:
                return RvdColoringCheck(False, certs, (x, y))
            certs[(x, y)] = cert
    return RvdColoringCheck(True, certs, None)


def conflict_graph(g: Graph) -> Graph:
    """Graph joining pairs with >= 2 common neighbors.

    Any valid coloring must color such pairs differently, so cliques here
    force lower bounds and its edges prune the solver's partition search.
    """
    edges = []
    for u in range(g.n):
        au = g.adj_mask(u)
        for v in range(u + 1, g.n):
            if (au & g.adj_mask(v)).bit_count() >= 2:
                edges.append((u, v))
    return Graph(g.n, edges)
