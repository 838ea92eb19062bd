"""Bit-row graphs and the induced-structure primitives every detector reads.

A :class:`Graph` stores one integer per vertex; bit ``v`` of ``adj[u]`` is set
iff ``uv`` is an edge.  Vertex sets are plain ``int`` masks throughout.
"""
from __future__ import annotations

import os
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_N = 32
MAX_N_LIMIT = 64


def configured_max_n() -> int:
    """Vertex-count guard, overridable through ``BERGE_MAX_N``."""
    raw = os.environ.get("BERGE_MAX_N")
    if not raw:
        return DEFAULT_MAX_N
    value = int(raw)
    if not 0 <= value <= MAX_N_LIMIT:
        raise ValueError(f"BERGE_MAX_N must lie in 0..{MAX_N_LIMIT}, got {value}")
    return value


# ---------------------------------------------------------------------------
# vertex-set helpers

def members(mask: int) -> list[int]:
    """Ascending list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """All nonempty submasks of ``mask`` in increasing numeric order."""
    sub = 0
    while True:
        sub = (sub - mask) & mask
        if not sub:
            return
        yield sub


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], check: bool = True):
        adj = tuple(adj)
        if check:
            if n < 0 or len(adj) != n:
                raise ValueError("adjacency must have exactly n rows")
            full = (1 << n) - 1
            for u, row in enumerate(adj):
                if row & ~full:
                    raise ValueError(f"row {u} names a vertex outside 0..{n - 1}")
                if row >> u & 1:
                    raise ValueError(f"loop at vertex {u}")
                for v in members(row):
                    if not adj[v] >> u & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return Graph, (self.n, self.adj, False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n, check=False)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self, within: int | None = None) -> int:
        if within is None:
            return sum(popcount(row) for row in self.adj) // 2
        return sum(popcount(self.adj[v] & within) for v in members(within)) // 2

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, [full & ~row & ~(1 << u) for u, row in enumerate(self.adj)], check=False)

    def induced(self, s: int) -> "Graph":
        """Subgraph on ``s``, relabelled ``0..|s|-1`` in ascending original order."""
        verts = members(s)
        index = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            for w in members(self.adj[v] & s):
                row |= 1 << index[w]
            rows.append(row)
        return Graph(len(verts), rows, check=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for u in range(self.n):
            row = 0
            for w in members(self.adj[u]):
                row |= 1 << perm[w]
            rows[perm[u]] = row
        return Graph(self.n, rows, check=False)

    def is_clique(self, s: int) -> bool:
        return all((self.adj[v] | 1 << v) & s == s for v in members(s))

    def is_stable(self, s: int) -> bool:
        return all(not self.adj[v] & s for v in members(s))


# ---------------------------------------------------------------------------
# small named graphs

def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.empty(n).complement()


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, list(g.adj) + [row << g.n for row in h.adj], check=False)


def line_graph(root: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``root`` plus the edge behind each of its vertices."""
    edges = root.edges()
    n = len(edges)
    rows = [0] * n
    for i in range(n):
        a, b = edges[i]
        for j in range(i + 1, n):
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows, check=False), edges


# ---------------------------------------------------------------------------
# connectivity

def component_of(g: Graph, start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        grow = 0
        for v in members(frontier):
            grow |= adj[v]
        grow &= within & ~seen
        seen |= grow
        frontier = grow
    return seen


def components(g: Graph, s: int) -> list[int]:
    """Maximal connected subsets of ``s``, ordered by smallest member."""
    out = []
    rest = s
    while rest:
        comp = component_of(g, lowest(rest), s)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph, s: int) -> bool:
    return not s or component_of(g, lowest(s), s) == s


def anticomponent_of(g: Graph, start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        grow = 0
        for v in members(frontier):
            grow |= ~adj[v]
        grow &= within & ~seen
        seen |= grow
        frontier = grow
    return seen


def anticomponents(g: Graph, s: int) -> list[int]:
    out = []
    rest = s
    while rest:
        comp = anticomponent_of(g, lowest(rest), s)
        out.append(comp)
        rest &= ~comp
    return out


def is_anticonnected(g: Graph, s: int) -> bool:
    return not s or anticomponent_of(g, lowest(s), s) == s


def common_neighbours(g: Graph, s: int) -> int:
    """Vertices adjacent to every member of ``s`` (so outside ``s``)."""
    out = g.full & ~s
    for v in members(s):
        out &= g.adj[v]
    return out


# ---------------------------------------------------------------------------
# paths and holes

def is_induced_path(g: Graph, verts: Sequence[int]) -> bool:
    if not verts or len(set(verts)) != len(verts):
        return False
    for i, u in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if g.has_edge(u, verts[j]) != (j == i + 1):
                return False
    return True


def is_hole(g: Graph, verts: Sequence[int]) -> bool:
    k = len(verts)
    if k < 4 or len(set(verts)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(verts[i], verts[j]) != consecutive:
                return False
    return True


def induced_paths_from(g: Graph, start: int, interior: int, targets: int,
                       min_len: int = 1) -> Iterator[tuple[int, ...]]:
    """Induced paths ``start .. t`` with ``t`` in ``targets`` and interior inside ``interior``.

    A path may run through a target vertex only if that vertex is also in
    ``interior``.  Paths of length ``< min_len`` are not reported.
    """
    adj = g.adj
    path = [start]

    # blocked: closed neighbourhoods of every path vertex except the last one
    def rec(last: int, blocked: int):
        cand = adj[last] & ~blocked & ~(1 << start)
        cand &= interior | targets
        nb = blocked | adj[last] | (1 << last)
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            path.append(w)
            if low & targets and len(path) - 1 >= min_len:
                yield tuple(path)
            if low & interior:
                yield from rec(w, nb)
            path.pop()

    yield from rec(start, 1 << start)


def induced_paths(g: Graph, within: int | None = None, min_len: int = 0) -> Iterator[tuple[int, ...]]:
    """Every induced path inside ``within``, once, oriented with first end < last end."""
    s = g.full if within is None else within
    for v in members(s):
        if min_len == 0:
            yield (v,)
        higher = s & ~((2 << v) - 1)
        for p in induced_paths_from(g, v, s, higher, max(min_len, 1)):
            yield p


def _holes_from(g: Graph, s: int, within: int) -> Iterator[tuple[int, ...]]:
    """Holes whose smallest vertex is ``s``, oriented with second vertex < last."""
    adj = g.adj
    allowed = within & ~((2 << s) - 1)
    ns = adj[s]
    path = [s]

    def rec(last: int, blocked: int):
        # blocked holds N[v] for every path vertex except `last` (and except s's
        # neighbourhood, which is handled explicitly)
        cand = adj[last] & allowed & ~blocked
        nb = blocked | adj[last] | (1 << last)
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if low & ns:
                if len(path) >= 3 and w > path[1]:
                    yield tuple(path) + (w,)
                continue
            path.append(w)
            yield from rec(w, nb)
            path.pop()

    for v1 in members(ns & allowed):
        path.append(v1)
        # v1's neighbours are blocked for later vertices except the next one;
        # s's neighbourhood closes the cycle
        yield from rec(v1, (1 << s) | (1 << v1))
        path.pop()


def enumerate_holes(g: Graph, min_len: int = 4, parity: str = "any",
                    within: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every hole of length ``>= min_len`` with the requested parity, once each.

    Holes come out in canonical form: smallest vertex first, then the
    direction with the smaller second vertex; the stream is in lexicographic
    order of these tuples.
    """
    if min_len < 4:
        raise ValueError("holes have length at least 4")
    if parity not in ("any", "odd", "even"):
        raise ValueError(f"unknown parity filter {parity!r}")
    s_mask = g.full if within is None else within
    found = []
    for s in members(s_mask):
        for h in _holes_from(g, s, s_mask):
            k = len(h)
            if k < min_len:
                continue
            if parity == "odd" and k % 2 == 0 or parity == "even" and k % 2 == 1:
                continue
            found.append(h)
    found.sort()
    return iter(found)


def find_odd_hole(g: Graph, within: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically first odd hole (length >= 5), or ``None``."""
    s_mask = g.full if within is None else within
    for s in members(s_mask):
        best = None
        for h in _holes_from(g, s, s_mask):
            if len(h) % 2 and (best is None or h < best):
                best = h
        if best is not None:
            return best
    return None


def has_odd_hole(g: Graph) -> bool:
    for s in range(g.n):
        for h in _holes_from(g, s, g.full):
            if len(h) % 2:
                return True
    return False


def canonical_hole(verts: Sequence[int]) -> tuple[int, ...]:
    k = len(verts)
    i = min(range(k), key=lambda j: verts[j])
    fwd = tuple(verts[(i + j) % k] for j in range(k))
    back = tuple(verts[(i - j) % k] for j in range(k))
    return min(fwd, back)


# ---------------------------------------------------------------------------
# isomorphism: individualisation-refinement canonical form

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(popcount(adj[v] & m) for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        cells = out
        if not changed:
            return cells


def canonical_labeling(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(order, code)``: ``order[i]`` is the vertex given canonical label ``i``.

    ``code`` is the relabelled adjacency; two graphs are isomorphic iff their
    codes are equal.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return [], ()
    best: list = [None, None]

    def leaf(order: list[int]):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            row = 0
            for w in members(adj[v]):
                row |= 1 << pos[w]
            code.append(row)
        code = tuple(code)
        if best[1] is None or code > best[1]:
            best[0], best[1] = list(order), code

    def search(cells: list[list[int]]):
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            leaf([c[0] for c in cells])
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # vertices with identical neighbourhoods give isomorphic subtrees
            if any((adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            new = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(adj, new))

    degs = {}
    for v in range(n):
        degs.setdefault(popcount(adj[v]), []).append(v)
    start = [degs[d] for d in sorted(degs)]
    search(_refine(adj, start))
    return best[0], best[1]


def canonical_code(g: Graph) -> tuple[int, ...]:
    return canonical_labeling(g)[1]


def canonical_form(g: Graph) -> Graph:
    return Graph(g.n, canonical_code(g), check=False)


def is_isomorphic(g: Graph, h: Graph) -> list[int] | None:
    """Bijection ``phi`` (``phi[v]`` is the image of ``v``) with ``g`` -> ``h``, or ``None``."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    og, cg = canonical_labeling(g)
    oh, ch = canonical_labeling(h)
    if cg != ch:
        return None
    phi = [0] * g.n
    for i in range(g.n):
        phi[og[i]] = oh[i]
    return phi
