"""Berge and perfection tests, exact colouring, and the five basic classes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graphcore import (
    Graph,
    find_odd_hole,
    line_graph,
    lowest,
    members,
    popcount,
)

PERFECT_MAX_N = 12


class BudgetExceeded(RuntimeError):
    """A search would exceed its configured size limit."""


# ---------------------------------------------------------------------------
# Berge

@dataclass(frozen=True)
class BergeResult:
    berge: bool
    side: Optional[str] = None  # "G" or "complement"
    hole: Optional[tuple[int, ...]] = None

    def __bool__(self):
        return self.berge


def is_berge(g: Graph) -> BergeResult:
    """No odd hole in ``g`` and none in its complement.

    The witness is an odd hole of ``g`` (side ``"G"``) or of the complement
    (side ``"complement"``, i.e. an odd antihole of ``g``).
    """
    hole = find_odd_hole(g)
    if hole is not None:
        return BergeResult(False, "G", hole)
    hole = find_odd_hole(g.complement())
    if hole is not None:
        return BergeResult(False, "complement", hole)
    return BergeResult(True)


# ---------------------------------------------------------------------------
# clique number and chromatic number (branch and bound)

def clique_number(g: Graph, within: int | None = None) -> int:
    s = g.full if within is None else within
    adj = g.adj
    best = 0

    def colour_bound(cand: int) -> int:
        # greedy colouring of cand: number of colour classes bounds any clique
        k = 0
        rest = cand
        while rest:
            k += 1
            avail = rest
            while avail:
                v = lowest(avail)
                rest &= ~(1 << v)
                avail &= ~(1 << v) & ~adj[v]
        return k

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        if size + colour_bound(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = lowest(cand)
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, s)
    return best


def chromatic_number(g: Graph, within: int | None = None) -> int:
    """Exact DSATUR branch and bound; ties go to the lowest vertex."""
    s = g.full if within is None else within
    verts = members(s)
    if not verts:
        return 0
    adj = g.adj
    lower = clique_number(g, s)
    colour = {}
    best = [len(verts) + 1]

    def pick(uncoloured: list[int]) -> int:
        best_v, best_key = -1, None
        for v in uncoloured:
            sat = len({colour[w] for w in members(adj[v] & s) if w in colour})
            deg = popcount(adj[v] & s)
            key = (sat, deg, -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def rec(uncoloured: list[int], used: int) -> bool:
        if used >= best[0]:
            return False
        if not uncoloured:
            best[0] = used
            return used == lower
        v = pick(uncoloured)
        rest = [u for u in uncoloured if u != v]
        taken = {colour[w] for w in members(adj[v] & s) if w in colour}
        for c in range(used):
            if c not in taken:
                colour[v] = c
                if rec(rest, used):
                    return True
                del colour[v]
        if used + 1 < best[0]:
            colour[v] = used
            if rec(rest, used + 1):
                return True
            del colour[v]
        return False

    rec(verts, 0)
    return best[0]


# ---------------------------------------------------------------------------
# perfection by subset dynamic programming

@dataclass(frozen=True)
class PerfectionReport:
    perfect: bool
    witness: Optional[int] = None  # vertex set H
    omega: Optional[int] = None
    chi: Optional[int] = None


def subset_tables(g: Graph) -> tuple[list[int], list[int]]:
    """Clique number and chromatic number of ``g|S`` for every subset mask ``S``."""
    n = g.n
    size = 1 << n
    adj = g.adj
    omega = [0] * size
    for s in range(1, size):
        top = s.bit_length() - 1
        rest = s ^ (1 << top)
        a = omega[rest]
        b = omega[rest & adj[top]] + 1
        omega[s] = a if a > b else b
    stable = [False] * size
    stable[0] = True
    for s in range(1, size):
        top = s.bit_length() - 1
        rest = s ^ (1 << top)
        stable[s] = stable[rest] and not adj[top] & rest
    chi = [0] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        free = s & ~adj[v] & ~low
        best = chi[s ^ low] + 1
        target = omega[s]
        if best > target:
            sub = free
            while sub:
                if stable[sub]:
                    c = chi[s ^ low ^ sub] + 1
                    if c < best:
                        best = c
                        if best == target:
                            break
                sub = (sub - 1) & free
        chi[s] = best
    return omega, chi


def is_perfect(g: Graph, max_n: int = PERFECT_MAX_N) -> PerfectionReport:
    """Check omega = chi on all ``2^n`` induced subgraphs.

    The witness is the smallest violating vertex set, by size then
    lexicographic order of its sorted members.
    """
    if g.n > max_n:
        raise BudgetExceeded(f"is_perfect examines 2^n subsets; n={g.n} exceeds {max_n}")
    omega, chi = subset_tables(g)
    bad = [s for s in range(1, 1 << g.n) if omega[s] != chi[s]]
    if not bad:
        return PerfectionReport(True)
    h = min(bad, key=lambda s: (popcount(s), members(s)))
    return PerfectionReport(False, h, omega[h], chi[h])


# ---------------------------------------------------------------------------
# basic classes

@dataclass(frozen=True)
class Bipartite:
    A: int
    B: int
    cls = "bipartite"


@dataclass(frozen=True)
class ComplementBipartite:
    A: int  # parts of the complement, i.e. two cliques of g
    B: int
    cls = "complement_bipartite"


@dataclass(frozen=True)
class LineOfBipartite:
    root: Graph
    edge_map: tuple[tuple[int, int], ...]  # vertex v of g <-> root edge edge_map[v]
    cls = "line_of_bipartite"


@dataclass(frozen=True)
class ComplementLineOfBipartite:
    root: Graph  # root of the complement
    edge_map: tuple[tuple[int, int], ...]
    cls = "complement_line_of_bipartite"


@dataclass(frozen=True)
class Bicograph:
    ab_pairs: tuple[tuple[int, int], ...]  # adjacent pairs (a_i, b_i)
    cd_pairs: tuple[tuple[int, int], ...]  # nonadjacent pairs (c_j, d_j)
    cls = "bicograph"


BasicCert = Union[Bipartite, ComplementBipartite, LineOfBipartite,
                  ComplementLineOfBipartite, Bicograph]


def two_colouring(g: Graph) -> Optional[tuple[int, int]]:
    adj = g.adj
    side_a = side_b = 0
    rest = g.full
    while rest:
        start = lowest(rest)
        layer, colour = 1 << start, 0
        comp = 1 << start
        while layer:
            if colour == 0:
                side_a |= layer
            else:
                side_b |= layer
            nxt = 0
            for v in members(layer):
                nxt |= adj[v]
            nxt &= ~comp
            comp |= nxt
            layer, colour = nxt, 1 - colour
        rest &= ~comp
    for v in members(side_a):
        if adj[v] & side_a:
            return None
    for v in members(side_b):
        if adj[v] & side_b:
            return None
    return side_a, side_b


def recognize_bipartite(g: Graph) -> Optional[Bipartite]:
    parts = two_colouring(g)
    return Bipartite(*parts) if parts is not None else None


def _krausz_partitions(g: Graph):
    """Yield every partition of E(g) into cliques with each vertex in at most two."""
    adj = g.adj
    n = g.n
    count = [0] * n
    uncovered = list(adj)
    cliques: list[int] = []

    def cover(k: int) -> bool:
        verts = members(k)
        for v in verts:
            if count[v] >= 2:
                return False
            if (uncovered[v] & k) != (k & ~(1 << v)):
                return False
        for v in verts:
            count[v] += 1
            uncovered[v] &= ~k
        cliques.append(k)
        return True

    def uncover(k: int):
        cliques.pop()
        for v in members(k):
            count[v] -= 1
            uncovered[v] |= k & ~(1 << v)

    def rec():
        for v in range(n):
            if count[v] >= 2 and uncovered[v]:
                return
        u = next((v for v in range(n) if uncovered[v]), -1)
        if u < 0:
            yield list(cliques)
            return
        nbrs = uncovered[u]
        if count[u] == 1:
            k = nbrs | 1 << u
            if g.is_clique(k) and cover(k):
                yield from rec()
                uncover(k)
            return
        if count[u] >= 2:
            return
        w = lowest(nbrs)
        pool = nbrs & adj[w] & ~(1 << w)
        sub = pool
        while True:
            first = sub | 1 << w | 1 << u
            second = nbrs & ~first
            if g.is_clique(first) and g.is_clique(second | 1 << u):
                if cover(first):
                    if second:
                        if cover(second | 1 << u):
                            yield from rec()
                            uncover(second | 1 << u)
                    else:
                        yield from rec()
                    uncover(first)
            if not sub:
                break
            sub = (sub - 1) & pool

    yield from rec()


def _root_from_cliques(g: Graph, cliques: list[int]) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    ends: list[list[int]] = [[] for _ in range(g.n)]
    for idx, k in enumerate(cliques):
        for v in members(k):
            ends[v].append(idx)
    nxt = len(cliques)
    edge_map = []
    for v in range(g.n):
        e = ends[v]
        while len(e) < 2:
            e.append(nxt)
            nxt += 1
        edge_map.append((min(e), max(e)))
    root = Graph.from_edges(nxt, edge_map)
    return root, tuple(edge_map)


def recognize_line_of_bipartite(g: Graph) -> Optional[LineOfBipartite]:
    """Root ``H`` with ``L(H) = g`` and ``H`` bipartite, if any.

    Every Krausz clique partition is tried; among bipartite roots the one with
    fewest vertices, then the lexicographically least edge map, is returned.
    """
    best = None
    for cliques in _krausz_partitions(g):
        root, edge_map = _root_from_cliques(g, cliques)
        if two_colouring(root) is None:
            continue
        key = (root.n, edge_map)
        if best is None or key < best[0]:
            best = (key, root, edge_map)
    if best is None:
        return None
    return LineOfBipartite(best[1], best[2])


def recognize_bicograph(g: Graph) -> Optional[Bicograph]:
    """Bicograph certificate, or ``None``.

    The a/b side has degree ``n_cd + 1`` and the c/d side degree
    ``2 n_cd - 2 + m``, so the degree signature fixes the split for each
    guess of ``m``; pairs are then forced by the induced matchings.
    """
    total = g.n
    if total < 8 or total % 2:
        return None
    adj = g.adj
    half = total // 2
    for m in range(2, half - 1):
        nn = half - m
        ab = [v for v in range(total) if popcount(adj[v]) == nn + 1]
        cd = [v for v in range(total) if popcount(adj[v]) == 2 * nn - 2 + m]
        if len(ab) != 2 * m or len(cd) != 2 * nn:
            continue
        ab_mask = sum(1 << v for v in ab)
        cd_mask = sum(1 << v for v in cd)
        pairs_ab = []
        ok = True
        for v in ab:
            inside = adj[v] & ab_mask
            if popcount(inside) != 1:
                ok = False
                break
            w = lowest(inside)
            if v < w:
                pairs_ab.append((v, w))
        if not ok:
            continue
        pairs_cd = []
        for v in cd:
            missing = cd_mask & ~adj[v] & ~(1 << v)
            if popcount(missing) != 1:
                ok = False
                break
            w = lowest(missing)
            if v < w:
                pairs_cd.append((v, w))
        if not ok:
            continue
        for a, b in pairs_ab:
            for c, d in pairs_cd:
                straight = g.has_edge(a, c) and g.has_edge(b, d) and not g.has_edge(a, d) and not g.has_edge(b, c)
                crossed = g.has_edge(a, d) and g.has_edge(b, c) and not g.has_edge(a, c) and not g.has_edge(b, d)
                if not (straight or crossed):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return Bicograph(tuple(pairs_ab), tuple(pairs_cd))
    return None


def classify_basic(g: Graph) -> Optional[BasicCert]:
    """First basic class that fits, in the fixed order
    bipartite, complement bipartite, line of bipartite, complement line of
    bipartite, bicograph."""
    cert = recognize_bipartite(g)
    if cert is not None:
        return cert
    gc = g.complement()
    parts = two_colouring(gc)
    if parts is not None:
        return ComplementBipartite(*parts)
    line = recognize_line_of_bipartite(g)
    if line is not None:
        return line
    line = recognize_line_of_bipartite(gc)
    if line is not None:
        return ComplementLineOfBipartite(line.root, line.edge_map)
    return recognize_bicograph(g)


def is_basic(g: Graph) -> bool:
    return classify_basic(g) is not None


def clique_cover_number(g: Graph) -> int:
    return chromatic_number(g.complement())


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


__all__ = [
    "BasicCert", "BergeResult", "Bicograph", "Bipartite", "BudgetExceeded",
    "ComplementBipartite", "ComplementLineOfBipartite", "LineOfBipartite",
    "PerfectionReport", "chromatic_number", "classify_basic", "clique_number",
    "independence_number", "is_basic", "is_berge", "is_perfect", "line_graph",
    "recognize_bicograph", "recognize_bipartite", "recognize_line_of_bipartite",
    "subset_tables", "two_colouring",
]
