"""Detectors for prisms, the double diamond, L(K33), wheels, pseudowheels and
appearances of K4, plus the F1..F11 class ladder built on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Optional

from .graphcore import (
    Graph,
    common_neighbours,
    enumerate_holes,
    induced_paths_from,
    is_anticonnected,
    is_connected,
    line_graph,
    lowest,
    mask_of,
    members,
    popcount,
    complete_bipartite,
)
from .recognizers import BudgetExceeded, is_berge, recognize_line_of_bipartite

# ---------------------------------------------------------------------------
# fixed graphs

def double_diamond() -> Graph:
    """a1..a4 = 0..3, b1..b4 = 4..7."""
    edges = [(i, j) for i, j in combinations(range(4), 2) if (i, j) != (2, 3)]
    edges += [(4 + i, 4 + j) for i, j in combinations(range(4), 2) if (i, j) != (2, 3)]
    edges += [(i, 4 + i) for i in range(4)]
    return Graph.from_edges(8, edges)


def l_k33() -> Graph:
    return line_graph(complete_bipartite(3, 3))[0]


def l_k33_minus_e() -> Graph:
    k33e = Graph.from_edges(6, [(i, 3 + j) for i in range(3) for j in range(3) if (i, j) != (0, 0)])
    return line_graph(k33e)[0]


FIXED_GRAPHS = {
    "double_diamond": double_diamond,
    "L_K33": l_k33,
    "L_K33_minus_e": l_k33_minus_e,
}


def find_induced_copy(g: Graph, pattern: Graph) -> Optional[list[int]]:
    """Injective map ``pattern -> g`` preserving adjacency and non-adjacency."""
    k = pattern.n
    if k > g.n:
        return None
    if k == 0:
        return []
    # order pattern vertices so each one after the first touches an earlier one
    order = [max(range(k), key=lambda v: (pattern.degree(v), -v))]
    while len(order) < k:
        placed = mask_of(order)
        rest = [v for v in range(k) if not placed >> v & 1]
        order.append(max(rest, key=lambda v: (popcount(pattern.adj[v] & placed), pattern.degree(v), -v)))
    pdeg = [pattern.degree(v) for v in range(k)]
    gdeg = [g.degree(v) for v in range(g.n)]
    image = [0] * k
    adj = g.adj

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        p = order[i]
        cand = g.full & ~used
        for j in range(i):
            q = order[j]
            if pattern.adj[p] >> q & 1:
                cand &= adj[image[q]]
            else:
                cand &= ~adj[image[q]]
        for v in members(cand):
            if gdeg[v] < pdeg[p]:
                continue
            image[p] = v
            if rec(i + 1, used | 1 << v):
                return True
        return False

    return list(image) if rec(0, 0) else None


def contains_fixed(g: Graph, name: str) -> Optional[int]:
    """Vertex set of an induced copy of the named fixed graph, or ``None``."""
    try:
        pattern = FIXED_GRAPHS[name]()
    except KeyError:
        raise ValueError(f"unknown fixed graph {name!r}; expected one of {sorted(FIXED_GRAPHS)}") from None
    copy = find_induced_copy(g, pattern)
    return mask_of(copy) if copy is not None else None


# ---------------------------------------------------------------------------
# prisms

@dataclass(frozen=True)
class Prism:
    triangle_a: tuple[int, int, int]
    triangle_b: tuple[int, int, int]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]  # paths[i] runs a_i .. b_i

    @property
    def lengths(self) -> tuple[int, int, int]:
        return tuple(len(p) - 1 for p in self.paths)

    @property
    def even(self) -> bool:
        return all(length % 2 == 0 for length in self.lengths)

    @property
    def kind(self) -> str:
        return "even" if self.even else "odd"

    @property
    def long(self) -> bool:
        return any(length > 1 for length in self.lengths)

    @property
    def vertices(self) -> int:
        return mask_of(v for p in self.paths for v in p)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    adj = g.adj
    for a in range(g.n):
        for b in members(adj[a] >> (a + 1) << (a + 1)):
            for c in members(adj[a] & adj[b] >> (b + 1) << (b + 1)):
                out.append((a, b, c))
    return out


def find_prisms(g: Graph) -> Iterator[Prism]:
    """Every induced prism once, triangles sorted, triangle with the smaller
    minimum first, paths ordered by their ``a`` ends."""
    adj = g.adj
    tris = triangles(g)
    for ta in tris:
        ta_mask = mask_of(ta)
        for tb in tris:
            if tb[0] <= ta[0] or mask_of(tb) & ta_mask:
                continue
            tb_mask = mask_of(tb)
            for perm in permutations(tb):
                # a_i must miss every b_j with j != i
                if any(adj[ta[i]] >> perm[j] & 1 for i in range(3) for j in range(3) if i != j):
                    continue
                yield from _prism_paths(g, ta, perm, ta_mask | tb_mask)


def _prism_paths(g: Graph, ta, tb, tri_mask: int) -> Iterator[Prism]:
    adj = g.adj
    full = g.full

    def paths_for(i: int, used: int) -> Iterator[tuple[int, ...]]:
        a, b = ta[i], tb[i]
        if adj[a] >> b & 1:
            yield (a, b)
            return
        # interior: off the triangles, off earlier paths and their neighbours,
        # and away from the other triangle vertices
        others = tri_mask & ~(1 << a) & ~(1 << b)
        bad = used | tri_mask
        for v in members(others | used):
            bad |= adj[v]
        interior = full & ~bad
        yield from induced_paths_from(g, a, interior, 1 << b, 2)

    for p1 in paths_for(0, 0):
        m1 = mask_of(p1)
        for p2 in paths_for(1, m1):
            m2 = mask_of(p2)
            # interior of p2 must avoid p1; ends are checked through the triangle filter
            if any(adj[v] & m1 for v in p2[1:-1]):
                continue
            for p3 in paths_for(2, m1 | m2):
                if any(adj[v] & (m1 | m2) for v in p3[1:-1]):
                    continue
                yield Prism(tuple(ta), tuple(tb), (p1, p2, p3))


def has_long_prism(g: Graph) -> bool:
    return any(p.long for p in find_prisms(g))


def has_even_prism(g: Graph) -> bool:
    return any(p.even for p in find_prisms(g))


def is_prism_graph(g: Graph, lengths_even: bool | None = None) -> Optional[Prism]:
    """A prism using every vertex of ``g`` (optionally with the given parity)."""
    for p in find_prisms(g):
        if p.vertices == g.full and (lengths_even is None or p.even == lengths_even):
            return p
    return None


def prism_graph(l1: int, l2: int, l3: int) -> Graph:
    """Prism with path lengths ``l1, l2, l3`` (each >= 1)."""
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    ends = []
    for a, length in zip((0, 1, 2), (l1, l2, l3)):
        prev = a
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        ends.append((prev, nxt))
        nxt += 1
    b = [e[1] for e in ends]
    edges += [(prev, bi) for prev, bi in ends]
    edges += [(b[0], b[1]), (b[0], b[2]), (b[1], b[2])]
    return Graph.from_edges(nxt, edges)


# ---------------------------------------------------------------------------
# wheels

@dataclass(frozen=True)
class Wheel:
    rim: tuple[int, ...]
    hub: int
    segments: tuple[tuple[int, ...], ...]

    @property
    def odd(self) -> bool:
        return any((len(s) - 1) % 2 == 1 for s in self.segments)


def hub_segments(g: Graph, rim: tuple[int, ...], hub: int) -> tuple[tuple[int, ...], ...]:
    """Maximal rim subpaths whose vertices are all hub-complete."""
    k = len(rim)
    comp = [all(g.adj[v] >> y & 1 for y in members(hub)) for v in rim]
    if all(comp):
        return tuple(tuple(rim[(i + j) % k] for j in range(k - 1)) for i in range(k))
    start = comp.index(False)
    segs = []
    run: list[int] = []
    for j in range(1, k + 1):
        idx = (start + j) % k
        if comp[idx]:
            run.append(rim[idx])
        elif run:
            segs.append(tuple(run))
            run = []
    return tuple(segs)


def is_wheel(g: Graph, rim: tuple[int, ...], hub: int) -> bool:
    if len(rim) < 6 or not hub or hub & mask_of(rim) or not is_anticonnected(g, hub):
        return False
    k = len(rim)
    cn = common_neighbours(g, hub)
    complete_edges = [i for i in range(k) if cn >> rim[i] & 1 and cn >> rim[(i + 1) % k] & 1]
    for i, j in combinations(complete_edges, 2):
        if len({rim[i], rim[(i + 1) % k], rim[j], rim[(j + 1) % k]}) == 4:
            return True
    return False


def find_wheels(g: Graph, rims=None) -> Iterator[Wheel]:
    seen = set()
    adj = g.adj
    for rim in enumerate_holes(g, 6) if rims is None else rims:
        k = len(rim)
        rim_mask = mask_of(rim)
        for i in range(k):
            e1 = (rim[i], rim[(i + 1) % k])
            for j in range(i + 2, k):
                e2 = (rim[j], rim[(j + 1) % k])
                if e2[1] == e1[0]:
                    continue
                pool = adj[e1[0]] & adj[e1[1]] & adj[e2[0]] & adj[e2[1]] & ~rim_mask
                sub = pool
                while sub:
                    if (rim, sub) not in seen and is_anticonnected(g, sub):
                        seen.add((rim, sub))
                        yield Wheel(rim, sub, hub_segments(g, rim, sub))
                    sub = (sub - 1) & pool


def has_wheel(g: Graph, odd_only: bool = False) -> bool:
    return any(w.odd or not odd_only for w in find_wheels(g))


def has_three_consecutive(g: Graph) -> bool:
    """Some hole of length >= 6 has a vertex adjacent to three consecutive rim vertices."""
    adj = g.adj
    for rim in enumerate_holes(g, 6):
        k = len(rim)
        for i in range(k):
            if adj[rim[i]] & adj[rim[(i + 1) % k]] & adj[rim[(i + 2) % k]]:
                return True
    return False


# ---------------------------------------------------------------------------
# pseudowheels

@dataclass(frozen=True)
class Pseudowheel:
    X: int
    Y: int
    path: tuple[int, ...]


def is_pseudowheel(g: Graph, X: int, Y: int, path: tuple[int, ...]) -> bool:
    if not X or not Y or X & Y:
        return False
    if not (is_anticonnected(g, X) and is_anticonnected(g, Y)):
        return False
    if any((g.adj[x] & Y) != Y for x in members(X)):
        return False
    pm = mask_of(path)
    if len(path) < 5 or pm & (X | Y):
        return False
    cx = common_neighbours(g, X)
    cy = common_neighbours(g, Y)
    if (cx & pm) != (1 << path[0] | 1 << path[-1]):
        return False
    if not cy >> path[0] & 1 or popcount(cy & pm) < 2:
        return False
    return not (cy >> path[1] & 1 or cy >> path[-1] & 1)


def find_pseudowheels(g: Graph) -> Iterator[Pseudowheel]:
    adj = g.adj
    full = g.full
    for p1 in range(g.n):
        for path in induced_paths_from(g, p1, full, full, 4):
            pm = mask_of(path)
            pn = path[-1]
            pool_x = adj[p1] & adj[pn] & ~pm
            inner = path[1:-1]
            sub = pool_x
            while sub:
                X = sub
                sub = (sub - 1) & pool_x
                cx = common_neighbours(g, X)
                if any(cx >> v & 1 for v in inner) or not is_anticonnected(g, X):
                    continue
                pool_y = cx & adj[p1] & ~pm
                ysub = pool_y
                while ysub:
                    Y = ysub
                    ysub = (ysub - 1) & pool_y
                    cy = common_neighbours(g, Y)
                    if cy >> path[1] & 1 or cy >> pn & 1:
                        continue
                    if popcount(cy & pm) < 2 or not is_anticonnected(g, Y):
                        continue
                    yield Pseudowheel(X, Y, path)


# ---------------------------------------------------------------------------
# appearances of K4

K4_FOUR_CYCLES = (((0, 1), (1, 2), (2, 3), (0, 3)),
                  ((0, 1), (1, 3), (2, 3), (0, 2)),
                  ((0, 2), (1, 2), (1, 3), (0, 3)))


@dataclass(frozen=True)
class AppearanceK4:
    vertices: int
    root: Graph
    degenerate: bool


def k4_subdivision_branches(h: Graph) -> Optional[dict[tuple[int, int], int]]:
    """Branch lengths if ``h`` is a subdivision of K4, keyed by pairs of the
    sorted degree-3 vertices' indices; ``None`` otherwise."""
    degs = [h.degree(v) for v in range(h.n)]
    branch = [v for v in range(h.n) if degs[v] == 3]
    if len(branch) != 4 or any(d not in (2, 3) for d in degs):
        return None
    if not is_connected(h, h.full):
        return None
    index = {v: i for i, v in enumerate(branch)}
    lengths: dict[tuple[int, int], int] = {}
    walks: dict[tuple[int, int], int] = {}
    for b in branch:
        for first in members(h.adj[b]):
            prev, cur, steps = b, first, 1
            while degs[cur] == 2:
                nxt = h.adj[cur] & ~(1 << prev)
                prev, cur, steps = cur, lowest(nxt), steps + 1
            if cur == b:
                return None
            key = tuple(sorted((index[b], index[cur])))
            walks[key] = walks.get(key, 0) + 1
            lengths[key] = steps
    # each of the six pairs joined by exactly one branch, walked from both ends
    if len(walks) != 6 or any(c != 2 for c in walks.values()):
        return None
    return lengths


def find_appearances_k4(g: Graph, max_subsets: int = 1 << 16) -> Iterator[AppearanceK4]:
    """Induced ``L(H)`` with ``H`` a bipartite subdivision of K4.

    ``L(H)`` has ``|E(H)|`` vertices and ``|E(H)| + 6`` edges, which prunes
    most subsets before the line-graph root is reconstructed.
    """
    n = g.n
    examined = 0
    adj = g.adj
    for size in range(8, n + 1):
        for verts in combinations(range(n), size):
            examined += 1
            if examined > max_subsets:
                raise BudgetExceeded(f"appearance search passed {max_subsets} vertex subsets")
            s = mask_of(verts)
            edges = 0
            ok = True
            for v in verts:
                d = popcount(adj[v] & s)
                if d < 2 or d > 4:
                    ok = False
                    break
                edges += d
            if not ok or edges != 2 * (size + 6):
                continue
            sub = g.induced(s)
            if not is_connected(sub, sub.full):
                continue
            cert = recognize_line_of_bipartite(sub)
            if cert is None:
                continue
            lengths = k4_subdivision_branches(cert.root)
            if lengths is None:
                continue
            degenerate = any(all(lengths[e] == 1 for e in cyc) for cyc in K4_FOUR_CYCLES)
            yield AppearanceK4(s, cert.root, degenerate)


def has_appearance_k4(g: Graph, nondegenerate_only: bool = False) -> bool:
    return any(not a.degenerate or not nondegenerate_only for a in find_appearances_k4(g))


# ---------------------------------------------------------------------------
# F-ladder

F8_DEFAULT_MAX_N = 10


class NotBergeError(ValueError):
    def __init__(self, witness):
        super().__init__(f"graph is not Berge: odd hole {witness.hole} in {witness.side}")
        self.witness = witness


@dataclass
class FLadderReport:
    flags: list = field(default_factory=lambda: [None] * 11)  # True / False / None (not computed)
    f8_skipped: Optional[str] = None

    def member(self, k: int):
        return self.flags[k - 1]

    @property
    def depth(self) -> int:
        """Largest k with membership in F_k established (0 if none)."""
        d = 0
        for flag in self.flags:
            if flag is not True:
                break
            d += 1
        return d


def _conditions(g: Graph, gc: Graph):
    yield lambda: not has_appearance_k4(g, nondegenerate_only=True)
    yield lambda: not has_appearance_k4(gc, nondegenerate_only=True) and contains_fixed(g, "L_K33") is None
    yield lambda: not has_appearance_k4(g) and not has_appearance_k4(gc)
    yield lambda: not has_even_prism(g)
    yield lambda: not has_long_prism(g) and not has_long_prism(gc)
    yield lambda: contains_fixed(g, "double_diamond") is None
    yield lambda: not has_wheel(g, odd_only=True) and not has_wheel(gc, odd_only=True)
    yield None  # pseudowheels, handled separately
    yield lambda: not has_wheel(g) and not has_wheel(gc)
    yield lambda: not has_three_consecutive(g) and not has_three_consecutive(gc)
    yield lambda: not any(True for _ in enumerate_holes(gc, 5))


def f_ladder(g: Graph, check_f8: bool = True, upto: int = 11,
             f8_max_n: int = F8_DEFAULT_MAX_N) -> FLadderReport:
    """Membership of a Berge graph in F1 .. F_upto.

    Flags are three-valued: once a class fails every later class fails; if F8
    is skipped, later classes are ``None`` unless their own condition fails.
    """
    verdict = is_berge(g)
    if not verdict:
        raise NotBergeError(verdict)
    gc = g.complement()
    report = FLadderReport()
    prev = True
    for k, cond in enumerate(_conditions(g, gc), start=1):
        if k > upto:
            break
        if prev is False:
            report.flags[k - 1] = False
            continue
        if cond is None:
            if not check_f8:
                report.f8_skipped = "disabled"
                holds = None
            elif g.n > f8_max_n:
                report.f8_skipped = f"budget: n={g.n} > {f8_max_n}"
                holds = None
            else:
                holds = next(find_pseudowheels(g), None) is None and next(find_pseudowheels(gc), None) is None
        else:
            holds = cond()
        if holds is False:
            prev = False
        elif holds is None or prev is None:
            prev = None
        report.flags[k - 1] = prev
    return report
