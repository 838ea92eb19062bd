"""Independent certificate checkers and brute-force reference routines.

Everything here works on plain Python sets and the ``has_edge`` predicate,
deliberately avoiding the bitmask search code used by the finders, so that a
certificate accepted here has been checked along a separate code path.
Checkers return a list of problems; an empty list means the certificate is valid.
"""
from __future__ import annotations

from itertools import combinations
from types import SimpleNamespace
from typing import Iterable, Iterator

from .graphcore import Graph

# ---------------------------------------------------------------------------
# basics


def vset(mask_or_iter) -> set[int]:
    if isinstance(mask_or_iter, int):
        out, v = set(), 0
        while mask_or_iter:
            if mask_or_iter & 1:
                out.add(v)
            mask_or_iter >>= 1
            v += 1
        return out
    return set(mask_or_iter)


def nbrs(g: Graph, v: int) -> set[int]:
    return {w for w in range(g.n) if w != v and g.has_edge(v, w)}


def naive_components(g: Graph, s: Iterable[int], anti: bool = False) -> list[set[int]]:
    """Components (or anticomponents) of ``g|s`` by breadth-first search."""
    left = set(s)
    out = []
    while left:
        start = min(left)
        comp, frontier = {start}, [start]
        while frontier:
            u = frontier.pop()
            for w in list(left - comp):
                if g.has_edge(u, w) != anti:
                    comp.add(w)
                    frontier.append(w)
        left -= comp
        out.append(comp)
    return out


def complete_to(g: Graph, v: int, s: set[int]) -> bool:
    return all(g.has_edge(v, w) for w in s)


def anticomplete_to(g: Graph, v: int, s: set[int]) -> bool:
    return not any(g.has_edge(v, w) for w in s)


def sets_complete(g: Graph, s: set[int], t: set[int]) -> bool:
    return all(g.has_edge(u, w) for u in s for w in t)


def sets_anticomplete(g: Graph, s: set[int], t: set[int]) -> bool:
    return not any(g.has_edge(u, w) for u in s for w in t)


def simple_paths(g: Graph, s: int, t: int, interior: set[int]) -> Iterator[tuple[int, ...]]:
    """Induced paths s .. t (s != t) of length >= 1 with interior in ``interior``."""
    pool = set(interior) - {s, t}

    def extend(path):
        last = path[-1]
        if g.has_edge(last, t) and not any(g.has_edge(t, z) for z in path[:-1]):
            yield tuple(path) + (t,)
        for w in sorted(pool - set(path)):
            if g.has_edge(last, w) and not any(g.has_edge(w, z) for z in path[:-1]):
                path.append(w)
                yield from extend(path)
                path.pop()

    yield from extend([s])


# ---------------------------------------------------------------------------
# basic classes

def _is_stable_set(g: Graph, s: set[int]) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(sorted(s), 2))


def naive_bipartition(g: Graph):
    side = {}
    for start in range(g.n):
        if start in side:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in nbrs(g, u):
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def check_basic(g: Graph, cert) -> list[str]:
    cls = cert.cls
    probs: list[str] = []
    if cls in ("complement_bipartite", "complement_line_of_bipartite"):
        # same fields, read against the complement
        inner = SimpleNamespace(**vars(cert))
        inner.cls = cls[len("complement_"):]
        return [f"complement: {p}" for p in check_basic(g.complement(), inner)]
    if cls == "bipartite":
        a, b = vset(cert.A), vset(cert.B)
        if a & b or a | b != set(range(g.n)):
            probs.append("A, B do not partition V")
        if not _is_stable_set(g, a) or not _is_stable_set(g, b):
            probs.append("a side is not stable")
        return probs
    if cls == "line_of_bipartite":
        root, emap = cert.root, cert.edge_map
        if len(emap) != g.n:
            return ["edge map does not cover every vertex"]
        if naive_bipartition(root) is None:
            probs.append("root is not bipartite")
        for (u, v) in emap:
            if not root.has_edge(u, v):
                probs.append(f"edge map names non-edge {u}-{v} of the root")
        if len(set(map(tuple, map(sorted, emap)))) != len(emap):
            probs.append("edge map repeats an edge")
        if len(emap) != len(root.edges()):
            probs.append("edge map misses root edges")
        for i, j in combinations(range(g.n), 2):
            share = bool(set(emap[i]) & set(emap[j]))
            if share != g.has_edge(i, j):
                probs.append(f"vertices {i},{j}: adjacency disagrees with the root")
                break
        return probs
    if cls == "bicograph":
        ab, cd = cert.ab_pairs, cert.cd_pairs
        m, n = len(ab), len(cd)
        flat = [v for p in ab for v in p] + [v for p in cd for v in p]
        if m < 2 or n < 2 or sorted(flat) != list(range(g.n)):
            return ["pairs do not partition V into m, n >= 2 pairs"]
        for a, b in ab:
            if not g.has_edge(a, b):
                probs.append(f"a/b pair {a},{b} nonadjacent")
        for c, d in cd:
            if g.has_edge(c, d):
                probs.append(f"c/d pair {c},{d} adjacent")
        for p, q in combinations(ab, 2):
            if not sets_anticomplete(g, set(p), set(q)):
                probs.append(f"edges between a/b pairs {p} and {q}")
        for p, q in combinations(cd, 2):
            if not sets_complete(g, set(p), set(q)):
                probs.append(f"missing edges between c/d pairs {p} and {q}")
        for p in ab:
            for q in cd:
                es = [(x, y) for x in p for y in q if g.has_edge(x, y)]
                if len(es) != 2 or set(es[0]) & set(es[1]):
                    probs.append(f"pairs {p},{q} not joined by two disjoint edges")
        return probs
    return [f"unknown basic class {cls!r}"]


# ---------------------------------------------------------------------------
# 2-joins

def check_two_join(g: Graph, cert) -> list[str]:
    x1, x2 = vset(cert.X1), vset(cert.X2)
    a1, b1, a2, b2 = vset(cert.A1), vset(cert.B1), vset(cert.A2), vset(cert.B2)
    probs = []
    if x1 & x2 or x1 | x2 != set(range(g.n)):
        return ["X1, X2 do not partition V"]
    if not (a1 | b1 <= x1 and a2 | b2 <= x2):
        return ["A/B sets leave their sides"]
    for s, t, name in ((a1, b1, "1"), (a2, b2, "2")):
        if not s or not t or s & t:
            probs.append(f"A{name}, B{name} not disjoint nonempty")
    for u in x1:
        for v in x2:
            want = (u in a1 and v in a2) or (u in b1 and v in b2)
            if g.has_edge(u, v) != want:
                probs.append(f"cross pair {u},{v} breaks the bundle structure")
    for x, a, b, name in ((x1, a1, b1, "1"), (x2, a2, b2, "2")):
        for comp in naive_components(g, x):
            if not (comp & a and comp & b):
                probs.append(f"component {sorted(comp)} of X{name} misses A{name} or B{name}")
        if len(a) == 1 and len(b) == 1 and _is_path_joining(g, x, next(iter(a)), next(iter(b))):
            if len(x) - 1 < 3:
                probs.append(f"X{name} is a path of length {len(x) - 1} < 3 between A{name} and B{name}")
    return probs


def _is_path_joining(g: Graph, x: set[int], s: int, t: int) -> bool:
    return any(len(p) == len(x) for p in simple_paths(g, s, t, x))


def check_two_join_naive_exists(g: Graph) -> bool:
    """Any 2-join at all, searched by splitting each cut's attachment set."""
    n = g.n
    verts = list(range(n))

    for k in range(1, n):
        for x1t in combinations(verts, k):
            x1 = set(x1t)
            x2 = set(verts) - x1
            attach1 = sorted(u for u in x1 if any(g.has_edge(u, v) for v in x2))
            for r in range(1, len(attach1)):
                for a1t in combinations(attach1, r):
                    c = SimpleNamespace()
                    c.A1 = set(a1t)
                    c.B1 = set(attach1) - c.A1
                    c.A2 = {v for v in x2 if any(g.has_edge(u, v) for u in c.A1)}
                    c.B2 = {v for v in x2 if any(g.has_edge(u, v) for u in c.B1)}
                    c.X1, c.X2 = x1, x2
                    if not check_two_join(g, c):
                        return True
    return False


# ---------------------------------------------------------------------------
# M-joins

def check_m_join(g: Graph, cert) -> list[str]:
    parts = [vset(getattr(cert, k)) for k in "ABCDEF"]
    a, b, c, d, e, f = parts
    probs = []
    if any(not p for p in parts):
        probs.append("some set is empty")
    if sum(len(p) for p in parts) != g.n or set().union(*parts) != set(range(g.n)):
        return probs + ["the six sets do not partition V"]
    for s, t, name in ((a, b, "A on B"), (b, a, "B on A")):
        for v in s:
            if complete_to(g, v, t) or anticomplete_to(g, v, t):
                probs.append(f"{name}: vertex {v} not mixed")
    for s, t, name in ((c, a, "C-A"), (a, f, "A-F"), (f, b, "F-B"), (b, d, "B-D")):
        if not sets_complete(g, s, t):
            probs.append(f"{name} not complete")
    for s, t, name in ((d, a, "D-A"), (a, e, "A-E"), (e, b, "E-B"), (b, c, "B-C")):
        if not sets_anticomplete(g, s, t):
            probs.append(f"{name} not anticomplete")
    return probs


def naive_m_joins(g: Graph) -> Iterator[tuple[set[int], set[int]]]:
    """All (A, B) pairs admitting an M-join, by the full 3^n assignment search."""
    n = g.n
    for code in range(3 ** n):
        a, b, rest = set(), set(), set()
        k = code
        for v in range(n):
            k, r = divmod(k, 3)
            (a if r == 1 else b if r == 2 else rest).add(v)
        if len(a) < 2 or len(b) < 2:
            continue
        sets = {"C": set(), "D": set(), "E": set(), "F": set()}
        ok = True
        for v in rest:
            ca, cb = complete_to(g, v, a), complete_to(g, v, b)
            na, nb = anticomplete_to(g, v, a), anticomplete_to(g, v, b)
            if ca and cb:
                sets["F"].add(v)
            elif ca and nb:
                sets["C"].add(v)
            elif na and cb:
                sets["D"].add(v)
            elif na and nb:
                sets["E"].add(v)
            else:
                ok = False
                break
        if not ok or not all(sets.values()):
            continue

        c = SimpleNamespace(A=a, B=b)
        for key, val in sets.items():
            setattr(c, key, val)
        if not check_m_join(g, c):
            yield a, b


# ---------------------------------------------------------------------------
# skew partitions and balance

def naive_skew_partitions(g: Graph) -> list[tuple[frozenset, frozenset]]:
    """Every (A, B) skew partition, by looping over all nonempty proper B."""
    n = g.n
    out = []
    everything = set(range(n))
    for k in range(1, n):
        for bt in combinations(range(n), k):
            b = set(bt)
            a = everything - b
            if len(naive_components(g, a)) >= 2 and len(naive_components(g, b, anti=True)) >= 2:
                out.append((frozenset(a), frozenset(b)))
    return out


def check_balanced_naive(g: Graph, a, b) -> bool:
    a, b = vset(a), vset(b)
    for s, t in combinations(sorted(b), 2):
        if g.has_edge(s, t):
            continue
        for p in simple_paths(g, s, t, a):
            if (len(p) - 1) % 2:
                return False
    gc = g.complement()
    for s, t in combinations(sorted(a), 2):
        if not g.has_edge(s, t):
            continue
        for p in simple_paths(gc, s, t, b):
            if (len(p) - 1) % 2:
                return False
    return True


def naive_loose(g: Graph, a, b) -> bool:
    a, b = vset(a), vset(b)
    comps = naive_components(g, a)
    antis = naive_components(g, b, anti=True)
    return any(anticomplete_to(g, v, c) for v in b for c in comps) or \
        any(complete_to(g, v, d) for v in a for d in antis)


def check_skew(g: Graph, cert) -> list[str]:
    a, b = vset(cert.A), vset(cert.B)
    probs = []
    if not a or not b or a & b or a | b != set(range(g.n)):
        return ["A, B do not partition V into nonempty sets"]
    comps = naive_components(g, a)
    antis = naive_components(g, b, anti=True)
    if len(comps) < 2:
        probs.append("A is connected")
    if len(antis) < 2:
        probs.append("B is anticonnected")
    if sorted(map(sorted, comps)) != sorted(sorted(vset(c)) for c in cert.components_of_A):
        probs.append("listed components of A are wrong")
    if sorted(map(sorted, antis)) != sorted(sorted(vset(c)) for c in cert.anticomponents_of_B):
        probs.append("listed anticomponents of B are wrong")
    if naive_loose(g, a, b) != cert.loose:
        probs.append("loose flag is wrong")
    if check_balanced_naive(g, a, b) != cert.balanced:
        probs.append("balanced flag is wrong")
    return probs


# ---------------------------------------------------------------------------
# Berge and perfect by brute force

def _induces_cycle(g: Graph, s: tuple[int, ...]) -> bool:
    ss = set(s)
    if any(sum(g.has_edge(v, w) for w in ss) != 2 for v in ss):
        return False
    return len(naive_components(g, ss)) == 1


def naive_odd_hole(g: Graph):
    for k in range(5, g.n + 1, 2):
        for s in combinations(range(g.n), k):
            if _induces_cycle(g, s):
                return s
    return None


def naive_berge(g: Graph) -> bool:
    return naive_odd_hole(g) is None and naive_odd_hole(g.complement()) is None


def _naive_omega(g: Graph, verts: list[int]) -> int:
    for k in range(len(verts), 0, -1):
        for s in combinations(verts, k):
            if all(g.has_edge(u, v) for u, v in combinations(s, 2)):
                return k
    return 0


def _colourable(g: Graph, verts: list[int], k: int) -> bool:
    colour = {}

    def rec(i):
        if i == len(verts):
            return True
        v = verts[i]
        used = {colour[w] for w in verts[:i] if g.has_edge(v, w)}
        # symmetry: never open more than one new colour at a time
        top = max(colour.values(), default=-1)
        for c in range(min(k, top + 2)):
            if c not in used:
                colour[v] = c
                if rec(i + 1):
                    return True
                del colour[v]
        return False

    return rec(0)


def naive_chi(g: Graph, verts: list[int]) -> int:
    k = 0
    while not _colourable(g, verts, k):
        k += 1
    return k


def naive_perfect(g: Graph) -> bool:
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            vs = list(s)
            if naive_chi(g, vs) != _naive_omega(g, vs):
                return False
    return True


# ---------------------------------------------------------------------------
# detector certificates

def check_prism(g: Graph, prism) -> list[str]:
    ta, tb, paths = prism.triangle_a, prism.triangle_b, prism.paths
    probs = []
    for t in (ta, tb):
        if not all(g.has_edge(u, v) for u, v in combinations(t, 2)):
            probs.append(f"{t} is not a triangle")
    for i, p in enumerate(paths):
        if p[0] != ta[i] or p[-1] != tb[i]:
            probs.append(f"path {i} does not join a{i} to b{i}")
        if not any(len(q) == len(p) and q == tuple(p) for q in simple_paths(g, p[0], p[-1], set(p))):
            probs.append(f"path {i} is not induced")
    for i, j in combinations(range(3), 2):
        si, sj = set(paths[i]), set(paths[j])
        if si & sj:
            probs.append(f"paths {i},{j} intersect")
        cross = {frozenset((u, v)) for u in si for v in sj if g.has_edge(u, v)}
        if cross != {frozenset((ta[i], ta[j])), frozenset((tb[i], tb[j]))}:
            probs.append(f"extra edges between paths {i} and {j}")
    return probs


def check_wheel(g: Graph, wheel) -> list[str]:
    rim, hub = tuple(wheel.rim), vset(wheel.hub)
    k = len(rim)
    probs = []
    if k < 6 or not _induces_cycle(g, rim) or hub & set(rim):
        probs.append("rim is not a hole of length >= 6 disjoint from the hub")
    if not hub or len(naive_components(g, hub, anti=True)) != 1:
        probs.append("hub is empty or not anticonnected")
    ok_edges = [(rim[i], rim[(i + 1) % k]) for i in range(k)
                if all(g.has_edge(rim[i], h) and g.has_edge(rim[(i + 1) % k], h) for h in hub)]
    disjoint = any(not set(e) & set(f) for e, f in combinations(ok_edges, 2))
    if not disjoint:
        probs.append("no two disjoint hub-complete rim edges")
    return probs


def check_induced_copy(g: Graph, mapping: list[int], pattern: Graph) -> list[str]:
    """``mapping[i]`` is the vertex of ``g`` playing pattern vertex ``i``."""
    if len(set(mapping)) != pattern.n:
        return ["mapping is not injective"]
    for i, j in combinations(range(pattern.n), 2):
        if g.has_edge(mapping[i], mapping[j]) != pattern.has_edge(i, j):
            return [f"pattern pair {i},{j} not preserved"]
    return []


def check_appearance(g: Graph, app) -> list[str]:
    verts = sorted(vset(app.vertices))
    sub = g.induced(app.vertices)
    root = app.root
    probs = []
    if naive_bipartition(root) is None:
        probs.append("root is not bipartite")
    degs = [len(nbrs(root, v)) for v in range(root.n)]
    if sorted(d for d in degs if d) .count(3) != 4 or any(d not in (0, 2, 3) for d in degs):
        probs.append("root is not a subdivision of K4")
    redges = root.edges()
    if len(redges) != len(verts):
        probs.append("root edge count differs from the appearance size")
        return probs
    # line graph of the root must be isomorphic to the induced subgraph: try
    # the degree-compatible bijections through a small backtracking search
    lg_adj = {i: {j for j in range(len(redges)) if j != i and set(redges[i]) & set(redges[j])}
              for i in range(len(redges))}
    sub_adj = {i: nbrs(sub, i) for i in range(sub.n)}
    assign: dict[int, int] = {}

    def rec(i):
        if i == len(redges):
            return True
        for v in range(sub.n):
            if v in assign.values() or len(sub_adj[v]) != len(lg_adj[i]):
                continue
            if all((assign[j] in sub_adj[v]) == (j in lg_adj[i]) for j in assign):
                assign[i] = v
                if rec(i + 1):
                    return True
                del assign[i]
        return False

    if not rec(0):
        probs.append("induced subgraph is not the line graph of the root")
    return probs


# ---------------------------------------------------------------------------
# verdicts

def check_verdict(g: Graph, verdict) -> list[str]:
    kind = verdict.kind
    if kind == "basic":
        return check_basic(g, verdict.cert)
    if kind == "two_join":
        return check_two_join(g, verdict.cert)
    if kind == "two_join_complement":
        return check_two_join(g.complement(), verdict.cert)
    if kind == "m_join":
        return check_m_join(g, verdict.cert)
    if kind == "balanced_skew":
        probs = check_skew(g, verdict.cert)
        if not verdict.cert.balanced:
            probs.append("partition not flagged balanced")
        return probs
    return [f"verdict {kind} carries no certificate"]
