"""2-joins, M-joins, skew partitions and the decomposition verdict for Berge graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Union

from .graphcore import (
    Graph,
    anticomponents,
    components,
    induced_paths_from,
    is_induced_path,
    lowest,
    mask_of,
    members,
    popcount,
)
from .recognizers import BasicCert, classify_basic, is_berge
from .structures import NotBergeError


@dataclass(frozen=True)
class TwoJoinCert:
    X1: int
    X2: int
    A1: int
    B1: int
    A2: int
    B2: int


@dataclass(frozen=True)
class MJoinCert:
    A: int
    B: int
    C: int
    D: int
    E: int
    F: int


@dataclass(frozen=True)
class SkewPartitionCert:
    A: int
    B: int
    components_of_A: tuple[int, ...]
    anticomponents_of_B: tuple[int, ...]
    loose: bool
    balanced: bool


# ---------------------------------------------------------------------------
# 2-join

def _side_ok(g: Graph, x: int, a: int, b: int) -> bool:
    for comp in components(g, x):
        if not (comp & a and comp & b):
            return False
    if popcount(a) == 1 and popcount(b) == 1:
        # the side is a path joining the two attachment vertices?
        k = popcount(x)
        if g.edge_count(x) == k - 1 and all(popcount(g.adj[v] & x) <= 2 for v in members(x)):
            ends = [v for v in members(x) if popcount(g.adj[v] & x) <= 1]
            if k == 1 or sorted(ends) == sorted(members(a | b)):
                if k - 1 < 3:
                    return False
    return True


def two_join_for(g: Graph, x1: int) -> Optional[TwoJoinCert]:
    """The 2-join with first side ``x1``, if the cut admits one."""
    x2 = g.full & ~x1
    adj = g.adj
    classes: dict[int, int] = {}
    for v in members(x1):
        nb = adj[v] & x2
        if nb:
            classes[nb] = classes.get(nb, 0) | 1 << v
    if len(classes) != 2:
        return None
    (s, a1), (t, b1) = sorted(classes.items(), key=lambda kv: lowest(kv[1]))
    if s & t:
        return None
    for v in members(x2):
        nb = adj[v] & x1
        want = (a1 if s >> v & 1 else 0) | (b1 if t >> v & 1 else 0)
        if nb != want:
            return None
    if not (_side_ok(g, x1, a1, b1) and _side_ok(g, x2, s, t)):
        return None
    return TwoJoinCert(x1, x2, a1, b1, s, t)


def find_two_join(g: Graph) -> Optional[TwoJoinCert]:
    """First 2-join with ``X1`` running over subsets containing vertex 0 in
    increasing mask order."""
    n = g.n
    if n < 4:
        return None
    for rest in range(1 << (n - 1)):
        x1 = rest << 1 | 1
        if x1 == g.full:
            continue
        cert = two_join_for(g, x1)
        if cert is not None:
            return cert
    return None


# ---------------------------------------------------------------------------
# M-join

def m_join_for(g: Graph, a: int) -> Optional[MJoinCert]:
    """M-join with first set ``a``.  Every vertex of B is mixed on A and every
    vertex outside A and B is not, so B is forced to be the mixed set of A."""
    adj = g.adj
    full = g.full
    outside = full & ~a
    complete_a = outside
    touches_a = 0
    for v in members(a):
        complete_a &= adj[v]
        touches_a |= adj[v]
    touches_a &= outside
    b = touches_a & ~complete_a
    if popcount(a) < 2 or popcount(b) < 2:
        return None
    rest = outside & ~b
    complete_b = full & ~b
    touches_b = 0
    for v in members(b):
        complete_b &= adj[v]
        touches_b |= adj[v]
    # each vertex of A must be mixed on B
    if a & complete_b or a & ~touches_b:
        return None
    if rest & touches_b & ~complete_b:
        return None
    anti_a = rest & ~touches_a
    anti_b = rest & ~touches_b
    c = rest & complete_a & anti_b
    d = rest & complete_b & anti_a
    e = anti_a & anti_b
    f = rest & complete_a & complete_b
    if not (c and d and e and f):
        return None
    return MJoinCert(a, b, c, d, e, f)


def find_m_join(g: Graph) -> Optional[MJoinCert]:
    if g.n < 8:
        return None
    for a in range(1, 1 << g.n):
        cert = m_join_for(g, a)
        if cert is not None:
            return cert
    return None


# ---------------------------------------------------------------------------
# skew partitions and balance

def odd_path_between(g: Graph, ends: int, interior: int) -> Optional[tuple[int, ...]]:
    """Odd induced path joining two nonadjacent members of ``ends`` through ``interior``."""
    adj = g.adj
    for u in members(ends):
        targets = ends & ~((2 << u) - 1) & ~adj[u]
        if not targets:
            continue
        for p in induced_paths_from(g, u, interior & ~ends, targets, 2):
            if (len(p) - 1) % 2:
                return p
    return None


def is_balanced_pair(g: Graph, a: int, b: int, gc: Graph | None = None):
    """``(balanced, violator)`` for the disjoint pair ``(A, B)``.

    A violator is an odd path between nonadjacent B-vertices with interior in
    A (tagged ``"path"``), or an odd antipath between adjacent A-vertices with
    interior in B (tagged ``"antipath"``).
    """
    if a & b:
        raise ValueError("A and B must be disjoint")
    p = odd_path_between(g, b, a)
    if p is not None:
        return False, ("path", p)
    gc = g.complement() if gc is None else gc
    q = odd_path_between(gc, a, b)
    if q is not None:
        return False, ("antipath", q)
    return True, None


def is_loose(g: Graph, a: int, b: int, comps: list[int], antis: list[int]) -> bool:
    adj = g.adj
    for v in members(b):
        for c in comps:
            if not adj[v] & c:
                return True
    for v in members(a):
        for d in antis:
            if adj[v] & d == d:
                return True
    return False


def skew_candidates(g: Graph) -> Iterator[tuple[int, int, list[int], list[int]]]:
    """``(A, B, components of A, anticomponents of B)`` for every skew
    partition, ordered by ``|B|`` then lexicographically on B's members."""
    n = g.n
    full = g.full
    for k in range(1, n):
        for verts in combinations(range(n), k):
            b = mask_of(verts)
            a = full & ~b
            comps = components(g, a)
            if len(comps) < 2:
                continue
            antis = anticomponents(g, b)
            if len(antis) < 2:
                continue
            yield a, b, comps, antis


def find_skew_partitions(g: Graph) -> Iterator[SkewPartitionCert]:
    gc = g.complement()
    for a, b, comps, antis in skew_candidates(g):
        balanced, _ = is_balanced_pair(g, a, b, gc)
        yield SkewPartitionCert(a, b, tuple(comps), tuple(antis),
                                is_loose(g, a, b, comps, antis), balanced)


def find_balanced_skew(g: Graph) -> Optional[SkewPartitionCert]:
    gc = g.complement()
    for a, b, comps, antis in skew_candidates(g):
        balanced, _ = is_balanced_pair(g, a, b, gc)
        if balanced:
            return SkewPartitionCert(a, b, tuple(comps), tuple(antis),
                                     is_loose(g, a, b, comps, antis), True)
    return None


def has_skew_partition(g: Graph) -> bool:
    return next(skew_candidates(g), None) is not None


# ---------------------------------------------------------------------------
# verdict

@dataclass(frozen=True)
class Basic:
    cert: BasicCert
    kind = "basic"


@dataclass(frozen=True)
class TwoJoin:
    cert: TwoJoinCert
    side: str  # "G" or "complement"

    @property
    def kind(self) -> str:
        return "two_join" if self.side == "G" else "two_join_complement"


@dataclass(frozen=True)
class MJoin:
    cert: MJoinCert
    kind = "m_join"


@dataclass(frozen=True)
class BalancedSkew:
    cert: SkewPartitionCert
    kind = "balanced_skew"


@dataclass(frozen=True)
class CounterexampleToTheorem:
    kind = "counterexample"


Verdict = Union[Basic, TwoJoin, MJoin, BalancedSkew, CounterexampleToTheorem]


def decompose(g: Graph) -> Verdict:
    """Basic class, 2-join in G, 2-join in the complement, M-join, or balanced
    skew partition, tried in that order."""
    witness = is_berge(g)
    if not witness:
        raise NotBergeError(witness)
    basic = classify_basic(g)
    if basic is not None:
        return Basic(basic)
    cert = find_two_join(g)
    if cert is not None:
        return TwoJoin(cert, "G")
    cert = find_two_join(g.complement())
    if cert is not None:
        return TwoJoin(cert, "complement")
    mj = find_m_join(g)
    if mj is not None:
        return MJoin(mj)
    skew = find_balanced_skew(g)
    if skew is not None:
        return BalancedSkew(skew)
    return CounterexampleToTheorem()


__all__ = [
    "BalancedSkew", "Basic", "CounterexampleToTheorem", "MJoin", "MJoinCert",
    "SkewPartitionCert", "TwoJoin", "TwoJoinCert", "Verdict", "decompose",
    "find_balanced_skew", "find_m_join", "find_skew_partitions", "find_two_join",
    "has_skew_partition", "is_balanced_pair", "is_induced_path", "is_loose",
    "m_join_for", "odd_path_between", "skew_candidates", "two_join_for",
]
