"""2-joins, M-joins, skew partitions and the decomposition verdict."""
import random

import pytest
from hypothesis import given, settings

from bergelab.decompositions import (
    Basic,
    MJoin,
    decompose,
    find_balanced_skew,
    find_m_join,
    find_skew_partitions,
    find_two_join,
    has_skew_partition,
    is_balanced_pair,
    m_join_for,
    two_join_for,
)
from bergelab.graphcore import (
    Graph,
    cycle,
    is_induced_path,
    mask_of,
    members,
    path_graph,
    submasks,
)
from bergelab.lemmalab import enumerate_all_graphs
from bergelab.recognizers import Bipartite, LineOfBipartite, is_berge
from bergelab.structures import NotBergeError, prism_graph
from bergelab.validators import (
    check_balanced_naive,
    check_m_join,
    check_skew,
    check_two_join,
    check_two_join_naive_exists,
    check_verdict,
    naive_m_joins,
    naive_skew_partitions,
)

from conftest import graphs, random_graph


def m_join_example():
    # a1 a2 b1 b2 c d e f
    a1, a2, b1, b2, c, d, e, f = range(8)
    edges = [(a1, b1), (a2, b2), (c, a1), (c, a2), (d, b1), (d, b2)]
    edges += [(f, x) for x in (a1, a2, b1, b2)]
    return Graph.from_edges(8, edges)


# ---------------------------------------------------------------------------
# 2-joins

def test_two_join_examples():
    c8 = cycle(8)
    x1 = 0b00001111
    cert = two_join_for(c8, x1)
    assert cert is not None and check_two_join(c8, cert) == []
    assert {cert.A1, cert.B1} == {1 << 0, 1 << 3}
    found = find_two_join(c8)
    assert found is not None and check_two_join(c8, found) == []
    assert find_two_join(cycle(6)) is None
    assert not check_two_join_naive_exists(cycle(6))


def test_two_join_in_long_prism():
    g = prism_graph(1, 1, 3)
    cert = find_two_join(g)
    assert cert is not None and check_two_join(g, cert) == []
    # a1 a2 a3 = 0 1 2, b1 b2 = 3 4, the long path is 2 5 6 7
    assert {cert.X1, cert.X2} == {mask_of([0, 1, 3, 4]), mask_of([2, 5, 6, 7])}


def test_short_path_side_is_rejected():
    # side X1 = {0,1,2} in C8 is a path of length 2 between single attachments
    assert two_join_for(cycle(8), 0b111) is None


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=7))
def test_two_join_matches_naive_existence(g):
    cert = find_two_join(g)
    assert (cert is not None) == check_two_join_naive_exists(g)
    if cert is not None:
        assert check_two_join(g, cert) == []
        assert cert.X1 & 1


# ---------------------------------------------------------------------------
# M-joins

def test_m_join_examples():
    g = m_join_example()
    cert = find_m_join(g)
    assert cert is not None and check_m_join(g, cert) == []
    assert {cert.A, cert.B} == {0b0011, 0b1100}
    assert find_m_join(cycle(8)) is None
    assert list(naive_m_joins(cycle(8))) == []
    rng = random.Random(2)
    for n in range(8):
        assert find_m_join(random_graph(rng, n, 0.5)) is None


def _all_m_joins(g):
    out = set()
    for a in range(1, 1 << g.n):
        cert = m_join_for(g, a)
        if cert is not None:
            assert check_m_join(g, cert) == []
            out.add((frozenset(members(cert.A)), frozenset(members(cert.B))))
    return out


@pytest.mark.parametrize("seed", range(6))
def test_m_join_search_matches_three_way_oracle(seed):
    rng = random.Random(seed)
    base = m_join_example()
    perm = list(range(8))
    rng.shuffle(perm)
    g = base.relabel(perm)
    # flip a random pair half the time
    if seed % 2:
        u, v = rng.sample(range(8), 2)
        adj = list(g.adj)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        g = Graph(8, adj)
    ours = _all_m_joins(g)
    ref = {(frozenset(a), frozenset(b)) for a, b in naive_m_joins(g)}
    assert ours == ref
    if seed % 2 == 0:
        assert ours


# ---------------------------------------------------------------------------
# skew partitions

def test_skew_examples():
    p4 = path_graph(4)
    certs = list(find_skew_partitions(p4))
    assert len(certs) == 1
    c = certs[0]
    assert c.B == 0b0110 and c.A == 0b1001
    assert c.balanced
    assert check_skew(p4, c) == []
    assert list(find_skew_partitions(cycle(4))) == []
    assert list(find_skew_partitions(cycle(5))) == []
    assert find_balanced_skew(p4) is not None
    assert find_balanced_skew(cycle(6)) is None
    assert not has_skew_partition(cycle(6))


def test_bull_graph():
    # triangle 0 1 2 with pendants 3 (at 1) and 4 (at 2)
    bull = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
    ours = [(c.A, c.B, c.balanced) for c in find_skew_partitions(bull)]
    ref = naive_skew_partitions(bull)
    assert len(ours) == len(ref)
    for a, b, balanced in ours:
        assert (frozenset(members(a)), frozenset(members(b))) in ref
        assert balanced == check_balanced_naive(bull, a, b)
    first = find_balanced_skew(bull)
    assert (first is not None) == any(balanced for _, _, balanced in ours)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_skew_partitions_match_naive(g):
    certs = list(find_skew_partitions(g))
    ref = naive_skew_partitions(g)
    got = [(frozenset(members(c.A)), frozenset(members(c.B))) for c in certs]
    assert sorted(map(sorted, (b for _, b in got))) == sorted(map(sorted, (b for _, b in ref)))
    assert set(got) == set(ref)
    for c in certs:
        assert check_skew(g, c) == []
    sizes = [bin(c.B).count("1") for c in certs]
    assert sizes == sorted(sizes)


def test_balance_examples():
    # C6 0..5: B = {0, 3} nonadjacent, joined through A = {1, 2} by a path of length 3
    c6 = cycle(6)
    ok, violator = is_balanced_pair(c6, 0b000110, 0b001001)
    assert not ok and violator[0] == "path"
    p = violator[1]
    assert len(p) - 1 == 3 and is_induced_path(c6, p)
    assert is_balanced_pair(c6, 0, 0b001001) == (True, None)
    assert is_balanced_pair(c6, 0b000110, 0) == (True, None)
    with pytest.raises(ValueError):
        is_balanced_pair(c6, 0b11, 0b10)


def test_balance_with_vertex_complete_to_b_and_anticomplete_to_a():
    hits = 0
    for n in range(3, 7):
        for g in enumerate_all_graphs(n):
            if not is_berge(g):
                continue
            for v in range(n):
                nb = g.adj[v]
                far = g.full & ~nb & ~(1 << v)
                for b in submasks(nb):
                    for a in [0, *submasks(far)]:
                        assert is_balanced_pair(g, a, b)[0], (g, v, a, b)
                        hits += 1
    assert hits > 1000


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_balance_complement_duality(g):
    rng = random.Random(g.n * 1000 + g.edge_count())
    gc = g.complement()
    for _ in range(6):
        labels = [rng.randrange(3) for _ in range(g.n)]
        a = mask_of(v for v in range(g.n) if labels[v] == 0)
        b = mask_of(v for v in range(g.n) if labels[v] == 1)
        assert is_balanced_pair(g, a, b)[0] == is_balanced_pair(gc, b, a)[0]
        assert is_balanced_pair(g, a, b)[0] == check_balanced_naive(g, a, b)


# ---------------------------------------------------------------------------
# verdict

def test_decompose_examples():
    v = decompose(cycle(6))
    assert isinstance(v, Basic) and isinstance(v.cert, Bipartite)
    v = decompose(prism_graph(2, 2, 2))
    assert isinstance(v, Basic) and isinstance(v.cert, LineOfBipartite)
    assert check_verdict(prism_graph(2, 2, 2), v) == []
    with pytest.raises(NotBergeError) as exc:
        decompose(cycle(5))
    assert exc.value.witness.hole == (0, 1, 2, 3, 4)


def test_decompose_order():
    from bergelab.recognizers import classify_basic

    for n in range(1, 8):
        for g in enumerate_all_graphs(n):
            if not is_berge(g):
                continue
            if classify_basic(g) is not None:
                want = "basic"
            elif find_two_join(g) is not None:
                want = "two_join"
            elif find_two_join(g.complement()) is not None:
                want = "two_join_complement"
            elif find_m_join(g) is not None:
                want = "m_join"
            else:
                want = "balanced_skew"
            assert decompose(g).kind == want


def test_decompose_certificates_on_corpus():
    kinds = set()
    for n in range(1, 8):
        for g in enumerate_all_graphs(n):
            if not is_berge(g):
                continue
            v = decompose(g)
            assert v.kind != "counterexample"
            assert check_verdict(g, v) == [], (g, v)
            kinds.add(v.kind)
    assert {"basic", "two_join", "two_join_complement", "balanced_skew"} <= kinds


def test_m_join_verdict_reached():
    # at n = 8 some Berge graphs are only decomposed by an M-join
    found = None
    for g in enumerate_all_graphs(8):
        if g.edge_count() not in range(10, 19):
            continue
        if find_m_join(g) is None or not is_berge(g):
            continue
        v = decompose(g)
        if isinstance(v, MJoin):
            found = (g, v)
            break
    assert found is not None
    assert check_verdict(*found) == []
