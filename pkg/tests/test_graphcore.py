"""Graph representation, holes, connectivity and isomorphism against networkx."""
import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from bergelab.graphcore import (
    Graph,
    anticomponents,
    canonical_code,
    canonical_form,
    canonical_hole,
    complete,
    components,
    cycle,
    disjoint_union,
    enumerate_holes,
    find_odd_hole,
    induced_paths,
    induced_paths_from,
    is_anticonnected,
    is_connected,
    is_hole,
    is_induced_path,
    is_isomorphic,
    mask_of,
    members,
    path_graph,
    petersen,
)

from conftest import graphs, graphs_with_perm, to_nx


def test_graph_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # loop
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0])  # out of range
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_is_immutable():
    g = cycle(4)
    with pytest.raises(AttributeError):
        g.n = 5


def test_complement_examples():
    k4 = complete(4)
    assert k4.complement() == Graph.empty(4)
    c5 = cycle(5)
    assert is_isomorphic(c5, c5.complement()) is not None


@given(graphs(max_n=10))
def test_complement_involution(g):
    assert g.complement().complement() == g
    gc = g.complement()
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert gc.has_edge(u, v) != g.has_edge(u, v)
        assert not gc.has_edge(u, u)


def test_induced_examples():
    c6 = cycle(6)
    assert canonical_code(c6.induced(0b111)) == canonical_code(path_graph(3))
    assert c6.induced(c6.full) == c6
    assert complete(5).induced(0b10101) == complete(3)


@given(graphs(max_n=9))
def test_induced_matches_networkx(g):
    s = mask_of(v for v in range(g.n) if v % 3 != 1)
    h = g.induced(s)
    verts = members(s)
    expected = to_nx(g).subgraph(verts)
    relabelled = nx.relabel_nodes(expected, {v: i for i, v in enumerate(verts)})
    assert sorted(h.edges()) == sorted(tuple(sorted(e)) for e in relabelled.edges)


def test_components_examples():
    c4 = cycle(4)
    assert components(c4, 0b0101) == [0b0001, 0b0100]
    assert components(c4, c4.full) == [c4.full]
    p4 = path_graph(4)
    assert components(p4, 0b1011) == [0b0011, 0b1000]
    assert components(p4, 0) == []


def test_anticomponents_examples():
    k4 = complete(4)
    assert anticomponents(k4, k4.full) == [1, 2, 4, 8]
    e4 = Graph.empty(4)
    assert anticomponents(e4, e4.full) == [e4.full]
    p4 = path_graph(4)
    assert anticomponents(p4, 0b0110) == [0b0010, 0b0100]


@given(graphs(max_n=9))
def test_components_partition_and_maximality(g):
    s = g.full & ~(1 if g.n else 0)
    comps = components(g, s)
    union = 0
    for c in comps:
        assert union & c == 0
        union |= c
        assert is_connected(g, c)
    assert union == s
    for c, d in itertools.combinations(comps, 2):
        assert not is_connected(g, c | d)
    ref = sorted(sorted(c) for c in nx.connected_components(to_nx(g).subgraph(members(s))))
    assert sorted(members(c) for c in comps) == ref
    assert [min(members(c)) for c in comps] == sorted(min(members(c)) for c in comps)


@given(graphs(max_n=9))
def test_anticomponents_are_complement_components(g):
    gc = g.complement()
    assert anticomponents(g, g.full) == components(gc, g.full)
    for c in anticomponents(g, g.full):
        assert is_anticonnected(g, c)


def _brute_holes(g):
    """Vertex sets of all holes, by checking every subset."""
    out = set()
    for k in range(4, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            sub = to_nx(g).subgraph(s)
            if all(d == 2 for _, d in sub.degree) and nx.is_connected(sub):
                out.add(frozenset(s))
    return out


def test_holes_examples():
    assert [len(h) for h in enumerate_holes(cycle(5), 4, "odd")] == [5]
    assert list(enumerate_holes(complete(4))) == []
    odd = list(enumerate_holes(petersen(), 4, "odd"))
    assert len(odd) == 12 and all(len(h) == 5 for h in odd)
    # independent count of 5-holes of the Petersen graph
    assert sum(1 for c in nx.chordless_cycles(to_nx(petersen())) if len(c) == 5) == 12
    with pytest.raises(ValueError):
        list(enumerate_holes(cycle(5), 3))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_holes_match_brute_force(g):
    holes = list(enumerate_holes(g))
    assert holes == sorted(holes)
    assert all(is_hole(g, h) and canonical_hole(h) == h for h in holes)
    assert {frozenset(h) for h in holes} == _brute_holes(g)
    assert len(holes) == len({frozenset(h) for h in holes})
    ref = {frozenset(c) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 4}
    assert {frozenset(h) for h in holes} == ref


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_hole_parity_filters(g):
    every = list(enumerate_holes(g, 4))
    assert list(enumerate_holes(g, 4, "odd")) == [h for h in every if len(h) % 2]
    assert list(enumerate_holes(g, 4, "even")) == [h for h in every if len(h) % 2 == 0]
    assert list(enumerate_holes(g, 6)) == [h for h in every if len(h) >= 6]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_hole_antihole_duality(g):
    gc = g.complement()
    antiholes = [h for h in enumerate_holes(gc)]
    brute = {frozenset(s) for s in _brute_holes(gc)}
    assert {frozenset(h) for h in antiholes} == brute


def test_find_odd_hole_examples():
    assert find_odd_hole(cycle(5)) == (0, 1, 2, 3, 4)
    assert find_odd_hole(cycle(6)) is None
    assert find_odd_hole(cycle(7)) is not None
    assert find_odd_hole(Graph.empty(0)) is None


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_find_odd_hole_agrees_with_enumeration(g):
    hole = find_odd_hole(g)
    odd = list(enumerate_holes(g, 5, "odd"))
    if odd:
        assert hole == odd[0]
    else:
        assert hole is None


def _brute_induced_paths(g):
    out = set()
    for k in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            sub = to_nx(g).subgraph(s)
            if nx.is_connected(sub) and sub.number_of_edges() == k - 1 and max(d for _, d in sub.degree) <= 2:
                out.add(frozenset(s))
    return out


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_induced_paths_match_brute_force(g):
    paths = list(induced_paths(g))
    for p in paths:
        assert is_induced_path(g, p)
        assert g.edge_count(mask_of(p)) == len(p) - 1
        assert p[0] <= p[-1]
    assert len(paths) == len({frozenset(p) for p in paths})
    assert {frozenset(p) for p in paths} == _brute_induced_paths(g)


def test_induced_paths_from_respects_interior():
    c6 = cycle(6)
    got = sorted(induced_paths_from(c6, 0, 0b011110, 1 << 3))
    assert got == [(0, 1, 2, 3)]
    both = sorted(induced_paths_from(c6, 0, 0b111110, 1 << 3))
    assert both == [(0, 1, 2, 3), (0, 5, 4, 3)]


def test_isomorphism_examples():
    c5 = cycle(5)
    assert is_isomorphic(c5, c5.complement()) is not None
    c6 = cycle(6)
    two_k3 = disjoint_union(complete(3), complete(3))
    assert is_isomorphic(c6, two_k3) is None
    assert not nx.is_isomorphic(to_nx(c6), to_nx(two_k3))
    assert is_isomorphic(c5, cycle(6)) is None


@settings(max_examples=150, deadline=None)
@given(graphs_with_perm(max_n=9))
def test_relabelled_graph_is_isomorphic(gp):
    g, perm = gp
    h = g.relabel(perm)
    phi = is_isomorphic(g, h)
    assert phi is not None
    assert sorted(phi) == list(range(g.n))
    for u, v in g.edges():
        assert h.has_edge(phi[u], phi[v])
    assert canonical_form(g) == canonical_form(h)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_matches_networkx(g, h):
    ours = is_isomorphic(g, h) is not None
    assert ours == nx.is_isomorphic(to_nx(g), to_nx(h))
    assert ours == (g.n == h.n and canonical_code(g) == canonical_code(h))


def test_isomorphism_on_regular_graphs():
    # vertex-transitive pairs where refinement alone cannot split cells
    rng = random.Random(5)
    for n, d in [(8, 3), (10, 3), (10, 4), (12, 3)]:
        for trial in range(4):
            g = nx.random_regular_graph(d, n, seed=rng.randrange(1 << 30))
            h = nx.random_regular_graph(d, n, seed=rng.randrange(1 << 30))
            gg = Graph.from_edges(n, list(g.edges))
            hh = Graph.from_edges(n, list(h.edges))
            assert (is_isomorphic(gg, hh) is not None) == nx.is_isomorphic(g, h)
            perm = list(range(n))
            rng.shuffle(perm)
            assert is_isomorphic(gg, gg.relabel(perm)) is not None
