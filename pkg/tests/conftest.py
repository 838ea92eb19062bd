"""Shared strategies and helpers for the test suite."""
import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from bergelab.graphcore import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def graphs_with_perm(draw, min_n=0, max_n=8):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


@pytest.fixture
def rng():
    return random.Random(20240611)
