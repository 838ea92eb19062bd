"""Seeded random graph families."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

from ..graphcore import Graph, line_graph
from ..recognizers import BudgetExceeded, is_berge

FAMILIES = ("uniform", "berge_rejection", "bipartite", "line_of_bipartite",
            "bicograph", "complement_of")

REJECTION_RETRIES = 10_000
# failures in a row before the edge density is re-drawn
STREAK = 200
SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class GeneratorSpec:
    """A family name, its parameters and a 64-bit seed.

    ``params`` by family:
      uniform / berge_rejection: (n, p)
      bipartite / line_of_bipartite: (n1, n2, p)
      bicograph: (m, n) with the seed choosing the edge pattern
      complement_of: (inner GeneratorSpec,); the outer seed replaces the inner one
    """
    family: str
    params: tuple
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown generator family {self.family!r}")
        if not 0 <= self.seed <= SEED_MASK:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def with_seed(self, seed: int) -> "GeneratorSpec":
        return GeneratorSpec(self.family, self.params, seed & SEED_MASK)

    def describe(self) -> dict[str, Any]:
        if self.family == "complement_of":
            params = [self.params[0].describe()]
        else:
            params = list(self.params)
        return {"family": self.family, "params": params, "seed": self.seed}


def _prob(p) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    return p


def _count(k, least: int, what: str) -> int:
    if int(k) != k or k < least:
        raise ValueError(f"{what} must be an integer >= {least}, got {k}")
    return int(k)


def _uniform(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _bipartite(rng: random.Random, n1: int, n2: int, p: float) -> Graph:
    edges = [(u, n1 + v) for u in range(n1) for v in range(n2) if rng.random() < p]
    return Graph.from_edges(n1 + n2, edges)


def _bicograph(rng: random.Random, m: int, n: int) -> Graph:
    # a_i, b_i, c_j, d_j laid out in blocks, then shuffled
    a = list(range(m))
    b = list(range(m, 2 * m))
    c = list(range(2 * m, 2 * m + n))
    d = list(range(2 * m + n, 2 * m + 2 * n))
    edges = [(a[i], b[i]) for i in range(m)]
    for j in range(n):
        for k in range(j + 1, n):
            edges += [(c[j], c[k]), (c[j], d[k]), (d[j], c[k]), (d[j], d[k])]
    for i in range(m):
        for j in range(n):
            if rng.random() < 0.5:
                edges += [(a[i], c[j]), (b[i], d[j])]
            else:
                edges += [(a[i], d[j]), (b[i], c[j])]
    total = 2 * (m + n)
    perm = list(range(total))
    rng.shuffle(perm)
    return Graph.from_edges(total, [(perm[u], perm[v]) for u, v in edges])


_ARITY = {"uniform": 2, "berge_rejection": 2, "bipartite": 3, "line_of_bipartite": 3,
          "bicograph": 2, "complement_of": 1}


def validate(spec: GeneratorSpec) -> None:
    """Raise ``ValueError`` if the parameters do not fit the family."""
    fam, params = spec.family, spec.params
    if len(params) != _ARITY[fam]:
        raise ValueError(f"{fam} takes {_ARITY[fam]} parameters, got {len(params)}")
    if fam == "complement_of":
        if not isinstance(params[0], GeneratorSpec):
            raise ValueError("complement_of wraps another generator spec")
        validate(params[0])
    elif fam in ("uniform", "berge_rejection"):
        _count(params[0], 0, "n")
        _prob(params[1])
    elif fam in ("bipartite", "line_of_bipartite"):
        _count(params[0], 1, "n1")
        _count(params[1], 1, "n2")
        _prob(params[2])
    else:
        _count(params[0], 2, "m")
        _count(params[1], 2, "n")


def generate(spec: GeneratorSpec) -> Graph:
    """Deterministic in ``spec`` (family, parameters and seed)."""
    validate(spec)
    rng = random.Random(spec.seed)
    fam, params = spec.family, spec.params
    if fam == "complement_of":
        (inner,) = params
        # the outer seed drives the inner draw so sampled runs vary
        return generate(inner.with_seed(spec.seed)).complement()
    if fam in ("uniform", "berge_rejection"):
        n, p = params
        n, p = _count(n, 0, "n"), _prob(p)
        if fam == "uniform":
            return _uniform(rng, n, p)
        streak = 0
        for _ in range(REJECTION_RETRIES):
            g = _uniform(rng, n, p)
            if is_berge(g):
                return g
            streak += 1
            if streak == STREAK:
                p, streak = rng.random(), 0
        raise BudgetExceeded(f"no Berge graph after {REJECTION_RETRIES} draws")
    if fam in ("bipartite", "line_of_bipartite"):
        n1, n2, p = params
        n1, n2, p = _count(n1, 1, "n1"), _count(n2, 1, "n2"), _prob(p)
        root = _bipartite(rng, n1, n2, p)
        if fam == "bipartite":
            return root
        if not root.edges():
            root = Graph.from_edges(n1 + n2, [(0, n1)])
        return line_graph(root)[0]
    if fam == "bicograph":
        m, n = params
        return _bicograph(rng, _count(m, 2, "m"), _count(n, 2, "n"))
    raise AssertionError(fam)


def sample_seed(seed: int, index: int) -> int:
    """Per-sample seed; independent of worker scheduling."""
    return (seed ^ index) & SEED_MASK
