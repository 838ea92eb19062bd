"""Exhaustive enumeration of graphs up to isomorphism, by vertex augmentation."""
from __future__ import annotations

from functools import lru_cache

from ..graphcore import Graph, canonical_code

BUILTIN_MAX_N = 8


class EnumerationTooLarge(ValueError):
    pass


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    seen = set()
    for code in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(code) + [nbrs]
            for v in range(n - 1):
                if nbrs >> v & 1:
                    rows[v] |= 1 << (n - 1)
            seen.add(canonical_code(Graph(n, rows, check=False)))
    return tuple(sorted(seen))


def enumerate_all_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of ``n``-vertex graphs.

    Representatives are sorted by canonical code, so the order is fixed.
    """
    if n < 0 or n > BUILTIN_MAX_N:
        raise EnumerationTooLarge(
            f"built-in enumeration stops at n={BUILTIN_MAX_N}; supply a graph6 file for n={n}")
    return [Graph(n, code, check=False) for code in _classes(n)]
