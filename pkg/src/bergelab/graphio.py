"""graph6 and DIMACS edge-list readers/writers."""
from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graphcore import Graph, configured_max_n

HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class Graph6HeaderError(GraphFormatError):
    pass


class Graph6LengthError(GraphFormatError):
    pass


class Graph6PaddingError(GraphFormatError):
    pass


class GraphTooLargeError(GraphFormatError):
    pass


class DimacsError(GraphFormatError):
    pass


def _size_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def emit_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    data = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        data.append(v)
    return "".join(chr(v + 63) for v in _size_bytes(n) + data)


def parse_graph6(text: str, max_n: int | None = None) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is accepted)."""
    limit = configured_max_n() if max_n is None else max_n
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(HEADER):
        base = len(HEADER)
        line = line[base:]
    if not line:
        raise Graph6HeaderError("empty graph6 string", base)
    vals = []
    for i, ch in enumerate(line):
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6HeaderError(f"byte {ch!r} outside the graph6 alphabet", base + i)
        vals.append(v)
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6HeaderError("truncated 4-byte size field", base + len(vals))
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise Graph6HeaderError("truncated 8-byte size field", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    if n > limit:
        raise GraphTooLargeError(f"graph has {n} vertices, limit is {limit}", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise Graph6LengthError(f"expected {need} data bytes, found {len(vals) - pos}",
                                base + min(len(vals), pos + need))
    adj = [0] * n
    k = 0
    j, i = 1, 0
    for b, v in enumerate(vals[pos:]):
        for shift in range(5, -1, -1):
            bit = v >> shift & 1
            if k >= nbits:
                if bit:
                    raise Graph6PaddingError("nonzero padding bit", base + pos + b)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j, i = j + 1, 0
    return Graph(n, adj, check=False)


def parse_dimacs(text: str, max_n: int | None = None) -> Graph:
    """Read ``p edge n m`` / ``e u v`` (1-based) input; ``c`` lines are comments."""
    limit = configured_max_n() if max_n is None else max_n
    n = None
    edges = []
    offset = 0
    for line in text.splitlines(keepends=True):
        parts = line.split()
        if not parts or parts[0] == "c":
            pass
        elif parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError("bad problem line", offset)
            try:
                n, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError("non-integer problem line", offset) from None
            if n > limit:
                raise GraphTooLargeError(f"graph has {n} vertices, limit is {limit}", offset)
        elif parts[0] == "e":
            if n is None or len(parts) != 3:
                raise DimacsError("edge line before problem line or malformed", offset)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise DimacsError("non-integer edge endpoint", offset) from None
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise DimacsError(f"edge {u + 1} {v + 1} out of range", offset)
            edges.append((u, v))
        else:
            raise DimacsError(f"unknown line type {parts[0]!r}", offset)
        offset += len(line.encode())
    if n is None:
        raise DimacsError("missing problem line", 0)
    return Graph.from_edges(n, edges)


def emit_dimacs(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_graphs(path: str | Path, max_n: int | None = None) -> Iterator[Graph]:
    """Graphs from a file: DIMACS if it has a ``p`` line, else graph6 one per line."""
    text = Path(path).read_text()
    if any(line.startswith("p ") for line in text.splitlines()):
        yield parse_dimacs(text, max_n)
        return
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line.strip(), max_n)
