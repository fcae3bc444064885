"""graph6 reading and writing.

Only the undirected graph6 variant is handled.  The optional ``>>graph6<<``
header is accepted on input and never written.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import MAX_VERTICES, Graph, GraphError, edge_pairs

HEADER = ">>graph6<<"
MAX_EMIT = 62


class Graph6Error(GraphError):
    pass


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte vertex count")
        return _sextets_to_int(data[2:8]), 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte vertex count")
    return _sextets_to_int(data[1:4]), 4


def _sextets_to_int(chunk: bytes) -> int:
    x = 0
    for c in chunk:
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 byte {c!r}")
        x = (x << 6) | (c - 63)
    return x


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 text must be ASCII") from exc
    if any(not 63 <= c <= 126 for c in data):
        raise Graph6Error("graph6 bytes must lie in 63..126")
    n, offset = _decode_n(data)
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} unsupported (1..{MAX_VERTICES})")
    pairs = edge_pairs(n)
    body = data[offset:]
    need = -(-len(pairs) // 6)
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    pad = 6 * need - len(pairs)
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    total = len(pairs)
    edges = [p for e, p in enumerate(pairs) if bits >> (total - 1 - e) & 1]
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > MAX_EMIT:
        raise Graph6Error(f"graph6 emission supports n <= {MAX_EMIT}")
    pairs = edge_pairs(g.n)
    out = [chr(63 + g.n)]
    bits = [1 if g.adj[i] >> j & 1 else 0 for i, j in pairs]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def read_graph6(stream: IO[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each nonblank line; errors carry the line number."""
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


def write_graph6(graphs: Iterable[Graph], stream: IO[str]) -> None:
    for g in graphs:
        stream.write(to_graph6(g) + "\n")
