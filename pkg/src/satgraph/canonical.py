"""Exact canonical forms for small graphs.

The key is the lexicographically least upper-triangle bitstring (graph6
column order) over all vertex orderings that list the cells of the
degree-refined partition in their invariant order.  Restricting to those
orderings keeps the key an isomorphism invariant while cutting the search;
transpositions of twin vertices are pruned as automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, edge_pairs, iter_bits

MAX_CANONICAL_N = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    key: str

    def graph(self) -> Graph:
        edges = [p for p, bit in zip(edge_pairs(self.n), self.key) if bit == "1"]
        return Graph.from_edges(self.n, edges)


def refine_partition(g: Graph) -> list[list[int]]:
    """Coarsest equitable refinement of the degree partition, cells in invariant order."""
    by_deg: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        by_deg.setdefault(d, []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined = []
        for cell in cells:
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.adj[v] & cm).bit_count() for cm in masks)
                groups.setdefault(sig, []).append(v)
            refined.extend(groups[s] for s in sorted(groups))
        if len(refined) == len(cells):
            return cells
        cells = refined


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    if n > MAX_CANONICAL_N:
        raise GraphError(f"exact canonical form limited to n <= {MAX_CANONICAL_N}")
    cells = refine_partition(g)
    cell_of_pos = [ci for ci, cell in enumerate(cells) for _ in cell]
    remaining = [sum(1 << v for v in cell) for cell in cells]
    adj = g.adj
    total = n * (n - 1) // 2
    best = [None]
    placed: list[int] = []

    def search(pos: int, prefix: int) -> None:
        if pos == n:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        ci = cell_of_pos[pos]
        options = []
        for v in iter_bits(remaining[ci]):
            chunk = 0
            for u in placed:
                chunk = (chunk << 1) | (adj[u] >> v & 1)
            options.append((chunk, v))
        options.sort()
        tried: list[int] = []
        for chunk, v in options:
            if any((adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            new_prefix = (prefix << pos) | chunk
            if best[0] is not None and new_prefix > best[0] >> (total - pos * (pos + 1) // 2):
                continue
            remaining[ci] ^= 1 << v
            placed.append(v)
            search(pos + 1, new_prefix)
            placed.pop()
            remaining[ci] ^= 1 << v

    search(0, 0)
    return CanonicalForm(n, format(best[0], f"0{total}b") if total else "")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
