"""Undirected simple graphs on at most 64 vertices stored as adjacency bitsets.

Row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge.
Graphs are immutable; ``add_edge`` and friends return new objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or query."""


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def binom2(a: int) -> int:
    """C(a, 2), taken as 0 for a < 2."""
    return a * (a - 1) // 2 if a >= 2 else 0


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits at or above n={self.n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of range(n)")
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = sum(1 << perm[u] for u in iter_bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        vs = sorted(set(vertices))
        if not vs:
            raise GraphError("induced subgraph needs at least one vertex")
        pos = {v: i for i, v in enumerate(vs)}
        rows = [sum(1 << pos[u] for u in iter_bits(self.adj[v]) if u in pos) for v in vs]
        return Graph(len(vs), tuple(rows))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        _check_vertex(self.n, v)
        return list(iter_bits(self.adj[v]))

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def non_edges(self) -> list[tuple[int, int]]:
        """All pairs ``u < v`` that are not edges; there are C(n,2) - m of them."""
        return [
            (u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1
        ]

    def sum_degree_squares(self) -> int:
        return sum(d * d for d in self.degrees())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range for n={n}")


def _check_pair(n: int, u: int, v: int) -> None:
    _check_vertex(n, u)
    _check_vertex(n, v)
    if u == v:
        raise GraphError(f"loop requested at vertex {u}")


def empty_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


# -- cliques ---------------------------------------------------------------


def find_clique(g: Graph, k: int, within: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically least k-clique inside the vertex set ``within``.

    ``within`` defaults to all vertices.  K_0 is found in every vertex set
    (returns the empty tuple), K_1 in every nonempty one.
    """
    if k < 0:
        raise GraphError("clique size must be nonnegative")
    cand = (1 << g.n) - 1 if within is None else within
    return _extend(g.adj, cand, k, ())


def _extend(adj: Sequence[int], cand: int, k: int, chosen: tuple[int, ...]):
    if k == 0:
        return chosen
    if cand.bit_count() < k:
        return None
    if k == 1:
        return chosen + ((cand & -cand).bit_length() - 1,)
    while cand.bit_count() >= k:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        # only later vertices, so the first hit is lexicographically least
        found = _extend(adj, cand & adj[v], k - 1, chosen + (v,))
        if found is not None:
            return found
    return None


def contains_clique(g: Graph, k: int, within: int | None = None) -> bool:
    return find_clique(g, k, within) is not None


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return len(set(vs)) == len(vs) and all(g.adj[u] >> v & 1 for u, v in combinations(vs, 2))


def clique_number(g: Graph) -> int:
    k = 1
    while contains_clique(g, k + 1):
        k += 1
    return k


# -- distances ---------------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in iter_bits(g.adj[v]):
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= g.adj[u]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def diameter(g: Graph) -> int | None:
    """Largest eccentricity, or None for a disconnected graph."""
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if None in dist:
            return None
        best = max(best, max(dist))
    return best


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best = None
    for s in range(g.n):
        dist: list[int | None] = [None] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(g.adj[v]):
                if dist[u] is None:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


# -- edge-mask encoding --------------------------------------------------------


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge ``e`` (index into ``edge_pairs(n)``) is present iff bit ``e`` is set."""
    return Graph.from_edges(n, (p for e, p in enumerate(edge_pairs(n)) if mask >> e & 1))


def to_mask(g: Graph) -> int:
    return sum(1 << e for e, (i, j) in enumerate(edge_pairs(g.n)) if g.adj[i] >> j & 1)
