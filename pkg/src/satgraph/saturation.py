"""K_{r+1}-saturation with witnesses, and the apex counting behind the degree bounds.

Throughout, K_0 is contained in every vertex set and K_1 in every nonempty one,
so for r = 2 the K_{r-2} condition on common neighbourhoods is vacuous.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import Graph, GraphError, binom2, find_clique, is_clique, iter_bits


class NotSaturatedError(GraphError):
    """An operation that presumes K_{r+1}-saturation got a graph that is not."""


class Verdict(str, enum.Enum):
    SATURATED = "saturated"
    NOT_FREE = "not_free"
    NOT_MAXIMAL = "not_maximal"


@dataclass(frozen=True)
class SaturationCertificate:
    r: int
    verdict: Verdict
    witnesses: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)
    clique: tuple[int, ...] | None = None
    non_edge: tuple[int, int] | None = None

    @property
    def saturated(self) -> bool:
        return self.verdict is Verdict.SATURATED

    def recheck(self, g: Graph) -> bool:
        """Independently confirm every witness against ``g``."""
        r = self.r
        if self.verdict is Verdict.NOT_FREE:
            return self.clique is not None and len(self.clique) == r + 1 and is_clique(g, self.clique)
        if self.verdict is Verdict.NOT_MAXIMAL:
            x, y = self.non_edge
            return not g.has_edge(x, y) and find_clique(g, r - 1, g.adj[x] & g.adj[y]) is None
        if set(self.witnesses) != set(g.non_edges()):
            return False
        for (x, y), w in self.witnesses.items():
            common = g.adj[x] & g.adj[y]
            if len(w) != r - 1 or not is_clique(g, w) or any(not common >> v & 1 for v in w):
                return False
        return find_clique(g, r + 1) is None


def _check_r(g: Graph, r: int) -> None:
    if r < 2 or g.n < r + 1:
        raise GraphError(f"saturation needs r >= 2 and n >= r+1, got n={g.n}, r={r}")


def is_saturated(g: Graph, r: int) -> SaturationCertificate:
    """Witness-based K_{r+1}-saturation test.

    ``G + xy`` contains K_{r+1} exactly when N(x) ∩ N(y) holds a K_{r-1}, so each
    non-edge is certified by the lexicographically least such clique.
    """
    _check_r(g, r)
    big = find_clique(g, r + 1)
    if big is not None:
        return SaturationCertificate(r, Verdict.NOT_FREE, clique=big)
    witnesses = {}
    for x, y in g.non_edges():
        w = find_clique(g, r - 1, g.adj[x] & g.adj[y])
        if w is None:
            return SaturationCertificate(r, Verdict.NOT_MAXIMAL, non_edge=(x, y))
        witnesses[(x, y)] = w
    return SaturationCertificate(r, Verdict.SATURATED, witnesses=witnesses)


def is_saturated_literal(g: Graph, r: int) -> bool:
    """Definition check: K_{r+1}-free and adding any single missing edge creates K_{r+1}."""
    _check_r(g, r)
    if find_clique(g, r + 1) is not None:
        return False
    return all(find_clique(g.add_edge(x, y), r + 1) is not None for x, y in g.non_edges())


def is_free(g: Graph, r: int) -> bool:
    return find_clique(g, r + 1) is None


def apex_count(g: Graph, x: int, y: int, r: int) -> int:
    """Vertices v adjacent to x and y with a K_{r-2} in N(x) ∩ N(y) ∩ N(v)."""
    common = g.adj[x] & g.adj[y]
    return sum(
        1 for v in iter_bits(common) if find_clique(g, r - 2, common & g.adj[v]) is not None
    )


def f_count(g: Graph, v: int, r: int) -> int:
    """Non-adjacent pairs x, y in N(v) whose common neighbourhood inside N(v) holds a K_{r-2}."""
    nv = g.adj[v]
    count = 0
    for x in iter_bits(nv):
        for y in iter_bits(nv & ~g.adj[x] & ~((1 << (x + 1)) - 1)):
            if find_clique(g, r - 2, nv & g.adj[x] & g.adj[y]) is not None:
                count += 1
    return count


def f_vector(g: Graph, r: int) -> list[int]:
    return [f_count(g, v, r) for v in range(g.n)]


@dataclass(frozen=True)
class Claim1Result:
    lhs: int  # (r-1) * number of non-edges
    rhs: int  # sum of f(v)
    apex_counts: dict[tuple[int, int], int]
    r: int

    @property
    def min_apex(self) -> int | None:
        return min(self.apex_counts.values(), default=None)

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs and all(c >= self.r - 1 for c in self.apex_counts.values())

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs


def claim1_check(g: Graph, r: int) -> Claim1Result:
    if not is_saturated(g, r).saturated:
        raise NotSaturatedError(f"graph is not K_{r + 1}-saturated")
    counts = {(x, y): apex_count(g, x, y, r) for x, y in g.non_edges()}
    rhs = sum(f_vector(g, r))
    # double counting: both sides count the same incidences
    assert rhs == sum(counts.values())
    return Claim1Result((r - 1) * len(counts), rhs, counts, r)


@dataclass(frozen=True)
class Claim2Result:
    v: int
    f: int
    cap: int

    @property
    def holds(self) -> bool:
        return self.f <= self.cap


def claim2_check(g: Graph, v: int, r: int) -> Claim2Result:
    return Claim2Result(v, f_count(g, v, r), binom2(g.degree(v) - r + 2))


@dataclass(frozen=True)
class NeighborhoodPartition:
    """Pairs of N(v): edges (m1), non-edges whose addition keeps G[N(v)] K_r-free (m2), the rest (m3)."""

    v: int
    degree: int
    m1: int
    m2: int
    m3: int


def neighborhood_partition(g: Graph, v: int, r: int) -> NeighborhoodPartition:
    nbrs = g.neighbors(v)
    hv = g.induced(nbrs) if nbrs else None
    m1 = m2 = m3 = 0
    for i, x in enumerate(nbrs):
        for j in range(i + 1, len(nbrs)):
            y = nbrs[j]
            if g.adj[x] >> y & 1:
                m1 += 1
            elif find_clique(hv.add_edge(i, j), r) is not None:
                m3 += 1
            else:
                m2 += 1
    return NeighborhoodPartition(v, len(nbrs), m1, m2, m3)
