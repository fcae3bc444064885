"""Named graphs: S_{n,r}, Turán graphs and the known diameter-2 Moore graphs.

Vertex numbering is fixed: in ``s_graph`` the r-1 hubs come first; in
``turan`` the parts are contiguous with the larger parts first.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphError, cycle_graph

FAMILIES = ("s", "turan", "c5", "petersen", "hoffman-singleton")
MOORE_TAGS = ("C5", "Petersen", "HoffmanSingleton")


def s_graph(n: int, r: int) -> Graph:
    """K_{r-1} on hubs ``0..r-2`` plus n-r+1 leaves each joined to exactly the hubs."""
    if not 2 <= r < n <= MAX_VERTICES:
        raise GraphError(f"s_graph needs 2 <= r < n <= {MAX_VERTICES}, got n={n}, r={r}")
    hubs = range(r - 1)
    edges = [(a, b) for a in hubs for b in hubs if a < b]
    edges += [(h, leaf) for h in hubs for leaf in range(r - 1, n)]
    return Graph.from_edges(n, edges)


def turan_parts(n: int, r: int) -> list[range]:
    q, extra = divmod(n, r)
    parts, start = [], 0
    for i in range(r):
        size = q + (1 if i < extra else 0)
        parts.append(range(start, start + size))
        start += size
    return parts


def turan(n: int, r: int) -> Graph:
    if not 1 <= r <= n <= MAX_VERTICES:
        raise GraphError(f"turan needs 1 <= r <= n <= {MAX_VERTICES}, got n={n}, r={r}")
    parts = turan_parts(n, r)
    edges = [
        (u, v)
        for i, p in enumerate(parts)
        for q in parts[i + 1:]
        for u in p
        for v in q
    ]
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def hoffman_singleton() -> Graph:
    # Pentagon P_h vertex j is 5h+j; pentagram Q_i vertex j is 25+5i+j.
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edges(50, edges)


def moore_graph(tag: str) -> Graph:
    if tag == "C5":
        return cycle_graph(5)
    if tag == "Petersen":
        return petersen()
    if tag == "HoffmanSingleton":
        return hoffman_singleton()
    raise GraphError(f"unknown Moore graph {tag!r}; expected one of {MOORE_TAGS}")


def named_graph(family: str, n: int | None = None, r: int | None = None) -> Graph:
    """Dispatch on a family tag as used by the ``construct`` command."""
    family = family.lower()
    if family in ("s", "turan"):
        if n is None or r is None:
            raise GraphError(f"family {family!r} needs both n and r")
        return s_graph(n, r) if family == "s" else turan(n, r)
    tag = {"c5": "C5", "petersen": "Petersen", "hoffman-singleton": "HoffmanSingleton"}.get(family)
    if tag is None:
        raise GraphError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return moore_graph(tag)
