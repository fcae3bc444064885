"""Exhaustive isomorphism-free enumeration of K_{r+1}-saturated graphs.

Labeled graphs on n vertices are edge masks over ``edge_pairs(n)``.  The mask
space is cut into shards by its high-order bits; each shard is filtered with
vectorized numpy (minimum degree, K_{r+1}-freeness, then every non-edge
completing a K_{r+1}).  Survivors are grouped into isomorphism classes by
permutation orbits and each class is named by its canonical form, so the
output depends only on (n, r), never on the shard layout or worker count.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .bounds import (
    BoundsReport,
    degree_square_rhs,
    ex_number,
    sat_number,
    spectral_lower_bound,
    verify_graph,
)
from .canonical import CanonicalForm, canonical_form
from .constructions import s_graph
from .graph import Graph, GraphError, binom2, edge_pairs, from_mask
from .graph6 import to_graph6
from .spectral import rho_s_formula, spectral_radius

log = logging.getLogger(__name__)

MAX_DEFAULT_N = 7
MAX_FLAGGED_N = 8
SHARD_BITS = 20
RHO_TIE_TOL = 1e-9
CENSUS_SCHEMA = "census/1"


def _check_range(n: int, r: int, allow_large: bool) -> None:
    limit = MAX_FLAGGED_N if allow_large else MAX_DEFAULT_N
    if not 3 <= n <= limit:
        hint = "" if allow_large or n != MAX_FLAGGED_N else " (n=8 needs allow_large)"
        raise GraphError(f"enumeration supports 3 <= n <= {limit}, got n={n}{hint}")
    if not 2 <= r < n:
        raise GraphError(f"need 2 <= r < n, got n={n}, r={r}")


def filter_masks(n: int, r: int, masks: np.ndarray) -> np.ndarray:
    """The masks in ``masks`` whose graphs are K_{r+1}-saturated."""
    pairs = edge_pairs(n)
    index = {p: e for e, p in enumerate(pairs)}
    masks = np.asarray(masks, dtype=np.int64)

    # saturated graphs have minimum degree >= r-1
    deg = np.zeros((n, masks.size), dtype=np.uint8)
    for e, (i, j) in enumerate(pairs):
        bit = ((masks >> e) & 1).astype(np.uint8)
        deg[i] += bit
        deg[j] += bit
    masks = masks[deg.min(axis=0) >= r - 1]
    if masks.size == 0:
        return masks

    present = np.stack([((masks >> e) & 1).astype(np.uint8) for e in range(len(pairs))])
    free = np.ones(masks.size, dtype=bool)
    completes = np.zeros(present.shape, dtype=bool)
    full = binom2(r + 1)
    for clique in combinations(range(n), r + 1):
        es = [index[p] for p in combinations(clique, 2)]
        cnt = present[es].sum(axis=0, dtype=np.uint8)
        free &= cnt < full
        one_short = cnt == full - 1
        if one_short.any():
            for e in es:
                completes[e] |= one_short & (present[e] == 0)
    keep = free & np.all(present.astype(bool) | completes, axis=0)
    return masks[keep]


def _shard(args: tuple[int, int, int, int]) -> np.ndarray:
    n, r, prefix, low_bits = args
    masks = (np.int64(prefix) << low_bits) | np.arange(1 << low_bits, dtype=np.int64)
    return filter_masks(n, r, masks)


def labeled_saturated_masks(
    n: int, r: int, *, workers: int = 1, prefix_bits: int | None = None
) -> np.ndarray:
    """Sorted edge masks of every labeled K_{r+1}-saturated graph on n vertices."""
    total = len(edge_pairs(n))
    if prefix_bits is None:
        prefix_bits = max(0, total - SHARD_BITS)
    if not 0 <= prefix_bits <= total:
        raise GraphError(f"prefix width must lie in 0..{total}")
    low = total - prefix_bits
    jobs = [(n, r, p, low) for p in range(1 << prefix_bits)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_shard, jobs))
    else:
        parts = [_shard(j) for j in jobs]
    return np.sort(np.concatenate(parts))


@lru_cache(maxsize=4)
def _relabel_weights(n: int) -> np.ndarray:
    """Row p, column e: the bit that edge e moves to under the p-th permutation."""
    pairs = edge_pairs(n)
    index = {p: e for e, p in enumerate(pairs)}
    rows = []
    for perm in permutations(range(n)):
        rows.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs])
    return np.left_shift(np.int64(1), np.array(rows, dtype=np.int64))


def _orbit(n: int, mask: int) -> np.ndarray:
    bits = [e for e in range(len(edge_pairs(n))) if mask >> e & 1]
    weights = _relabel_weights(n)
    return np.unique(weights[:, bits].sum(axis=1))


def classes_from_masks(n: int, masks: np.ndarray) -> list[CanonicalForm]:
    """Canonical forms of the isomorphism classes among ``masks`` (closed under relabeling)."""
    remaining = set(int(m) for m in masks)
    forms = []
    for m in sorted(remaining):
        if m not in remaining:
            continue
        orbit = set(int(x) for x in _orbit(n, m))
        if not orbit <= remaining:
            raise AssertionError("labeled set is not closed under relabeling")
        remaining -= orbit
        forms.append(canonical_form(from_mask(n, m)))
    forms.sort()
    if len(set(forms)) != len(forms):
        raise AssertionError("two orbits received the same canonical form")
    return forms


def enumerate_saturated(
    n: int,
    r: int,
    *,
    workers: int = 1,
    prefix_bits: int | None = None,
    allow_large: bool = False,
) -> list[Graph]:
    """One canonically labeled representative per class, sorted by canonical key."""
    return [cf.graph() for cf in _canonical_census(n, r, workers, prefix_bits, allow_large)]


def _canonical_census(n, r, workers=1, prefix_bits=None, allow_large=False):
    _check_range(n, r, allow_large)
    return _cached_census(n, r, workers, prefix_bits)


@lru_cache(maxsize=None)
def _cached_census(n: int, r: int, workers: int, prefix_bits: int | None) -> tuple[CanonicalForm, ...]:
    masks = labeled_saturated_masks(n, r, workers=workers, prefix_bits=prefix_bits)
    log.debug("n=%d r=%d: %d labeled saturated graphs", n, r, masks.size)
    return tuple(classes_from_masks(n, masks))


@dataclass(frozen=True)
class SearchCensus:
    n: int
    r: int
    graphs: tuple[Graph, ...]
    rhos: tuple[float, ...]
    s_index: int
    tol: float = RHO_TIE_TOL

    @property
    def count(self) -> int:
        return len(self.graphs)

    @property
    def sum_d2(self) -> tuple[int, ...]:
        return tuple(g.sum_degree_squares() for g in self.graphs)

    @property
    def eq1_rhs(self) -> int:
        return degree_square_rhs(self.n, self.r)

    @property
    def eq1_attainers(self) -> list[int]:
        return [i for i, s in enumerate(self.sum_d2) if s == self.eq1_rhs]

    @property
    def min_sum_d2(self) -> int:
        return min(self.sum_d2)

    @property
    def sum_d2_argmin(self) -> list[int]:
        return [i for i, s in enumerate(self.sum_d2) if s == self.min_sum_d2]

    @property
    def min_rho(self) -> float:
        return min(self.rhos)

    @property
    def rho_argmin(self) -> list[int]:
        lo = self.min_rho
        return [i for i, x in enumerate(self.rhos) if x - lo <= self.tol]

    @property
    def rho_s(self) -> float:
        return rho_s_formula(self.n, self.r)

    @property
    def rho_lower(self) -> float:
        return spectral_lower_bound(self.n, self.r)

    @property
    def counterexamples(self) -> list[int]:
        """Members whose spectral radius is below that of S_{n,r}."""
        return [i for i, x in enumerate(self.rhos) if x < self.rho_s - self.tol]

    @property
    def edge_counts(self) -> tuple[int, ...]:
        return tuple(g.m for g in self.graphs)

    def graph6(self, indices=None) -> list[str]:
        idx = range(self.count) if indices is None else indices
        return [to_graph6(self.graphs[i]) for i in idx]

    def bounds_reports(self) -> list[BoundsReport]:
        return [verify_graph(g, self.r) for g in self.graphs]

    def summary(self) -> dict:
        """Plain record of the census, suitable for JSON."""
        return {
            "schema": CENSUS_SCHEMA,
            "n": self.n,
            "r": self.r,
            "count": self.count,
            "min_edges": min(self.edge_counts),
            "max_edges": max(self.edge_counts),
            "sat_number": sat_number(self.n, self.r),
            "ex_number": ex_number(self.n, self.r),
            "eq1_rhs": self.eq1_rhs,
            "eq1_attainers": self.graph6(self.eq1_attainers),
            "min_sum_d2": self.min_sum_d2,
            "sum_d2_argmin": self.graph6(self.sum_d2_argmin),
            "min_rho": self.min_rho,
            "rho_argmin": self.graph6(self.rho_argmin),
            "s_graph": self.graph6([self.s_index])[0],
            "rho_s": self.rho_s,
            "rho_lower": self.rho_lower,
            "rho_s_gap": self.rho_s - self.rho_lower,
            "s_attains_min_rho": self.s_index in self.rho_argmin,
            "counterexamples": self.graph6(self.counterexamples),
        }


def census(
    n: int,
    r: int,
    *,
    workers: int = 1,
    prefix_bits: int | None = None,
    allow_large: bool = False,
) -> SearchCensus:
    forms = _canonical_census(n, r, workers, prefix_bits, allow_large)
    graphs = tuple(cf.graph() for cf in forms)
    s_key = canonical_form(s_graph(n, r))
    s_index = forms.index(s_key)
    rhos = tuple(spectral_radius(g) for g in graphs)
    return SearchCensus(n, r, graphs, rhos, s_index)


def equality_census(n: int, r: int, **kw) -> SearchCensus:
    """Census whose ``eq1_attainers`` list the graphs meeting the degree-square bound."""
    return census(n, r, **kw)


def min_rho_search(n: int, r: int, **kw) -> SearchCensus:
    """Census whose ``rho_argmin`` and ``counterexamples`` report on the minimum spectral radius."""
    return census(n, r, **kw)

