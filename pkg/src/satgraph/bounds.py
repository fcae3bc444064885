"""Closed-form extremal values and the per-graph bounds report.

Degree-sum comparisons are exact integers; only the spectral ones use a
floating tolerance.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import lru_cache

from .constructions import turan, turan_parts
from .graph import Graph, GraphError, binom2
from .saturation import NotSaturatedError, is_saturated
from .spectral import spectral_radius

DEFAULT_TOL = 1e-9


def _check_nr(n: int, r: int) -> None:
    if not 2 <= r < n:
        raise GraphError(f"need 2 <= r < n, got n={n}, r={r}")


def sat_number(n: int, r: int) -> int:
    """Fewest edges in an n-vertex K_{r+1}-saturated graph: (r-1)(n-r+1) + C(r-1, 2)."""
    _check_nr(n, r)
    return (r - 1) * (n - r + 1) + binom2(r - 1)


def ex_number(n: int, r: int) -> int:
    """Edge count of the Turán graph T_{n,r}."""
    if not 1 <= r <= n:
        raise GraphError(f"need 1 <= r <= n, got n={n}, r={r}")
    return (n * n - sum(len(p) ** 2 for p in turan_parts(n, r))) // 2


def degree_square_rhs(n: int, r: int) -> int:
    _check_nr(n, r)
    return (n - 1) ** 2 * (r - 1) + (r - 1) ** 2 * (n - r + 1)


def thm3_lhs(g: Graph, r: int) -> int:
    return sum((d + 1) * (d + 1 - r) for d in g.degrees())


def thm3_rhs(n: int, r: int) -> int:
    _check_nr(n, r)
    return (r - 1) * n * (n - r)


def spectral_lower_bound(n: int, r: int) -> float:
    return math.sqrt(degree_square_rhs(n, r) / n)


@lru_cache(maxsize=None)
def turan_spectral_radius(n: int, r: int) -> float:
    return spectral_radius(turan(n, r))


BOUNDS_SCHEMA = "bounds/1"
BOUNDS_FIELDS = (
    "schema", "n", "r", "m",
    "sum_d2", "eq1_rhs", "eq1_slack", "eq1_equality",
    "thm3_lhs", "thm3_rhs", "thm3_slack", "thm3_equality",
    "rho", "rho_lower", "rho_slack", "rho_lower_equality",
    "rho_turan", "turan_slack",
    "sat_number", "ex_number", "holds",
)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    r: int
    m: int
    sum_d2: int
    eq1_rhs: int
    thm3_lhs: int
    thm3_rhs: int
    rho: float
    rho_lower: float
    rho_turan: float
    sat_number: int
    ex_number: int
    tol: float = DEFAULT_TOL

    @property
    def eq1_slack(self) -> int:
        return self.sum_d2 - self.eq1_rhs

    @property
    def thm3_slack(self) -> int:
        return self.thm3_lhs - self.thm3_rhs

    @property
    def rho_slack(self) -> float:
        return self.rho - self.rho_lower

    @property
    def turan_slack(self) -> float:
        return self.rho_turan - self.rho

    @property
    def eq1_equality(self) -> bool:
        return self.eq1_slack == 0

    @property
    def thm3_equality(self) -> bool:
        return self.thm3_slack == 0

    @property
    def rho_lower_equality(self) -> bool:
        return abs(self.rho_slack) <= self.tol

    @property
    def holds(self) -> bool:
        return (
            self.eq1_slack >= 0
            and self.thm3_slack >= 0
            and self.rho_slack >= -self.tol
            and self.turan_slack >= -self.tol
            and self.sat_number <= self.m <= self.ex_number
        )

    def failures(self) -> list[str]:
        out = []
        if self.eq1_slack < 0:
            out.append("degree-square bound")
        if self.thm3_slack < 0:
            out.append("(d+1)(d+1-r) bound")
        if self.rho_slack < -self.tol:
            out.append("spectral lower bound")
        if self.turan_slack < -self.tol:
            out.append("Turan spectral upper bound")
        if not self.sat_number <= self.m <= self.ex_number:
            out.append("edge-count range")
        return out

    def as_record(self) -> dict:
        rec = asdict(self)
        rec.pop("tol")
        for name in BOUNDS_FIELDS:
            if name not in rec and name != "schema":
                rec[name] = getattr(self, name)
        rec["schema"] = BOUNDS_SCHEMA
        return {k: rec[k] for k in BOUNDS_FIELDS}


def verify_graph(g: Graph, r: int, tol: float = DEFAULT_TOL) -> BoundsReport:
    """All degree and spectral bounds for a K_{r+1}-saturated graph.

    Raises NotSaturatedError on other input; the bounds say nothing there.
    """
    if not is_saturated(g, r).saturated:
        raise NotSaturatedError(f"graph is not K_{r + 1}-saturated")
    n = g.n
    return BoundsReport(
        n=n,
        r=r,
        m=g.m,
        sum_d2=g.sum_degree_squares(),
        eq1_rhs=degree_square_rhs(n, r),
        thm3_lhs=thm3_lhs(g, r),
        thm3_rhs=thm3_rhs(n, r),
        rho=spectral_radius(g),
        rho_lower=spectral_lower_bound(n, r),
        rho_turan=turan_spectral_radius(n, r),
        sat_number=sat_number(n, r),
        ex_number=ex_number(n, r),
        tol=tol,
    )
