"""Command-line entry point: ``satgraph {construct,check,bounds,spectrum,search}``.

Exit status: 0 on success, 1 when a checked inequality fails for some input,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .bounds import DEFAULT_TOL, BOUNDS_FIELDS, verify_graph
from .constructions import FAMILIES, named_graph
from .graph import GraphError
from .graph6 import read_graph6, to_graph6
from .saturation import NotSaturatedError, claim1_check, claim2_check, f_vector, is_saturated
from .search import census
from .spectral import (
    ConvergenceError,
    full_spectrum,
    nikiforov_lambda_n_check,
    rayleigh_degree_bound,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
WORKERS_ENV = "SATGRAPH_WORKERS"
FORMATS = ("text", "csv", "json")

CHECK_SCHEMA = "check/1"
CHECK_FIELDS = (
    "schema", "line", "graph6", "n", "r", "verdict", "witness", "f_vector",
    "claim1_lhs", "claim1_rhs", "min_apex", "claim1_holds", "claim2_caps", "claim2_holds",
)
SPECTRUM_SCHEMA = "spectrum/1"
SPECTRUM_FIELDS = (
    "schema", "line", "graph6", "n", "m", "rho", "lambda_min", "rayleigh_bound",
    "rayleigh_holds", "trace", "r", "nikiforov_bound", "nikiforov_holds", "eigenvalues",
)
CENSUS_FIELDS = (
    "schema", "n", "r", "count", "min_edges", "max_edges", "sat_number", "ex_number",
    "eq1_rhs", "eq1_attainers", "min_sum_d2", "sum_d2_argmin", "min_rho", "rho_argmin",
    "s_graph", "rho_s", "rho_lower", "rho_s_gap", "s_attains_min_rho", "counterexamples",
    "members",
)

log = logging.getLogger("satgraph")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    fmt: str = "text"
    tol: float = DEFAULT_TOL
    n: int | None = None
    r: int | None = None
    family: str | None = None
    input: str = "-"
    workers: int = 1
    prefix_bits: int | None = None
    output: str | None = None
    bounds_csv: str | None = None
    allow_large: bool = False

    def validate(self) -> None:
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        if not self.tol >= 0:
            raise UsageError("tolerance must be >= 0")
        if self.workers < 1:
            raise UsageError("worker count must be >= 1")
        if self.command in ("check", "bounds", "search") and self.r is None:
            raise UsageError(f"{self.command} needs --r")
        if self.command == "search" and self.n is None:
            raise UsageError("search needs --n")


def fmt_value(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format(x, ".12g")
    if x is None:
        return ""
    if isinstance(x, (list, tuple)):
        return " ".join(fmt_value(v) for v in x)
    return str(x)


class Emitter:
    """Writes records in one of the output formats, with a fixed field order."""

    def __init__(self, out: IO[str], fmt: str, fields: Sequence[str]):
        self.out, self.fmt, self.fields = out, fmt, fields
        self._csv = None

    def emit(self, record: dict) -> None:
        row = {k: record.get(k) for k in self.fields}
        if self.fmt == "json":
            self.out.write(json.dumps(row) + "\n")
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.DictWriter(self.out, fieldnames=self.fields, lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow({k: fmt_value(v) for k, v in row.items()})
        else:
            self.out.write(" ".join(f"{k}={fmt_value(v)}" for k, v in row.items() if k != "schema"))
            self.out.write("\n")


def _open_input(path: str, stdin: IO[str]) -> IO[str]:
    if path == "-":
        return stdin
    try:
        return open(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _cmd_construct(cfg: RunConfig, out: IO[str]) -> int:
    g = named_graph(cfg.family, cfg.n, cfg.r)
    if cfg.fmt == "text":
        out.write(to_graph6(g) + "\n")
    else:
        Emitter(out, cfg.fmt, ("family", "n", "r", "graph6")).emit(
            {"family": cfg.family, "n": g.n, "r": cfg.r, "graph6": to_graph6(g)}
        )
    return EXIT_OK


def _check_record(lineno: int, g, r: int) -> tuple[dict, bool]:
    cert = is_saturated(g, r)
    rec = {
        "schema": CHECK_SCHEMA, "line": lineno, "graph6": to_graph6(g),
        "n": g.n, "r": r, "verdict": cert.verdict.value,
    }
    ok = True
    if cert.verdict.value == "not_free":
        rec["witness"] = list(cert.clique)
        return rec, ok
    if cert.verdict.value == "not_maximal":
        rec["witness"] = list(cert.non_edge)
    rec["f_vector"] = f_vector(g, r)
    c2 = [claim2_check(g, v, r) for v in range(g.n)]
    rec["claim2_caps"] = [c.cap for c in c2]
    rec["claim2_holds"] = all(c.holds for c in c2)
    ok &= rec["claim2_holds"]
    if cert.saturated:
        c1 = claim1_check(g, r)
        rec.update(claim1_lhs=c1.lhs, claim1_rhs=c1.rhs, min_apex=c1.min_apex, claim1_holds=c1.holds)
        ok &= c1.holds
    return rec, ok


def _cmd_check(cfg: RunConfig, out: IO[str], stdin: IO[str]) -> int:
    em = Emitter(out, cfg.fmt, CHECK_FIELDS)
    status = EXIT_OK
    for lineno, g in read_graph6(_open_input(cfg.input, stdin)):
        rec, ok = _check_record(lineno, g, cfg.r)
        em.emit(rec)
        if not ok:
            log.error("line %d: counting claim violated", lineno)
            status = EXIT_VIOLATION
    return status


def _cmd_bounds(cfg: RunConfig, out: IO[str], stdin: IO[str]) -> int:
    em = Emitter(out, cfg.fmt, BOUNDS_FIELDS)
    status = EXIT_OK
    for lineno, g in read_graph6(_open_input(cfg.input, stdin)):
        try:
            rep = verify_graph(g, cfg.r, tol=cfg.tol)
        except NotSaturatedError as exc:
            raise UsageError(f"line {lineno}: {exc}") from exc
        em.emit(rep.as_record())
        if not rep.holds:
            log.error("line %d: violated %s", lineno, ", ".join(rep.failures()))
            status = EXIT_VIOLATION
    return status


def _cmd_spectrum(cfg: RunConfig, out: IO[str], stdin: IO[str]) -> int:
    em = Emitter(out, cfg.fmt, SPECTRUM_FIELDS)
    status = EXIT_OK
    for lineno, g in read_graph6(_open_input(cfg.input, stdin)):
        sp = full_spectrum(g)
        bound = rayleigh_degree_bound(g)
        rec = {
            "schema": SPECTRUM_SCHEMA, "line": lineno, "graph6": to_graph6(g),
            "n": g.n, "m": g.m, "rho": sp.rho, "lambda_min": sp.smallest,
            "rayleigh_bound": bound, "rayleigh_holds": sp.rho * sp.rho + cfg.tol >= bound * bound,
            "trace": sum(sp.eigenvalues), "r": cfg.r, "eigenvalues": list(sp.eigenvalues),
        }
        ok = rec["rayleigh_holds"]
        if cfg.r is not None and g.m >= 1:
            try:
                nk = nikiforov_lambda_n_check(g, cfg.r)
            except GraphError:
                pass  # contains K_{r+1}: the bound does not apply
            else:
                rec.update(nikiforov_bound=nk.bound, nikiforov_holds=nk.holds)
                ok &= nk.holds
        em.emit(rec)
        if not ok:
            log.error("line %d: spectral bound violated", lineno)
            status = EXIT_VIOLATION
    return status


def _cmd_search(cfg: RunConfig, out: IO[str]) -> int:
    c = census(
        cfg.n, cfg.r, workers=cfg.workers, prefix_bits=cfg.prefix_bits, allow_large=cfg.allow_large
    )
    members = c.graph6()
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.writelines(s + "\n" for s in members)
    reports = c.bounds_reports()
    if cfg.bounds_csv:
        with open(cfg.bounds_csv, "w") as fh:
            em = Emitter(fh, "csv", BOUNDS_FIELDS)
            for rep in reports:
                em.emit(rep.as_record())
    summary = dict(c.summary(), members=members)
    if cfg.fmt == "text":
        for k in CENSUS_FIELDS[1:]:
            out.write(f"{k}: {fmt_value(summary[k])}\n")
    else:
        Emitter(out, cfg.fmt, CENSUS_FIELDS).emit(summary)
    bad = [i for i, rep in enumerate(reports) if not rep.holds]
    for i in bad:
        log.error("census member %s violates %s", members[i], ", ".join(reports[i].failures()))
    return EXIT_VIOLATION if bad else EXIT_OK


def run(cfg: RunConfig, out: IO[str] | None = None, stdin: IO[str] | None = None) -> int:
    cfg.validate()
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    if cfg.command == "construct":
        return _cmd_construct(cfg, out)
    if cfg.command == "check":
        return _cmd_check(cfg, out, stdin)
    if cfg.command == "bounds":
        return _cmd_bounds(cfg, out, stdin)
    if cfg.command == "spectrum":
        return _cmd_spectrum(cfg, out, stdin)
    if cfg.command == "search":
        return _cmd_search(cfg, out)
    raise UsageError(f"unknown command {cfg.command!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="tolerance for spectral comparisons (default %(default)g)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="satgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="emit a named graph as graph6")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)

    for name, helptext, need_r in (
        ("check", "saturation verdict and counting claims per graph", True),
        ("bounds", "degree and spectral bounds per saturated graph", True),
        ("spectrum", "eigenvalues and spectral bounds per graph", False),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--r", type=int, required=need_r)
        p.add_argument("input", nargs="?", default="-", help="graph6 file (default: stdin)")

    p = sub.add_parser("search", parents=[common], help="exhaustive census of saturated graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--workers", type=int, default=int(os.environ.get(WORKERS_ENV, "1")))
    p.add_argument("--prefix-bits", type=int, default=None,
                   help="high-order edge bits fixed per shard")
    p.add_argument("--output", help="write the census as graph6 lines to this path")
    p.add_argument("--bounds-csv", help="write one bounds row per census member to this path")
    p.add_argument("--allow-large", action="store_true", help="permit n = 8")
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="satgraph: %(message)s")
    cfg = RunConfig(
        command=args.command,
        fmt=args.fmt,
        tol=args.tol,
        n=getattr(args, "n", None),
        r=getattr(args, "r", None),
        family=getattr(args, "family", None),
        input=getattr(args, "input", "-"),
        workers=getattr(args, "workers", 1),
        prefix_bits=getattr(args, "prefix_bits", None),
        output=getattr(args, "output", None),
        bounds_csv=getattr(args, "bounds_csv", None),
        allow_large=getattr(args, "allow_large", False),
    )
    try:
        return run(cfg)
    except (UsageError, GraphError, ConvergenceError) as exc:
        print(f"satgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
