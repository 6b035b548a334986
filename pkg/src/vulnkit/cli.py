"""Command-line front end.

Graph input is graph6, one graph per line on standard input.  Every output
starts with a schema tag so saved outputs can be diffed across versions.
Exit status: 0 success, 1 certification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from . import graph as gc
from . import params
from .census import CENSUS_MAX_ORDER, WORKERS_ENV, threshold_brute
from .certify import CertifyConfig, report, run_all
from .extremal import MuParam, fmt, phi_grid
from .params import fmt_rational, parse_rational
from .psi import OMEGA, GainVariant, psi, psi_satisfies
from .tables import TableRow, generate_tables
from .thresholds import (BRUTE, REGION, THEOREM, PropertySpec, delta_threshold_theorem,
                         region_implies, threshold_by_region)

SCHEMA = {
    "params": "vulnkit-params/1",
    "psi": "vulnkit-psi/1",
    "check": "vulnkit-check/1",
    "phi": "vulnkit-phi/1",
    "threshold": "vulnkit-threshold/1",
    "tables": "vulnkit-tables/1",
    "implies": "vulnkit-implies/1",
}


class UsageError(Exception):
    """Bad flag value; maps to exit status 2."""


# ---------------------------------------------------------------------------
# output


class Out:
    def __init__(self, fmt_name: str, stream: TextIO, schema: str):
        self.fmt = fmt_name
        self.stream = stream
        self.schema = schema
        self._rows = None
        if fmt_name in ("csv", "tsv"):
            stream.write(f"# schema={schema}\n")
            self._rows = csv.writer(stream, delimiter="," if fmt_name == "csv" else "\t",
                                    lineterminator="\n")

    def header(self, cols: Iterable[str]) -> None:
        if self._rows is not None:
            self._rows.writerow(list(cols))

    def row(self, values: Iterable[str]) -> None:
        self._rows.writerow(list(values))

    def record(self, obj: dict) -> None:
        self.stream.write(json.dumps({"schema": self.schema, **obj}) + "\n")

    @property
    def tabular(self) -> bool:
        return self._rows is not None


def graph_lines(stream: TextIO, err: TextIO, counts: dict) -> Iterator[tuple[str, gc.Graph]]:
    """Decoded graphs; malformed lines go to ``err`` with their line number."""
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            G = gc.from_graph6(text)
        except ValueError as exc:
            counts["failed"] += 1
            err.write(f"line {lineno}: {exc}\n")
            continue
        counts["ok"] += 1
        yield text, G


def _trailer(err: TextIO, counts: dict) -> None:
    err.write(f"ok={counts['ok']} failed={counts['failed']}\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_params(args, stdin, stdout, stderr) -> int:
    out = Out(args.format, stdout, SCHEMA["params"])
    out.header(params.ParamReport.csv_header())
    counts = {"ok": 0, "failed": 0}
    for g6, G in graph_lines(stdin, stderr, counts):
        if G.n == 0:
            counts["ok"] -= 1
            counts["failed"] += 1
            stderr.write(f"{g6}: parameter report needs n >= 1\n")
            continue
        rep = params.param_report(G)
        if out.tabular:
            out.row(rep.csv_row(g6, G.n))
        else:
            out.record({"graph6": g6, "n": G.n, **rep.to_json()})
    _trailer(stderr, counts)
    return 0


def cmd_psi(args, stdin, stdout, stderr) -> int:
    variant = GainVariant.parse(args.variant)
    out = Out(args.format, stdout, SCHEMA["psi"])
    out.header(["graph6", "variant", "x", "y"])
    counts = {"ok": 0, "failed": 0}
    for g6, G in graph_lines(stdin, stderr, counts):
        pf = psi(G, variant)
        if out.tabular:
            for x, y in pf.items():
                out.row([g6, variant.value, str(x), str(y)])
        else:
            out.record({"graph6": g6, **pf.to_json()})
    _trailer(stderr, counts)
    return 0


def cmd_check(args, stdin, stdout, stderr) -> int:
    t, k = _rational(args.t, "--t"), _rational(args.k, "--k")
    out = Out(args.format, stdout, SCHEMA["check"])
    out.header(["graph6", "t", "k", "l", "holds"])
    counts = {"ok": 0, "failed": 0}
    for g6, G in graph_lines(stdin, stderr, counts):
        ok = psi_satisfies(psi(G, OMEGA), t, k, args.l)
        if out.tabular:
            out.row([g6, fmt(t), fmt(k), str(args.l), "true" if ok else "false"])
        else:
            out.record({"graph6": g6, "t": fmt_rational(t), "k": fmt_rational(k), "l": args.l,
                        "holds": ok})
    _trailer(stderr, counts)
    return 0


def cmd_phi(args, stdin, stdout, stderr) -> int:
    mu = _mu(args.mu)
    variant = GainVariant.parse(args.variant)
    grid = phi_grid(mu, variant, args.n, closed=args.closed)
    out = Out(args.format, stdout, SCHEMA["phi"])
    if out.tabular:
        for row in grid:
            out.row(row)
    else:
        out.record({"mu": mu.name, "variant": variant.value, "n": args.n, "closed": args.closed,
                    "grid": grid})
    return 0


def cmd_threshold(args, stdin, stdout, stderr) -> int:
    mu = _mu(args.mu)
    p = _spec(args.property)
    n = args.n
    result: dict = {"mu": mu.name, "property": str(p), "n": n, "method": args.method.upper()}
    if args.method == "region":
        res = threshold_by_region(mu, p, n)
        result.update(res.to_json())
        result["method"] = REGION
    elif args.method == "brute":
        if n > CENSUS_MAX_ORDER:
            raise UsageError(f"--method brute needs n <= {CENSUS_MAX_ORDER}")
        b = threshold_brute(mu, p, n)
        result.update({"value": None if b.value is None else fmt_rational(b.value),
                       "witness_graph": b.witness_graph, "witness_point": None, "method": BRUTE,
                       "failing_graphs": b.failing, "total_graphs": b.total})
    else:
        if mu.kind != "delta" or p.variant is not OMEGA:
            raise UsageError("--method theorem covers the delta threshold of psi^omega properties")
        t, k, l = p.linear()
        if t == -1:
            raise UsageError("t = -1 is outside the theorem")
        result.update({"value": fmt_rational(delta_threshold_theorem(t, k, l, n)),
                       "witness_graph": None, "witness_point": None, "method": THEOREM})
    out = Out(args.format, stdout, SCHEMA["threshold"])
    if out.tabular:
        cols = ["mu", "property", "n", "method", "value", "witness_graph"]
        out.header(cols)
        out.row(["" if result.get(c) is None else str(result[c]) for c in cols])
    else:
        out.record(result)
    return 0


def cmd_tables(args, stdin, stdout, stderr) -> int:
    lo, hi = _range(args.n_range)
    rows = generate_tables(args.which, range(lo, hi + 1), brute=not args.no_brute)
    out = Out(args.format, stdout, SCHEMA["tables"])
    out.header(TableRow.COLUMNS)
    for r in rows:
        if out.tabular:
            out.row(r.values())
        else:
            out.record(dict(zip(TableRow.COLUMNS, r.values())))
    return 0


def cmd_implies(args, stdin, stdout, stderr) -> int:
    p, q = _spec(args.p), _spec(args.q)
    if p.variant is not OMEGA or q.variant is not OMEGA:
        raise UsageError("implies compares psi^omega regions; both properties must be in that family")
    ans = region_implies(p, q, args.n)
    out = Out(args.format, stdout, SCHEMA["implies"])
    if out.tabular:
        out.header(["p", "q", "n", "implies"])
        out.row([str(p), str(q), str(args.n), "true" if ans else "false"])
    else:
        out.record({"p": str(p), "q": str(q), "n": args.n, "implies": ans})
    return 0


def cmd_certify(args, stdin, stdout, stderr) -> int:
    cfg = CertifyConfig(n_max=args.n_max, random_count=args.random, seed=args.seed)
    results = run_all(cfg)
    stdout.write(report(results, cfg))
    if args.ledger_dir:
        d = Path(args.ledger_dir)
        d.mkdir(parents=True, exist_ok=True)
        for res in results:
            if not res.ledger:
                continue
            with open(d / f"{res.name}.csv", "w", newline="") as fh:
                fh.write(f"# schema=vulnkit-ledger-{res.name}/1\n")
                w = csv.writer(fh, lineterminator="\n")
                if res.ledger_header:
                    w.writerow(res.ledger_header)
                w.writerows(res.ledger)
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------
# argument parsing


def _rational(text: str, flag: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _mu(text: str) -> MuParam:
    try:
        return MuParam.parse(text)
    except ValueError as exc:
        raise UsageError(f"--mu: {exc}") from None


def _spec(text: str) -> PropertySpec:
    try:
        return PropertySpec.parse(text)
    except ValueError as exc:
        raise UsageError(f"property: {exc}") from None


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--n-range expects A..B, got {text!r}") from None
    if not sep or a > b or a < 1 or b > 12:
        raise UsageError(f"--n-range expects 1 <= A <= B <= 12, got {text!r}")
    return a, b


def _order(text: str) -> int:
    n = int(text)
    if not 1 <= n <= 24:
        raise argparse.ArgumentTypeError("order must be in 1..24")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "tsv"), default=None,
                        help="default: csv for phi and tables, json otherwise")
    common.add_argument("--workers", type=int, default=None,
                        help=f"census worker processes (default: ${WORKERS_ENV} or 1)")
    common.add_argument("--seed", type=int, default=20240, help="seed for random corpora")

    parser = argparse.ArgumentParser(prog="vulnkit", description="Graph vulnerability toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("params", parents=[common], help="parameter report per graph6 line")
    p = sub.add_parser("psi", parents=[common], help="property function per graph6 line")
    p.add_argument("--variant", choices=("omega", "Omega"), default="omega")
    p = sub.add_parser("check", parents=[common], help="(t, k, l)-connectivity per graph6 line")
    p.add_argument("--t", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--l", type=int, required=True)
    p = sub.add_parser("phi", parents=[common], help="density-function grid")
    p.add_argument("--mu", required=True)
    p.add_argument("--variant", choices=("omega", "Omega"), default="omega")
    p.add_argument("--n", type=_order, required=True)
    p.add_argument("--closed", action="store_true", help="printed closed forms instead of the oracle")
    p = sub.add_parser("threshold", parents=[common], help="mu-threshold of a property")
    p.add_argument("--mu", required=True)
    p.add_argument("--property", required=True)
    p.add_argument("--n", type=_order, required=True)
    p.add_argument("--method", choices=("region", "theorem", "brute"), default="region")
    p = sub.add_parser("certify", parents=[common], help="run every certification suite")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--random", type=int, default=500, help="random graphs at orders 7 and 8")
    p.add_argument("--ledger-dir", default=None)
    p = sub.add_parser("tables", parents=[common], help="threshold tables with verdicts")
    p.add_argument("--which", choices=("delta", "cross"), required=True)
    p.add_argument("--n-range", required=True)
    p.add_argument("--no-brute", action="store_true")
    p = sub.add_parser("implies", parents=[common], help="region inclusion between two properties")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--n", type=_order, required=True)
    return parser


COMMANDS = {
    "params": cmd_params, "psi": cmd_psi, "check": cmd_check, "phi": cmd_phi,
    "threshold": cmd_threshold, "certify": cmd_certify, "tables": cmd_tables,
    "implies": cmd_implies,
}


def run(argv: list[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = "csv" if args.command in ("phi", "tables") else "json"
    if args.workers is not None:
        if args.workers < 1:
            stderr.write("--workers must be positive\n")
            return 2
        os.environ[WORKERS_ENV] = str(args.workers)
    if getattr(args, "n_max", None) is not None and args.n_max < 1:
        stderr.write("--n-max must be positive\n")
        return 2
    try:
        return COMMANDS[args.command](args, stdin, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"vulnkit {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
