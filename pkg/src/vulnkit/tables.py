"""Printed threshold tables, recomputed and compared.

Each cell pairs a density parameter with a property column.  For every
parameter instance on the test grid the printed closed form is compared
with the region optimum and, up to order 7, the exhaustive census.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import graph as gc
from .census import CENSUS_MAX_ORDER, threshold_brute
from .extremal import CO_TAU, DELTA, INTEGRITY, KAPPA, SC, TAU, MuParam, fmt
from .thresholds import (PropertySpec, coc, conn, holds, integ, lconn, threshold_by_region,
                         tough, unscat)

MATCH = "MATCH"
ERRATUM = "PAPER_ERRATUM?"
UNCHECKED = "UNCHECKED"

K_RANGE = range(1, 6)
T_VALUES = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))
S_RANGE = range(-3, 4)
L_RANGE = range(2, 5)
I_RANGE = range(2, 7)

COLUMNS: dict[str, Callable[[], list[PropertySpec]]] = {
    "conn": lambda: [conn(k) for k in K_RANGE],
    "lconn": lambda: [lconn(k, l) for k in K_RANGE for l in L_RANGE],
    "tough": lambda: [tough(t) for t in T_VALUES],
    "unscat": lambda: [unscat(s) for s in S_RANGE],
    "coc": lambda: [coc(k, l) for k in K_RANGE for l in L_RANGE],
    "integ": lambda: [integ(i) for i in I_RANGE],
}


def _fl(q) -> int:
    return math.floor(Fraction(q))


def _cl(q) -> int:
    return math.ceil(Fraction(q))


# --- delta thresholds --------------------------------------------------------

def _delta_conn(p, n):
    return _fl(Fraction(n + p.k - 3, 2))


def _delta_tough(p, n):
    t = p.t
    first = _fl((n + 2 * t - 3) / 2)
    if t <= 0:
        return first
    g = Fraction(n) / (t + 1)
    fg, cg = _fl(g), _cl(g)
    terms = [first, (cg + 1) // cg + n - cg - 2]
    if fg:
        a = _cl(t * fg)
        terms.append(_fl(Fraction(n - a, fg)) + a - 1)
    return max(terms)


def _delta_unscat(p, n):
    s, half_up, half_dn = p.s, _cl(Fraction(n, 2)), n // 2
    return max(_fl(Fraction(n - s - 1, 2)), _fl(Fraction(half_up + s, half_dn)) + half_up + s - 1,
               half_up - 1)


def _delta_lconn(p, n):
    return _fl((n + p.k * p.l) / p.k) + p.k - 1


def _delta_integ(p, n):
    return p.i - 2


def _delta_coc(p, n):
    k, l = int(p.k), p.l
    r = n - k - 1
    xi = l if r % l == 0 else l - (_cl(Fraction(r, l)) * l - r)
    den = _cl(Fraction(n - k + 1, xi)) - 1
    if den == 0:
        return None
    return _fl(Fraction(n - k - xi + 1, den)) + k - 2


# --- cross thresholds --------------------------------------------------------

CellFn = Callable[[PropertySpec, int], "Fraction | int | None"]


@dataclass(frozen=True)
class Cell:
    table: str
    mu: MuParam
    column: str
    closed: CellFn | None    # None: the cell is not checkable (asymptotic or broken entry)
    note: str = ""

    @property
    def key(self) -> str:
        return f"{self.table}:{self.mu.name}:{self.column}"


def _c(table, mu, column, fn, note=""):
    return Cell(table, mu, column, fn, note)


CELLS: list[Cell] = [
    _c("delta", DELTA, "conn", _delta_conn),
    _c("delta", DELTA, "tough", _delta_tough),
    _c("delta", DELTA, "unscat", _delta_unscat),
    _c("delta", DELTA, "lconn", _delta_lconn),
    _c("delta", DELTA, "integ", _delta_integ),
    _c("delta", DELTA, "coc", _delta_coc),

    _c("cross", KAPPA, "conn", lambda p, n: p.k - 1),
    _c("cross", KAPPA, "lconn", lambda p, n: p.k - 1),
    _c("cross", KAPPA, "tough", lambda p, n: _cl(n * p.t / (p.t + 1)) - 1),
    _c("cross", KAPPA, "unscat", lambda p, n: _fl(Fraction(n - p.s, 2)) - 1),
    _c("cross", KAPPA, "coc", lambda p, n: p.k - 1),
    _c("cross", KAPPA, "integ", lambda p, n: p.i - 2),

    _c("cross", TAU, "conn", lambda p, n: (p.k - 1) / 2),
    _c("cross", TAU, "lconn", lambda p, n: (p.k - 1) / p.l),
    _c("cross", TAU, "tough", None, "asymptotic"),
    _c("cross", TAU, "unscat", None, "footnote"),
    _c("cross", TAU, "coc", None, "asymptotic"),
    _c("cross", TAU, "integ", None, "asymptotic"),

    _c("cross", SC, "conn", lambda p, n: 3 - p.k),
    _c("cross", SC, "lconn", lambda p, n: p.l - p.k + 1),
    _c("cross", SC, "tough", None, "footnote"),
    _c("cross", SC, "unscat", lambda p, n: p.s + 1),
    _c("cross", SC, "coc", None, "asymptotic"),
    _c("cross", SC, "integ", None, "asymptotic"),

    _c("cross", INTEGRITY, "conn", lambda p, n: n - 1),
    _c("cross", INTEGRITY, "lconn", lambda p, n: n - p.l + 1),
    _c("cross", INTEGRITY, "tough", lambda p, n: n - 1),
    _c("cross", INTEGRITY, "unscat", lambda p, n: n - p.s - 1),
    _c("cross", INTEGRITY, "coc", lambda p, n: p.k + p.l - 1),
    _c("cross", INTEGRITY, "integ", lambda p, n: p.i - 1),

    _c("cross", CO_TAU, "conn", lambda p, n: (p.k - 1) / p.k),
    _c("cross", CO_TAU, "lconn", lambda p, n: (p.k - 1) / (p.k + p.l - 2)),
    _c("cross", CO_TAU, "tough", None, "asymptotic"),
    _c("cross", CO_TAU, "unscat", None, "footnote"),
    _c("cross", CO_TAU, "coc", lambda p, n: Fraction(p.k, n - p.l + 1)),
    _c("cross", CO_TAU, "integ", lambda p, n: Fraction(1, n - p.i + 1)),
]


def cells(which: str = "all") -> list[Cell]:
    return [c for c in CELLS if which in ("all", c.table)]


@dataclass
class TableRow:
    cell: Cell
    prop: PropertySpec
    n: int
    closed: Fraction | None
    region: Fraction | None
    brute: Fraction | None
    brute_witness: str | None
    verdict: str
    note: str = ""

    COLUMNS = ("property", "parameters", "n", "mu", "closed_form", "region_value",
               "brute_value", "verdict", "note", "brute_witness")

    @property
    def reference(self) -> Fraction | None:
        return self.brute if self.n <= CENSUS_MAX_ORDER else self.region

    @property
    def lemma_ok(self) -> bool | None:
        if self.n > CENSUS_MAX_ORDER:
            return None
        return self.region == self.brute

    def values(self) -> list[str]:
        show = lambda q: "" if q is None else fmt(q)
        kind, _, par = str(self.prop).partition(":")
        return [kind, par, str(self.n), self.cell.mu.name, show(self.closed), show(self.region),
                show(self.brute), self.verdict, self.note, self.brute_witness or ""]


def evaluate(cell: Cell, p: PropertySpec, n: int, *, brute: bool = True) -> TableRow:
    region = threshold_by_region(cell.mu, p, n).value
    b = threshold_brute(cell.mu, p, n) if brute and n <= CENSUS_MAX_ORDER else None
    bval = b.value if b else None
    closed = None
    if cell.closed is not None:
        try:
            raw = cell.closed(p, n)
        except ZeroDivisionError:
            raw = None
        closed = None if raw is None else Fraction(raw)
    row = TableRow(cell, p, n, closed, region, bval, b.witness_graph if b else None, MATCH)
    ref = row.reference
    if cell.closed is None:
        row.verdict, row.note = UNCHECKED, cell.note
    elif closed is None:
        row.verdict, row.note = UNCHECKED, "closed form undefined"
    elif ref is None:
        row.verdict, row.note = UNCHECKED, "no graph lacks the property"
    elif not holds(p, gc.complete(n)):
        row.verdict, row.note = UNCHECKED, "every graph lacks the property"
    elif closed != ref:
        row.verdict = ERRATUM
    return row


def generate_tables(which: str, n_values, *, brute: bool = True) -> list[TableRow]:
    rows = []
    for cell in cells(which):
        for p in COLUMNS[cell.column]():
            for n in n_values:
                rows.append(evaluate(cell, p, n, brute=brute))
    return rows


@dataclass
class CellSummary:
    cell: Cell
    verdict: str
    matched_at: list[int]
    first_mismatch: TableRow | None


def summarise(rows: list[TableRow]) -> list[CellSummary]:
    """A cell is MATCH when, at some order, every checked instance agrees with the census."""
    by_cell: dict[str, list[TableRow]] = {}
    for r in rows:
        by_cell.setdefault(r.cell.key, []).append(r)
    out = []
    for cell in CELLS:
        rs = by_cell.get(cell.key)
        if rs is None:
            continue
        if cell.closed is None:
            out.append(CellSummary(cell, UNCHECKED, [], None))
            continue
        matched, mismatch = [], None
        for n in sorted({r.n for r in rs}):
            checked = [r for r in rs if r.n == n and r.verdict != UNCHECKED]
            bad = [r for r in checked if r.verdict != MATCH]
            if checked and not bad:
                matched.append(n)
            if bad:
                mismatch = bad[0]
        out.append(CellSummary(cell, MATCH if matched else ERRATUM, matched, mismatch))
    return out
