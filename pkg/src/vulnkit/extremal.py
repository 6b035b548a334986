"""Join-of-cliques graphs K(parts, y) and the density functions built on them.

``K(parts, y)`` joins a clique on ``y`` vertices to disjoint cliques of the
given part sizes.  ``phi_oracle`` optimises a parameter over those graphs by
brute force; ``phi_closed`` and ``mu_formula`` evaluate the published closed
forms exactly as printed, so comparing the two exposes every disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from . import graph as gc
from . import params
from .graph import Graph
from .psi import BIG_OMEGA, OMEGA, GainVariant, psi

INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass(frozen=True, order=True)
class Composition:
    """Clique orders ``parts`` (at least one, all positive) plus a join clique of order ``y``."""

    y: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.y < 0:
            raise ValueError("y must be non-negative")
        if not self.parts or min(self.parts) < 1:
            raise ValueError(f"parts must be positive and non-empty, got {self.parts}")

    @property
    def n(self) -> int:
        return self.y + sum(self.parts)

    @property
    def size(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return max(self.parts)

    @property
    def smallest(self) -> int:
        return min(self.parts)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.parts))};y={self.y})"


def partitions(m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``m`` as non-increasing tuples, in lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(1, min(m, max_part) + 1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def compositions(n: int) -> Iterator[Composition]:
    """Every ``(parts, y)`` of total ``n`` with at least one part; parts non-increasing."""
    for y in range(n):
        for parts in partitions(n - y):
            yield Composition(y, parts)


def build_K(c: Composition) -> Graph:
    """Join clique first (vertices ``0..y-1``), then the parts in the given order."""
    body = gc.empty(0)
    for part in c.parts:
        body = gc.disjoint_union(body, gc.complete(part))
    return gc.join(gc.complete(c.y), body)


# ---------------------------------------------------------------------------
# density parameters


@dataclass(frozen=True)
class MuParam:
    kind: str
    arg: int | None = None

    KINDS = ("delta", "edges", "ncap", "kappa", "kappa_ell", "tau", "sc", "coc",
             "integrity", "co_tau")
    _WITH_ARG = ("ncap", "kappa_ell", "coc")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown density parameter {self.kind!r}")
        if (self.arg is not None) != (self.kind in self._WITH_ARG):
            raise ValueError(f"{self.kind} {'needs' if self.arg is None else 'takes no'} argument")

    @property
    def direction(self) -> str:
        return DECREASING if self.kind == "sc" else INCREASING

    @property
    def name(self) -> str:
        return self.kind if self.arg is None else f"{self.kind}{self.arg}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "MuParam":
        """``delta``, ``edges``, ``ncap2``, ``kappa_ell3``, ``coc2``, ``co_tau``, ..."""
        text = text.strip().lower()
        aliases = {"e": "edges", "i": "integrity", "integ": "integrity", "cotau": "co_tau",
                   "tauc": "co_tau", "co_toughness": "co_tau", "toughness": "tau"}
        text = aliases.get(text, text)
        for kind in cls._WITH_ARG:
            if text.startswith(kind) and text[len(kind):].isdigit():
                return cls(kind, int(text[len(kind):]))
        return cls(text)


DELTA = MuParam("delta")
EDGES = MuParam("edges")
KAPPA = MuParam("kappa")
TAU = MuParam("tau")
SC = MuParam("sc")
INTEGRITY = MuParam("integrity")
CO_TAU = MuParam("co_tau")


def NCAP(j: int) -> MuParam:
    return MuParam("ncap", j)


def KAPPA_ELL(ell: int) -> MuParam:
    return MuParam("kappa_ell", ell)


def COC(ell: int) -> MuParam:
    return MuParam("coc", ell)


def better(mu: MuParam, a, b) -> bool:
    """True when ``a`` is strictly more optimal than ``b`` for ``mu``'s direction."""
    return a > b if mu.direction == INCREASING else a < b


def mu_direct(mu: MuParam, G: Graph) -> Fraction:
    """Exact parameter value on ``G``, extension values included."""
    k = mu.kind
    if k == "delta":
        v = gc.min_degree(G)
    elif k == "edges":
        v = gc.edge_count(G)
    elif k == "ncap":
        v = gc.common_neighborhood_min(G, mu.arg)
    elif k == "kappa":
        v = params.kappa(G)
    elif k == "kappa_ell":
        v = params.kappa_ell(G, mu.arg)
    elif k == "tau":
        v = params.toughness(G)
    elif k == "sc":
        v = params.scattering(G)
    elif k == "coc":
        v = params.coc(G, mu.arg)
    elif k == "integrity":
        v = params.integrity(G)
    else:
        v = params.co_toughness(G)
    return Fraction(v)


@lru_cache(maxsize=None)
def _K(c: Composition) -> Graph:
    return build_K(c)


@lru_cache(maxsize=None)
def mu_of_K(mu: MuParam, c: Composition) -> Fraction:
    return mu_direct(mu, _K(c))


def mu_formula(mu: MuParam, c: Composition) -> Fraction:
    """Printed value of ``mu(K(parts, y))``, uncorrected."""
    n, y, z = c.n, c.y, c.size
    big, small = c.largest, c.smallest
    k = mu.kind
    if k == "delta":
        v = y + small
    elif k == "edges":
        v = y * (n - y) + comb(y, 2) + sum(comb(p, 2) for p in c.parts)
    elif k == "ncap":
        # the printed row covers j >= 2; N^1 is the minimum degree
        v = y + small if mu.arg == 1 else y
    elif k == "kappa":
        v = y
    elif k == "kappa_ell":
        v = y if mu.arg <= z else n - mu.arg
    elif k == "tau":
        v = Fraction(y, z)
    elif k == "sc":
        v = z - y
    elif k == "coc":
        v = y if mu.arg >= big else n - big
    elif k == "integrity":
        v = big + y
    else:
        v = Fraction(y * (big + n), n * n)
    return Fraction(v)


# ---------------------------------------------------------------------------
# density functions


@dataclass(frozen=True)
class PhiValue:
    value: Fraction | None
    witness: Composition | None = None
    reason: str = ""

    @property
    def defined(self) -> bool:
        return self.value is not None


def _candidates(variant: GainVariant, n: int, x: int, y: int) -> Iterator[Composition]:
    if variant is OMEGA:
        for parts in partitions(n - y):
            if len(parts) == x:
                yield Composition(y, parts)
    else:
        for parts in partitions(n - y, x):
            if parts and parts[0] == x:
                yield Composition(y, parts)


@lru_cache(maxsize=None)
def phi_oracle(mu: MuParam, variant: GainVariant, n: int, x: int, y: int) -> PhiValue:
    """Optimise ``mu`` over the K-graphs of order ``n`` whose property function hits ``(x, y)``.

    Candidates have ``x`` parts (OMEGA) or largest part ``x`` (BIG_OMEGA);
    each candidate's property function is recomputed and kept only if its
    value at ``x`` really is ``y``.  Ties go to the smallest part tuple.
    """
    if not (x >= 1 and 0 <= y and x + y <= n):
        return PhiValue(None, reason="outside the feasible triangle")
    best: PhiValue | None = None
    for c in _candidates(variant, n, x, y):
        if psi(_K(c), variant).values.get(x) != y:
            continue
        v = mu_of_K(mu, c)
        if best is None or better(mu, v, best.value):
            best = PhiValue(v, c)
    return best or PhiValue(None, reason="no K-graph realises the point")


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


def phi_closed(mu: MuParam, variant: GainVariant, n: int, x: int, y: int) -> PhiValue:
    """Printed density-function cell at ``(x, y)``, uncorrected.

    ``gamma = (n-y)/x``, ``lambda = (n-y-x)/x``, ``r = (n-y) mod x``.
    """
    if not (x >= 1 and 0 <= y and x + y <= n):
        return PhiValue(None, reason="outside the feasible triangle")
    k = mu.kind
    m = n - y
    g_floor, g_ceil = m // x, _cdiv(m, x)
    lam_ceil = _cdiv(m - x, x)

    def undefined(why: str) -> PhiValue:
        return PhiValue(None, reason=why)

    if variant is OMEGA:
        if k == "delta":
            v = g_floor + y - 1
        elif k == "edges":
            v = comb(n - x + 1, 2) + y * (x - 1)
        elif k == "ncap":
            v = y if mu.arg <= n - y else n - mu.arg
        elif k == "kappa":
            v = y
        elif k == "tau":
            v = Fraction(y, x)
        elif k == "sc":
            v = x - y
        elif k == "kappa_ell":
            v = y if x >= mu.arg else n - mu.arg
        elif k == "co_tau":
            if y + x - 1 == 0:
                return undefined("zero denominator")
            v = Fraction(y, y + x - 1)
        elif k == "integrity":
            v = n - x + 1
        else:
            v = y if mu.arg > n - y - x + 1 else n - x - mu.arg
    else:
        if k == "delta":
            if g_ceil - 1 == 0:
                return undefined("zero denominator")
            v = (n - y - x) // (g_ceil - 1) + y - 1
        elif k == "edges":
            v = Fraction(y * y + n * y - y, 2) + g_floor * comb(x, 2) + comb(m % x, 2)
        elif k == "ncap":
            v = y if mu.arg <= n - y else n - mu.arg
        elif k == "kappa":
            v = y
        elif k == "tau":
            v = Fraction(y, lam_ceil + 1)
        elif k == "sc":
            v = lam_ceil + 1 - y
        elif k == "kappa_ell":
            v = y if lam_ceil >= mu.arg else n - mu.arg
        elif k == "co_tau":
            if n == x:
                return undefined("zero denominator")
            v = Fraction(y, n - x)
        elif k == "integrity":
            v = x + y
        else:
            return undefined("paper omits")
    return PhiValue(Fraction(v))


def lambda_remainder(n: int, x: int, y: int) -> int | None:
    """``r'``: remainder of ``n - y - x`` divided by ``ceil(lambda)`` (None when that is 0)."""
    lam_ceil = _cdiv(n - y - x, x)
    return None if lam_ceil == 0 else (n - y - x) % lam_ceil


# ---------------------------------------------------------------------------
# family membership


def is_in_family(H: Graph, c: Composition) -> bool:
    """Does some ``y``-set ``Y`` leave components of exactly the orders ``parts``?

    Parts that are connected and pairwise non-adjacent must be the
    components of ``H - Y``, so only ``Y`` needs searching.
    """
    if H.n != c.n:
        return False
    target = sorted(c.parts)
    for Y in range(1 << H.n):
        if Y.bit_count() != c.y:
            continue
        orders = sorted(comp.bit_count() for comp in gc.components(gc.remove_vertices(H, Y)))
        if orders == target:
            return True
    return False


def family_compositions(H: Graph) -> set[Composition]:
    """All compositions whose family contains ``H``."""
    out = set()
    for Y in range(H.vertices):  # Y = V(H) leaves no parts
        comps = gc.components(gc.remove_vertices(H, Y))
        out.add(Composition(Y.bit_count(), tuple(sorted((c.bit_count() for c in comps), reverse=True))))
    return out


# ---------------------------------------------------------------------------
# corrections and comparison ledgers

MATCH = "MATCH"
ERRATUM = "ERRATUM"
EXTENSION = "EXTENSION"
PAPER_OMITS = "PAPER_OMITS"
PAPER_UNDEFINED = "PAPER_UNDEFINED"
ORACLE_UNDEFINED = "ORACLE_UNDEFINED"
UNLEDGERED = "UNLEDGERED"

LEDGER_COLUMNS = ("mu", "variant", "n", "x", "y_or_composition",
                  "paper_value", "oracle_value", "verdict")
_EXTENDED_KINDS = ("kappa", "tau", "sc", "co_tau")


def is_extension(mu: MuParam, c: Composition) -> bool:
    """Does ``mu(K(c))`` fall back on an extension value?  ``alpha(K(c))`` is the part count."""
    if mu.kind in _EXTENDED_KINDS:
        return c.size < 2
    if mu.kind == "kappa_ell":
        return c.size < mu.arg
    return False


def _ncap_K(mu: MuParam, c: Composition) -> int:
    j = mu.arg
    if j == 1:
        return c.y + c.smallest - 1
    if c.size == 1:
        return c.n - j
    return max(0, c.y - j + 2) - (1 if c.y >= j - 1 and c.smallest == 1 else 0)


def _coc_K(mu: MuParam, c: Composition) -> int:
    l = mu.arg
    return min(max(0, c.n - l + 1), c.y + sum(max(0, p - l + 1) for p in c.parts))


def _co_tau_K(mu: MuParam, c: Composition) -> Fraction:
    # cheapest cutset keeping a largest remaining component of order m
    if c.size == 1:
        return Fraction(1)
    return min(Fraction(c.y + sum(max(0, p - m) for p in c.parts), c.n - m)
               for m in range(1, c.largest + 1))


MU_CORRECTIONS = {
    "delta": lambda mu, c: c.y + c.smallest - 1,
    "ncap": _ncap_K,
    "coc": _coc_K,
    "co_tau": _co_tau_K,
}


def mu_corrected(mu: MuParam, c: Composition) -> Fraction:
    fix = MU_CORRECTIONS.get(mu.kind)
    return Fraction(fix(mu, c)) if fix else mu_formula(mu, c)


def _ncap_phi(mu, variant, n, x, y):
    j = mu.arg
    if variant is OMEGA:
        if x == 1:
            return n - j
        return max(0, y - j + 2) - (1 if y >= j - 1 and n - y < 2 * x else 0)
    rem = n - y - x
    if rem == 0:
        return n - j
    # a part of order 1 can be avoided unless the leftover forces one
    avoid = x >= 2 and rem != 1 and (x >= 3 or rem % 2 == 0)
    return max(0, y - j + 2) - (1 if y >= j - 1 and not avoid else 0)


def _coc_phi(mu, variant, n, x, y):
    l = mu.arg
    if variant is OMEGA:
        return min(max(0, n - l + 1), y + max(0, n - y - x - l + 2) + (x - 1) * max(0, 2 - l))
    q, r = divmod(n - y, x)
    return min(max(0, n - l + 1), y + q * max(0, x - l + 1) + max(0, r - l + 1))


def _edges_big_phi(mu, variant, n, x, y):
    q, r = divmod(n - y, x)
    return Fraction(2 * n * y - y * y - y, 2) + q * comb(x, 2) + comb(r, 2)


def _kappa_ell_big_phi(mu, variant, n, x, y):
    g = _cdiv(n - y, x)
    return y if g >= mu.arg else n - g


PHI_CORRECTIONS = {
    ("ncap", OMEGA): _ncap_phi,
    ("ncap", BIG_OMEGA): _ncap_phi,
    ("coc", OMEGA): _coc_phi,
    ("coc", BIG_OMEGA): _coc_phi,       # derived; no printed cell
    ("edges", BIG_OMEGA): _edges_big_phi,
    ("kappa_ell", BIG_OMEGA): _kappa_ell_big_phi,
}


def phi_corrected(mu: MuParam, variant: GainVariant, n: int, x: int, y: int) -> PhiValue:
    """Printed cell, or its registered correction where one exists."""
    fix = PHI_CORRECTIONS.get((mu.kind, variant))
    if fix is None or not (x >= 1 and 0 <= y and x + y <= n):
        return phi_closed(mu, variant, n, x, y)
    return PhiValue(Fraction(fix(mu, variant, n, x, y)))


@lru_cache(maxsize=None)
def phi_oracle_definitional(mu: MuParam, variant: GainVariant, n: int, x: int, y: int) -> PhiValue:
    """``phi_oracle`` restricted to K-graphs where ``mu`` needs no extension value."""
    if not (x >= 1 and 0 <= y and x + y <= n):
        return PhiValue(None, reason="outside the feasible triangle")
    best: PhiValue | None = None
    for c in _candidates(variant, n, x, y):
        if is_extension(mu, c) or psi(_K(c), variant).values.get(x) != y:
            continue
        v = mu_of_K(mu, c)
        if best is None or better(mu, v, best.value):
            best = PhiValue(v, c)
    return best or PhiValue(None, reason="only extension-regime K-graphs realise the point")


@dataclass(frozen=True)
class LedgerRow:
    mu: str
    variant: str
    n: int
    x: int
    where: str
    paper: Fraction | None
    oracle: Fraction | None
    verdict: str

    def csv(self) -> list[str]:
        show = lambda q: "" if q is None else fmt(q)
        return [self.mu, self.variant, str(self.n), str(self.x), self.where,
                show(self.paper), show(self.oracle), self.verdict]


def fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def compare_mu(n_max: int, mus: list[MuParam] | None = None) -> list[LedgerRow]:
    """Printed ``mu(K(parts, y))`` against the directly computed value, every composition up to ``n_max``."""
    rows = []
    for n in range(1, n_max + 1):
        ms = mus if mus is not None else table_mus(n)
        for c in compositions(n):
            for mu in ms:
                if mu.arg is not None and mu.kind != "coc" and mu.arg > n:
                    continue
                truth = mu_of_K(mu, c)
                printed = mu_formula(mu, c)
                if printed == truth:
                    verdict = MATCH
                elif mu.kind in MU_CORRECTIONS and mu_corrected(mu, c) == truth:
                    verdict = ERRATUM
                elif is_extension(mu, c):
                    verdict = EXTENSION
                else:
                    verdict = UNLEDGERED
                rows.append(LedgerRow(mu.name, "-", n, c.size, str(c), printed, truth, verdict))
    return rows


def table_mus(n: int) -> list[MuParam]:
    """Every density parameter with a printed cell, arguments ranging up to ``n``."""
    out = [DELTA, EDGES] + [NCAP(j) for j in range(2, n + 1)]
    out += [KAPPA, TAU, SC] + [KAPPA_ELL(l) for l in range(2, n + 1)]
    out += [CO_TAU, INTEGRITY] + [COC(l) for l in range(1, n + 1)]
    return out


def classify_point(mu: MuParam, variant: GainVariant, n: int, x: int, y: int) -> LedgerRow:
    oracle = phi_oracle(mu, variant, n, x, y)
    paper = phi_closed(mu, variant, n, x, y)
    where = str(y)
    if not paper.defined and paper.reason == "paper omits":
        verdict = PAPER_OMITS
        fix = PHI_CORRECTIONS.get((mu.kind, variant))
        if oracle.defined and (fix is None or Fraction(fix(mu, variant, n, x, y)) != oracle.value):
            verdict = UNLEDGERED
    elif not oracle.defined:
        verdict = MATCH if not paper.defined else ORACLE_UNDEFINED
    elif not paper.defined:
        verdict = PAPER_UNDEFINED
    elif paper.value == oracle.value:
        verdict = MATCH
    elif (mu.kind, variant) in PHI_CORRECTIONS and phi_corrected(mu, variant, n, x, y).value == oracle.value:
        verdict = ERRATUM
    else:
        d = phi_oracle_definitional(mu, variant, n, x, y)
        verdict = EXTENSION if (not d.defined or d.value == paper.value) else UNLEDGERED
    return LedgerRow(mu.name, variant.value, n, x, where, paper.value, oracle.value, verdict)


def compare_phi(n_values, variants=(OMEGA, BIG_OMEGA), mus: list[MuParam] | None = None) -> list[LedgerRow]:
    """Every printed density-function cell against the oracle over the feasible triangle."""
    rows = []
    for n in n_values:
        ms = mus if mus is not None else table_mus(n)
        for variant in variants:
            for mu in ms:
                for x in range(1, n + 1):
                    for y in range(0, n - x + 1):
                        rows.append(classify_point(mu, variant, n, x, y))
    return rows


def phi_grid(mu: MuParam, variant: GainVariant, n: int, *, closed: bool = False) -> list[list[str]]:
    """Rows ``y = 0..n-1``, columns ``x = 1..n``; blank where undefined."""
    f = phi_closed if closed else phi_oracle
    grid = [["y\\x"] + [str(x) for x in range(1, n + 1)]]
    for y in range(0, n):
        row = [str(y)]
        for x in range(1, n + 1):
            v = f(mu, variant, n, x, y)
            row.append(fmt(v.value) if v.defined else "")
        grid.append(row)
    return grid
