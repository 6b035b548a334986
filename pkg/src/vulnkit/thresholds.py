"""Forbidden regions and mu-thresholds.

A property P on psi^omega is "psi(x) >= t*x + k for l <= x <= alpha"; the
graphs lacking it are exactly those whose property function enters the
integer region under that line.  The mu-threshold (best mu over non-P
graphs of order n) is then the best density-function value over the region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import graph as gc
from . import params
from .extremal import (DECREASING, MuParam, PhiValue, better, build_K, mu_direct,
                       phi_closed, phi_oracle)
from .graph import Graph
from .params import fmt_rational, parse_rational
from .psi import BIG_OMEGA, OMEGA, GainVariant, psi, psi_satisfies

REGION = "REGION"
THEOREM = "THEOREM"
BRUTE = "BRUTE"

OMEGA_KINDS = ("conn", "tough", "unscat", "lconn", "tkl")
BIG_OMEGA_KINDS = ("integ", "coc", "cotough")
_SPEC_FIELDS = {
    "conn": ("k",), "tough": ("t",), "unscat": ("s",), "lconn": ("k", "l"),
    "tkl": ("t", "k", "l"), "integ": ("i",), "coc": ("k", "l"), "cotough": ("t",),
}


@dataclass(frozen=True)
class PropertySpec:
    """One vulnerability property with exact parameters.

    String form (also the CLI grammar): ``conn:k=2``, ``tough:t=1/2``,
    ``unscat:s=-1``, ``lconn:k=2,l=3``, ``tkl:t=1/2,k=1,l=2``, ``integ:i=4``,
    ``coc:k=2,l=3``, ``cotough:t=1/2``.
    """

    kind: str
    t: Fraction = Fraction(0)
    k: Fraction = Fraction(0)
    l: int = 2
    s: int = 0
    i: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _SPEC_FIELDS:
            raise ValueError(f"unknown property kind {self.kind!r}")
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "k", Fraction(self.k))

    @property
    def variant(self) -> GainVariant:
        return OMEGA if self.kind in OMEGA_KINDS else BIG_OMEGA

    def linear(self) -> tuple[Fraction, Fraction, int]:
        """``(t, k, l)`` of the equivalent (t, k, l)-connectivity."""
        if self.kind == "conn":
            return Fraction(0), self.k, 2
        if self.kind == "tough":
            return self.t, Fraction(0), 2
        if self.kind == "unscat":
            return Fraction(1), Fraction(-self.s), 2
        if self.kind == "lconn":
            return Fraction(0), self.k, self.l
        if self.kind == "tkl":
            return self.t, self.k, self.l
        raise ValueError(f"{self.kind} is not a psi^omega property")

    def __str__(self) -> str:
        parts = []
        for name in _SPEC_FIELDS[self.kind]:
            value = getattr(self, name)
            parts.append(f"{name}={fmt_rational(value) if isinstance(value, Fraction) and value.denominator != 1 else int(value)}")
        return f"{self.kind}:{','.join(parts)}"

    @classmethod
    def parse(cls, text: str) -> "PropertySpec":
        kind, _, rest = text.strip().partition(":")
        if kind not in _SPEC_FIELDS:
            raise ValueError(f"unknown property kind {kind!r} in {text!r}")
        values: dict = {}
        for item in filter(None, rest.split(",")):
            name, eq, raw = item.partition("=")
            name = name.strip()
            if not eq or name not in _SPEC_FIELDS[kind]:
                raise ValueError(f"bad field {item!r} for {kind}")
            q = parse_rational(raw)
            if name in ("l", "s", "i"):
                if q.denominator != 1:
                    raise ValueError(f"{name} must be an integer in {text!r}")
                q = int(q)
            values[name] = q
        missing = set(_SPEC_FIELDS[kind]) - set(values)
        if missing:
            raise ValueError(f"{text!r} is missing {sorted(missing)}")
        return cls(kind, **values)


def conn(k) -> PropertySpec:
    return PropertySpec("conn", k=k)


def tough(t) -> PropertySpec:
    return PropertySpec("tough", t=t)


def unscat(s: int) -> PropertySpec:
    return PropertySpec("unscat", s=s)


def lconn(k, l: int) -> PropertySpec:
    return PropertySpec("lconn", k=k, l=l)


def tkl(t, k, l: int) -> PropertySpec:
    return PropertySpec("tkl", t=t, k=k, l=l)


def integ(i: int) -> PropertySpec:
    return PropertySpec("integ", i=i)


def coc(k, l: int) -> PropertySpec:
    return PropertySpec("coc", k=k, l=l)


def cotough(t) -> PropertySpec:
    return PropertySpec("cotough", t=t)


# ---------------------------------------------------------------------------
# regions


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


@dataclass(frozen=True)
class ForbiddenRegion:
    """Integer points ``l <= x <= x_max``, ``0 <= y <= min(ceil(t*x + k) - 1, n - x)``.

    Points on the line ``y = t*x + k`` are allowed, so the cap is
    ``ceil(f(x)) - 1``.  The lower x bound is clamped to 1.
    """

    n: int
    l: int
    t: Fraction
    k: Fraction
    x_max: int | None = None

    @property
    def x_hi(self) -> int:
        return self.n if self.x_max is None else self.x_max

    def top(self, x: int) -> int:
        return min(_ceil(self.t * x + self.k) - 1, self.n - x)

    def __contains__(self, point: tuple[int, int]) -> bool:
        x, y = point
        return max(self.l, 1) <= x <= self.x_hi and 0 <= y <= self.top(x)

    def points(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(max(self.l, 1), self.x_hi + 1)
                for y in range(0, self.top(x) + 1)]


def region_for(p: PropertySpec, n: int) -> ForbiddenRegion:
    if p.variant is not OMEGA:
        raise ValueError(f"{p} is an Omega-family property; it has no psi^omega region")
    t, k, l = p.linear()
    return ForbiddenRegion(n, l, t, k)


def region_implies(p: PropertySpec, q: PropertySpec, n: int) -> bool:
    """``p`` implies ``q`` on order-``n`` graphs when ``R_q ⊆ R_p`` (smaller forbidden set)."""
    rp = region_for(p, n)
    return all(pt in rp for pt in region_for(q, n).points())


def failing_points(p: PropertySpec, n: int) -> list[tuple[int, int]]:
    """Points ``(x, y)`` whose presence in the property function refutes ``p``.

    For the Omega family these are read off the defining inequality:
    integrity ``x + y <= i - 1``; component order connectivity
    ``x <= l - 1, y <= k - 1``; co-toughness ``y < t (n - x)``.  The
    co-toughness set ignores the cutset condition and is only advisory.
    The point ``(0, n)`` is included when it qualifies, meaning no graph
    of order ``n`` has the property.
    """
    if p.variant is OMEGA:
        return region_for(p, n).points()
    pts = []
    for x in range(0, n + 1):
        for y in range(0, n - x + 1):
            if x == 0 and y != n:
                continue
            if p.kind == "integ":
                bad = x + y <= p.i - 1
            elif p.kind == "coc":
                bad = x <= p.l - 1 and y <= p.k - 1
            else:
                bad = y < p.t * (n - x)
            if bad:
                pts.append((x, y))
    return pts


def holds(p: PropertySpec, G: Graph) -> bool:
    if p.variant is OMEGA:
        t, k, l = p.linear()
        return psi_satisfies(psi(G, OMEGA), t, k, l)
    if p.kind == "integ":
        return params.integrity(G) >= p.i
    if p.kind == "coc":
        return params.coc(G, p.l) >= p.k
    return params.co_toughness(G) >= p.t


# ---------------------------------------------------------------------------
# thresholds


@dataclass
class ThresholdResult:
    value: Fraction | None          # None: every order-n graph has the property
    witness_graph: str | None = None
    witness_point: tuple[int, int] | None = None
    method: str = REGION
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "value": None if self.value is None else fmt_rational(self.value),
            "witness_graph": self.witness_graph,
            "witness_point": list(self.witness_point) if self.witness_point else None,
            "method": self.method,
        }


def threshold_by_region(mu: MuParam, p: PropertySpec, n: int, *, closed: bool = False) -> ThresholdResult:
    """Best density-function value over the points that refute ``p``.

    ``closed=True`` uses the printed density-function cells instead of the
    oracle; no witness graph is available then.
    """
    variant = p.variant
    best: PhiValue | None = None
    best_pt = None
    for x, y in failing_points(p, n):
        if x == 0:
            # only the null remainder: the complete graph refutes p
            K = gc.complete(n)
            cand = PhiValue(mu_direct(mu, K))
        elif closed:
            cand = phi_closed(mu, variant, n, x, y)
        else:
            cand = phi_oracle(mu, variant, n, x, y)
        if not cand.defined:
            continue
        if best is None or better(mu, cand.value, best.value):
            best, best_pt = cand, (x, y)
    if best is None:
        return ThresholdResult(None, method=REGION)
    if best_pt[0] == 0:
        witness = gc.to_graph6(gc.complete(n))
    elif best.witness is not None:
        witness = gc.to_graph6(build_K(best.witness))
    else:
        witness = None
    return ThresholdResult(best.value, witness, best_pt, REGION,
                           {"composition": str(best.witness) if best.witness else None})


def _theorem_terms(t: Fraction, k: Fraction, l: int, n: int) -> dict[str, int | None]:
    first = (n + (l - 1) * _ceil(l * t + k - 1)) // l - 1
    terms: dict[str, int | None] = {"first": first}
    if t <= 0:
        return terms
    gamma = (n - k) / (t + 1)
    fg, cg = math.floor(gamma), _ceil(gamma)
    a = _ceil(t * fg)
    terms["second"] = None if fg == 0 else math.floor((n - a - k) / fg) + a - k - 1
    terms["third"] = None if cg == 0 else (cg + 1) // cg + n - cg - 2
    return terms


def delta_threshold_theorem(t, k, l: int, n: int) -> Fraction:
    """Closed-form delta-threshold for (t, k, l)-connectivity, as printed.

    ``gamma = (n - k) / (t + 1)``; for ``t <= 0`` only the first term
    applies.  Terms with a zero denominator are left out of the maximum.
    """
    t, k = Fraction(t), Fraction(k)
    if t == -1:
        raise ValueError("t = -1 makes gamma undefined")
    terms = [v for v in _theorem_terms(t, k, l, n).values() if v is not None]
    return Fraction(max(terms))
