"""Vulnerability parameters, each available two ways.

The plain names (``kappa``, ``toughness``, ...) read the value off the
property function.  The ``*_direct`` variants enumerate vertex subsets,
delete them with :func:`remove_vertices` and count components afresh; they
share no code with the psi sweep and serve as its oracle.

Complete graphs and graphs with ``alpha < l`` take the usual monotone
extension values: kappa = tau = n - 1, sc = -n, co-toughness = 1 and
kappa_l = n - alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import graph as gc
from .graph import Graph
from .psi import BIG_OMEGA, OMEGA, psi, remainder_profile


def fmt_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Integer fractions only (``3``, ``-1/2``); decimals are rejected."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an integer fraction: {text!r}") from None


# ---------------------------------------------------------------------------
# extraction from psi


def _cut_costs(G: Graph, lo: int) -> list[tuple[int, int]]:
    return [(x, y) for x, y in psi(G, OMEGA).items() if x >= lo]


def kappa(G: Graph) -> int:
    cuts = _cut_costs(G, 2)
    return min(y for _, y in cuts) if cuts else G.n - 1


def toughness(G: Graph) -> Fraction:
    cuts = _cut_costs(G, 2)
    return min(Fraction(y, x) for x, y in cuts) if cuts else Fraction(G.n - 1)


def scattering(G: Graph) -> int:
    cuts = _cut_costs(G, 2)
    return max(x - y for x, y in cuts) if cuts else -G.n


def kappa_ell(G: Graph, ell: int) -> int:
    if ell < 2:
        raise ValueError("l-connectivity needs l >= 2")
    pf = psi(G, OMEGA)
    cuts = [y for x, y in pf.items() if x >= ell]
    return min(cuts) if cuts else G.n - pf.domain_max


def integrity(G: Graph) -> int:
    return min(x + y for x, y in psi(G, BIG_OMEGA).items())


def coc(G: Graph, ell: int) -> int:
    """Cheapest removal leaving every component of order below ``ell``."""
    if ell < 1:
        raise ValueError("component order connectivity needs l >= 1")
    return min(y for x, y in psi(G, BIG_OMEGA).items() if x < ell)


def co_toughness(G: Graph) -> Fraction:
    """min |S| / (n - Omega(G - S)) over cutsets, read from the subset sweep.

    Cutsets are not visible in psi^Omega alone, so this walks the sweep
    table rather than the property function.
    """
    prof = remainder_profile(G)
    n = G.n
    best = None
    for W in range(1 << n):
        if prof.count[W] >= 2:
            ratio = Fraction(n - W.bit_count(), n - prof.largest[W])
            if best is None or ratio < best:
                best = ratio
    return Fraction(1) if best is None else best


# ---------------------------------------------------------------------------
# direct definitions


@lru_cache(maxsize=4096)
def removal_table(G: Graph) -> tuple[tuple[int, int, int], ...]:
    """``(|S|, omega(G-S), Omega(G-S))`` for every ``S``, via explicit deletion."""
    rows = []
    for S in range(1 << G.n):
        H = gc.remove_vertices(G, S)
        comps = gc.components(H)
        rows.append((S.bit_count(), len(comps), max((c.bit_count() for c in comps), default=0)))
    return tuple(rows)


def kappa_direct(G: Graph) -> int:
    cuts = [s for s, w, _ in removal_table(G) if w >= 2]
    return min(cuts) if cuts else G.n - 1


def _min_ratio(pairs) -> Fraction | None:
    best = None
    for num, den in pairs:
        if best is None or num * best[1] < best[0] * den:
            best = (num, den)
    return None if best is None else Fraction(*best)


def toughness_direct(G: Graph) -> Fraction:
    best = _min_ratio((s, w) for s, w, _ in removal_table(G) if w >= 2)
    return Fraction(G.n - 1) if best is None else best


def scattering_direct(G: Graph) -> int:
    cuts = [w - s for s, w, _ in removal_table(G) if w >= 2]
    return max(cuts) if cuts else -G.n


def kappa_ell_direct(G: Graph, ell: int) -> int:
    cuts = [s for s, w, _ in removal_table(G) if w >= ell]
    return min(cuts) if cuts else G.n - gc.alpha(G)


def integrity_direct(G: Graph) -> int:
    return min(s + big for s, _, big in removal_table(G))


def coc_direct(G: Graph, ell: int) -> int:
    return min(s for s, _, big in removal_table(G) if big < ell)


def co_toughness_direct(G: Graph) -> Fraction:
    best = _min_ratio((s, G.n - big) for s, w, big in removal_table(G) if w >= 2)
    return Fraction(1) if best is None else best


# ---------------------------------------------------------------------------
# reports


class ParamMismatchError(RuntimeError):
    """Direct and psi-extracted values disagree: an implementation bug."""


@dataclass
class ParamReport:
    kappa: int
    toughness: Fraction
    scattering: int
    kappa_ell: dict[int, int]
    integrity: int
    coc: dict[int, int]
    co_toughness: Fraction
    alpha: int
    omega: int
    big_omega: int
    min_degree: int
    edge_count: int
    extended: list[str] = field(default_factory=list)

    SCALARS = ("kappa", "toughness", "scattering", "integrity", "co_toughness",
               "alpha", "omega", "big_omega", "min_degree", "edge_count")

    def to_json(self) -> dict:
        out: dict = {}
        for name in self.SCALARS:
            value = getattr(self, name)
            out[name] = fmt_rational(value) if isinstance(value, Fraction) else value
        out["kappa_ell"] = {str(l): v for l, v in sorted(self.kappa_ell.items())}
        out["coc"] = {str(l): v for l, v in sorted(self.coc.items())}
        out["extended"] = list(self.extended)
        return out

    @classmethod
    def csv_header(cls) -> list[str]:
        """Order-independent columns; the l-indexed families are ``l:value`` lists."""
        return ["graph6", "n"] + list(cls.SCALARS) + ["kappa_ell", "coc", "extended"]

    def csv_row(self, g6: str, n: int) -> list[str]:
        row = [g6, str(n)]
        for name in self.SCALARS:
            value = getattr(self, name)
            row.append(fmt_rational(value) if isinstance(value, Fraction) else str(value))
        row.append(";".join(f"{l}:{v}" for l, v in sorted(self.kappa_ell.items())))
        row.append(";".join(f"{l}:{v}" for l, v in sorted(self.coc.items())))
        row.append(";".join(self.extended))
        return row


def param_report(G: Graph) -> ParamReport:
    """All parameters, with every psi extraction checked against its direct value."""
    if G.n < 1:
        raise ValueError("parameter report needs n >= 1")
    n = G.n
    pairs = [
        ("kappa", kappa(G), kappa_direct(G)),
        ("toughness", toughness(G), toughness_direct(G)),
        ("scattering", scattering(G), scattering_direct(G)),
        ("integrity", integrity(G), integrity_direct(G)),
        ("co_toughness", co_toughness(G), co_toughness_direct(G)),
        ("alpha", psi(G, OMEGA).domain_max, gc.alpha(G)),
        ("big_omega", psi(G, BIG_OMEGA).domain_max, gc.big_omega(G)),
    ]
    pairs += [(f"kappa_ell_{l}", kappa_ell(G, l), kappa_ell_direct(G, l)) for l in range(2, n + 1)]
    pairs += [(f"coc_{l}", coc(G, l), coc_direct(G, l)) for l in range(1, n + 1)]
    bad = [(name, a, b) for name, a, b in pairs if a != b]
    if bad:
        detail = ", ".join(f"{name}: psi={a} direct={b}" for name, a, b in bad)
        raise ParamMismatchError(f"{gc.to_graph6(G)}: {detail}")
    values = {name: a for name, a, _ in pairs}
    alpha_value = values["alpha"]
    extended = []
    if alpha_value < 2:
        extended += ["kappa", "toughness", "scattering", "co_toughness"]
    extended += [f"kappa_ell_{l}" for l in range(2, n + 1) if alpha_value < l]
    return ParamReport(
        kappa=values["kappa"],
        toughness=values["toughness"],
        scattering=values["scattering"],
        kappa_ell={l: values[f"kappa_ell_{l}"] for l in range(2, n + 1)},
        integrity=values["integrity"],
        coc={l: values[f"coc_{l}"] for l in range(1, n + 1)},
        co_toughness=values["co_toughness"],
        alpha=alpha_value,
        omega=gc.omega(G),
        big_omega=values["big_omega"],
        min_degree=gc.min_degree(G),
        edge_count=gc.edge_count(G),
        extended=extended,
    )


INEQUALITY_NAMES = (
    "(1) kappa >= 2 tau",
    "(2) tau >= kappa / alpha",
    "(3) tau >= k / (n - k)",
    "(4) alpha <= n - kappa",
    "(5) alpha <= n / (tau + 1)",
    "(6) sc <= alpha - kappa",
    "(7) sc <= max(1, n - 2k)",
    "(8) sc <= max(1, n (1 - tau) / (tau + 1))",
)


def check_inequalities(G: Graph) -> list[tuple[str, bool]]:
    """Evaluate the eight classical inequalities exactly, with ``k = kappa(G)``.

    Meant for connected graphs with ``n >= 2``.  On complete graphs the
    extension values are used as-is, so item (1) fails there
    (``n - 1 < 2 (n - 1)``).
    """
    if G.n < 2 or gc.omega(G) != 1:
        raise ValueError("the inequalities are stated for connected graphs with n >= 2")
    n = G.n
    k = kap = kappa(G)
    tau = toughness(G)
    sc = scattering(G)
    a = psi(G, OMEGA).domain_max
    checks = (
        kap >= 2 * tau,
        tau >= Fraction(kap, a),
        tau >= Fraction(k, n - k),
        a <= n - kap,
        a <= n / (tau + 1),
        sc <= a - kap,
        sc <= max(1, n - 2 * k),
        sc <= max(Fraction(1), n * (1 - tau) / (tau + 1)),
    )
    return list(zip(INEQUALITY_NAMES, checks))
