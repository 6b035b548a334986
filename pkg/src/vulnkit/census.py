"""Exhaustive labelled-graph census with numpy.

Every graph on ``n`` labelled vertices is numbered by its edge code (see
:func:`vulnkit.graph.from_code`).  The subset sweep of :mod:`vulnkit.psi`
is repeated here in vectorised form, one chunk of codes at a time, giving
both property functions for every graph at once.  Thresholds found this
way are the ground truth for the region optimiser.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import graph as gc
from .extremal import INCREASING, MuParam

CENSUS_MAX_ORDER = 7
CHUNK = 1 << 16
UNDEF = 255
WORKERS_ENV = "VULNKIT_WORKERS"

_POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def _adjacency(n: int, lo: int, hi: int) -> tuple[list[np.ndarray], np.ndarray]:
    codes = np.arange(lo, hi, dtype=np.uint32)
    adj = [np.zeros(hi - lo, dtype=np.uint8) for _ in range(n)]
    edges = np.zeros(hi - lo, dtype=np.uint8)
    for b, (i, j) in enumerate(gc.upper_pairs(n)):
        bit = ((codes >> b) & 1).astype(np.uint8)
        adj[i] |= bit << j
        adj[j] |= bit << i
        edges += bit
    return adj, edges


def _peel(adj: list[np.ndarray], W: int, m: int) -> np.ndarray:
    """Vertex mask of the component of ``G[W]`` holding ``W``'s lowest vertex, per graph."""
    members = [u for u in range(len(adj)) if W >> u & 1]
    inside = {u: adj[u] & np.uint8(W) for u in members}
    reach = np.full(m, W & -W, dtype=np.uint8)
    for _ in range(len(members) - 1):
        grown = reach.copy()
        for u in members:
            grown |= inside[u] & (-((reach >> u) & 1)).astype(np.uint8)
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach


def _chunk(n: int, lo: int, hi: int) -> dict[str, np.ndarray]:
    m = hi - lo
    adj, edges = _adjacency(n, lo, hi)
    size = 1 << n
    count = np.zeros((size, m), dtype=np.uint8)
    largest = np.zeros((size, m), dtype=np.uint8)
    cols = np.arange(m)
    L = math.lcm(*range(1, n + 1)) if n else 1
    psi_w = np.full((m, n + 1), UNDEF, dtype=np.uint8)
    psi_b = np.full((m, n + 1), UNDEF, dtype=np.uint8)
    psi_w[:, 0] = n
    psi_b[:, 0] = n
    cotough = np.full(m, L, dtype=np.int64)
    for W in range(1, size):
        reach = _peel(adj, W, m)
        rest = np.uint8(W) & ~reach
        count[W] = count[rest, cols] + 1
        largest[W] = np.maximum(_POP[reach], largest[rest, cols])
        cost = n - W.bit_count()
        for table, gain in ((psi_w, count[W]), (psi_b, largest[W])):
            table[cols, gain] = np.minimum(table[cols, gain], cost)
        cut = count[W] >= 2
        if cut.any():
            den = n - largest[W][cut].astype(np.int64)
            cotough[cut] = np.minimum(cotough[cut], cost * L // den)
    min_deg = np.min(np.stack([_POP[a] for a in adj]), axis=0) if n else np.zeros(m, np.uint8)
    ncap = np.zeros((n + 1, m), dtype=np.uint8)
    for j in range(1, n + 1):
        best = np.full(m, n, dtype=np.uint8)
        for J in combinations(range(n), j):
            common = np.full(m, (1 << n) - 1, dtype=np.uint8)
            for u in J:
                common &= adj[u]
            best = np.minimum(best, _POP[common])
        ncap[j] = best
    return {"psi_omega": psi_w, "psi_Omega": psi_b, "cotough": cotough,
            "min_degree": min_deg, "edges": edges, "ncap": ncap}


@dataclass
class Census:
    n: int
    psi_omega: np.ndarray   # (graphs, n + 1), UNDEF where unreachable
    psi_Omega: np.ndarray
    cotough: np.ndarray     # co-toughness times ``scale``
    min_degree: np.ndarray
    edges: np.ndarray
    ncap: np.ndarray        # (n + 1, graphs)
    scale: int
    _mu_cache: dict = field(default_factory=dict, repr=False)
    _holds_cache: dict = field(default_factory=dict, repr=False)
    _wide: dict = field(default_factory=dict, repr=False)

    def _int64(self, name: str) -> np.ndarray:
        if name not in self._wide:
            self._wide[name] = getattr(self, name).astype(np.int64)
        return self._wide[name]

    @property
    def size(self) -> int:
        return self.psi_omega.shape[0]

    @property
    def alpha(self) -> np.ndarray:
        defined = self.psi_omega != UNDEF
        return (self.n - np.argmax(defined[:, ::-1], axis=1)).astype(np.int64)

    def mu_values(self, mu: MuParam) -> np.ndarray:
        """``scale * mu(G)`` for every graph, as exact int64."""
        if mu in self._mu_cache:
            return self._mu_cache[mu]
        n, L = self.n, self.scale
        pw = self._int64("psi_omega")
        pb = self._int64("psi_Omega")
        xs = np.arange(n + 1, dtype=np.int64)
        big = np.int64(1) << 40
        k = mu.kind
        if k == "delta":
            v = self.min_degree.astype(np.int64) * L
        elif k == "edges":
            v = self.edges.astype(np.int64) * L
        elif k == "ncap":
            v = self.ncap[mu.arg].astype(np.int64) * L
        elif k in ("kappa", "kappa_ell", "tau", "sc"):
            lo = mu.arg if k == "kappa_ell" else 2
            cols = pw[:, lo:]
            ok = cols != UNDEF
            has = ok.any(axis=1)
            if k == "sc":
                gain = np.where(ok, xs[lo:] - cols, -big).max(axis=1, initial=-big)
                v = np.where(has, gain, -n) * L
            elif k == "tau":
                ratio = np.where(ok, cols * L // np.maximum(xs[lo:], 1), big).min(axis=1, initial=big)
                v = np.where(has, ratio, (n - 1) * L)
            else:
                cost = np.where(ok, cols, big).min(axis=1, initial=big)
                fallback = (n - 1) if k == "kappa" else (n - self.alpha)
                v = np.where(has, cost, fallback) * L
        elif k == "integrity":
            v = np.where(pb != UNDEF, pb + xs, big).min(axis=1) * L
        elif k == "coc":
            cols = pb[:, : min(mu.arg, n + 1)]
            v = np.where(cols != UNDEF, cols, big).min(axis=1) * L
        else:
            v = self.cotough
        self._mu_cache[mu] = v
        return v

    def holds(self, p) -> np.ndarray:
        """Boolean mask of the graphs having property ``p`` (a ``PropertySpec``)."""
        if p not in self._holds_cache:
            self._holds_cache[p] = self._holds(p)
        return self._holds_cache[p]

    def _holds(self, p) -> np.ndarray:
        n, L = self.n, self.scale
        if p.variant.value == "omega":
            t, k, l = p.linear()
            D = t.denominator * k.denominator
            pw = self._int64("psi_omega")
            xs = np.arange(n + 1, dtype=np.int64)
            need = (t.numerator * k.denominator) * xs + k.numerator * t.denominator
            ok = (pw == UNDEF) | (D * pw >= need)
            ok[:, : max(l, 1)] = True
            return ok.all(axis=1)
        if p.kind == "integ":
            return self.mu_values(MuParam("integrity")) >= p.i * L
        if p.kind == "coc":
            return self.mu_values(MuParam("coc", p.l)) >= p.k * L
        t = p.t
        return self.cotough * t.denominator >= t.numerator * L


@lru_cache(maxsize=None)
def census(n: int, workers: int | None = None) -> Census:
    """All ``2^C(n,2)`` labelled graphs of order ``n``; chunk results are merged in code order."""
    if not 1 <= n <= CENSUS_MAX_ORDER:
        raise ValueError(f"census covers orders 1..{CENSUS_MAX_ORDER}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    bounds = [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]
    workers = default_workers() if workers is None else workers
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk, [n] * len(bounds), *zip(*bounds)))
    else:
        parts = [_chunk(n, lo, hi) for lo, hi in bounds]
    cat = lambda key, axis=0: np.concatenate([p[key] for p in parts], axis=axis)
    return Census(n, cat("psi_omega"), cat("psi_Omega"), cat("cotough"), cat("min_degree"),
                  cat("edges"), cat("ncap", 1), math.lcm(*range(1, n + 1)))


@dataclass
class BruteThreshold:
    value: Fraction | None      # None when every graph has the property
    witness_code: int | None
    witness_graph: str | None
    failing: int                # number of labelled graphs lacking the property
    total: int


def threshold_brute(mu: MuParam, p, n: int) -> BruteThreshold:
    """Best ``mu`` over all labelled order-``n`` graphs lacking ``p``; ties go to the smallest code."""
    c = census(n)
    vals = c.mu_values(mu)
    fail = ~c.holds(p)
    count = int(fail.sum())
    if count == 0:
        return BruteThreshold(None, None, None, 0, c.size)
    pool = vals[fail]
    opt = pool.max() if mu.direction == INCREASING else pool.min()
    code = int(np.flatnonzero(fail & (vals == opt))[0])
    return BruteThreshold(Fraction(int(opt), c.scale), code,
                          gc.to_graph6(gc.from_code(n, code)), count, c.size)


def family_signatures(n: int) -> np.ndarray:
    """``sig[g, W]``: component-order multiset of ``G_g[W]`` as ``sum 7**(order - 1)``.

    Counts never exceed 6 for ``n <= 6``, so the base-7 code is exact.  Together
    with ``|V| - |W|`` it names the composition ``(parts, y)`` realised by
    deleting the complement of ``W``.
    """
    if not 1 <= n <= 6:
        raise ValueError("family signatures cover orders 1..6")
    total = 1 << (n * (n - 1) // 2)
    adj, _ = _adjacency(n, 0, total)
    size = 1 << n
    sig = np.zeros((size, total), dtype=np.int64)
    cols = np.arange(total)
    powers = np.array([0] + [7 ** (k - 1) for k in range(1, 9)], dtype=np.int64)
    for W in range(1, size):
        reach = _peel(adj, W, total)
        rest = np.uint8(W) & ~reach
        sig[W] = sig[rest, cols] + powers[_POP[reach]]
    return sig.T


def composition_signature(parts) -> int:
    return sum(7 ** (p - 1) for p in parts)
