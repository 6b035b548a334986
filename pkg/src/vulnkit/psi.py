"""Property functions: minimum removal cost for an exact gain.

For a gain variant (number of components, or order of the largest component)
``psi(G, variant)[x]`` is the least ``|S|`` such that ``gain(G - S) == x``.
Everything is computed from one sweep over all vertex subsets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graph import Graph

PSI_MAX_ORDER = 24


class GainVariant(enum.Enum):
    OMEGA = "omega"          # gain = number of components
    BIG_OMEGA = "Omega"      # gain = order of the largest component

    @classmethod
    def parse(cls, text: str) -> "GainVariant":
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise ValueError(f"unknown gain variant {text!r}; expected 'omega' or 'Omega'")


OMEGA = GainVariant.OMEGA
BIG_OMEGA = GainVariant.BIG_OMEGA


@dataclass(frozen=True)
class RemainderProfile:
    """For every remaining vertex set ``W``: component count and largest order of ``G[W]``."""

    n: int
    count: bytes
    largest: bytes

    def gain(self, variant: GainVariant) -> bytes:
        return self.count if variant is OMEGA else self.largest


@lru_cache(maxsize=1 << 17)
def remainder_profile(G: Graph) -> RemainderProfile:
    """Subset sweep shared by every psi-derived quantity.

    Processes ``W`` in increasing order: the component of the lowest vertex
    of ``W`` is peeled off and the rest is already tabulated.
    """
    n = G.n
    if n > PSI_MAX_ORDER:
        raise ValueError(f"order {n} above the subset-sweep cap {PSI_MAX_ORDER}")
    size = 1 << n
    count = bytearray(size)
    largest = bytearray(size)
    adj = G.adj
    for W in range(1, size):
        reach = frontier = W & -W
        while frontier:
            grow = 0
            while frontier:
                low = frontier & -frontier
                grow |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = grow & W & ~reach
            reach |= frontier
        rest = W & ~reach
        count[W] = count[rest] + 1
        order = reach.bit_count()
        largest[W] = order if order > largest[rest] else largest[rest]
    return RemainderProfile(n, bytes(count), bytes(largest))


@dataclass(frozen=True)
class PropertyFunction:
    """``values[x]`` = minimum cost for gain exactly ``x``; unreachable gains are absent."""

    variant: GainVariant
    n: int
    values: dict[int, int]

    @property
    def domain_max(self) -> int:
        """alpha(G) for OMEGA, Omega(G) for BIG_OMEGA."""
        return max(self.values)

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def __contains__(self, x: int) -> bool:
        return x in self.values

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.values.items())

    def to_json(self) -> dict:
        return {
            "variant": self.variant.value,
            "n": self.n,
            "values": [[x, y] for x, y in self.items()],
        }


@lru_cache(maxsize=1 << 18)
def psi(G: Graph, variant: GainVariant = OMEGA) -> PropertyFunction:
    prof = remainder_profile(G)
    gain = prof.gain(variant)
    n = G.n
    values: dict[int, int] = {}
    for W in range(1 << n):
        x = gain[W]
        cost = n - W.bit_count()
        if cost < values.get(x, n + 1):
            values[x] = cost
    return PropertyFunction(variant, n, values)


def feasibility(G: Graph, variant: GainVariant = OMEGA) -> frozenset[tuple[int, int]]:
    """Every achievable ``(gain, cost)`` pair over all ``S ⊆ V(G)``."""
    prof = remainder_profile(G)
    gain = prof.gain(variant)
    n = G.n
    return frozenset((gain[W], n - W.bit_count()) for W in range(1 << n))


def component_orders_from_psi(pf: PropertyFunction) -> list[int]:
    """Recover component orders, smallest first, from successive differences of psi."""
    if pf.variant is not OMEGA:
        raise ValueError("component orders need the OMEGA property function")
    zeros = [x for x, y in pf.values.items() if y == 0]
    if len(zeros) != 1:
        raise ValueError(f"property function has {len(zeros)} zeros, expected exactly one")
    w = zeros[0]
    missing = [x for x in range(w + 1) if x not in pf.values]
    if missing:
        raise ValueError(f"property function undefined at {missing}")
    return [pf[w - i] - pf[w - i + 1] for i in range(1, w + 1)]


def psi_satisfies(pf: PropertyFunction, t: Fraction | int, k: Fraction | int, ell: int) -> bool:
    """``(t, k, ell)``-connectivity: ``psi(x) >= t*x + k`` for ``max(ell, 1) <= x <= alpha``.

    Vacuously true when ``alpha < ell``.
    """
    if pf.variant is not OMEGA:
        raise ValueError("(t, k, l)-connectivity is defined on the OMEGA property function")
    t, k = Fraction(t), Fraction(k)
    lo = max(ell, 1)
    return all(y >= t * x + k for x, y in pf.values.items() if x >= lo)
