"""Graph corpora: every labelled graph up to a given order, plus seeded random samples."""

from __future__ import annotations

import random
from typing import Iterator

from . import graph as gc
from .graph import Graph

DEFAULT_SEED = 20240
RANDOM_ORDERS = (7, 8)


def labelled(n: int) -> Iterator[Graph]:
    """All ``2^C(n,2)`` labelled graphs of order ``n``, by edge code."""
    for code in range(1 << (n * (n - 1) // 2)):
        yield gc.from_code(n, code)


def labelled_upto(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from labelled(n)


def random_graphs(count: int, orders=RANDOM_ORDERS, seed: int = DEFAULT_SEED,
                  p: float = 0.5) -> list[Graph]:
    """``count`` G(n, p) samples, orders taken round-robin from ``orders``."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = orders[i % len(orders)]
        edges = [e for e in gc.upper_pairs(n) if rng.random() < p]
        out.append(gc.from_edges(n, edges))
    return out


def standard(n_max: int = 6, count: int = 500, seed: int = DEFAULT_SEED) -> list[Graph]:
    """The certification corpus: exhaustive up to ``n_max`` then ``count`` random graphs."""
    return list(labelled_upto(n_max)) + random_graphs(count, seed=seed)
