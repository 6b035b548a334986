"""Small immutable simple graphs stored as per-vertex neighbour bitmasks.

Vertex sets are plain ``int`` bitmasks over ``{0, ..., n-1}``.  Everything in
the package works on :class:`Graph`; the order cap of 32 keeps every vertex set
inside one machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_ORDER = 32
GRAPH6_HEADER = ">>graph6<<"


class GraphOrderError(ValueError):
    """Raised when a construction would exceed :data:`MAX_ORDER` vertices."""


class Graph6Error(ValueError):
    """Base class for graph6 decoding failures."""


class Graph6LengthByteError(Graph6Error):
    """The order prefix is not a valid graph6 length byte."""


class Graph6OrderError(Graph6Error):
    """The encoded order is valid graph6 but above :data:`MAX_ORDER`."""


class Graph6TrailingDataError(Graph6Error):
    """More adjacency bytes than the order requires."""


class Graph6TruncatedError(Graph6Error):
    """Fewer adjacency bytes than the order requires, or a byte out of range."""


def _check_order(n: int) -> None:
    if not 0 <= n <= MAX_ORDER:
        raise GraphOrderError(f"order {n} outside [0, {MAX_ORDER}]")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Instances are hashable
    and compare by labelled adjacency.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for order {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour bit >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            m = row
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m ^= low

    @property
    def vertices(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    yield u, v
                m >>= 1
                v += 1

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u, v in combinations(range(self.n), 2):
            if not self.adj[u] >> v & 1:
                yield u, v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, graph6={to_graph6(self)!r})"


# ---------------------------------------------------------------------------
# vertex-set helpers


def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# construction


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside order {n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def add_edge(G: Graph, u: int, v: int) -> Graph:
    rows = list(G.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(G.n, tuple(rows))


def upper_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: column by column, ``(i, j)`` with ``i < j``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def from_code(n: int, code: int) -> Graph:
    """Graph whose edge set is bit ``b`` of ``code`` for pair ``upper_pairs(n)[b]``.

    This is the labelled-graph numbering used by the exhaustive corpora.
    """
    rows = [0] * n
    for b, (i, j) in enumerate(upper_pairs(n)):
        if code >> b & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def to_code(G: Graph) -> int:
    code = 0
    for b, (i, j) in enumerate(upper_pairs(G.n)):
        if G.adj[i] >> j & 1:
            code |= 1 << b
    return code


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """``G`` on vertices ``0..|G|-1`` followed by ``H`` shifted up by ``|G|``."""
    _check_order(G.n + H.n)
    return Graph(G.n + H.n, G.adj + tuple(row << G.n for row in H.adj))


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus every edge between ``G`` and ``H``."""
    _check_order(G.n + H.n)
    g_all = G.vertices
    h_all = H.vertices << G.n
    rows = tuple(row | h_all for row in G.adj) + tuple((row << G.n) | g_all for row in H.adj)
    return Graph(G.n + H.n, rows)


# ---------------------------------------------------------------------------
# graph6


def to_graph6(G: Graph) -> str:
    """Graph6 line for the labelled adjacency of ``G`` (no header, no newline)."""
    out = [chr(G.n + 63)]
    bits = [1 if G.adj[i] >> j & 1 else 0 for i, j in upper_pairs(G.n)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = value << 1 | bit
        out.append(chr(value + 63))
    return "".join(out)


def _decode_order(text: str) -> tuple[int, str]:
    if not text:
        raise Graph6LengthByteError("empty graph6 string")
    vals = [ord(c) - 63 for c in text[:8]]
    if not 0 <= vals[0] <= 63:
        raise Graph6LengthByteError(f"invalid length byte {text[0]!r}")
    if vals[0] < 63:
        return vals[0], text[1:]
    # multi-byte orders (n >= 63) are legal graph6 but always above the cap
    width = 6 if len(vals) > 1 and vals[1] == 63 else 3
    start = 2 if width == 6 else 1
    digits = vals[start:start + width]
    if len(digits) < width or any(not 0 <= d <= 63 for d in digits):
        raise Graph6LengthByteError("truncated multi-byte length prefix")
    n = 0
    for d in digits:
        n = n << 6 | d
    raise Graph6OrderError(f"order {n} exceeds the cap of {MAX_ORDER}")


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header is stripped."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    n, data = _decode_order(line)
    if n > MAX_ORDER:
        raise Graph6OrderError(f"order {n} exceeds the cap of {MAX_ORDER}")
    pairs = upper_pairs(n)
    need = -(-len(pairs) // 6)
    if len(data) > need:
        raise Graph6TrailingDataError(
            f"{len(data) - need} unexpected trailing byte(s) after order-{n} adjacency")
    if len(data) < need:
        raise Graph6TruncatedError(f"order {n} needs {need} adjacency byte(s), got {len(data)}")
    rows = [0] * n
    for k, ch in enumerate(data):
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise Graph6TruncatedError(f"adjacency byte {ch!r} out of range")
        for off in range(6):
            b = 6 * k + off
            if b < len(pairs) and value >> (5 - off) & 1:
                i, j = pairs[b]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# basic parameters


def remove_vertices(G: Graph, S: int) -> Graph:
    """Induced subgraph on ``V(G) - S`` with order-preserving relabelling."""
    if S & ~G.vertices:
        raise ValueError(f"vertex set {S:#x} has bits outside order {G.n}")
    if not S:
        return G
    keep = members(G.vertices & ~S)
    adj = G.adj
    rows = []
    for v in keep:
        row, bit = 0, 1
        for u in keep:
            if adj[v] >> u & 1:
                row |= bit
            bit <<= 1
        rows.append(row)
    return _trusted(len(keep), tuple(rows))


def _trusted(n: int, adj: tuple[int, ...]) -> Graph:
    # induced subgraphs of a valid graph are valid; skip the checks
    G = object.__new__(Graph)
    object.__setattr__(G, "n", n)
    object.__setattr__(G, "adj", adj)
    return G


def component_of(G: Graph, v: int, within: int | None = None) -> int:
    """Bitmask of the component containing ``v`` inside the vertex set ``within``."""
    allowed = G.vertices if within is None else within
    reach = frontier = 1 << v
    while frontier:
        grow = 0
        for u in members(frontier):
            grow |= G.adj[u]
        frontier = grow & allowed & ~reach
        reach |= frontier
    return reach


def components(G: Graph) -> list[int]:
    """Vertex sets of the components, ordered by smallest member."""
    out = []
    rest = G.vertices
    while rest:
        low = rest & -rest
        comp = component_of(G, low.bit_length() - 1)
        out.append(comp)
        rest &= ~comp
    return out


def omega(G: Graph) -> int:
    """Number of components (0 for the null graph)."""
    return len(components(G))


def big_omega(G: Graph) -> int:
    """Order of the largest component (0 for the null graph)."""
    return max((c.bit_count() for c in components(G)), default=0)


def alpha(G: Graph) -> int:
    """Exact independence number by branching on a maximum-degree vertex."""

    def solve(cand: int) -> int:
        best_v, best_deg = -1, -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = (G.adj[v] & cand).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
            m ^= low
        if best_deg <= 0:
            return cand.bit_count()
        v = best_v
        with_v = 1 + solve(cand & ~G.adj[v] & ~(1 << v))
        without_v = solve(cand & ~(1 << v))
        return max(with_v, without_v)

    return solve(G.vertices)


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise ValueError("minimum degree of the null graph is undefined")
    return min(row.bit_count() for row in G.adj)


def edge_count(G: Graph) -> int:
    return sum(row.bit_count() for row in G.adj) // 2


def common_neighborhood_min(G: Graph, j: int) -> int:
    """Minimum over ``j``-subsets ``W`` of ``|N(w_1) ∩ ... ∩ N(w_j)|``."""
    if not 1 <= j <= G.n:
        raise ValueError(f"j={j} outside [1, {G.n}]")
    best = G.n
    for subset in combinations(G.adj, j):
        common = G.vertices
        for row in subset:
            common &= row
        best = min(best, common.bit_count())
        if best == 0:
            break
    return best
