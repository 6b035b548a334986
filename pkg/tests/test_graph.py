import pytest
from hypothesis import given, settings, strategies as st

from vulnkit import graph as gc
from vulnkit.graph import Graph6Error, GraphOrderError


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = gc.upper_pairs(n)
    code = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return gc.from_code(n, code)


def test_graph6_round_trip_example():
    # 5 vertices, encoded and re-encoded by hand
    G = gc.from_graph6("D?{")
    assert G.n == 5
    assert gc.to_graph6(G) == "D?{"
    assert sorted(G.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_graph6_trivial_and_complete():
    one = gc.from_graph6("@")
    assert one.n == 1 and gc.edge_count(one) == 0
    K4 = gc.from_graph6("C~")
    assert K4.n == 4 and gc.edge_count(K4) == 6
    assert gc.to_graph6(gc.empty(1)) == "@"
    assert gc.to_graph6(gc.complete(4)) == "C~"


@pytest.mark.parametrize("text", ["", "C", "C~~", "D?{ x", "C\x7f"])
def test_graph6_rejects_malformed(text):
    with pytest.raises((Graph6Error, ValueError)):
        gc.from_graph6(text)


@given(graphs())
@settings(max_examples=300, deadline=None)
def test_graph6_round_trip(G):
    assert gc.from_graph6(gc.to_graph6(G)) == G


@given(graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_code_round_trip(G):
    assert gc.from_code(G.n, gc.to_code(G)) == G


def test_order_limit():
    with pytest.raises(GraphOrderError):
        gc.empty(gc.MAX_ORDER + 1)


def test_remove_vertices():
    assert gc.remove_vertices(gc.complete(4), 0b1) == gc.complete(3)
    P4 = gc.path(4)
    H = gc.remove_vertices(P4, 0b10)
    assert H.n == 3 and list(H.edges()) == [(1, 2)]
    assert gc.remove_vertices(P4, 0) == P4


def test_components():
    assert [c.bit_count() for c in gc.components(gc.cycle(5))] == [5]
    G = gc.disjoint_union(gc.disjoint_union(gc.complete(1), gc.complete(1)), gc.complete(2))
    assert sorted(c.bit_count() for c in gc.components(G)) == [1, 1, 2]
    assert gc.components(gc.empty(0)) == []


def test_omega_big_omega():
    G = gc.disjoint_union(gc.complete(1), gc.complete(2))
    assert (gc.omega(G), gc.big_omega(G)) == (2, 2)
    assert (gc.omega(gc.cycle(6)), gc.big_omega(gc.cycle(6))) == (1, 6)
    assert (gc.omega(gc.empty(0)), gc.big_omega(gc.empty(0))) == (0, 0)


@given(graphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_connected_iff_largest_component_is_everything(G):
    if G.n:
        assert (gc.omega(G) == 1) == (gc.big_omega(G) == G.n)


def test_alpha():
    assert gc.alpha(gc.complete(6)) == 1
    assert gc.alpha(gc.cycle(5)) == 2
    assert gc.alpha(gc.star(4)) == 4


@given(graphs(max_n=7))
@settings(max_examples=150, deadline=None)
def test_alpha_against_subsets(G):
    best = 0
    for S in range(1 << G.n):
        vs = gc.members(S)
        if all(not G.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]):
            best = max(best, len(vs))
    assert gc.alpha(G) == best


def test_degree_and_edges():
    assert (gc.min_degree(gc.complete(5)), gc.edge_count(gc.complete(5))) == (4, 10)
    assert (gc.min_degree(gc.path(4)), gc.edge_count(gc.path(4))) == (1, 3)
    assert (gc.min_degree(gc.empty(3)), gc.edge_count(gc.empty(3))) == (0, 0)


def test_common_neighbourhood():
    assert gc.common_neighborhood_min(gc.complete(4), 2) == 2
    assert gc.common_neighborhood_min(gc.cycle(5), 2) == 0
    for G in (gc.cycle(5), gc.star(4), gc.path(6)):
        assert gc.common_neighborhood_min(G, 1) == gc.min_degree(G)


def test_join_and_union():
    P3 = gc.join(gc.complete(1), gc.empty(2))
    assert P3 == gc.star(2)
    U = gc.disjoint_union(gc.complete(2), gc.complete(1))
    assert U.n == 3 and gc.edge_count(U) == 1 and gc.omega(U) == 2
    J = gc.join(gc.complete(2), gc.empty(3))
    assert J.n == 5 and gc.edge_count(J) == 7


def test_families():
    assert gc.edge_count(gc.complete_bipartite(2, 3)) == 6
    assert gc.edge_count(gc.star(4)) == 4 and gc.star(4).n == 5
    assert gc.edge_count(gc.cycle(5)) == 5
