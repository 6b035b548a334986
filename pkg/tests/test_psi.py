from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from vulnkit import graph as gc
from vulnkit.psi import (BIG_OMEGA, OMEGA, GainVariant, component_orders_from_psi, feasibility,
                         psi, psi_satisfies)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    return gc.from_code(n, draw(st.integers(0, (1 << m) - 1)))


def brute_psi(G, variant):
    out = {}
    for S in range(1 << G.n):
        H = gc.remove_vertices(G, S)
        x = gc.omega(H) if variant is OMEGA else gc.big_omega(H)
        out[x] = min(out.get(x, G.n + 1), S.bit_count())
    return out


def test_path_and_star():
    assert psi(gc.path(4), OMEGA).values == {0: 4, 1: 0, 2: 1}
    assert psi(gc.star(4), OMEGA).values == {0: 5, 1: 0, 2: 3, 3: 2, 4: 1}
    assert psi(gc.star(4), BIG_OMEGA).values == {0: 5, 1: 1, 2: 3, 3: 2, 4: 1, 5: 0}


@pytest.mark.parametrize("n", range(1, 8))
def test_complete(n):
    assert psi(gc.complete(n), OMEGA).values == {0: n, 1: 0}


def test_feasibility_triangle():
    assert feasibility(gc.complete(3), OMEGA) == {(1, 0), (1, 1), (1, 2), (0, 3)}


def test_component_recovery():
    assert component_orders_from_psi(psi(gc.cycle(6))) == [6]
    U = gc.disjoint_union(gc.complete(1), gc.complete(2))
    assert psi(U).values == {0: 3, 1: 1, 2: 0}
    assert component_orders_from_psi(psi(U)) == [1, 2]
    assert component_orders_from_psi(psi(gc.empty(2))) == [1, 1]


def test_satisfies():
    assert psi_satisfies(psi(gc.cycle(5)), 1, 0, 2)
    assert not psi_satisfies(psi(gc.star(4)), 0, 2, 2)
    # empty range of x
    assert psi_satisfies(psi(gc.complete(5)), 7, 7, 2)
    assert psi_satisfies(psi(gc.cycle(5)), Fraction(10), 0, 3)


def test_variant_parse():
    assert GainVariant.parse("omega") is OMEGA
    assert GainVariant.parse("Omega") is BIG_OMEGA
    with pytest.raises(ValueError):
        GainVariant.parse("omg")


@given(graphs(), st.sampled_from([OMEGA, BIG_OMEGA]))
@settings(max_examples=200, deadline=None)
def test_matches_subset_brute_force(G, variant):
    assert psi(G, variant).values == brute_psi(G, variant)


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_structural_facts(G):
    n = G.n
    pf = psi(G, OMEGA)
    a = gc.alpha(G)
    assert set(pf.values) == set(range(a + 1))
    assert all(y <= n - x for x, y in pf.items())
    cost_at = {}
    for x, c in feasibility(G, OMEGA):
        cost_at.setdefault(x, set()).add(c)
    for x, y in pf.items():
        assert cost_at[x] == set(range(y, n - x + 1))
    assert [x for x, y in pf.items() if y == 0] == [gc.omega(G)]
    assert component_orders_from_psi(pf) == sorted(c.bit_count() for c in gc.components(G))


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_big_omega_domain(G):
    pf = psi(G, BIG_OMEGA)
    assert pf.domain_max == gc.big_omega(G)
    assert pf[gc.big_omega(G)] == 0
