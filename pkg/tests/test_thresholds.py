from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from vulnkit import graph as gc
from vulnkit.census import threshold_brute
from vulnkit.corpus import labelled
from vulnkit.extremal import DELTA, EDGES, INTEGRITY, KAPPA, SC, TAU, mu_direct
from vulnkit.tables import _delta_tough
from vulnkit.thresholds import (ForbiddenRegion, PropertySpec, _theorem_terms, coc, conn,
                                cotough, delta_threshold_theorem, failing_points, holds, integ,
                                lconn, region_for, region_implies, threshold_by_region, tkl,
                                tough, unscat)


def test_region_examples():
    r = region_for(conn(2), 6)
    assert (2, 1) in r and (2, 2) not in r
    assert set(region_for(tough(1), 6).points()) == {
        (x, y) for x in range(2, 7) for y in range(0, 7) if y <= min(x - 1, 6 - x)}
    u = region_for(unscat(0), 5)
    assert (3, 2) in u and (3, 3) not in u


def test_region_boundary_is_allowed():
    # y = t x + k lies outside the forbidden set, also for fractional t
    r = ForbiddenRegion(10, 2, Fraction(1, 2), Fraction(0))
    assert (4, 1) in r and (4, 2) not in r
    assert (3, 1) in r and (3, 2) not in r


def test_omega_family_has_no_region():
    with pytest.raises(ValueError):
        region_for(integ(3), 6)


def test_implies_examples():
    assert region_implies(tough(1), conn(2), 8)
    assert all(region_implies(conn(k), conn(k - 1), 8) for k in range(1, 6))
    assert not region_implies(conn(2), tough(1), 8)


def test_holds_examples():
    C5, star = gc.cycle(5), gc.star(4)
    assert holds(tough(1), C5)
    assert not holds(conn(2), star)
    assert holds(integ(2), star) and not holds(integ(3), star)
    assert holds(coc(1, 2), star) and not holds(coc(2, 2), star)
    assert holds(cotough(Fraction(1, 4)), star) and not holds(cotough(Fraction(1, 3)), star)


def test_threshold_examples():
    # floor((6 + 2 - 3) / 2) = 2
    r = threshold_by_region(DELTA, conn(2), 6)
    assert r.value == 2
    assert threshold_brute(DELTA, conn(2), 6).value == 2
    assert threshold_by_region(DELTA, integ(4), 7).value == 2
    assert threshold_by_region(KAPPA, tough(1), 8).value == 3


def test_threshold_witness_attains_and_fails():
    for mu, p, n in ((DELTA, conn(2), 6), (EDGES, conn(1), 5), (KAPPA, tough(1), 8),
                     (DELTA, integ(4), 7), (SC, unscat(1), 6)):
        r = threshold_by_region(mu, p, n)
        G = gc.from_graph6(r.witness_graph)
        assert G.n == n and not holds(p, G)
        assert mu_direct(mu, G) == r.value


def test_threshold_none_when_everything_has_the_property():
    assert threshold_by_region(DELTA, conn(0), 6).value is None
    assert threshold_by_region(DELTA, conn(-1), 6).value is None
    # K_6 has alpha = 1, so it has every psi^omega property vacuously
    r = threshold_by_region(DELTA, conn(7), 6)
    assert r.value == 4 and r.witness_graph == "E~~o"
    assert holds(conn(7), gc.complete(6))


def test_theorem_examples():
    assert delta_threshold_theorem(0, 2, 2, 6) == 2
    assert delta_threshold_theorem(1, 0, 2, 10) == _delta_tough(tough(1), 10)
    for t in (Fraction(0), Fraction(-1, 2)):
        assert list(_theorem_terms(t, Fraction(1), 2, 9)) == ["first"]
    with pytest.raises(ValueError):
        delta_threshold_theorem(-1, 0, 2, 6)


def test_spec_text_round_trip():
    for text in ("conn:k=2", "tough:t=1/2", "unscat:s=-1", "lconn:k=2,l=3",
                 "tkl:t=1/2,k=1,l=2", "integ:i=4", "coc:k=2,l=3", "cotough:t=1/2"):
        assert str(PropertySpec.parse(text)) == text
    for bad in ("conn", "conn:k=", "conn:t=1", "lconn:k=2", "nope:k=1", "integ:i=1/2"):
        with pytest.raises(ValueError):
            PropertySpec.parse(bad)


def test_omega_family_points():
    assert (0, 6) in failing_points(integ(7), 6)
    assert (0, 6) not in failing_points(integ(6), 6)
    assert set(failing_points(coc(2, 3), 5)) == {(1, 0), (1, 1), (2, 0), (2, 1)}


@pytest.mark.parametrize("n", [5, 6])
def test_specialisation_consistency(n):
    pairs = [(conn(2), tkl(0, 2, 2)), (tough(Fraction(3, 2)), tkl(Fraction(3, 2), 0, 2)),
             (unscat(-1), tkl(1, 1, 2)), (lconn(2, 3), tkl(0, 2, 3))]
    for mu in (DELTA, EDGES, KAPPA, TAU, SC, INTEGRITY):
        for named, general in pairs:
            assert threshold_by_region(mu, named, n).value == threshold_by_region(mu, general, n).value


GRID_T = st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)])


@given(GRID_T, GRID_T, st.integers(-2, 3), st.integers(-2, 3), st.integers(1, 4), st.integers(1, 4),
       st.integers(3, 10))
@settings(max_examples=200, deadline=None)
def test_region_monotonicity(t1, t2, k1, k2, l1, l2, n):
    t, tp = max(t1, t2), min(t1, t2)
    k, kp = max(k1, k2), min(k1, k2)
    l, lp = min(l1, l2), max(l1, l2)
    assert region_implies(tkl(t, k, l), tkl(tp, kp, lp), n)


@pytest.mark.parametrize("n", [4, 5])
def test_threshold_semantics(n):
    graphs = list(labelled(n))
    for mu in (DELTA, EDGES, KAPPA, INTEGRITY):
        for p in (conn(1), conn(2), tough(1), unscat(0), lconn(1, 3), integ(3), coc(1, 2)):
            T = threshold_by_region(mu, p, n).value
            if T is None:
                assert all(holds(p, G) for G in graphs)
                continue
            values = [(mu_direct(mu, G), holds(p, G)) for G in graphs]
            assert all(ok for v, ok in values if v > T)
            assert any(v == T and not ok for v, ok in values)
