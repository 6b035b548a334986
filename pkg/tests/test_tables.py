
from vulnkit.tables import (CELLS, ERRATUM, MATCH, UNCHECKED, _delta_conn, _delta_integ,
                            _delta_lconn, evaluate, generate_tables, summarise)
from vulnkit.thresholds import conn, integ, lconn, unscat


def _cell(key):
    return next(c for c in CELLS if c.key == key)


def test_cells_layout():
    assert len(CELLS) == 36
    assert sum(c.closed is not None for c in CELLS) == 27
    assert {c.column for c in CELLS} == {"conn", "lconn", "tough", "unscat", "coc", "integ"}


def test_closed_forms_verbatim():
    assert _delta_conn(conn(2), 6) == 2
    assert _delta_integ(integ(4), 7) == 2
    # floor((n + k l) / k) + k - 1
    assert _delta_lconn(lconn(2, 3), 7) == 7
    kappa_unscat = _cell("cross:kappa:unscat").closed
    assert kappa_unscat(unscat(1), 9) == 3


def test_evaluate_match():
    row = evaluate(_cell("delta:delta:conn"), conn(3), 6)
    assert row.verdict == MATCH and row.closed == row.region == row.brute == 3
    assert row.lemma_ok


def test_evaluate_erratum_carries_witness():
    row = evaluate(_cell("delta:delta:lconn"), lconn(1, 2), 6)
    assert row.verdict == ERRATUM
    assert row.brute_witness and row.brute != row.closed


def test_evaluate_unchecked_cases():
    assert evaluate(_cell("cross:tau:tough"), conn(1), 5).note == "asymptotic"
    # no graph of order 5 fails connectivity 0
    r = evaluate(_cell("cross:kappa:conn"), conn(0), 5)
    assert r.verdict == UNCHECKED and r.note == "no graph lacks the property"
    # K_5 already lacks integrity 6
    r = evaluate(_cell("cross:integrity:integ"), integ(6), 5)
    assert r.verdict == UNCHECKED and r.note == "every graph lacks the property"


def test_region_only_beyond_census():
    rows = generate_tables("delta", [9], brute=True)
    assert rows and all(r.brute is None and r.lemma_ok is None for r in rows)


def test_summarise():
    rows = [evaluate(_cell("cross:integrity:conn"), conn(k), n) for k in (1, 2) for n in (5, 6)]
    rows += [evaluate(_cell("delta:delta:lconn"), lconn(1, 2), 6)]
    by_key = {s.cell.key: s for s in summarise(rows)}
    assert by_key["cross:integrity:conn"].verdict == MATCH
    assert by_key["cross:integrity:conn"].matched_at == [5, 6]
    assert by_key["delta:delta:lconn"].verdict == ERRATUM
    assert by_key["delta:delta:lconn"].first_mismatch is not None
