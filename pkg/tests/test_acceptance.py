"""Acceptance criteria, one test each.

The certification run at ``n_max = 6`` is shared: criteria 1 to 4 and 8 read
its suites, and criterion 9 compares its report with a second run in a
fresh process using a different worker count.
"""

import io
import os
import subprocess
import sys
import time

import pytest

from vulnkit.certify import (CertifyConfig, delta_closed_forms, lemma, report, run_all,
                             table_cells, theorem)

pytestmark = pytest.mark.slow

CFG = CertifyConfig(n_max=6, random_count=500, seed=20240)


@pytest.fixture(scope="module")
def certified():
    timings: dict[str, float] = {}
    results = run_all(CFG, timings)
    return {r.name: r for r in results}, report(results, CFG), timings


def _note(record, text):
    record("detail", text)


def _summary(res):
    extra = " ".join(f"{k}={v}" for k, v in sorted(res.info.items()))
    return f"checked={res.checked} failures={len(res.failures)} ledgered={len(res.ledger)} {extra}".strip()


@pytest.mark.criterion(1, "property-function structure on the corpus")
def test_criterion_1_psi_facts(certified, record_property):
    suites, _, timings = certified
    res = suites["psi_facts"]
    _note(record_property, f"{_summary(res)} seconds={timings['psi_facts']:.1f}")
    assert res.checked == sum(1 << (n * (n - 1) // 2) for n in range(1, 7)) + 500
    assert res.ok, res.failures[:5]
    assert timings["psi_facts"] < 60


@pytest.mark.criterion(2, "direct parameters equal their extractions")
def test_criterion_2_extraction(certified, record_property):
    res = certified[0]["extraction"]
    _note(record_property, _summary(res))
    assert res.ok, res.failures[:5]


@pytest.mark.criterion(3, "classical inequalities, tight on stars")
def test_criterion_3_inequalities(certified, record_property):
    res = certified[0]["inequalities"]
    _note(record_property, _summary(res))
    assert res.ok, res.failures[:5]
    assert int(res.info["stars"]) >= 4


@pytest.mark.criterion(4, "join-of-cliques graphs are extremal in their families")
def test_criterion_4_extremality(certified, record_property):
    res = certified[0]["extremality"]
    _note(record_property, _summary(res))
    assert res.checked > 0 and res.ok, res.failures[:5]


@pytest.mark.criterion(5, "minimum-degree closed forms equal the census, n = 4..7")
def test_criterion_5_delta_closed_forms(record_property):
    start = time.perf_counter()
    res = delta_closed_forms(range(4, 8))
    elapsed = time.perf_counter() - start
    _note(record_property, f"{_summary(res)} seconds={elapsed:.1f}")
    assert res.checked == sum((n - 1) + (n - 1) for n in range(4, 8))
    assert res.ok, res.failures[:5]
    assert elapsed < 600


@pytest.mark.criterion(6, "region optimum equals census; at least 95% of table cells certified")
def test_criterion_6_lemma_and_tables(record_property):
    lem = lemma(range(4, 8))
    cells = table_cells(range(4, 8))
    got, total = map(int, cells.info["certified"].split("/"))
    _note(record_property, f"lemma {_summary(lem)}; cells certified={got}/{total} "
                           f"({100 * got / total:.0f}%), errata ledgered with witnesses="
                           f"{sum(1 for row in cells.ledger if row[1] == 'PAPER_ERRATUM?')}")
    assert lem.ok, lem.failures[:5]
    assert cells.ok, cells.failures[:5]
    assert all(row[-1] for row in cells.ledger if row[1] == "PAPER_ERRATUM?")
    assert got >= 0.95 * total


@pytest.mark.criterion(7, "master theorem closed form against region and census")
def test_criterion_7_theorem(record_property):
    res = theorem(range(5, 13))
    errata = [row for row in res.ledger if row[7] == "THEOREM_ERRATUM"]
    _note(record_property, f"{_summary(res)} errata={len(errata)} "
                           f"no_failing_graph={len(res.ledger) - len(errata)}")
    assert res.checked == 4 * 4 * 2 * 8
    # region equals census up to order 7; every divergence carries a witness
    assert res.ok, res.failures[:5]
    assert all(row[8] for row in errata)


@pytest.mark.criterion(8, "density tables against the oracle, n = 5..10")
def test_criterion_8_density_tables(certified, record_property):
    res = certified[0]["density_tables"]
    _note(record_property, _summary(res))
    assert res.ok, res.failures[:5]


@pytest.mark.criterion(9, "certify output is byte-identical across runs and worker counts")
def test_criterion_9_determinism(certified, record_property):
    text = certified[1]
    env = dict(os.environ, VULNKIT_WORKERS="2")
    proc = subprocess.run([sys.executable, "-m", "vulnkit", "certify", "--n-max", "6", "--workers", "2",
                           "--seed", str(CFG.seed)], capture_output=True, env=env, check=False)
    _note(record_property, f"in-process workers=1 vs subprocess workers=2, {len(text)} bytes")
    assert proc.returncode == 0, proc.stderr.decode()[-2000:]
    assert proc.stdout == text.encode()
    assert text.rstrip().endswith("overall=PASS")
