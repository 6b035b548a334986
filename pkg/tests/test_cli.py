import io
import json
import subprocess
import sys

import pytest

from vulnkit.cli import run


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_psi_json():
    code, out, err = call(["psi", "--variant", "omega"], "D?{\n")
    assert code == 0
    rec = json.loads(out)
    assert rec["schema"] == "vulnkit-psi/1" and rec["graph6"] == "D?{"
    assert rec["values"] == [[0, 5], [1, 0], [2, 3], [3, 2], [4, 1]]
    assert err.strip().endswith("ok=1 failed=0")


def test_psi_big_omega():
    code, out, _ = call(["psi", "--variant", "Omega"], "D?{\n")
    assert json.loads(out)["values"][-1] == [5, 0]


def test_check_cycle():
    code, out, _ = call(["check", "--t", "1", "--k", "0", "--l", "2"], "Dhc\n")
    assert code == 0 and json.loads(out)["holds"] is True


def test_params_csv_reports_bad_lines():
    code, out, err = call(["params", "--format", "csv"], "Dhc\nnot graph6\n\nC~\n")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# schema=vulnkit-params/1"
    assert lines[1].startswith("graph6,n,kappa,")
    assert [l.split(",")[0] for l in lines[2:]] == ["Dhc", "C~"]
    assert "line 2:" in err and err.strip().endswith("ok=2 failed=1")


def test_params_tsv():
    code, out, _ = call(["params", "--format", "tsv"], "C~\n")
    assert out.splitlines()[2].split("\t")[:3] == ["C~", "4", "3"]


def test_threshold_methods():
    code, out, _ = call(["threshold", "--mu", "delta", "--property", "conn:k=2", "--n", "6",
                         "--method", "brute"])
    rec = json.loads(out)
    assert code == 0 and rec["value"] == "2/1" and rec["method"] == "BRUTE"
    assert rec["witness_graph"]
    code, out, _ = call(["threshold", "--mu", "kappa", "--property", "tough:t=1", "--n", "8"])
    assert json.loads(out)["value"] == "3/1"
    code, out, _ = call(["threshold", "--mu", "delta", "--property", "tkl:t=0,k=2,l=2", "--n", "6",
                         "--method", "theorem"])
    assert json.loads(out)["value"] == "2/1"


def test_threshold_brute_needs_small_order():
    code, _, err = call(["threshold", "--mu", "delta", "--property", "conn:k=2", "--n", "9",
                         "--method", "brute"])
    assert code == 2 and err


def test_implies():
    _, out, _ = call(["implies", "--p", "tough:t=1", "--q", "conn:k=2", "--n", "8"])
    assert json.loads(out)["implies"] is True
    _, out, _ = call(["implies", "--p", "conn:k=2", "--q", "tough:t=1", "--n", "8"])
    assert json.loads(out)["implies"] is False


def test_phi_grid_csv():
    code, out, _ = call(["phi", "--mu", "edges", "--n", "5"])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# schema=vulnkit-phi/1"
    assert lines[1] == "y\\x,1,2,3,4,5"
    assert lines[3].split(",")[2] == "7"


def test_tables_region_only():
    code, out, _ = call(["tables", "--which", "delta", "--n-range", "8..8", "--no-brute"])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# schema=vulnkit-tables/1"
    assert lines[1].startswith("property,parameters,n,mu,closed_form")
    assert len(lines) > 2


@pytest.mark.parametrize("argv", [
    ["threshold", "--mu", "delta", "--property", "conn:x=2", "--n", "6"],
    ["threshold", "--mu", "nope", "--property", "conn:k=2", "--n", "6"],
    ["check", "--t", "0.5", "--k", "0", "--l", "2"],
    ["tables", "--which", "delta", "--n-range", "3..13"],
    ["implies", "--p", "integ:i=3", "--q", "conn:k=1", "--n", "5"],
    ["params", "--workers", "0"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv):
    code, _, _ = call(argv)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "vulnkit", "psi"], input="@\n", capture_output=True,
                          text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["values"] == [[0, 1], [1, 0]]
