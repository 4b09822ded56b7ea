import json
from pathlib import Path

import pytest

from lexdim import generators as gen
from lexdim.cli import main
from lexdim.graph import write_edge_list

GOLDEN = sorted((Path(__file__).parent / "golden").glob("*.json"))
VOLATILE = {"millis", "seconds"}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _strip(obj):
    if isinstance(obj, dict):
        return {k: _strip(v) for k, v in obj.items() if k not in VOLATILE}
    if isinstance(obj, list):
        return [_strip(v) for v in obj]
    return obj


@pytest.mark.parametrize("path", GOLDEN, ids=[p.stem for p in GOLDEN])
def test_golden_json(capsys, path):
    case = json.loads(path.read_text())
    code, out, _ = run(capsys, "--json", *case["argv"])
    assert code == 0
    assert _strip(json.loads(out)) == case["output"]


def test_json_flag_after_subcommand(capsys):
    _, a, _ = run(capsys, "--json", "dim", "P7")
    _, b, _ = run(capsys, "dim", "P7", "--json")
    assert a == b


def test_human_output(capsys):
    code, out, _ = run(capsys, "dim", "P7")
    assert code == 0 and out.startswith("1 ")
    code, out, _ = run(capsys, "adim", "C9")
    assert code == 0 and out.startswith("4 ")
    code, out, _ = run(capsys, "verify", "K3", "C3")
    assert code == 0 and "predicted=8 brute=8 (agree)" in out
    code, out, _ = run(capsys, "bases", "P4")
    assert code == 0 and "case=" in out


def test_verify_over_budget(capsys):
    code, out, _ = run(capsys, "verify", "K3", "petersen", "--budget", "20")
    assert code == 0 and "unverified" in out


def test_verify_reports_table_discrepancy_without_failing(capsys):
    code, out, _ = run(capsys, "verify", "C3", "comp(P4)")
    assert code == 0 and "table discrepancy" in out


def test_file_input(capsys, tmp_path):
    f = tmp_path / "c6.txt"
    write_edge_list(gen.cycle(6), f)
    code, out, _ = run(capsys, "--json", "dim", f"file:{f}")
    assert code == 0 and json.loads(out)["dim"] == 2


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["dim"], ["dim", "Q3"], ["dim", "lex(P2"], ["gaps", "C6", "--set", "a,b"],
    ["suite", "nonexistent"], ["verify", "P3", "P3", "--budget", "x"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


@pytest.mark.parametrize("argv", [
    ["dim", "KG(4,2)"], ["dim", "E3"], ["predict", "E2", "P3"], ["predict", "P1", "P3"],
    ["closed-form", "E3", "P3"], ["closed-form", "line(K4)", "P3"], ["gaps", "C6", "--set", "0"],
    ["dim", "file:/nonexistent/graph.txt"],
])
def test_precondition_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_disagreement_exits_3(capsys, monkeypatch):
    import lexdim.lex as lex

    real = lex.formula_value
    monkeypatch.setattr(lex, "formula_value", lambda *a: real(*a) + 1)
    code, out, _ = run(capsys, "verify", "K3", "C3")
    assert code == 3 and "DISAGREE" in out


def test_suite_command(capsys):
    code, out, _ = run(capsys, "suite", "paths-cycles")
    assert code == 0 and out.startswith("[PASS] paths-cycles")
    code, out, _ = run(capsys, "--json", "suite", "classifier")
    assert code == 0 and json.loads(out)["passed"] is True


def test_bases_warns_on_large_graphs(capsys):
    code, _, err = run(capsys, "bases", "P15")
    assert code == 0 and "warning" in err


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "lexdim", "dim", "C6"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("2 ")
