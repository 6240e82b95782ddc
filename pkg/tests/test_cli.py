import json
import subprocess
import sys

import pytest

from tbsym.cli import main, table_pairs


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_symbol_text_output(capsys):
    code, out = run(capsys, "symbol", "2", "2")
    assert code == 0
    assert out == "2\n2\n2\nAGREE\n"


def test_symbol_single_method(capsys):
    code, out = run(capsys, "symbol", "5", "3", "--method", "structured")
    assert (code, out) == (0, "3,2,1,1\n")


def test_symbol_json(capsys):
    code, out = run(capsys, "symbol", "3", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["results"] == {"closed": "2,1,1", "structured": "2,1,1", "oracle": "2,1,1"}
    assert doc["verdict"] == "AGREE"


@pytest.mark.parametrize("argv", [["symbol", "3", "5"], ["symbol", "2", "0"],
                                  ["table", "--max-sum", "1"], ["symbol", "2", "1", "--jet", "0"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_table(capsys):
    code, out = run(capsys, "table", "--max-sum", "5")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n\tr\tclosed\tstructured\toracle\tverdict"
    assert len(lines) == 1 + len(table_pairs(5)) == 7
    assert lines[1] == "1\t1\t1\t1\t1\tAGREE"
    assert "3\t2\t2,1,1\t2,1,1\t2,1,1\tAGREE" in lines


def test_table_reports_cap(capsys):
    code, out = run(capsys, "table", "--max-sum", "6", "--oracle-mode", "minors",
                    "--max-minors", "5")
    assert code == 3
    assert "CAPPED" in out


def test_certify_to_file(tmp_path, capsys):
    target = tmp_path / "cert.json"
    code, out = run(capsys, "certify", "3", "2", "--out", str(target))
    assert (code, out) == (0, "CONFIRMED\n")
    assert json.loads(target.read_text())["verdict"] == "CONFIRMED"


def test_certify_unwritable_path(tmp_path, capsys):
    code, _ = run(capsys, "certify", "2", "1", "--out", str(tmp_path / "missing" / "c.json"))
    assert code == 2


def test_verify_lemmas(capsys):
    code, out = run(capsys, "verify-lemmas", "5", "3")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert len(rows) == 10
    assert {status for _, status, _ in rows} == {"PASS"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tbsym", "symbol", "4", "2"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["2,2", "2,2", "2,2", "AGREE"]
