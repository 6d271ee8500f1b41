import json

import pytest

from regmaps.cli import main
from regmaps.maps import format_triple
from regmaps.wreath import classify, records_from_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_classify_json_roundtrips(capsys):
    code, out = run(capsys, "classify", "--d", "2", "--n", "3", "--format", "json")
    assert code == 0
    records = records_from_json(out)
    assert len(records) == 1
    assert records[0].invariants.type_string == "{6,4}_4"


def test_classify_table(capsys):
    code, out = run(capsys, "classify", "--d", "1", "--n", "6")
    assert code == 0
    assert "{3,5}_5" in out and "{5,5}_3" in out


def test_classify_output_is_byte_stable(capsys):
    _, first = run(capsys, "classify", "--d", "2", "--n", "4", "--format", "json")
    _, second = run(capsys, "classify", "--d", "2", "--n", "4", "--format", "json")
    assert first == second


def test_invariants_builtin_triple(capsys):
    code, out = run(capsys, "invariants", "--triple", "h22-octagon")
    assert code == 0
    assert "{8,2}_8" in out
    assert "nonorientable" in out


def test_census_record_revalidates_through_invariants(tmp_path, capsys):
    rec = classify(2, 3)[0]
    path = tmp_path / "h23.triple"
    path.write_text(format_triple(rec.triple()))
    code, out = run(capsys, "invariants", "--triple", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["validation"]["ok"] is True
    inv = payload["invariants"]
    assert inv["type"] == {"p": 6, "q": 4, "r": 4}
    assert inv["genus"] == rec.invariants.genus
    assert inv["group_order"] == rec.invariants.group_order


def test_invariants_failing_triple_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.triple"
    path.write_text("degree 3\nlambda 1 0 2\nrho 0 1 2\ntau 1 0 2\n")
    code, out = run(capsys, "invariants", "--triple", str(path))
    assert code == 1
    assert "FAIL" in out


def test_unknown_triple_name_exits_2(capsys):
    code, _ = run(capsys, "invariants", "--triple", "missing-file")
    assert code == 2


def test_bad_cell_exits_2(capsys):
    code, _ = run(capsys, "classify", "--d", "0", "--n", "3")
    assert code == 2


def test_budget_exceeded_exits_3(capsys, monkeypatch):
    monkeypatch.setenv("REGMAP_BUDGET", "10")
    code, _ = run(capsys, "classify", "--d", "2", "--n", "6")
    assert code == 3


def test_pgl29_verify(capsys):
    code, out = run(capsys, "pgl29", "--verify")
    assert code == 0
    assert "all checks passed" in out


def test_verify_theorem_small(capsys):
    code, out = run(capsys, "verify-theorem", "--max-d", "1", "--max-n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["complete"] is True
    assert [c["found"] for c in payload["cells"]] == [1, 1]


def test_verify_theorem_budget_exits_3(capsys):
    code, out = run(capsys, "verify-theorem", "--max-d", "2", "--max-n", "4", "--budget", "50")
    assert code == 3
    assert "INCOMPLETE" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "census.json"
    code, out = run(
        capsys, "classify", "--d", "1", "--n", "4", "--format", "json",
        "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert records_from_json(target.read_text())[0].n == 4
