import io
import json

import pytest

from matdivseq import IntMatrix
from matdivseq.cli import (MatrixDocument, MatrixParseError, main, parse_matrix,
                           run_charpoly, run_jacobian, run_table, run_verify)

from golden_tables import X3, X4

X3_JSON = '{"matrix": [[1, -2, -6], [0, 1, 3], [-1, 0, 1]], "name": "X3"}'


def test_parse_matrix_json():
    doc = parse_matrix(X3_JSON)
    assert doc.matrix == X3
    assert doc.name == "X3"


def test_parse_matrix_json_one_by_one():
    doc = parse_matrix('{"matrix": [[1]]}')
    assert doc.matrix == IntMatrix([[1]])
    assert doc.name is None


def test_parse_matrix_plain_text():
    doc = parse_matrix("1 -2 -6\n0 1 3\n-1 0 1\n")
    assert doc.matrix == X3


def test_parse_matrix_not_square():
    with pytest.raises(MatrixParseError, match="square"):
        parse_matrix('{"matrix": [[1, 2], [3]]}')
    with pytest.raises(MatrixParseError, match="square"):
        parse_matrix("1 2\n3\n")


def test_parse_matrix_rejects_floats_and_bools():
    with pytest.raises(MatrixParseError, match="integer entries required"):
        parse_matrix('{"matrix": [[1.5]]}')
    with pytest.raises(MatrixParseError, match="integer entries required"):
        parse_matrix('{"matrix": [[true]]}')
    with pytest.raises(MatrixParseError, match="integer entries required"):
        parse_matrix("1 x\n2 3\n")


def test_parse_matrix_malformed_json_reports_position():
    with pytest.raises(MatrixParseError, match=r"line \d+, column \d+"):
        parse_matrix('{"matrix": [[1, 2], ')


def test_parse_matrix_empty():
    with pytest.raises(MatrixParseError):
        parse_matrix("   \n  ")


def test_run_table_text_with_factors():
    doc = parse_matrix(X3_JSON)
    out, code = run_table(doc, 3, "text", factor=True)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[2] == "3 | 6561 | 3^8"


def test_run_table_csv():
    doc = MatrixDocument(matrix=X4)
    out, code = run_table(doc, 2, "csv")
    assert code == 0
    assert out.splitlines() == ["1,1", "2,65536"]


def test_run_table_json_identity():
    doc = MatrixDocument(matrix=IntMatrix.identity(2))
    out, code = run_table(doc, 1, "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["entries"] == [{
        "n": 1,
        "reduced": "1",
        "jacobian_det": "1",
        "n_squared_value": None,
        "fallback_used": True,
    }]


def test_run_table_jacobian_column():
    doc = parse_matrix(X3_JSON)
    out, _ = run_table(doc, 3, "text", column="jacobian")
    values = [int(line.split(" | ")[1]) for line in out.splitlines()]
    assert values == [1, 8 * 100, 27 * 6561]


def test_run_table_formats_agree():
    doc = parse_matrix(X3_JSON)
    text, _ = run_table(doc, 5, "text")
    csv, _ = run_table(doc, 5, "csv")
    js, _ = run_table(doc, 5, "json")
    from_text = [int(line.split(" | ")[1]) for line in text.splitlines()]
    from_csv = [int(line.split(",")[1]) for line in csv.splitlines()]
    from_json = [int(e["reduced"]) for e in json.loads(js)["entries"]]
    assert from_text == from_csv == from_json


def test_run_table_json_round_trip():
    doc = parse_matrix(X3_JSON)
    out, _ = run_table(doc, 2, "json")
    assert parse_matrix(out) == doc


def test_run_verify_x3_passes_with_informational_note():
    doc = parse_matrix(X3_JSON)
    out, code = run_verify(doc, 8)
    assert code == 0
    assert "result: PASS" in out
    assert "informational" in out
    assert "400" in out and "800" in out


def test_run_verify_x4():
    out, code = run_verify(MatrixDocument(matrix=X4), 6)
    assert code == 0
    assert "result: PASS" in out


def test_run_verify_json():
    doc = parse_matrix(X3_JSON)
    out, code = run_verify(doc, 4, "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["divisibility"]["reduced"]["failures"] == []
    assert any("informational" in n for n in payload["closed_form"]["notes"])


def test_run_verify_csv():
    out, code = run_verify(parse_matrix(X3_JSON), 3, "csv")
    assert code == 0
    lines = out.splitlines()
    assert "closed_form,pass" in lines
    assert "result,pass" in lines


def test_run_verify_failure_exit_code(monkeypatch):
    from matdivseq.sequences import VerificationReport
    import matdivseq.cli as cli_mod

    def fake_verify(x, n_max):
        return VerificationReport(fingerprint=x.fingerprint(), n_max=n_max,
                                  mismatches=("n=2: forced mismatch",))

    monkeypatch.setattr(cli_mod, "verify_closed_form", fake_verify)
    out, code = run_verify(parse_matrix(X3_JSON), 3)
    assert code == 1
    assert "result: FAIL" in out


def test_run_charpoly():
    out, code = run_charpoly(parse_matrix(X3_JSON))
    assert code == 0
    assert "coefficients: [1, -3, -3, -1]" in out
    out2, _ = run_charpoly(MatrixDocument(matrix=IntMatrix.identity(2)))
    assert "coefficients: [1, -2, 1]" in out2


def test_run_charpoly_csv_and_json():
    doc = parse_matrix(X3_JSON)
    csv, _ = run_charpoly(doc, "csv")
    assert csv == "1,-3,-3,-1"
    payload = json.loads(run_charpoly(doc, "json")[0])
    assert payload["coefficients"] == ["1", "-3", "-3", "-1"]


def test_run_jacobian():
    out, code = run_jacobian(parse_matrix(X3_JSON), 2)
    assert code == 0
    assert "9x9" in out
    assert out.splitlines()[-1] == "det: 800"


def test_run_jacobian_json():
    payload = json.loads(run_jacobian(parse_matrix(X3_JSON), 2, "json")[0])
    assert payload["dim"] == 9
    assert payload["det"] == "800"


def test_main_table(tmp_path, capsys):
    path = tmp_path / "x3.json"
    path.write_text(X3_JSON, encoding="utf-8")
    code = main(["table", str(path), "--n-max", "3", "--factor"])
    out = capsys.readouterr().out
    assert code == 0
    assert "3 | 6561 | 3^8" in out


def test_main_verify_exit_zero(tmp_path, capsys):
    path = tmp_path / "x3.json"
    path.write_text(X3_JSON, encoding="utf-8")
    assert main(["verify", str(path), "--n-max", "6"]) == 0
    assert "result: PASS" in capsys.readouterr().out


def test_main_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("1 1\n1 0\n"))
    code = main(["jacobian", "-", "--n", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "det: -4" in out


def test_main_input_errors(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    assert main(["table", str(missing)]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"matrix": [[1, 2], [3]]}', encoding="utf-8")
    assert main(["verify", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "square" in err


def test_main_rejects_bad_n(tmp_path):
    path = tmp_path / "x3.json"
    path.write_text(X3_JSON, encoding="utf-8")
    assert main(["table", str(path), "--n-max", "0"]) == 2
    assert main(["jacobian", str(path), "--n", "0"]) == 2
