import io
import json

import pytest

from jdvtools import Graph, format_edge_list, parse_edge_list
from jdvtools.cli import main
from jdvtools.relaxations import CSV_HEADER


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_pipes_into_jdv(capsys, monkeypatch, tmp_path):
    code, out, _ = run(capsys, "construct", "half", "--n", "6")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "jdv", "-")
    assert code == 0
    doc = json.loads(out)
    assert doc["support_size"] == 7
    assert doc["n"] == 6


def test_construct_pipes_into_diagnose(capsys, monkeypatch):
    code, out, _ = run(capsys, "construct", "augmented", "--n", "9")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "diagnose", "-")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_passed"] is True
    assert doc["support_size"] == 17


def test_construct_rejects_bad_n(capsys):
    code, _, err = run(capsys, "construct", "augmented", "--n", "6")
    assert code == 1
    assert "odd" in err


def test_jdv_and_check_round_trip(capsys, tmp_path):
    graph_file = tmp_path / "g.txt"
    graph_file.write_text(format_edge_list(Graph.from_edges(3, [(1, 2), (2, 3)])))
    code, out, _ = run(capsys, "jdv", str(graph_file))
    assert code == 0
    jdv_file = tmp_path / "j.json"
    jdv_file.write_text(out)
    code, out, _ = run(capsys, "check", str(jdv_file), "--strict")
    assert code == 0
    doc = json.loads(out)
    assert doc["graphical"] is True
    assert doc["class_sizes"] == {"1": 2, "2": 1}


def test_check_reports_violation_with_exit_zero(capsys, tmp_path):
    jdv_file = tmp_path / "bad.json"
    jdv_file.write_text(
        '{"n": 3, "entries": [{"i": 1, "k": 1, "count": 1}, {"i": 1, "k": 2, "count": 1}]}'
    )
    code, out, _ = run(capsys, "check", str(jdv_file))
    assert code == 0
    doc = json.loads(out)
    assert doc["graphical"] is False
    assert doc["violation"]["kind"] == "non_integer_class"
    assert doc["violation"]["i"] == 2


def test_check_malformed_input_exits_one(capsys, tmp_path):
    jdv_file = tmp_path / "broken.json"
    jdv_file.write_text("{not json")
    code, _, err = run(capsys, "check", str(jdv_file))
    assert code == 1
    assert "error:" in err


def test_identity_command(capsys, tmp_path):
    graph_file = tmp_path / "g.txt"
    graph_file.write_text("n 3\n1 2\n")
    code, out, _ = run(capsys, "identity", str(graph_file))
    assert code == 0
    assert "weighted_degree_sum = 2/1 = 2.000000000" in out
    assert "n - n0 = 2 (n = 3, n0 = 1)" in out
    assert "identity holds: True" in out


def test_bounds_stdout(capsys):
    code, out, _ = run(capsys, "bounds", "--n-min", "2", "--n-max", "5")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 5
    assert lines[1].startswith("2,1.000000000,")


def test_bounds_csv_byte_identical(capsys, tmp_path):
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    code, out, _ = run(capsys, "bounds", "--n-min", "2", "--n-max", "12", "--csv", str(out_a))
    assert code == 0
    # exact-fraction summaries accompany the file output
    assert "alpha_n = 2/3 = 0.666666667" in out
    code, _, _ = run(capsys, "bounds", "--n-min", "2", "--n-max", "12", "--csv", str(out_b))
    assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()


def test_bounds_rejects_bad_range(capsys):
    code, _, err = run(capsys, "bounds", "--n-min", "5", "--n-max", "3")
    assert code == 1
    assert "range" in err


def test_beta0_prints_five_significant_digits(capsys):
    code, out, _ = run(capsys, "beta0")
    assert code == 0
    assert "beta0 = 5.68049" in out
    assert "limit_constant = 0.552256" in out


def test_verify_f(capsys):
    code, out, _ = run(capsys, "verify-f", "--grid-step", "0.01")
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["f_value"] - 13 / 24) < 1e-9
    assert abs(doc["M"] - 5 / 6) < 1e-6
    assert all(r <= 1e-9 for r in doc["constraint_residuals"].values())


def test_diagnose_file(capsys, tmp_path):
    graph_file = tmp_path / "h6.txt"
    code, out, _ = run(capsys, "construct", "half", "--n", "6")
    graph_file.write_text(out)
    code, out, _ = run(capsys, "diagnose", str(graph_file))
    assert code == 0
    doc = json.loads(out)
    assert doc["B"] == 13
    assert doc["D"] == {"1": 1, "2": 2, "3": 3, "4": 3, "5": 4}
    assert len(doc["chain"]) == 3


def test_oracle_command_output_parses_as_graph(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4")
    assert code == 0
    assert "# max_support = 3" in out
    witness = parse_edge_list(out)  # comment lines are ignored by the parser
    assert witness.n == 4


def test_oracle_refusal(capsys):
    code, _, err = run(capsys, "oracle", "--n", "9")
    assert code == 1
    assert "cap" in err


def test_unreadable_file_exits_one(capsys):
    code, _, err = run(capsys, "jdv", "/nonexistent/path.txt")
    assert code == 1
    assert "error:" in err


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
