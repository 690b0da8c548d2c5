import json
import subprocess
import sys

import pytest

from trimetric.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, parse_range, run
from trimetric.graph import generate_family, parse_graph6, to_graph6
from trimetric.report import render_report
from trimetric.theorems import Status, check, exhaustive_scan
from trimetric.triameter import TriameterResult


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCompute:
    def test_path_ten(self, capsys):
        code, out, _ = _run(capsys, "compute", "--family", "path:10")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert "tr=18 witness=" in out
        assert "diam=9" in lines and "rad=5" in lines

    def test_json(self, capsys):
        code, out, _ = _run(capsys, "compute", "--graph6", "Bw", "--format", "json")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data[0]["tr"] == 3 and data[0]["metrics"]["chromatic"] == 3

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "in.g6"
        path.write_text("Bw\nBW\n")
        code, out, _ = _run(capsys, "compute", "--input", str(path), "--format", "csv")
        assert code == EXIT_OK
        assert len(out.splitlines()) == 3

    def test_disconnected_is_an_input_error(self, capsys):
        code, _, err = _run(capsys, "compute", "--graph6", "B?")
        assert code == EXIT_USAGE and "error" in err


class TestCheck:
    def test_holds(self, capsys):
        code, out, _ = _run(capsys, "check", "--family", "petersen", "--ids", "T22")
        assert code == EXIT_OK
        word = to_graph6(generate_family("petersen"))
        assert out == f"{word} T22_VERTEX_TRANSITIVE holds rad=2 tr=6\n"

    def test_violation_exit_code(self, capsys):
        code, out, _ = _run(capsys, "check", "--family", "cycle:4", "--ids", "T23")
        assert code == EXIT_VIOLATION
        assert "violated" in out

    def test_unknown_id(self, capsys):
        code, _, err = _run(capsys, "check", "--family", "cycle:4", "--ids", "T99")
        assert code == EXIT_USAGE and "T99" in err


class TestScan:
    def test_clean_scan(self, capsys):
        code, out, _ = _run(capsys, "scan", "--orders", "4-5", "--ids", "T01,T05,T26", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["scan"]["graphs_scanned"] == 38 + 728
        assert "elapsed_ms" not in data
        assert [r["id"][:3] for r in data["results"]] == ["T01", "T05", "T26"]

    def test_csv_header(self, capsys):
        _, out, _ = _run(capsys, "scan", "--orders", "4", "--ids", "T01", "--format", "csv")
        assert out.splitlines()[0] == "theorem,holds,violated,inapplicable,inapplicable_cap"

    def test_violation_witness_retriggers(self, capsys):
        code, out, _ = _run(capsys, "scan", "--orders", "4", "--ids", "T23")
        assert code == EXIT_VIOLATION
        words = [tok.split("=", 1)[1] for tok in out.split() if tok.startswith("graph6=")]
        assert len(words) == 3
        for w in words:
            assert check(parse_graph6(w), "T23").status is Status.VIOLATED

    @pytest.mark.parametrize("fmt", ["json", "csv", "text"])
    def test_byte_identical_across_workers(self, capsys, fmt):
        outs = []
        for workers in ("1", "3"):
            _, out, _ = _run(capsys, "scan", "--orders", "4-5", "--workers", workers, "--format", fmt)
            outs.append(out)
        assert outs[0] == outs[1]

    def test_env_workers(self, capsys, monkeypatch):
        monkeypatch.setenv("TRIMETRIC_WORKERS", "2")
        _, a, _ = _run(capsys, "scan", "--orders", "5", "--ids", "T01")
        monkeypatch.delenv("TRIMETRIC_WORKERS")
        _, b, _ = _run(capsys, "scan", "--orders", "5", "--ids", "T01")
        assert a == b

    def test_trees(self, capsys):
        code, out, _ = _run(capsys, "scan", "--orders", "3-6", "--trees", "--ids", "T04,T20")
        assert code == EXIT_OK and "graphs=1440" in out

    def test_timing(self, capsys):
        _, out, _ = _run(capsys, "scan", "--orders", "3", "--ids", "T01", "--timing", "--format", "json")
        assert "elapsed_ms" in json.loads(out)

    def test_cap(self, capsys):
        code, _, err = _run(capsys, "scan", "--orders", "8")
        assert code == EXIT_USAGE and "cap" in err.lower()

    def test_output_file(self, capsys, tmp_path):
        dest = tmp_path / "scan.json"
        code, out, _ = _run(capsys, "scan", "--orders", "4", "--ids", "T01", "--format", "json",
                            "--output", str(dest))
        assert code == EXIT_OK and out == ""
        assert json.loads(dest.read_text())["scan"]["orders"] == [4]


def test_ng_scan_csv(capsys):
    code, out, _ = _run(capsys, "ng-scan", "--n", "6", "--format", "csv")
    assert code == EXIT_OK
    rows = [line.split(",") for line in out.splitlines()]
    assert rows[0][7] == "product"
    assert any(r[7] == "64" and r[2] == r[3] == "8" for r in rows[1:])


class TestFamily:
    def test_emit(self, capsys):
        _, out, _ = _run(capsys, "family", "--family", "complete:3")
        assert out == "Bw\n"

    def test_edge_list(self, capsys):
        _, out, _ = _run(capsys, "family", "--family", "path:3", "--edge-list")
        assert out == "3 2\n0 1\n1 2\n"

    def test_verify(self, capsys):
        code, out, _ = _run(capsys, "family", "--verify", "grid", "--range", "2-4", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "family,computed,expected,match"
        assert len(out.splitlines()) == 1 + 9

    def test_bad_spec(self, capsys):
        code, _, _ = _run(capsys, "family", "--family", "cycle:2")
        assert code == EXIT_USAGE


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate"],
            ["compute"],
            ["compute", "--graph6", "Bw", "--family", "path:3"],
            ["scan", "--orders", "4", "--workers", "0"],
            ["scan", "--orders", "x-y"],
            ["compute", "--graph6", "Bw", "--format", "xml"],
        ],
    )
    def test_exit_one(self, capsys, argv):
        # argparse failures exit via SystemExit, command-level ones return the code
        try:
            code = run(argv)
        except SystemExit as exc:
            code = exc.code
        assert code == EXIT_USAGE

    def test_parse_range(self):
        assert parse_range("4-6") == [4, 5, 6]
        assert parse_range("4,6") == [4, 6]
        assert parse_range("7") == [7]


def test_render_contracts():
    assert render_report(TriameterResult(6, (0, 2, 3))) == "tr=6 witness=0,2,3\n"
    s = exhaustive_scan([4], ["T01"])
    assert render_report(s, "json") == render_report(s, "json")
    with pytest.raises(ValueError):
        render_report(s, "yaml")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "trimetric", "compute", "--family", "cycle:6"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "tr=6" in proc.stdout
