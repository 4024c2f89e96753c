import json

import pytest

import andrasfai.verify as verify_mod
from andrasfai.cli import main
from andrasfai.verify import TheoremVerdict

from reference import EIGENVALUES_AND3, GOLDEN_TOL


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestSpectrumCommand:
    def test_table(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--k", "5", "--format", "table")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 15  # header + 14 rows
        row0 = lines[1].split()
        assert row0 == ["0", "5.000000", "0", "0"]

    def test_json_values(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--k", "3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["k"] == 3 and data["n"] == 8
        assert data["source"] == "closed-form"
        assert data["pairs"] == [[1, 7], [2, 6], [3, 5]]
        for l, expected in EIGENVALUES_AND3.items():
            assert data["values"][l] == pytest.approx(expected, abs=GOLDEN_TOL)

    def test_json_round_trip_is_byte_identical(self, capsys):
        _, out = run_cli(capsys, "spectrum", "--k", "7", "--format", "json")
        reserialized = json.dumps(json.loads(out), indent=2) + "\n"
        assert reserialized == out

    def test_csv(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--k", "4", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "l,value,class_id"
        assert len(lines) == 12
        assert lines[1].startswith("0,4,")

    def test_default_format_is_json_when_redirected(self, capsys):
        _, out = run_cli(capsys, "spectrum", "--k", "2")
        assert json.loads(out)["n"] == 5

    def test_k_zero_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["spectrum", "--k", "0"])
        assert excinfo.value.code == 2


class TestExportCommand:
    def test_edge_list_line_count(self, capsys):
        code, out = run_cli(capsys, "export", "--k", "3", "--format", "edge-list")
        assert code == 0
        assert len(out.strip().splitlines()) == 12

    def test_k1_edge_list(self, capsys):
        _, out = run_cli(capsys, "export", "--k", "1", "--format", "edge-list")
        assert out == "0 1\n"

    def test_dot_edge_count(self, capsys):
        _, out = run_cli(capsys, "export", "--k", "4", "--format", "dot")
        assert sum("--" in line for line in out.splitlines()) == 22

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "graph.dot"
        code, out = run_cli(capsys, "export", "--k", "2", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text().startswith("graph andrasfai_2 {")

    def test_unwritable_output(self, capsys):
        code = main(["export", "--k", "2", "--output", "/nonexistent-dir/out.dot"])
        assert code == 2


class TestVerifyCommand:
    def test_k4_passes(self, capsys):
        code, out = run_cli(capsys, "verify", "--k", "4", "--format", "table")
        assert code == 0
        assert "result: PASS" in out
        assert out.count("pass") >= 7

    def test_k3_erratum_still_exits_0(self, capsys):
        code, out = run_cli(capsys, "verify", "--k", "3", "--format", "json")
        assert code == 0
        statuses = {v["claim"]: v["status"] for v in json.loads(out)["verdicts"]}
        assert statuses["plus_one"] == "erratum_detected"

    def test_k1_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--k", "1"])
        assert excinfo.value.code == 2

    def test_no_oracle(self, capsys):
        code, out = run_cli(capsys, "verify", "--k", "2", "--no-oracle", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["verdicts"][0]["observed"]["oracle_count"] is None

    def test_falsified_claim_exits_1(self, capsys, monkeypatch):
        def falsified(ws):
            return TheoremVerdict(
                "distinct_count", ws.k, {}, {}, "fail", "falsified for exit-code test"
            )

        monkeypatch.setitem(verify_mod._CHECKERS, "distinct_count", falsified)
        code, out = run_cli(capsys, "verify", "--k", "4", "--format", "table")
        assert code == 1
        assert "result: FAIL" in out


class TestSweepCommand:
    def test_small_sweep_json(self, capsys):
        code, out = run_cli(
            capsys, "sweep", "--from", "2", "--to", "6", "--format", "json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["k_range"] == [2, 6]
        assert len(report["verdicts"]) == 5 * 7
        errata = [v for v in report["verdicts"] if v["status"] == "erratum_detected"]
        assert [(v["k"], v["claim"]) for v in errata] == [(3, "plus_one")]

    def test_bad_range_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["sweep", "--from", "5", "--to", "2"])
        assert excinfo.value.code == 2


class TestTolerances:
    def test_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("SPECTRA_TOL_CLUSTER", "1e-7")
        code, _ = run_cli(capsys, "verify", "--k", "4", "--format", "json")
        assert code == 0

    def test_env_garbage_exits_2(self, monkeypatch):
        monkeypatch.setenv("SPECTRA_TOL_CLUSTER", "not-a-float")
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--k", "4"])
        assert excinfo.value.code == 2

    def test_inverted_tolerances_exit_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--k", "4", "--tol-sym", "1e-6", "--tol-cluster", "1e-9"])
        assert excinfo.value.code == 2
