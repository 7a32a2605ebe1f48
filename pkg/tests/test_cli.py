import csv
import io
import json

import pytest

from scrollslopes import cli
from scrollslopes.report import (
    SWEEP_COLUMNS,
    ReportDocument,
    document_for_genus,
    document_for_oracle,
    document_for_sweep,
    render,
    render_csv,
    render_text,
)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerifyMode:
    def test_genus7_passes(self, capsys):
        code, out, err = run_cli(capsys, "--verify", "--genus", "7")
        assert code == 0
        assert "20/1" in out and "56/3" in out
        assert "PASS" in out

    def test_genus6_passes(self, capsys):
        code, out, _ = run_cli(capsys, "--verify", "--genus", "6")
        assert code == 0
        assert "(even)" in out

    def test_genus5_rejected(self, capsys):
        code, out, err = run_cli(capsys, "--verify", "--genus", "5")
        assert code == 2
        assert "requires g >= 6" in err

    def test_corruption_flips_exit_code(self, capsys):
        code, out, err = run_cli(capsys, "--verify", "--genus", "7", "--corrupt-degree")
        assert code == 1
        assert "split_degrees_match_intersection" in err
        assert "FAILED" in err
        # the failing inequality is printed with both exact sides
        assert "42/1 = 40/1" in err

    def test_override_conditional_pass(self, capsys):
        code, out, _ = run_cli(capsys, "--verify", "--genus", "10", "--betti", "4,1")
        assert code == 0
        assert "CONDITIONAL" in out

    def test_bad_override_sum(self, capsys):
        code, _, err = run_cli(capsys, "--verify", "--genus", "8", "--twists", "1,1,1")
        assert code == 2
        assert "sum to g-3" in err


class TestSweepMode:
    def test_small_sweep_row_count(self, capsys):
        code, out, _ = run_cli(capsys, "--verify", "--sweep", "6..20")
        assert code == 0
        rows = [line for line in out.splitlines() if line.startswith("g=")]
        assert len(rows) == 15
        assert all(line.endswith("PASS") for line in rows)

    def test_sweep_without_verify_flag(self, capsys):
        code, out, _ = run_cli(capsys, "--sweep", "7..7")
        assert code == 0
        assert out.splitlines()[0].startswith("g=7 odd")

    def test_sweep_csv(self, capsys):
        code, out, _ = run_cli(capsys, "--sweep", "6..9", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == list(SWEEP_COLUMNS)
        assert len(rows) == 1 + 4
        g7 = rows[2]
        assert g7[0] == "7" and g7[2] == "20/1" and g7[3] == "56/3" and g7[4] == "84/5"

    def test_corrupted_sweep_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "--sweep", "6..8", "--corrupt-degree")
        assert code == 1
        assert "FAILED" in err

    @pytest.mark.parametrize("bad", ["10..6", "5..9", "6-8", "x..y"])
    def test_bad_ranges(self, capsys, bad):
        code, _, err = run_cli(capsys, "--sweep", bad)
        assert code == 2

    def test_sweep_conflicts_with_betti(self, capsys):
        code, _, err = run_cli(capsys, "--sweep", "6..8", "--betti", "1,1")
        assert code == 2
        assert "--sweep conflicts with --betti" in err


class TestOracleMode:
    def test_single_case(self, capsys):
        code, out, _ = run_cli(capsys, "--oracle", "1")
        assert code == 0
        assert "1/1 agree" in out

    def test_seeded_run(self, capsys):
        code, out, _ = run_cli(capsys, "--oracle", "300", "--seed", "7")
        assert code == 0
        assert "300/300" in out

    def test_conflicts(self, capsys):
        code, _, err = run_cli(capsys, "--oracle", "5", "--genus", "7")
        assert code == 2
        code, _, err = run_cli(capsys, "--oracle", "5", "--verify")
        assert code == 2

    def test_seed_requires_oracle(self, capsys):
        code, _, err = run_cli(capsys, "--genus", "7", "--seed", "1")
        assert code == 2
        assert "--seed only applies" in err


class TestReportMode:
    def test_full_report_contents(self, capsys):
        code, out, _ = run_cli(capsys, "--genus", "7")
        assert code == 0
        assert "degeneration" in out
        assert "transferred bound: 84/5" in out

    def test_no_mode_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "--format", "json")
        assert code == 2
        assert "usage" in err


class TestDocuments:
    def test_json_roundtrip(self):
        doc = document_for_sweep(6, 12)
        assert ReportDocument.from_json(doc.to_json()) == doc
        doc = document_for_genus(7, mode="report")
        assert ReportDocument.from_json(doc.to_json()) == doc
        doc = document_for_oracle(5, 42)
        assert ReportDocument.from_json(doc.to_json()) == doc

    def test_exit_code_iff_failed_checks(self):
        good = document_for_sweep(6, 10)
        assert good.ok and not good.failed_check_lines()
        bad = document_for_sweep(6, 10, corrupt_degree=True)
        assert not bad.ok and bad.failed_check_lines()

    def test_formats_carry_identical_rationals(self):
        doc = document_for_sweep(6, 15)
        text = render_text(doc)
        csv_text = render_csv(doc)
        payload = json.loads(doc.to_json())
        for entry in payload["entries"]:
            v = entry["verdict"]
            for value in (v["top"]["slope"], v["quotient"]["slope"], v["bound"]):
                assert value in text
                assert value in csv_text

    def test_render_dispatch(self):
        doc = document_for_genus(8, mode="verify")
        assert render(doc, "json").startswith("{")
        assert render(doc, "csv").splitlines()[0].startswith("g,parity")
        assert "genus 8" in render(doc, "text")


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
