"""CLI behavior: formats, exit codes, determinism."""

import json

import pytest

from schlicht.cli import main, parse_index_range
from schlicht.errors import ParameterDomainError
from schlicht.output import (
    fixed_json_dumps,
    format_complex_pair,
    format_float,
    parse_complex_pair,
)

STARLIKE_ARGS = ["--gamma", "1,0", "--lambda", "0", "--A", "1", "--B", "-1"]


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBoundCommand:
    def test_csv_koebe_anchor(self, capsys):
        code, out, err = run_cli(
            ["bound", "--class", "S", *STARLIKE_ARGS, "--n", "2:10", "--format", "csv"],
            capsys,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,case,crossover_k,bound,sharp"
        assert len(lines) == 10
        for row in lines[1:]:
            n, case, _, bound, sharp = row.split(",")
            assert case == "II" and sharp == "true"
            assert float(bound) == pytest.approx(float(n), abs=1e-12)

    def test_json_document(self, capsys):
        code, out, _ = run_cli(
            ["bound", *STARLIKE_ARGS, "--n", "5", "--format", "json"], capsys
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["params"]["A"] == 1.0
        assert doc["results"][0]["n"] == 5
        assert doc["results"][0]["bound"] == pytest.approx(5.0)

    def test_domain_error_exit_code(self, capsys):
        code, out, err = run_cli(
            ["bound", "--gamma", "1,0", "--A", "-0.5", "--B", "0.5", "--n", "3"],
            capsys,
        )
        assert code == 1
        assert out == ""
        assert "parameter error" in err

    def test_subclass_via_name(self, capsys):
        code, out, _ = run_cli(
            ["bound", "--class", "M", "--beta", "2", "--n", "3", "--format", "json"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["results"][0]["bound"] == pytest.approx(1.0)

    def test_table_format(self, capsys):
        code, out, _ = run_cli(
            ["bound", *STARLIKE_ARGS, "--n", "2:3", "--format", "table"], capsys
        )
        assert code == 0
        assert "bound" in out.splitlines()[0]
        assert len(out.strip().splitlines()) == 3


class TestClassifyCommand:
    def test_case_iii_classification(self, capsys):
        code, out, _ = run_cli(
            ["classify", "--gamma", "0,2", "--lambda", "0", "--A", "1", "--B", "0",
             "--n", "6"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        row = doc["classification"][0]
        assert row["case"] == "III" and row["crossover_k"] == 3


class TestExtremalCommand:
    def test_json_includes_certification(self, capsys):
        code, out, _ = run_cli(
            ["extremal", *STARLIKE_ARGS, "--kind", "case-ii", "--n", "2:6",
             "--order", "16"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["series"]["order"] == 16
        assert len(doc["certification"]) == 5
        assert all(entry["attained"] for entry in doc["certification"])

    def test_gamma_only_kind(self, capsys):
        # gamma = -1/2 keeps the class in the single-index regime, where
        # the starlike-n member attains 2|gamma|/(n-1) = 1/3
        code, out, _ = run_cli(
            ["extremal", "--gamma=-0.5,0", "--kind", "starlike-n", "--n", "4",
             "--order", "8"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        re4, im4 = doc["series"]["coeffs"][4]
        assert abs(complex(re4, im4)) == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert doc["certification"][0]["attained"]

    def test_gamma_only_kind_wrong_regime_reports_gap(self, capsys):
        # with gamma = 1/2 the class classifies II at n=4; the single-index
        # member undershoots the product bound and certification says so
        code, out, _ = run_cli(
            ["extremal", "--gamma", "0.5,0", "--kind", "starlike-n", "--n", "4",
             "--order", "8"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert not doc["certification"][0]["attained"]
        assert doc["certification"][0]["gap"] > 0.0

    def test_csv_coefficients(self, capsys):
        code, out, _ = run_cli(
            ["extremal", *STARLIKE_ARGS, "--kind", "case-ii", "--n", "4",
             "--order", "6", "--format", "csv"],
            capsys,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,re,im"
        assert len(lines) == 8
        assert float(lines[4].split(",")[1]) == pytest.approx(3.0, abs=1e-10)


class TestVerifyCommand:
    def test_deterministic_bytes(self, capsys):
        args = ["verify", *STARLIKE_ARGS, "--samples", "100", "--seed", "7",
                "--n-max", "6"]
        code_a, out_a, _ = run_cli(args, capsys)
        code_b, out_b, _ = run_cli(args, capsys)
        assert code_a == code_b == 0
        assert out_a == out_b
        doc = json.loads(out_a)
        assert doc["total_violations"] == 0
        assert doc["seed"] == 7

    def test_seed_required(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", *STARLIKE_ARGS, "--samples", "10"])


class TestJackCommand:
    def test_threshold(self, capsys):
        code, out, _ = run_cli(["jack", "--check", "threshold", "--alpha", "0.5"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["abs_error"] < 1e-8

    def test_growth_extremal(self, capsys):
        code, out, _ = run_cli(
            ["jack", "--check", "growth-extremal", "--beta", "0.25", "--order", "8"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["not_univalent_expected"] is True

    def test_spiral_batch(self, capsys):
        code, out, _ = run_cli(
            ["jack", "--check", "spiral", "--alpha", "0.4", "--samples", "5",
             "--seed", "2", "--order", "256"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] == 5
        assert doc["min_margin"] > 0.0

    def test_growth_from_file(self, tmp_path, capsys):
        from schlicht import ClassParams, identity, member_from_schwarz

        f = member_from_schwarz(identity(1), ClassParams(1, 0, 1, -1), 256)
        path = tmp_path / "series.json"
        path.write_text(fixed_json_dumps(f.to_json_dict()))
        code, out, _ = run_cli(
            ["jack", "--check", "growth", "--alpha", "0", "--input", str(path)],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["growth"]["ok"] is True
        assert doc["second_coefficient"]["value"] == pytest.approx(4.0)

    def test_missing_required_option(self, capsys):
        code, _, err = run_cli(["jack", "--check", "threshold"], capsys)
        assert code == 1
        assert "alpha" in err

    def test_missing_input_file_exits_two(self, capsys):
        code, _, err = run_cli(
            ["jack", "--check", "gb", "--b", "0.5", "--input", "/no/such/file.json"],
            capsys,
        )
        assert code == 2
        assert err != ""


class TestReportCommand:
    def test_dossier_shape_and_determinism(self, capsys):
        args = ["report", *STARLIKE_ARGS, "--n", "2:8", "--samples", "100",
                "--seed", "11", "--order", "32"]
        code_a, out_a, _ = run_cli(args, capsys)
        code_b, out_b, _ = run_cli(args, capsys)
        assert code_a == code_b == 0
        assert out_a == out_b
        doc = json.loads(out_a)
        assert [row["bound"] for row in doc["bounds"]] == pytest.approx(
            list(range(2, 9))
        )
        assert all(entry["attained"] for entry in doc["sharpness"])
        assert doc["membership"][0]["margin"] == pytest.approx(0.01, abs=1e-8)
        assert doc["fuzz"]["total_violations"] == 0

    def test_case_iii_dossier_reports_unknown(self, capsys):
        code, out, _ = run_cli(
            ["report", "--gamma", "0,1", "--lambda", "0", "--A", "1", "--B", "0",
             "--n", "2:6", "--samples", "50", "--seed", "5", "--order", "16"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        tags = {row["case"]: row["sharp"] for row in doc["bounds"]}
        assert tags["III"] == "unknown"


class TestOutputHelpers:
    def test_fixed_float_format(self):
        assert format_float(1.0) == "1.00000000000000e+00"
        assert format_float(-0.0) == "0.00000000000000e+00"

    def test_complex_pair_round_trip(self):
        value = complex(0.1, -2.5)
        text = format_complex_pair(value)
        assert parse_complex_pair(text) == value
        assert format_complex_pair(parse_complex_pair(text)) == text

    def test_parse_complex_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_complex_pair("1+2j")

    def test_index_range(self):
        assert parse_index_range("2:10") == (2, 10)
        assert parse_index_range("7") == (7, 7)
        with pytest.raises(ParameterDomainError):
            parse_index_range("9:2")

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "out.csv"
        code, out, _ = run_cli(
            ["bound", *STARLIKE_ARGS, "--n", "2:4", "--format", "csv",
             "--output", str(target)],
            capsys,
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("n,case")
