"""Command-line interface: golden outputs, JSON schema, exit codes.

Most tests drive ``main(argv)`` in-process and capture stdout; one smoke
test runs ``python3 -m recurlab`` as a real subprocess.
"""

import json
import subprocess
import sys

import pytest

from recurlab.cli import main

QUARTIC_IN_M = "(m^4 - 6*m^3 + 23*m^2 - 18*m + 24)/24"
QUARTIC_IN_N = "(n^4 - 2*n^3 + 11*n^2 + 14*n + 24)/24"


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(argv, capsys):
    code, out, err = run_cli(argv + ["--json"], capsys)
    return code, json.loads(out), err


class TestTable:
    def test_human_golden(self, capsys):
        code, out, err = run_cli(["table", "--moser"], capsys)
        assert code == 0
        assert out.splitlines() == [
            "sequence : 1 2 4 8 16 31 57",
            "depth 1  : 1 2 4 8 15 26",
            "depth 2  : 1 2 4 7 11",
            "depth 3  : 1 2 3 4",
            "depth 4  : 1 1 1",
            "constant row: depth 4",
            "next term: 99",
        ]

    def test_json_envelope(self, capsys):
        code, payload, _ = run_json(["table", "--moser"], capsys)
        assert code == 0
        assert payload["schema_version"] == 1
        assert payload["command"] == "table"
        assert payload["inputs"]["source"] == "moser"
        assert payload["inputs"]["terms"][:3] == ["1/1", "2/1", "4/1"]
        assert payload["method_tags"] == ["differences"]
        assert payload["result"]["constant_depth"] == 4
        assert payload["result"]["next"] == "99/1"
        assert payload["result"]["rows"][4] == ["1/1", "1/1", "1/1"]
        assert payload["agreement"] is None

    def test_constant_sequence(self, capsys):
        code, payload, _ = run_json(["table", "--seq", "5,5,5"], capsys)
        assert code == 0
        assert payload["result"]["constant_depth"] == 0
        assert payload["result"]["next"] == "5/1"

    def test_rational_terms(self, capsys):
        code, payload, _ = run_json(["table", "--seq", "1/2,1,3/2,2"], capsys)
        assert code == 0
        assert payload["result"]["constant_depth"] == 1
        assert payload["result"]["next"] == "5/2"

    def test_no_constant_row_is_reported_not_an_error(self, capsys):
        # Pure doubling never has a constant difference row; the table
        # command still succeeds and reports the unknown next term.
        code, payload, _ = run_json(["table", "--seq", "1,2,4,8,16"], capsys)
        assert code == 0
        assert payload["result"]["constant_depth"] is None
        assert payload["result"]["next"] is None

    def test_unknown_next_human(self, capsys):
        code, out, _ = run_cli(["table", "--seq", "1,2,4,8,16"], capsys)
        assert code == 0
        assert "constant row: none certified" in out
        assert "next term: unknown" in out

    def test_file_source(self, tmp_path, capsys):
        path = tmp_path / "seq.txt"
        path.write_text("# region counts\n1\n2\n\n4\n8\n16\n31\n57\n")
        code, payload, _ = run_json(["table", "--file", str(path)], capsys)
        assert code == 0
        assert payload["result"]["next"] == "99/1"

    def test_malformed_sequence_exit_2(self, capsys):
        code, out, err = run_cli(["table", "--seq", "1,,2"], capsys)
        assert code == 2
        assert out == ""
        assert "error" in err

    def test_non_numeric_token_exit_2(self, capsys):
        code, _, err = run_cli(["table", "--seq", "1,two,3"], capsys)
        assert code == 2
        assert "error" in err

    def test_two_sources_exit_2(self, capsys):
        code, _, err = run_cli(["table", "--seq", "1,2", "--moser"], capsys)
        assert code == 2
        assert "exactly one" in err

    def test_no_source_exit_2(self, capsys):
        code, _, err = run_cli(["table"], capsys)
        assert code == 2

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run_cli(["table", "--file", "/nonexistent/seq.txt"], capsys)
        assert code == 2

    def test_moser_needs_two_terms(self, capsys):
        code, _, err = run_cli(["table", "--moser", "1"], capsys)
        assert code == 2


class TestSolve:
    def test_human_golden(self, capsys):
        code, out, _ = run_cli(["solve", "--moser"], capsys)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "recurrence: a[n+4] - 4*a[n+3] + 6*a[n+2] - 4*a[n+1] + a[n] = 1"
        assert lines[1] == f"closed form [charpoly]: a(n) = {QUARTIC_IN_N}"
        assert lines[2] == f"  in m = n + 1: {QUARTIC_IN_M}"
        assert lines[3] == f"closed form [genfunc]: a(n) = {QUARTIC_IN_N}"
        assert lines[4] == f"  in m = n + 1: {QUARTIC_IN_M}"
        assert lines[5] == "methods agree: yes"

    def test_json_envelope(self, capsys):
        code, payload, _ = run_json(["solve", "--moser"], capsys)
        assert code == 0
        assert payload["agreement"] is True
        assert payload["method_tags"] == ["charpoly", "genfunc"]
        rec = payload["result"]["recurrence"]
        assert rec["order"] == 4
        assert rec["coefficients"] == ["1/1", "-4/1", "6/1", "-4/1", "1/1"]
        assert rec["rhs"] == "1"
        assert rec["initial_conditions"] == ["1/1", "2/1", "4/1", "8/1"]
        forms = payload["result"]["closed_forms"]
        assert [f["method"] for f in forms] == ["charpoly", "genfunc"]
        for form in forms:
            assert form["display"] == QUARTIC_IN_N
            assert form["display_in_m"] == QUARTIC_IN_M
            assert form["variable"] == "n"
            (term,) = form["terms"]
            assert term["root"] == "1/1"
            assert term["coefficients"] == ["1/1", "7/12", "11/24", "-1/12", "1/24"]

    def test_six_terms_suffice(self, capsys):
        # Six region counts already certify the depth-4 constant row.
        code, payload, _ = run_json(["solve", "--moser", "6"], capsys)
        assert code == 0
        assert payload["agreement"] is True
        assert payload["result"]["closed_forms"][0]["display_in_m"] == QUARTIC_IN_M

    def test_single_method_no_agreement_verdict(self, capsys):
        for method in ("charpoly", "genfunc"):
            code, payload, _ = run_json(["solve", "--moser", "--method", method], capsys)
            assert code == 0
            assert payload["agreement"] is None
            assert payload["method_tags"] == [method]
            assert len(payload["result"]["closed_forms"]) == 1

    def test_constant_sequence(self, capsys):
        code, payload, _ = run_json(["solve", "--seq", "5,5,5,5"], capsys)
        assert code == 0
        rec = payload["result"]["recurrence"]
        assert rec["order"] == 1
        assert rec["coefficients"] == ["1/1", "-1/1"]
        for form in payload["result"]["closed_forms"]:
            assert form["display"] == "5"

    def test_no_constant_row_exit_3(self, capsys):
        # No difference row of this sequence is constant, so no recurrence
        # of the supported shape exists within the depth budget.
        code, _, err = run_cli(["solve", "--seq", "1,2,4,8,16,32,32,32"], capsys)
        assert code == 3

    def test_fibonacci_exit_3(self, capsys):
        code, out, err = run_cli(
            ["solve", "--seq", "1,1,2,3,5,8,13,21,34,55"], capsys
        )
        assert code == 3
        assert out == ""
        assert "constant" in err

    def test_squares(self, capsys):
        code, payload, _ = run_json(["solve", "--seq", "0,1,4,9,16,25"], capsys)
        assert code == 0
        assert payload["agreement"] is True
        assert payload["result"]["closed_forms"][0]["display"] == "n^2"


class TestRegions:
    def test_all_methods_agree_m6(self, capsys):
        code, payload, _ = run_json(["regions", "--m", "6"], capsys)
        assert code == 0
        assert payload["agreement"] is True
        counts = payload["result"]["counts"]
        assert counts == {
            "binomial": 31,
            "polynomial": 31,
            "sum": 31,
            "euler": 31,
            "geometric": 31,
        }
        detail = payload["result"]["geometric"]
        assert detail["general_position"] is True
        assert detail["degeneracy"] is None
        assert (detail["vertices"], detail["edges"]) == (21, 51)

    def test_m1(self, capsys):
        code, payload, _ = run_json(["regions", "--m", "1"], capsys)
        assert code == 0
        assert payload["agreement"] is True
        assert set(payload["result"]["counts"].values()) == {1}

    def test_m10_expected_256(self, capsys):
        code, payload, _ = run_json(["regions", "--m", "10"], capsys)
        assert code == 0
        assert payload["result"]["counts"]["geometric"] == 256
        assert payload["agreement"] is True

    def test_degenerate_hexagon(self, capsys):
        code, payload, _ = run_json(
            ["regions", "--m", "6", "--method", "geometric", "--degenerate", "hexagon"],
            capsys,
        )
        assert code == 0
        assert payload["result"]["counts"] == {"geometric": 30}
        detail = payload["result"]["geometric"]
        assert detail["general_position"] is False
        assert "concurrent" in detail["degeneracy"]
        assert payload["agreement"] is None

    def test_degenerate_hexagon_human(self, capsys):
        code, out, _ = run_cli(
            ["regions", "--m", "6", "--method", "geometric", "--degenerate", "hexagon"],
            capsys,
        )
        assert code == 0
        assert " geometric: 30" in out
        assert "general position: no" in out
        assert "degeneracy:" in out

    def test_degenerate_requires_geometric_method(self, capsys):
        code, _, err = run_cli(
            ["regions", "--m", "6", "--degenerate", "hexagon"], capsys
        )
        assert code == 2
        assert "requires --method geometric" in err

    def test_degenerate_requires_m6(self, capsys):
        code, _, err = run_cli(
            ["regions", "--m", "7", "--method", "geometric", "--degenerate", "hexagon"],
            capsys,
        )
        assert code == 2
        assert "--m 6" in err

    def test_m0_exit_2(self, capsys):
        code, _, err = run_cli(["regions", "--m", "0"], capsys)
        assert code == 2

    def test_trials_validated(self, capsys):
        code, _, err = run_cli(["regions", "--m", "4", "--trials", "0"], capsys)
        assert code == 2

    def test_multiple_trials_reported(self, capsys):
        code, payload, _ = run_json(
            ["regions", "--m", "5", "--method", "geometric", "--trials", "3"], capsys
        )
        assert code == 0
        detail = payload["result"]["geometric"]
        assert detail["trials"] == 3
        assert detail["counts"] == [16, 16, 16]

    def test_cap_blocks_geometric_only_run(self, capsys):
        code, _, err = run_cli(
            ["regions", "--m", "6", "--method", "geometric", "--geom-cap", "5"], capsys
        )
        assert code == 2
        assert "exceeds the geometric cap" in err

    def test_cap_skips_geometric_in_all_mode(self, capsys):
        code, payload, _ = run_json(["regions", "--m", "6", "--geom-cap", "5"], capsys)
        assert code == 0
        counts = payload["result"]["counts"]
        assert "geometric" not in counts
        assert len(counts) == 4
        assert payload["agreement"] is True
        assert "exceeds the geometric cap" in payload["result"]["geometric_note"]

    def test_cap_env_variable(self, capsys, monkeypatch):
        monkeypatch.setenv("RECURLAB_GEOM_CAP", "5")
        code, _, err = run_cli(["regions", "--m", "6", "--method", "geometric"], capsys)
        assert code == 2
        assert "exceeds the geometric cap (5)" in err

    def test_cap_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("RECURLAB_GEOM_CAP", "5")
        code, payload, _ = run_json(
            ["regions", "--m", "6", "--method", "geometric", "--geom-cap", "10"], capsys
        )
        assert code == 0
        assert payload["result"]["counts"]["geometric"] == 31

    def test_cap_env_garbage_exit_2(self, capsys, monkeypatch):
        monkeypatch.setenv("RECURLAB_GEOM_CAP", "many")
        code, _, err = run_cli(["regions", "--m", "4", "--method", "geometric"], capsys)
        assert code == 2
        assert "RECURLAB_GEOM_CAP" in err

    def test_cap_zero_exit_2(self, capsys):
        code, _, err = run_cli(
            ["regions", "--m", "4", "--method", "geometric", "--geom-cap", "0"], capsys
        )
        assert code == 2

    def test_single_symbolic_method(self, capsys):
        code, payload, _ = run_json(["regions", "--m", "20", "--method", "binomial"], capsys)
        assert code == 0
        assert payload["result"]["counts"] == {"binomial": 5036}
        assert payload["agreement"] is None

    def test_human_and_json_same_numbers(self, capsys):
        code_h, out, _ = run_cli(["regions", "--m", "7"], capsys)
        code_j, payload, _ = run_json(["regions", "--m", "7"], capsys)
        assert code_h == code_j == 0
        for value in payload["result"]["counts"].values():
            assert value == 57
        assert out.count("57") == len(payload["result"]["counts"])

    def test_seeded_runs_deterministic(self, capsys):
        argv = ["regions", "--m", "8", "--method", "geometric", "--seed", "11"]
        code1, payload1, _ = run_json(argv, capsys)
        code2, payload2, _ = run_json(argv, capsys)
        assert code1 == code2 == 0
        assert payload1 == payload2
        assert payload1["result"]["counts"]["geometric"] == 99

    def test_workers_do_not_change_output(self, capsys):
        base = ["regions", "--m", "9", "--method", "geometric"]
        _, payload1, _ = run_json(base, capsys)
        _, payload2, _ = run_json(base + ["--workers", "3"], capsys)
        assert payload1 == payload2
        assert payload1["result"]["counts"]["geometric"] == 163

    def test_dump_arrangement(self, tmp_path, capsys):
        path = tmp_path / "arrangement.json"
        code, payload, _ = run_json(
            [
                "regions",
                "--m",
                "4",
                "--method",
                "geometric",
                "--dump-arrangement",
                str(path),
            ],
            capsys,
        )
        assert code == 0
        dumped = json.loads(path.read_text())
        assert dumped["schema_version"] == 1
        assert dumped["m"] == 4
        assert len(dumped["points"]) == 4
        assert len(dumped["chords"]) == 6
        assert len(dumped["interior_points"]) == 1
        assert dumped["general_position"] is True


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        code, payload, _ = run_json(
            ["verify", "--max-m", "8", "--trials", "1"], capsys
        )
        assert code == 0
        assert payload["agreement"] is True
        result = payload["result"]
        assert result["all_passed"] is True
        names = [c["name"] for c in result["checks"]]
        assert names == [
            "symbolic-methods-agree",
            "solver-routes-agree",
            "closed-form-matches-quartic",
            "closed-form-evaluation",
            "forward-iteration",
            "geometric-construction",
        ]
        assert all(c["passed"] for c in result["checks"])

    def test_human_lines(self, capsys):
        code, out, _ = run_cli(["verify", "--max-m", "6", "--trials", "1"], capsys)
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7
        assert all(line.startswith("ok  ") for line in lines[:-1])
        assert lines[-1] == "verdict: all checks passed"

    def test_caps_geometric_scope(self, capsys):
        code, payload, _ = run_json(
            ["verify", "--max-m", "40", "--trials", "1", "--geom-cap", "4"], capsys
        )
        assert code == 0
        geom = [c for c in payload["result"]["checks"] if c["name"] == "geometric-construction"]
        assert geom[0]["scope"] == "m=1..4, trials=1"

    def test_invalid_arguments(self, capsys):
        assert run_cli(["verify", "--max-m", "0"], capsys)[0] == 2
        assert run_cli(["verify", "--trials", "0"], capsys)[0] == 2


class TestModuleEntry:
    def test_python_dash_m(self):
        proc = subprocess.run(
            [sys.executable, "-m", "recurlab", "regions", "--m", "5", "--method", "binomial"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "binomial: 16" in proc.stdout

    def test_console_script_parser_rejects_unknown_command(self):
        proc = subprocess.run(
            [sys.executable, "-m", "recurlab", "frobnicate"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2
