from __future__ import annotations

import io
import json

import pytest

from conftest import FIGURE_STRING
from lynlz import LemmaCheck, LemmaReport
from lynlz.cli import main, render_bytes

FIG_TEXT = FIGURE_STRING.decode()


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestLyndonCommand:
    def test_json_report(self, capsys):
        code, out = run(capsys, "lyndon", "--text", FIG_TEXT, "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["input_len"] == 25 and report["m"] == 5
        assert report["runs"][0] == {
            "index": 1,
            "span": {"start": 1, "end": 6},
            "factor": "abb",
            "exponent": 2,
        }

    def test_empty_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"")))
        code, out = run(capsys, "lyndon", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["m"] == 0 and report["runs"] == []

    def test_stdin_strips_one_newline(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"ba\n")))
        code, out = run(capsys, "lyndon", "--format", "json")
        assert json.loads(out)["input_len"] == 2

    def test_no_strip_keeps_newline(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"ba\n")))
        code, out = run(capsys, "lyndon", "--format", "json", "--no-strip-newline")
        assert json.loads(out)["input_len"] == 3

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "input.bin"
        path.write_bytes(bytes([0, 255]) + b"ab")
        code, out = run(capsys, "lyndon", "--file", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["input_len"] == 4

    def test_tsv(self, capsys):
        code, out = run(capsys, "lyndon", "--text", "banana", "--format", "tsv")
        assert out.splitlines() == ["1\t1\t1\tb\t1", "2\t2\t5\tan\t2", "3\t6\t6\ta\t1"]

    def test_oracle_check(self, capsys):
        code, _ = run(capsys, "lyndon", "--text", "banana", "--oracle-check", "--format", "json")
        assert code == 0


class TestLzCommand:
    def test_json_boundaries(self, capsys):
        code, out = run(capsys, "lz", "--text", "babaababaaba", "--format", "json")
        report = json.loads(out)
        assert report["z"] == 5
        assert report["boundaries"] == [1, 2, 3, 5, 8]
        assert [p["text"] for p in report["phrases"]] == ["b", "a", "ba", "aba", "baaba"]

    def test_hex_escaping(self, capsys, tmp_path):
        path = tmp_path / "raw.bin"
        path.write_bytes(b"\x00\xffab")
        code, out = run(capsys, "lz", "--file", str(path), "--format", "json")
        texts = [p["text"] for p in json.loads(out)["phrases"]]
        assert texts[0] == "\\x00" and texts[1] == "\\xff"

    def test_oracle_check(self, capsys):
        code, _ = run(capsys, "lz", "--text", FIG_TEXT, "--oracle-check")
        assert code == 0


class TestDomainsCommand:
    def test_json_counts(self, capsys):
        code, out = run(capsys, "domains", "--text", FIG_TEXT, "--format", "json")
        report = json.loads(out)
        assert len(report["domains"]) == 15
        assert len(report["tandems"]) == 4
        assert len(report["groups"]) == 3
        nonempty = [d for d in report["domains"] if not d["empty"]]
        assert {(d["i"], d["d"]) for d in nonempty} == {
            (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1),
        }
        assert all("empty" in d["span"] or d["span"]["start"] <= d["span"]["end"] for d in report["domains"])


class TestCanonicalCommand:
    def test_budget_json(self, capsys):
        code, out = run(
            capsys, "canonical", "--text", FIG_TEXT, "--run", "5", "--order", "1", "--format", "json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["budget"]["total"] == 3
        assert report["budget"]["lower_bound"] == 3
        kinds = [item["kind"] for item in report["sequence"]]
        assert kinds == ["cluster", "loose", "cluster"]

    def test_invalid_root_is_usage_error(self, capsys):
        code, _ = run(capsys, "canonical", "--text", FIG_TEXT, "--run", "9", "--order", "9")
        assert code == 2

    def test_empty_root_is_usage_error(self, capsys):
        code, _ = run(capsys, "canonical", "--text", FIG_TEXT, "--run", "2", "--order", "1")
        assert code == 2


class TestVerifyCommand:
    def test_family_string_passes(self, capsys):
        code, out = run(capsys, "verify", "--text", "babaababaaba", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["m"] == 5 and report["z"] == 5
        assert report["all_passed"] is True
        assert report["size_bound"]["passes"] is True
        assert set(report["verdicts"]) >= {"size-bound", "domain-window-boundary"}

    def test_human_lines(self, capsys):
        code, out = run(capsys, "verify", "--text", "banana")
        assert code == 0
        assert "PASS size-bound" in out

    def test_failure_exit_code(self, capsys, monkeypatch):
        failing = LemmaReport(
            text=b"x",
            m=1,
            z=1,
            checks=(LemmaCheck(name="size-bound", instances=1, failures=1, counterexample="m=1 z=1"),),
        )
        monkeypatch.setattr("lynlz.cli.verify_lemmas", lambda s: failing)
        code, out = run(capsys, "verify", "--text", "x")
        assert code == 1
        assert "FAIL size-bound" in out


class TestFamilyCommand:
    def test_check_k3(self, capsys):
        code, out = run(capsys, "family", "--k", "3", "--check", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["computed"] == {"m": 8, "z": 7}
        assert report["counts_match"] and report["phrases_match"]
        assert report["phrases"][-1] == "abaabaaaba"

    def test_check_below_formula_domain(self, capsys):
        code, _ = run(capsys, "family", "--k", "1", "--check")
        assert code == 2

    def test_plain_generation(self, capsys):
        code, out = run(capsys, "family", "--k", "0", "--format", "json")
        assert code == 0
        assert json.loads(out)["string"] == "ba"


class TestSearchCommand:
    def test_tsv_stream(self, capsys):
        code, out = run(capsys, "search", "--sigma", "2", "--max-len", "3", "--format", "tsv")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2 + 4 + 8
        assert lines[0] == "2\t1\ta\t1\t1\t1"

    def test_json_deterministic(self, capsys):
        code1, out1 = run(capsys, "search", "--sigma", "2", "--max-len", "6", "--format", "json", "--jobs", "2")
        code2, out2 = run(capsys, "search", "--sigma", "2", "--max-len", "6", "--format", "json", "--jobs", "2")
        assert code1 == code2 == 0
        assert out1 == out2
        assert json.loads(out1)["total"] == 126

    def test_check_lemmas_flag(self, capsys):
        code, out = run(capsys, "search", "--sigma", "2", "--max-len", "5", "--check-lemmas", "--jobs", "1", "--format", "json")
        assert code == 0
        assert json.loads(out)["lemmas_checked"] is True

    def test_cap_exceeded(self, capsys):
        code, _ = run(capsys, "search", "--sigma", "4", "--max-len", "20", "--limit", "1000")
        assert code == 2


class TestPartitionCommand:
    def test_figure_json(self, capsys):
        code, out = run(capsys, "partition", "--text", FIG_TEXT, "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["t"] == 1
        assert report["partition"] == [{"span": {"start": 1, "end": 25}, "size": 4}]
        assert report["bound_satisfied"] is True


class TestUsage:
    def test_missing_command(self, capsys):
        assert main([]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_conflicting_inputs(self, capsys):
        assert main(["lyndon", "--text", "a", "--file", "b"]) == 2


def test_render_bytes():
    assert render_bytes(b"abc") == "abc"
    assert render_bytes(b"\x00\x09\\") == "\\x00\\x09\\x5c"
    assert render_bytes(b"\xff") == "\\xff"
