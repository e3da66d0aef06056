"""Exit codes, output formats and determinism of the command-line tool."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args, expect: int = 0):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "eflcolor", *args],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr, proc.stdout)
    return proc


@pytest.fixture()
def k9(tmp_path):
    path = tmp_path / "k9.txt"
    run_cli("generate", "paper_k9", "--out", str(path))
    return path


class TestGenerate:
    def test_paper_k9_file(self, k9):
        text = k9.read_text()
        assert text.startswith("n 9\nelement 0 3 6\n")
        assert text.count("element") == 22

    def test_trivial_edges_count(self, tmp_path):
        out = tmp_path / "e7.txt"
        run_cli("generate", "trivial_edges", "--n", "7", "--out", str(out))
        assert out.read_text().count("element") == 21

    def test_random_deterministic(self):
        a = run_cli("generate", "random", "--n", "8", "--seed", "1")
        b = run_cli("generate", "random", "--n", "8", "--seed", "1")
        assert a.stdout == b.stdout

    def test_unknown_fixture_exit_2(self):
        run_cli("generate", "nope", expect=2)


class TestValidate:
    def test_valid_exit_0(self, k9):
        proc = run_cli("validate", str(k9))
        assert "valid n 9 elements 22" in proc.stdout

    def test_duplicate_edge_exit_1(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("n 3\nelement 0 1 2\nelement 0 1\n")
        proc = run_cli("validate", str(bad), expect=1)
        assert "EdgeMultiplyCovered 0 1" in proc.stdout

    def test_malformed_header_exit_2(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("n x\n")
        run_cli("validate", str(bad), expect=2)

    def test_missing_file_exit_2(self):
        run_cli("validate", "/nonexistent/file.txt", expect=2)

    def test_hypergraph_mode(self, tmp_path, k9):
        h = tmp_path / "h.txt"
        run_cli("convert", str(k9), "--to", "hypergraph", "--out", str(h))
        proc = run_cli("validate", str(h), "--hypergraph")
        assert "valid hypergraph edges 9" in proc.stdout


class TestColor:
    def test_paper_k9_colors(self, k9, tmp_path):
        out = tmp_path / "col.txt"
        run_cli("color", str(k9), "--labeling", "given", "--out", str(out))
        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "colors-used 9"
        assert lines[1:8] == [
            "color 0 6",
            "color 1 8",
            "color 2 7",
            "color 3 4",
            "color 4 3",
            "color 5 2",
            "color 6 1",
        ]

    def test_output_verifies(self, k9, tmp_path):
        out = tmp_path / "col.txt"
        run_cli("color", str(k9), "--out", str(out))
        proc = run_cli("verify", str(k9), str(out))
        assert "proper" in proc.stdout

    def test_explain_appends_cases(self, k9):
        proc = run_cli("color", str(k9), "--explain")
        assert "case (i.b)" in proc.stdout
        assert "case (ii)" in proc.stdout or "case (i.a)" in proc.stdout

    def test_invalid_instance_exit_1(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("n 3\nelement 0 1 2\nelement 0 1\n")
        proc = run_cli("color", str(bad), expect=1)
        assert "EdgeMultiplyCovered" in proc.stderr

    def test_non_arithmetic_exit_3(self, tmp_path):
        inst = tmp_path / "sts9.txt"
        run_cli("generate", "sts9_k9", "--out", str(inst))
        run_cli("color", str(inst), "--labeling", "given", expect=3)
        run_cli("color", str(inst), "--labeling", "search", expect=3)

    def test_search_mode_finds_scrambled(self, tmp_path):
        # a consecutive-block decomposition relabeled away from Z_n order
        inst = tmp_path / "scrambled.txt"
        inst.write_text(
            "n 5\nelement 4 2 0\nelement 4 3\nelement 4 1\nelement 2 3\n"
            "element 2 1\nelement 3 0\nelement 1 0\nauto-edges\n"
        )
        proc = run_cli("color", str(inst), "--labeling", "search")
        assert "# labeling" in proc.stdout

    def test_json_report(self, k9):
        proc = run_cli("color", str(k9), "--json")
        report = json.loads(proc.stdout)
        assert report["colors_used"] == 9
        assert report["centrals"] == [[0, 3], [1, 4], [2, 8], [3, 2], [4, 6], [5, 1], [6, 5]]


class TestVerify:
    def test_conflicts_listed(self, tmp_path):
        inst = tmp_path / "e3.txt"
        run_cli("generate", "trivial_edges", "--n", "3", "--out", str(inst))
        col = tmp_path / "zeros.txt"
        col.write_text("colors-used 1\ncolor 0 0\ncolor 1 0\ncolor 2 0\n")
        proc = run_cli("verify", str(inst), str(col), expect=1)
        assert proc.stdout.count("conflict ") == 3
        assert "conflict 0 1 at vertex 0" in proc.stdout

    def test_index_mismatch_exit_2(self, tmp_path):
        inst = tmp_path / "e3.txt"
        run_cli("generate", "trivial_edges", "--n", "3", "--out", str(inst))
        col = tmp_path / "short.txt"
        col.write_text("colors-used 1\ncolor 0 0\ncolor 1 0\n")
        run_cli("verify", str(inst), str(col), expect=2)


class TestChi:
    def test_trivial_edges_4(self, tmp_path):
        inst = tmp_path / "e4.txt"
        run_cli("generate", "trivial_edges", "--n", "4", "--out", str(inst))
        proc = run_cli("chi", str(inst))
        assert "# chi 3" in proc.stdout

    def test_single_element(self, tmp_path):
        inst = tmp_path / "one.txt"
        inst.write_text("n 4\nelement 0 1 2 3\n")
        proc = run_cli("chi", str(inst))
        assert "# chi 1" in proc.stdout

    def test_paper_k9_within_n(self, k9):
        proc = run_cli("chi", str(k9), "--json")
        report = json.loads(proc.stdout)
        assert report["chi"] <= 9
        assert report["within_n"] is True
        assert report["certificate_colors"] == 9


class TestConvert:
    def test_round_trip_modulo_comments(self, k9, tmp_path):
        h = tmp_path / "h.txt"
        back = tmp_path / "back.txt"
        run_cli("convert", str(k9), "--to", "hypergraph", "--out", str(h))
        run_cli("convert", str(h), "--to", "decomposition", "--out", str(back))
        strip = lambda p: [
            l for l in Path(p).read_text().splitlines() if not l.startswith("#")
        ]
        assert strip(back) == strip(k9)

    def test_single_element_exit_3(self, tmp_path):
        inst = tmp_path / "one.txt"
        inst.write_text("n 4\nelement 0 1 2 3\n")
        run_cli("convert", str(inst), "--to", "hypergraph", expect=3)


class TestSweep:
    def test_exhaustive_n3(self):
        proc = run_cli("sweep", "--n-max", "3", "--mode", "exhaustive")
        assert "summary instances 3 chi-le-n 3/3" in proc.stdout

    def test_exhaustive_n4_bound_holds(self):
        proc = run_cli("sweep", "--n-max", "4", "--mode", "exhaustive", "--json")
        report = json.loads(proc.stdout)
        assert report["bound_holds"] is True
        assert len(report["instances"]) == 1 + 2 + 6

    def test_exhaustive_limit(self):
        run_cli("sweep", "--n-max", "6", "--mode", "exhaustive", expect=2)

    def test_random_deterministic(self):
        args = ("sweep", "--n-max", "5", "--mode", "random", "--count", "4", "--seed", "9")
        assert run_cli(*args).stdout == run_cli(*args).stdout


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ("generate", "paper_k9"),
            ("generate", "random", "--n", "7", "--seed", "5"),
            ("sweep", "--n-max", "4", "--mode", "exhaustive"),
        ],
    )
    def test_byte_identical_runs(self, args):
        assert run_cli(*args).stdout == run_cli(*args).stdout
