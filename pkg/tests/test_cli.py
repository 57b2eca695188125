import json
import subprocess
import sys
from pathlib import Path

import pytest

from monoidlab import ContractViolation
from monoidlab import cli

FIX = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "scripts"))
from regen_golden import CASES, run  # noqa: E402


@pytest.mark.parametrize("stem,argv", CASES, ids=[c[0] for c in CASES])
@pytest.mark.parametrize("fmt", ["text", "json"])
def test_output_matches_golden_file(stem, argv, fmt):
    code, out = run(argv + ["--format", fmt])
    assert code == 0
    assert out == (FIX / "golden" / f"{stem}.{'json' if fmt == 'json' else 'txt'}").read_text()


@pytest.mark.parametrize("stem,argv", CASES, ids=[c[0] for c in CASES])
def test_json_round_trips(stem, argv):
    _, out = run(argv + ["--format", "json"])
    data = json.loads(out)
    assert data["schema"] == 1
    assert json.dumps(data, indent=2, ensure_ascii=False) + "\n" == out


def test_free_graph_dot(capsys):
    assert cli.main(["free-graph", str(FIX / "ex_first.txt"), "--dot", "-"]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("graph free_graph {")
    assert '"ab" -- "abcac";' in dot
    assert dot.count("subgraph cluster_") == 3


def test_dot_files_are_written(tmp_path):
    out = tmp_path / "ov.dot"
    code, _ = run(["coincidence", "infinit.txt", "--dot", str(out)])
    assert code == 0
    text = out.read_text()
    assert text.startswith("digraph overflow_graph") and "balanced" in text
    out2 = tmp_path / "m.dot"
    run(["intersect", "triangle.txt", "--dot", str(out2)])
    assert out2.read_text().count("digraph") == 2


def test_json_input_and_two_files(tmp_path, capsys):
    assert cli.main(["intersect", "--classify", str(FIX / "abc_abd.json"), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["classification"]["generators"] == ["a", "b"]
    x, u = tmp_path / "x.txt", tmp_path / "u.txt"
    x.write_text("abcab\ncb\n")
    u.write_text("abc\nbcb\n")
    assert cli.main(["intersect", str(x), str(u)]) == 0
    assert "{abcabcbcb}" in capsys.readouterr().out


def test_duplicates_warn(tmp_path, capsys):
    p = tmp_path / "d.txt"
    p.write_text("ab\nab\nb\n")
    assert cli.main(["free-basis", str(p)]) == 0
    assert "duplicate" in capsys.readouterr().err


@pytest.mark.parametrize("content,argv", [
    ("a b\n", ["free-basis"]),
    ("a\n", ["intersect"]),
    ("{not json", ["free-basis", "--input-format", "json"]),
    ("a\nb\nc\nd\n", ["is-k-maximal", "--k", "3"]),
    ("a\nb\n\nab\n", ["coincidence"]),
    ("ab\ncb\ncd\n\nabc\ndab\ndc\n", ["intersect", "--classify"]),
])
def test_input_errors_exit_2(tmp_path, content, argv, capsys):
    p = tmp_path / "in.txt"
    p.write_text(content)
    assert cli.main(argv + [str(p)]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_missing_file_exits_2(capsys):
    assert cli.main(["free-basis", "/nonexistent/file.txt"]) == 2


def test_contract_violation_exits_1(monkeypatch, capsys):
    def boom(*a, **k):
        raise ContractViolation("planted")

    monkeypatch.setattr(cli, "free_hull", boom)
    assert cli.main(["free-basis", str(FIX / "ex_first.txt")]) == 1
    assert "planted" in capsys.readouterr().err


def test_console_script_runs():
    out = subprocess.run([sys.executable, "-m", "monoidlab.cli", "is-k-maximal", "--k", "3",
                          str(FIX / "ch3_maximal.txt")], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == "{a, cbd, dbd}* is 3-maximal\n"


def test_outputs_are_stable_across_runs():
    assert run(["coincidence", "infinit.txt"]) == run(["coincidence", "infinit.txt"])
