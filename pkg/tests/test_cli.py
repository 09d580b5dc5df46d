import json
import subprocess
import sys

import pytest

from sculptgraph import schemefile
from sculptgraph.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from sculptgraph.compiler import compile_spec
from sculptgraph.fock import PLUS
from sculptgraph.graphs import Edge


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def bell_file(tmp_path):
    path = tmp_path / "bell.json"
    schemefile.write(compile_spec([0, 0]).digraph, path)
    return path


def test_compile_dot(capsys):
    code, out, _ = run(["compile", "--leaves", "0,0", "--format", "dot"], capsys)
    assert code == EXIT_OK
    assert out.startswith("digraph")
    assert sum("shape=" in line for line in out.splitlines()) == 5


def test_compile_json_to_file(tmp_path, capsys):
    target = tmp_path / "nine.json"
    code, out, _ = run(["compile", "--leaves", "2,0,4", "--out", str(target)], capsys)
    assert code == EXIT_OK and out == ""
    assert len(json.loads(target.read_text())["modes"]) == 13


@pytest.mark.parametrize("leaves", ["x", "1,,2", "-1"])
def test_compile_rejects_bad_leaves(leaves, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compile", "--leaves", leaves])
    assert exc.value.code == EXIT_USAGE
    assert "leaf" in capsys.readouterr().err


def test_verify_pass(capsys):
    code, out, _ = run(["verify", "--leaves", "1,1"], capsys)
    assert code == EXIT_OK
    assert "PASS lambda=" in out
    assert "4 qubits" in out


def test_simulate(bell_file, capsys):
    code, out, _ = run(["simulate", str(bell_file)], capsys)
    assert code == EXIT_OK
    assert "no-bunching: yes" in out
    assert "(1)|00> + (1)|01> + (1)|10> + (-1)|11>" in out


def test_simulate_reports_bunching(tmp_path, capsys):
    g = compile_spec([0, 0]).digraph
    # swap the 1-colored loop on qubit 1 for a +-colored one
    edges = [Edge("1", "1", e.amplitude, PLUS) if (e.source, e.target) == ("1", "1") else e for e in g.edges]
    path = tmp_path / "broken.json"
    schemefile.write(g.with_edges(edges), path)
    code, out, _ = run(["simulate", str(path)], capsys)
    assert code == EXIT_FAIL
    assert "no-bunching: no" in out


def test_pm_count_and_list(bell_file, capsys):
    code, out, _ = run(["pm", str(bell_file), "--count"], capsys)
    assert code == EXIT_OK and out.strip() == "4"
    code, out, _ = run(["pm", str(bell_file), "--list"], capsys)
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert all(len(line.split()) == 5 for line in lines)


def test_check_commands(bell_file, capsys):
    code, out, _ = run(["check", str(bell_file), "--which", "epm", "--semantic"], capsys)
    assert code == EXIT_OK
    assert "1: FORM-A" in out and "C: FORM-B" in out and "simulated no-bunching: yes" in out
    code, out, _ = run(["check", str(bell_file), "--which", "genuine"], capsys)
    assert code == EXIT_OK
    assert "strongly connected: yes" in out
    assert "(exempt)" in out


def test_check_fails_on_path_digraph(tmp_path, capsys):
    run(["path-digraph", "2", "--format", "json", "--out", str(tmp_path / "p.json")], capsys)
    code, out, _ = run(["check", str(tmp_path / "p.json"), "--which", "genuine"], capsys)
    assert code == EXIT_FAIL
    assert out.strip().endswith("FAIL")


def test_path_digraph(capsys):
    code, out, _ = run(["path-digraph", "3"], capsys)
    assert code == EXIT_OK
    assert out.count("->") == 19
    assert 'label="-1"' in out
    code, _, err = run(["path-digraph", "0"], capsys)
    assert code == EXIT_USAGE and "l" in err


def test_ghz(capsys):
    code, out, _ = run(["ghz", "3"], capsys)
    assert code == EXIT_OK
    assert "directed PMs: 2" in out and out.strip().endswith("PASS")
    code, _, _ = run(["ghz", "1"], capsys)
    assert code == EXIT_USAGE


def test_invalid_scheme_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    for argv in (["simulate", str(bad)], ["pm", str(bad)], ["check", str(bad)]):
        code, _, err = run(argv, capsys)
        assert code == EXIT_USAGE
        assert err.startswith("error:")
    code, _, err = run(["simulate", str(tmp_path / "missing.json")], capsys)
    assert code == EXIT_USAGE


def test_no_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == EXIT_USAGE


def test_output_is_deterministic(capsys):
    _, first, _ = run(["compile", "--leaves", "2,1,3"], capsys)
    _, second, _ = run(["compile", "--leaves", "2,1,3"], capsys)
    assert first == second


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "sculptgraph", "verify", "--leaves", "0,0"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    # the oracle is normalized (amplitudes 1/2), the sculpted state is not
    assert "PASS lambda=2" in out.stdout
