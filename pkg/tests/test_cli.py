import json
import subprocess
import sys

import pytest

from pants_lab.cli import EXIT_AUDIT, EXIT_OK, EXIT_USAGE, run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_help(capsys):
    code, out, _ = call(capsys, "--help")
    assert code == EXIT_OK and "constants" in out


def test_no_command(capsys):
    assert call(capsys)[0] == EXIT_USAGE


def test_constants_json(capsys):
    code, out, _ = call(capsys, "constants", "--case", "complexity2")
    env = json.loads(out)
    assert code == EXIT_OK
    assert set(env) == {"tool_version", "config", "results"}
    assert abs(env["results"]["delta_computed"] - 2691437) <= 3
    assert env["config"]["M"] == 100


def test_constants_text(capsys):
    code, out, _ = call(capsys, "constants", "--case", "complexity3", "--format", "text")
    assert code == EXIT_OK and "24" in out


def test_unknown_case(capsys):
    assert call(capsys, "constants", "--case", "complexity7")[0] == EXIT_USAGE


def test_bad_M(capsys):
    assert call(capsys, "constants", "--M", "0")[0] == EXIT_USAGE
    assert call(capsys, "constants", "--M", "abc")[0] == EXIT_USAGE


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\ncase = complexity3\nM = 10\n")
    env = json.loads(call(capsys, "--config", str(cfg), "constants")[1])
    assert env["config"]["case"] == "complexity3" and env["config"]["M"] == 10
    env = json.loads(call(capsys, "--config", str(cfg), "constants", "--M", "100")[1])
    assert env["config"]["M"] == 100


def test_bad_config_file(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("nonsense line\n")
    assert call(capsys, "--config", str(cfg), "constants")[0] == EXIT_USAGE
    assert call(capsys, "--config", str(tmp_path / "missing"), "constants")[0] == EXIT_USAGE


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "r.json"
    code, out, _ = call(capsys, "--out", str(dest), "constants")
    assert code == EXIT_OK and out == ""
    assert json.loads(dest.read_text())["results"]["centered_k"] == 8900


def test_graph_ops(capsys):
    env = json.loads(call(capsys, "graph", "thinness", "--cycle", "6")[1])
    assert env["results"]["thinness"] == 1
    env = json.loads(call(capsys, "graph", "centeredness", "--complete", "5")[1])
    assert env["results"]["centeredness"] == 1
    env = json.loads(call(capsys, "graph", "bowditch-check", "--cycle", "12", "--h", "1")[1])
    assert env["results"]["holds"] is False


def test_graph_from_file(tmp_path, capsys):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}))
    env = json.loads(call(capsys, "graph", "thinness", "--graph", str(f))[1])
    assert env["results"]["vertices"] == 4


def test_graph_needs_input(capsys):
    assert call(capsys, "graph", "thinness")[0] == EXIT_USAGE


def test_lemma_check(capsys):
    code, out, _ = call(capsys, "graph", "lemma-check", "--random", "10", "--max-vertices", "15",
                        "--tree-vertices", "6", "--max-cycle", "8", "--seed", "1")
    res = json.loads(out)["results"]
    assert code == EXIT_OK and res["all_pass"] and res["cases"] == 10 + 14 + 6


def test_intersect(capsys):
    env = json.loads(call(capsys, "surface", "intersect", "--a", "std:1,2", "--b", "std:2,3")[1])
    assert env["results"]["intersection"] == 2


def test_bad_curve(capsys):
    assert call(capsys, "surface", "intersect", "--a", "std:1", "--b", "std:2,3")[0] == EXIT_USAGE
    assert call(capsys, "surface", "intersect", "--a", "1,2", "--b", "std:2,3")[0] == EXIT_USAGE


def test_ball_cache(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("PANTS_LAB_CACHE", str(tmp_path))
    env = json.loads(call(capsys, "surface", "ball", "--word-bound", "2", "--coord-bound", "30")[1])
    path = env["results"]["cache"]
    assert env["results"]["curves"] > 1
    text = open(path).read().replace('"version":1', '"version":9')
    open(path, "w").write(text)
    code, _, err = call(capsys, "hierarchy", "path", "--word-bound", "2", "--coord-bound", "30",
                        "--alpha", "std:1,2;std:4,5", "--beta", "std:1,2;std:3,4")
    assert code == EXIT_USAGE and "version" in err


def test_hierarchy_path(capsys):
    code, out, _ = call(capsys, "hierarchy", "path", "--word-bound", "2",
                        "--alpha", "std:1,2;std:4,5", "--beta", "std:2,3;std:4,5")
    res = json.loads(out)["results"]
    assert code == EXIT_OK and res["valid"]


def test_hierarchy_rejects_bad_pants(capsys):
    code = call(capsys, "hierarchy", "build", "--word-bound", "1",
                "--alpha", "std:1,2;std:2,3", "--beta", "std:1,2;std:4,5")[0]
    assert code == EXIT_USAGE


def test_archy_surface_check(capsys):
    assert call(capsys, "archy", "build", "--random", "1")[0] == EXIT_USAGE


def test_experiment_deterministic(capsys):
    a = call(capsys, "experiment", "bgit", "--count", "5", "--seed", "4", "--word-bound", "3")
    b = call(capsys, "experiment", "bgit", "--count", "5", "--seed", "4", "--word-bound", "3", "--workers", "2")
    ra, rb = json.loads(a[1])["results"], json.loads(b[1])["results"]
    assert a[0] == b[0] == EXIT_OK
    assert ra == rb


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pants_lab", "constants"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["thin_h"] == 35600
