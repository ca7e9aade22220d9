import json
import subprocess
import sys

import pytest

from nail.engine import bundled_games_dir
from nail.harness.cli import main


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("nail ")


def test_run_bundled_game(tmp_path, capsys):
    kg = tmp_path / "kg.dot"
    assert main(["run", "minizork", "--seed", "7", "--steps", "150", "-q", "--dump-kg", str(kg)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("minizork seed=7 score=") and "deps satisfied" in out
    assert kg.read_text().startswith("digraph")


def test_run_writes_transcript(tmp_path, capsys):
    path = tmp_path / "t.txt"
    game = str(bundled_games_dir() / "balances.game")
    assert main(["run", game, "--steps", "30", "--transcript", str(path), "--modules", "navigator,lookonly"]) == 0
    text = path.read_text()
    assert "# grant" in text and "hoarder" not in text


@pytest.mark.parametrize("argv", [
    ["run", "no-such-game"],
    ["run", "minizork", "--steps", "0"],
    ["eval", "/nonexistent/suite"],
])
def test_config_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("nail: error:")


def test_bad_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"eagerness": {"idler": 2}}))
    assert main(["run", "minizork", "--config", str(cfg)]) == 2
    assert "idler" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["run", "minizork", "--modules", "teleporter"],
    ["eval", ".", "--seeds", "a,b"],
    ["frobnicate"],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_deps_command(capsys):
    game = "balances"
    deps = bundled_games_dir().parent / "deps" / "balances.deps"
    assert main(["deps", game, str(deps), "--steps", "1000"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1].endswith("6 satisfied") and len(out) == 7


def test_deps_command_rejects_bad_file(tmp_path, capsys):
    bad = tmp_path / "x.deps"
    bad.write_text('{"deps": [{"kind": "LocDep", "room": "moon"}]}')
    assert main(["deps", "balances", str(bad)]) == 2


def test_train_commands(tmp_path, capsys):
    corpus = tmp_path / "v.tsv"
    rows = ["success\tTaken.", "failure\tYou can't go that way.", "success\tThe door opens.", "failure\tNothing happens."] * 10
    corpus.write_text("\n".join(rows) + "\n")
    assert main(["train-validity", str(corpus), "--out", str(tmp_path / "v.model"), "--epochs", "3"]) == 0
    lm_corpus = tmp_path / "a.txt"
    lm_corpus.write_text("open door\ntake lamp\nopen the mailbox\n")
    assert main(["train-lm", str(lm_corpus), "--order", "3", "--out", str(tmp_path / "lm.json")]) == 0
    assert (tmp_path / "lm.json").exists() and (tmp_path / "v.model").exists()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nail", "run", "minizork", "--steps", "20", "-q"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert "score=" in proc.stdout
