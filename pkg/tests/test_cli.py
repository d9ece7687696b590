import io
import json

import pytest

from aggression.cli import run_cli
from aggression.codec import dumps, loads


def run(argv, stdin=""):
    out = io.StringIO()
    code = run_cli(argv, out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


def test_solve_matching2_prints_draw():
    code, text = run(["solve", "--family", "matching:2", "--troops", "3"])
    assert code == 0
    assert text.startswith("Draw")


def test_solve_with_line_replays():
    code, text = run(["solve", "--family", "matching:1", "--troops", "2", "--line"])
    assert code == 0
    assert "1." in text


def test_solve_usage_errors():
    code, _ = run(["solve", "--troops", "2"])
    assert code == 2
    code, _ = run(["solve", "--family", "banana:3", "--troops", "2"])
    assert code == 2
    code, _ = run(["solve", "--family", "matching:1"])
    assert code == 2


def test_solve_limit_exit_code():
    code, _ = run(["solve", "--family", "matching:2", "--troops", "3",
                   "--max-nodes", "5"])
    assert code == 3


def test_verify_three_edges_exit_zero():
    code, text = run(["verify", "--strategy", "raj_three_edges",
                      "--family", "matching:3", "--troops", "9"])
    assert code == 0
    doc = json.loads(text)
    assert doc["holds"] is True
    assert doc["guarantee_claimed"] == "win"


def test_verify_refuted_exit_one():
    code, text = run(["verify", "--strategy", "lata_sparse_matching",
                      "--family", "matching:4", "--troops", "2",
                      "--mode", "verbatim"])
    assert code == 1
    assert json.loads(text)["holds"] is False


def test_reduce_and_respond_roundtrip(tmp_path):
    colored = {
        "classes": [list(range(0, 6)), list(range(6, 12)), list(range(12, 18))],
        "edges": [[0, 6], [0, 12], [6, 12], [1, 7], [2, 8], [1, 13],
                  [3, 9], [4, 14], [9, 15]],
    }
    src = tmp_path / "colored.json"
    src.write_bytes(dumps(colored))
    dst = tmp_path / "reduced.json"
    code, text = run(["reduce", "--input", str(src), "--output", str(dst)])
    assert code == 0
    assert "T_L=52" in text and "T_R=162" in text
    doc = loads(dst.read_bytes())
    assert doc["params"] == {"k": 3, "n": 6, "m": 9}

    code, text = run(["respond", "--instance", str(dst)])
    assert code == 0
    assert text.startswith("yes")

    # Clique-free input: "no" with exit 1.
    colored["edges"] = [[0, 12], [1, 13], [6, 12], [7, 13]]
    src.write_bytes(dumps(colored))
    code, _ = run(["reduce", "--input", str(src), "--output", str(dst)])
    assert code == 0
    code, text = run(["respond", "--instance", str(dst)])
    assert code == 1
    assert text.startswith("no")


def test_reduce_rejects_small_classes(tmp_path):
    src = tmp_path / "colored.json"
    src.write_bytes(dumps({"classes": [[0, 1, 2], [3, 4, 5]], "edges": [[0, 3]]}))
    code, _ = run(["reduce", "--input", str(src), "--output", str(tmp_path / "x.json")])
    assert code == 2


def test_play_replay(tmp_path):
    log = [
        {"type": "place", "vertex": 0, "count": 2},
        {"type": "place", "vertex": 1, "count": 2},
        {"type": "pass_placement"},
        {"type": "pass_placement"},
        {"type": "pass_attack"},
        {"type": "pass_attack"},
    ]
    path = tmp_path / "log.json"
    path.write_bytes(dumps(log))
    code, text = run(["play", "--family", "matching:1", "--troops", "2",
                      "--replay", str(path)])
    assert code == 0
    doc = json.loads(text)
    assert doc["result"] == "Draw"


def test_play_interactive_against_strategy():
    # A human Lata line against the three-edge script, driven over stdin.
    script = "\n".join([
        "place 0 5",   # she opens with five: the scary single-troop reply
        "place 2 3",
        "place 4 1",
        "pass",
        "pass",        # placement over (opponent passes in between as forced)
        "attack 1",    # she eats the scary troop on p
        "pass",
        "pass",
        "quit",
    ]) + "\n"
    code, text = run(["play", "--family", "matching:3", "--troops", "9",
                      "--side", "lata", "--opponent", "raj_three_edges"], stdin=script)
    assert code == 0
    assert "opponent plays place(1,1)" in text  # the scary move


def test_seed_flag_is_accepted_noop():
    code, _ = run(["--seed", "7", "solve", "--family", "matching:1", "--troops", "1"])
    assert code == 0
