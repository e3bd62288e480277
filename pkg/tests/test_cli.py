"""CLI envelope structure, formats, and exit codes."""

import json

import pytest

from twocolor.cli import build_parser, main


def run_json(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_verify_holds_envelope(capsys):
    code, env = run_json(capsys, "verify", "--k", "4", "--bound", "10")
    assert code == 0
    assert env["command"] == "verify"
    assert env["status"] == "ok"
    assert env["parameters"] == {"k": 4, "bound": 10, "modulus": 5}
    assert isinstance(env["elapsed_ms"], int)
    assert env["results"][0]["verdict"] == "holds"
    assert env["results"][0]["counterexample"] is None


def test_verify_failure_envelope(capsys):
    code, env = run_json(capsys, "verify", "--k", "12", "--bound", "5")
    assert code == 1
    assert env["status"] == "failed"
    cx = env["results"][0]["counterexample"]
    assert cx == {"n": 0, "index": 12, "value": "78", "residue": 3}


def test_envelope_round_trips(capsys):
    _, env = run_json(capsys, "verify", "--k", "7", "--bound", "4")
    assert json.loads(json.dumps(env)) == env


def test_characterize_envelope(capsys):
    code, env = run_json(capsys, "characterize", "--bound", "2")
    assert code == 1  # thirteen families fail
    assert len(env["results"]) == 24
    holding = {r["k"] for r in env["results"] if r["verdict"] == "holds"}
    assert holding == {1, 2, 3, 4, 5, 7, 8, 10, 15, 17, 20}


def test_characterize_parallel_agrees_with_serial(capsys):
    code_s, env_s = run_json(capsys, "characterize", "--bound", "1")
    code_p, env_p = run_json(capsys, "characterize", "--bound", "1",
                             "--parallel", "on")
    assert code_s == code_p
    assert env_s["results"] == env_p["results"]


def test_identity_envelope(capsys):
    code, env = run_json(capsys, "identity", "--name", "jacobi", "--order", "40")
    assert code == 0
    assert env["results"][0]["step"] == "jacobi"
    assert env["results"][0]["passed"] is True


def test_identity_frobenius_parameters(capsys):
    code, env = run_json(capsys, "identity", "--name", "frobenius",
                         "--k", "2", "--modulus", "3", "--order", "50")
    assert code == 0
    assert env["parameters"] == {"name": "frobenius", "k": 2, "modulus": 3, "order": 50}


def test_replay_envelope(capsys):
    code, env = run_json(capsys, "replay-k4", "--order", "30")
    assert code == 0
    assert [r["step"] for r in env["results"]] == ["s%d" % i for i in range(1, 15)]
    assert all(r["passed"] for r in env["results"])


def test_strong_5ell_envelope(capsys):
    code, env = run_json(capsys, "strong-5ell", "--ell", "2", "--bound", "10")
    assert code == 0
    assert env["results"][0]["k"] == 10
    assert env["results"][0]["progression"] == [5, 4]


def test_chan_toh_envelope(capsys):
    code, env = run_json(capsys, "chan-toh", "--alpha", "2", "--bound", "5")
    assert code == 0
    assert env["results"][0]["progression"] == [25, 22]


def test_residues_envelope(capsys):
    code, env = run_json(capsys, "residues")
    assert code == 0
    r = env["results"][0]
    assert r["triangular_residues"] == [0, 1, 3]
    assert r["double_triangular_residues"] == [0, 1, 2]
    assert r["witnesses"] == [{"r": 2, "s": 2, "coefficient_residue": 0}]


def test_oracle_envelope(capsys):
    code, env = run_json(capsys, "oracle", "--k", "6", "--n", "18")
    assert code == 0
    assert env["results"][0] == {"k": 6, "n": 18, "value": "487", "residue": 2}


def test_table_format_mentions_status(capsys):
    code = main(["verify", "--k", "4", "--bound", "5"])
    out = capsys.readouterr().out
    assert code == 0
    assert "status: ok" in out
    assert "holds" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--k", "25", "--bound", "5"],
    ["verify", "--k", "0"],
    ["identity", "--name", "nosuch"],
    ["identity", "--name", "frobenius", "--modulus", "4"],
    ["replay-k4", "--order", "10"],
    ["strong-5ell", "--ell", "5"],
    ["chan-toh", "--alpha", "1"],
    ["oracle", "--k", "0", "--n", "3"],
    ["characterize", "--format", "xml"],
    ["nosuchcommand"],
])
def test_usage_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_parser_lists_identity_choices():
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(["identity", "--name", "bogus"])
