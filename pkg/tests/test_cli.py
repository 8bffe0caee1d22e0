import json
import subprocess
import sys

import pytest

from ringcodes.cli import main, parse_code_spec, run


def call(*argv):
    return run(list(argv))


def test_code_params():
    r = call("code", "params", "--code", "cyclic:3:x^2+x+3")
    assert r.status == "ok"
    assert (r.payload["k1"], r.payload["k2"], r.payload["dLee"]) == (4, 8, 2)


def test_code_generator_and_dual():
    r = call("code", "generator", "--code", "gen:1:2")
    assert r.payload["generator"] == [["2+2u+2v+2uv"], ["2u+2uv"], ["2v+2uv"], ["2uv"]]  # 2*e_i
    assert r.payload["generatorCRT"][0] == ["[2,0,0,0]"]
    r = call("code", "dual", "--code", "comp:1:2|2|2|2")
    assert r.payload["selfDual"] is True


def test_spec_kinds():
    assert parse_code_spec("z4:2:1,1")[0] == "z4"
    assert parse_code_spec("comp:2:|||")[1].cardinality == 1
    assert parse_code_spec("gen:2:")[1].cardinality == 1
    assert parse_code_spec("cyclic:3:x^2+x+3;2")[1].type == (4, 8)


@pytest.mark.parametrize("spec", ["bogus", "z4:2:1,1,1", "nope:2:1", "cyclic:3:x^2+(x"])
def test_bad_specs_error(spec):
    r = call("code", "params", "--code", spec)
    assert r.status == "error" and r.exit_code != 0


def test_cyclic_commands():
    r = call("cyclic", "build", "--n", "5", "--gen", "x^4+x^3+x^2+x+1")
    assert r.payload["cyclic"] and (r.payload["k1"], r.payload["k2"], r.payload["dLee"]) == (4, 0, 5)
    r = call("cyclic", "dual", "--n", "7", "--f", "x-1", "--g", "x-1")
    assert r.status == "ok" and r.payload["spansDual"]
    r = call("cyclic", "dual", "--n", "7", "--f", "x^2+1", "--g", "x^2+1")
    assert r.status == "error" and "does not divide" in r.payload["error"]


def test_enum_commands():
    r = call("enum", "lee", "--code", "z4:1:2")
    assert r.payload["lee"] == [1, 0, 4, 0, 6, 0, 4, 0, 1]
    r = call("enum", "slwe", "--code", "gen:1:uv")
    slwe = {tuple(x["exponents"]): x["coeff"] for x in r.payload["slwe"]}
    assert slwe == {(1, 0, 0, 0, 0, 0, 0, 0, 0): 1, (0, 1, 0, 0, 0, 0, 0, 0, 0): 2, (0, 0, 1, 0, 0, 0, 0, 0, 0): 1}
    r = call("enum", "dual-lee", "--code", "comp:2:1,1|2,0||1,0;0,1")
    assert r.status == "ok" and r.payload["matchesDualCode"]


def test_budget_flag():
    r = call("--budget", "10", "enum", "lee", "--code", "z4:3:1,0,0;0,1,0")
    assert r.status == "error" and "budget" in r.payload["error"]


def test_verify_macwilliams():
    r = call("verify", "macwilliams", "--level", "lee", "--n", "2", "--trials", "20", "--seed", "7")
    assert r.status == "ok" and r.payload["failures"] == 0 and r.payload["trials"] == 20
    r = call("verify", "macwilliams", "--level", "lee", "--n", "3", "--trials", "1")
    assert r.status == "error"


def test_mds_commands():
    r = call("mds", "check", "--code", "z4:3:1,1,1")
    assert r.payload["isMDS"] and r.payload["classification"]["family"] == "repetition"
    r = call("mds", "sweep", "--max-n", "2")
    assert r.payload["counterexamples"] == 0


def test_json_is_byte_identical(capsys):
    outs = []
    for _ in range(2):
        assert main(["verify", "macwilliams", "--level", "slwe", "--n", "1", "--trials", "5", "--seed", "3", "--json"]) == 0
        captured = capsys.readouterr()
        outs.append(captured.out)
        assert "elapsed" in captured.err and "elapsed" not in captured.out
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["status"] == "ok"


def test_seed_changes_trials():
    a = call("verify", "macwilliams", "--level", "lee", "--n", "1", "--trials", "5", "--seed", "1")
    b = call("verify", "macwilliams", "--level", "lee", "--n", "1", "--trials", "5", "--seed", "2")
    assert a.payload != b.payload


def test_text_output(capsys):
    assert main(["code", "params", "--code", "z4:2:1,1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("status: ok") and "k1: 1" in out


def test_usage_error_exit():
    proc = subprocess.run([sys.executable, "-m", "ringcodes", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode != 0 and proc.stdout == ""
    proc = subprocess.run([sys.executable, "-m", "ringcodes", "cyclic", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "juxtaposition" in proc.stdout


def test_table_subcommand():
    r = call("table1")
    assert len(r.payload["rows"]) == 15
    assert r.payload["summary"]["fullMatches"][:3] == [1, 2, 3]
