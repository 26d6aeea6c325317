import json
import subprocess
import sys

import pytest

from cli_examples import DATA, EXAMPLES
from roughhopf import cli, forests as fo


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv", EXAMPLES, ids=[" ".join(a[:3]) for a in EXAMPLES])
def test_examples_deterministic(argv, capsys):
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first[0] == 0, first[2]
    assert first == second


def test_subprocess_byte_identical():
    argv = [sys.executable, "-m", "roughhopf.cli", "coact", "--algebra", "bck", "[[[]][]]"]
    outs = {subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


def test_mkw_coproduct_json(capsys):
    code, out, _ = run(["coproduct", "--algebra", "mkw", "--degree", "3", "[1[2][3]]"], capsys)
    terms = {(t["left"], t["right"]): t["coeff"] for t in json.loads(out)["terms"]}
    assert terms == {("", "[1[2][3]]"): "1", ("[1[2][3]]", ""): "1", ("[2]", "[1[3]]"): "1", ("[2] [3]", "[1]"): "1"}


def test_coact_json_matches_worked_example(capsys):
    import golden
    from roughhopf.hopf import named_algebra
    code, out, _ = run(["coact", "--algebra", "bck", "[[[]][]]"], capsys)
    bck = named_algebra("bck", ("",))
    assert json.loads(out) == golden.bck_value(golden.BCK_RHO_S).to_json(bck)


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(["verify", "--suite", "hopf", "--algebra", "bck", "--degree", "3"], capsys)
    assert code == 0 and json.loads(out)["passed"]

    def failing(alg, N):
        return {"suite": "hopf", "passed": False, "checks": {"fake": {"passed": False}}}

    monkeypatch.setattr(cli, "hopf_suite", failing)
    code, out, _ = run(["verify", "--suite", "hopf", "--algebra", "bck", "--degree", "3"], capsys)
    assert code == 1 and not json.loads(out)["passed"]


@pytest.mark.parametrize("argv", [
    ["parse", "--algebra", "bck", "[[]"],
    ["parse", "--algebra", "bck", "[1]", "--alphabet", "2"],
    ["coproduct", "--algebra", "bck", "--degree", "1", "[[]]"],
    ["coact", "--algebra", "cefm", "[]"],
    ["substitute", "--algebra", "bck", "[]"],
    ["antipode", "--algebra", "nope", "[]"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as e:
        code = e.code
    err = capsys.readouterr().err
    assert code == 2
    assert err


def test_latex_round_trip(capsys):
    for s in ["[1[2][3]]", "[1[2[3]]] [4]", "[]"]:
        code, out, _ = run(["parse", "--algebra", "mkw", "--format", "latex", s], capsys)
        back = fo.parse(out.strip(), fo.PLANAR)
        assert back == fo.parse(s, fo.PLANAR)


def test_rule_file_with_bad_image(tmp_path, capsys):
    p = tmp_path / "r.json"
    p.write_text(json.dumps({"algebra": "bck", "images": {"": [{"coeff": "1", "basis": "[] []"}]}}))
    code, _, err = run(["substitute", "--algebra", "bck", "--rule", str(p), "[]"], capsys)
    assert code == 2 and "primitive" in err


def test_signature_values(capsys):
    code, out, _ = run(["signature", "--path", str(DATA / "path.json"), "--degree", "2"], capsys)
    terms = {t["basis"]: t["coeff"] for t in json.loads(out)["terms"]}
    # e1 leg then e2 leg: the area term sits entirely on 12
    assert terms["12"] == "1/2" and "21" not in terms
    assert terms["1"] == "1" and terms["22"] == "1/8"
