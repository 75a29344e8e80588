import json
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest

from ncqm import errors
from ncqm.cli import ERROR_KINDS, REPORT_SCHEMA, Command, dispatch, main
from ncqm.rational import parse_rational

LABEL = ["--hbar", "1", "--theta", "1/2", "--b", "1/3"]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def run_proc(argv):
    return subprocess.run([sys.executable, "-m", "ncqm", *argv], capture_output=True)


def _rationals(obj):
    """Every string leaf that looks like a rational."""
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _rationals(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _rationals(v)
    elif isinstance(obj, str) and obj and (obj.lstrip("-").replace("/", "").isdigit()):
        yield obj


def test_sector_classify(capsys):
    code, out, _ = run(["sector", "classify", *LABEL], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "ok" and rep["schema"] == "ncqm-report/1"
    assert rep["outputs"]["pfaffian"] == "-5/6"
    assert rep["outputs"]["regular"] is True
    assert rep["outputs"]["central_character"] == ["1", "1/2", "1/3"]


def test_verdict(capsys):
    code, out, _ = run(["verdict", *LABEL], capsys)
    o = json.loads(out)["outputs"]
    assert code == 0
    assert (o["darboux_exists"], o["conjugation_possible"], o["sectors_equivalent"]) == (True, False, False)
    assert o["equivalence"]["status"] == "Inequivalent"


def test_unsupported_stratum(capsys):
    code, out, err = run(["sector", "classify", "--hbar", "0", "--theta", "1", "--b", "1"], capsys)
    rep = json.loads(out)
    assert code == 1
    assert rep["status"] == "error" and rep["error_kind"] == "Unsupported stratum"
    assert "outputs" not in rep
    assert "Unsupported stratum" in err


def test_usage_errors():
    p = run_proc(["sector", "classify", "--hbar", "1", "--nope", "3"])
    assert p.returncode == 2 and b"usage" in p.stderr
    p = run_proc(["frobnicate"])
    assert p.returncode == 2
    p = run_proc(["sector", "classify", "--hbar", "1/0"])
    assert p.returncode == 2 and b"Parse error" in p.stderr


def test_domain_error_exit_code():
    p = run_proc(["bopp", "matrix", *LABEL, "--r", "6", "--s", "0"])
    assert p.returncode == 1
    assert json.loads(p.stdout)["error_kind"] == "Inadmissible params"


def test_byte_deterministic():
    for argv in (["sector", "classify", *LABEL], ["verdict", *LABEL], ["star", "shadow", *LABEL]):
        a, b = run_proc(argv), run_proc(argv)
        assert a.returncode == 0 and a.stdout == b.stdout


ALL_COMMANDS = [
    ["sector", "classify", *LABEL],
    ["sector", "omega", *LABEL],
    ["sector", "pfaffian", "--matrix", "[[0,1],[-1,0]]"],
    ["bopp", "matrix", *LABEL, "--r", "2", "--s", "1"],
    ["bopp", "verify", *LABEL, "--r", "2", "--s", "5"],
    ["bopp", "transfer", *LABEL, "--r", "0", "--s", "0", "--to-r", "2", "--to-s", "1"],
    ["darboux", "canonicalize", *LABEL],
    ["darboux", "canonicalize", "--matrix", "[[0,2],[-2,0]]", "--hbar", "1"],
    ["darboux", "intrinsic", *LABEL],
    ["darboux", "check", *LABEL, "--matrix", "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"],
    ["spectrum", *LABEL, "--ham", "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]", "--quanta", "[1,0]"],
    ["group", "multiply", "--g", '{"q1": "1"}', "--h", '{"q2": "1"}'],
    ["group", "project", "--g", '{"theta": "3", "phi": "7", "psi": "9", "q1": "1", "q2": "2", "p1": "3", "p2": "4"}'],
    ["group", "inverse", "--g", '{"q1": "1/2", "p2": "3"}'],
    ["group", "cocycle", "--g", '{"q1": "1"}', "--h", '{"p1": "1"}'],
    ["orbit", "data", "--functional", '{"a1": "1", "a2": "1/2", "a3": "1/3"}'],
    ["orbit", "act", "--g", '{"q1": "1"}', "--functional", '{"a1": "1", "a2": "1/2", "a3": "1/3"}'],
    ["orbit", "connect", "--functional", '{"a1": "1"}', "--target", '{"a1": "1", "b1": "2"}'],
    ["star", "product", *LABEL, "--f", '"x"', "--g", '"y"'],
    ["star", "commutator", *LABEL, "--f", '"p_x"', "--g", '"p_y"'],
    ["star", "pullback", "--f", '"p_x"', "--matrix", "[[1,0,0,0],[0,1,0,0],[0,0,2,0],[0,0,0,1]]"],
    ["star", "shadow", *LABEL],
    ["verdict", *LABEL],
    ["verdict", "--hbar", "1", "--theta", "2", "--b", "1/2"],
    ["darboux", "intrinsic", "--hbar", "1", "--theta", "2", "--b", "1/2"],
]


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_reports_validate_and_rationals_roundtrip(argv, capsys):
    code, out, _ = run(argv, capsys)
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert code == (0 if rep["status"] == "ok" else 1)
    for s in _rationals(rep):
        assert str(parse_rational(s)) == s


def test_specific_outputs(capsys):
    _, out, _ = run(["star", "product", *LABEL, "--f", '"x"', "--g", '"y"'], capsys)
    prod = json.loads(out)["outputs"]["product"]
    assert prod == [
        {"exponents": [0, 0, 0, 0], "re": "0", "im": "1/4"},
        {"exponents": [1, 1, 0, 0], "re": "1", "im": "0"},
    ]
    _, out, _ = run(["group", "multiply", "--g", '{"q1": "1"}', "--h", '{"q2": "1"}'], capsys)
    assert json.loads(out)["outputs"]["product"]["phi"] == "1/2"
    _, out, _ = run(ALL_COMMANDS[10], capsys)
    o = json.loads(out)["outputs"]
    assert o["frequencies"] == pytest.approx([0.5868, 1.4201], abs=1e-4)
    _, out, _ = run(["verdict", "--hbar", "1", "--theta", "2", "--b", "1/2"], capsys)
    assert json.loads(out)["outputs"]["darboux_exists"] is False


def test_text_mode(capsys):
    code, out, _ = run(["verdict", *LABEL, "--format", "text"], capsys)
    assert code == 0
    assert "sectors_equivalent: false" in out
    assert "Inequivalent" in out


def test_sweep_preserves_order(tmp_path, capsys):
    path = tmp_path / "labels.json"
    path.write_text(json.dumps([["1", "1/2", "1/3"], {"hbar": "2", "theta": "0", "b": "0"}, ["0", "1", "1"]]))
    code, out, _ = run(["sector", "classify", "--sweep", str(path)], capsys)
    reps = json.loads(out)
    assert [r["status"] for r in reps] == ["ok", "ok", "error"]
    assert reps[0]["outputs"]["pfaffian"] == "-5/6"
    assert reps[1]["outputs"]["factors_through_quotient"] is True
    assert code == 1
    for r in reps:
        jsonschema.validate(r, REPORT_SCHEMA)


def test_sweep_bad_file(tmp_path):
    p = run_proc(["verdict", "--sweep", str(tmp_path / "missing.json")])
    assert p.returncode == 2


def test_dispatch_unknown_command():
    rep = dispatch(Command("orbit", "frobnicate", {}))
    assert rep.status == "error" and rep.error_kind == "Unknown command"


def test_error_taxonomy_closed():
    subclasses = set()
    stack = [errors.NCQMError]
    while stack:
        for c in stack.pop().__subclasses__():
            subclasses.add(c)
            stack.append(c)
    assert subclasses == set(ERROR_KINDS)
    kinds = list(ERROR_KINDS.values())
    assert len(kinds) == len(set(kinds))


def test_rational_strings_in_outputs_are_canonical(capsys):
    _, out, _ = run(["bopp", "matrix", *LABEL, "--r", "2", "--s", "1"], capsys)
    m = json.loads(out)["outputs"]["matrix"]
    assert m[2] == ["0", "-1/2", "5/4", "0"]
    assert Fraction(json.loads(out)["outputs"]["det"]) == Fraction(5, 6)
