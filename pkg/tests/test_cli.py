import json
import subprocess
import sys

import pytest

from kdescent import cli, verify
from kdescent.dsym import NotInSubalgebra


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.mark.parametrize("argv,expected", [
    (["code", "--k", "3", "--perm", "85736124"], "32212123"),
    (["code", "--k", "4", "--perm", "426135"], "434133"),
    (["code", "--k", "3", "--perm", "425163", "--recoil"], "323123"),
    (["class-of", "--k", "3", "--perm", "2314"], "2314 2341"),
    (["class-of", "--k", "3", "--perm", "1432", "--kind", "descent"], "1432 2431"),
    (["eulerian", "--k", "3", "--n", "2"], "t2 + t3"),
    (["major", "--k", "3", "--n", "0"], "1"),
    (["series", "--k", "3", "--order", "5", "--generators"], "1,1,3,7,17"),
    (["series", "--k", "3", "--order", "4"], "1,1,2,6,18"),
    (["hopf", "mul", "--basis", "F", "21", "1"], "F[213] + F[231] + F[321]"),
    (["hopf", "mul", "--basis", "S", "1", "1"], "S[21]"),
    (["hopf", "mul", "--basis", "R", "--k", "3", "321", "3321"],
     "R[3211221] + R[3211321] + R[3212321] + R[3213321]"),
    (["hopf", "coprod", "--basis", "F", "21"], "F[21] ⊗ 1 + F[1] ⊗ F[1] + 1 ⊗ F[21]"),
    (["quotient", "mul", "--k", "3", "32", "3"], "F[321] + F[323] + F[331]"),
    (["quotient", "mul", "--k", "3", "--perms", "21", "1"], "F[321] + F[323] + F[331]"),
])
def test_golden_text(capsys, argv, expected):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert out.strip() == expected


def test_classes_listing(capsys):
    status, out, _ = run(capsys, "classes", "--k", "3", "--n", "4", "--summary")
    lines = out.strip().splitlines()
    assert status == 0 and len(lines) == 18
    assert "3223\t2\t2314\t2341" in lines


def test_json_payloads(capsys):
    status, out, _ = run(capsys, "code", "--k", "3", "--perm", "425163", "--recoil", "--json")
    assert status == 0
    assert json.loads(out) == {"k": 3, "kind": "recoil", "perm": [4, 2, 5, 1, 6, 3], "code": [3, 2, 3, 1, 2, 3]}
    _, out, _ = run(capsys, "classes", "--k", "3", "--n", "3", "--json")
    payload = json.loads(out)
    assert [c["size"] for c in payload["classes"]] == [1] * 6


def test_json_is_byte_stable(capsys):
    argv = ["hopf", "coprod", "--basis", "G", "--json", "2413"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    _, first, _ = run(capsys, "verify", "--suite", "codes", "--max-n", "4", "--json")
    _, second, _ = run(capsys, "verify", "--suite", "codes", "--max-n", "4", "--json")
    assert first == second and json.loads(first)["status"] == "pass"


@pytest.mark.parametrize("argv", [
    ["code", "--k", "0", "--perm", "12"],
    ["code", "--k", "3", "--perm", "113"],
    ["hopf", "mul", "--basis", "R", "321"],
    ["hopf", "coprod", "--basis", "F", "1", "1"],
    ["quotient", "mul", "--k", "3", "31"],
    ["verify", "--k", "0"],
    ["nonsense"],
])
def test_usage_errors_exit_one(capsys, argv):
    # argparse errors exit directly; value errors come back as a status
    try:
        status = cli.main(argv)
    except SystemExit as exc:
        status = exc.code
    assert status == 1
    assert "error" in capsys.readouterr().err


def test_closure_failure_exits_two(capsys, monkeypatch):
    def broken(basis, code):
        raise NotInSubalgebra(code, {(1, 2): 1})
    monkeypatch.setattr(cli.CodeElement, "basis_element", broken)
    status, _, err = run(capsys, "hopf", "mul", "--basis", "R", "--k", "3", "3", "3")
    assert status == 2 and "closure failure" in err


def test_verify_pass_and_failure(capsys, monkeypatch):
    status, out, _ = run(capsys, "verify", "--suite", "series")
    assert status == 0 and out.strip().endswith("series: pass")
    monkeypatch.setattr(verify, "check_hilbert", lambda *a: {"k": 3, "n": 2})
    status, out, _ = run(capsys, "verify", "--suite", "series")
    assert status == 2
    assert "FAIL  hilbert" in out and '"n": 2' in out


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "kdescent", "code", "--k", "2", "--perm", "21"],
                          capture_output=True, text=True, check=True)
    assert done.stdout.strip() == "21"
