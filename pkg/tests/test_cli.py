import json
import subprocess
import sys

import pytest

from leibcap import __version__
from leibcap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_check_exported_heisenberg(capsys, tmp_path):
    path = str(tmp_path / "h3.json")
    assert run(capsys, "catalog", "export", "heisenberg3", "-o", path)[0] == 0
    code, out, _ = run(capsys, "check", path)
    assert code == 0 and "valid" in out


def test_check_invalid_names_triple(capsys, tmp_path):
    path = write(tmp_path, "bad.json", {"name": "bad", "field": "rational", "dim": 1, "basis": ["x"],
                                        "brackets": [{"left": "x", "right": "x", "value": {"x": "1"}}]})
    code, _, err = run(capsys, "check", path)
    assert code == 1 and "(x, x, x)" in err


def test_check_empty(capsys, tmp_path):
    path = write(tmp_path, "e.json", {"name": "empty", "field": "rational", "dim": 0, "basis": [],
                                      "brackets": []})
    assert run(capsys, "check", path)[0] == 0


def test_usage_and_io_errors(capsys, tmp_path):
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", "catalog:nope")[0] == 2
    assert run(capsys, "check", "catalog:sl2", "--field", "prime:3")[0] == 2
    assert run(capsys, "check", "catalog:sl2", "--field", "prime:9")[0] == 2
    p = tmp_path / "junk.json"
    p.write_text("{")
    assert run(capsys, "check", str(p))[0] == 2


def capability(capsys, name):
    code, out, _ = run(capsys, "capability", f"catalog:{name}", "--format", "json")
    assert code == 0
    return json.loads(out)


def test_capability_reports(capsys):
    r = capability(capsys, "nullfiliform2")
    assert r["capable"] is True and r["lie_capable"] is None
    assert (r["dims"]["tensor_square"], r["dims"]["exterior_square"], r["dims"]["nabla"]) == (3, 2, 1)
    assert r["version"] == __version__
    r = capability(capsys, "sl2_x_K")
    assert r["capable"] is True and r["lie_capable"] is False
    r = capability(capsys, "abelian1")
    assert r["capable"] is True and r["lie_capable"] is False
    assert all(i["pass"] for i in r["invariants"])


def test_report_key_order(capsys):
    r = capability(capsys, "r2")
    assert list(r)[:5] == ["version", "name", "field", "characteristic", "dim"]


def test_text_outputs(capsys):
    code, out, _ = run(capsys, "capability", "catalog:twisted3")
    assert code == 0 and "capable: no" in out
    code, out, _ = run(capsys, "tensor", "catalog:nullfiliform2")
    assert code == 0 and "x*1x, x*2x, x*2y" in out
    code, out, _ = run(capsys, "exterior", "catalog:sl2", "--format", "json")
    assert json.loads(out)["dim"] == 3
    code, out, _ = run(capsys, "centers", "catalog:twisted3", "--format", "json")
    c = json.loads(out)
    assert c["exterior_center"] == {"dim": 1, "basis": [{"y": "1"}]}
    code, out, _ = run(capsys, "bider", "catalog:abelian2", "--format", "json")
    assert json.loads(out)["biderivations"] == 8
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "heisenberg3" in out


def test_suite_dim_max_zero(capsys):
    code, out, _ = run(capsys, "suite", "--dim-max", "0", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


def test_suite_prime_matches_rational(capsys):
    def dims(field):
        code, out, _ = run(capsys, "suite", "--field", field, "--count", "0", "--dim-max", "4",
                           "--format", "json")
        assert code == 0
        return {r["name"]: r["dims"] for r in json.loads(out)["algebras"]}
    assert dims("rational") == dims("prime:5")


def test_suite_deterministic_and_worker_independent(capsys, monkeypatch):
    argv = ["suite", "--dim-max", "3", "--count", "6", "--seed", "3", "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    monkeypatch.setenv("LEIBCAP_THREADS", "2")
    third = run(capsys, *argv)
    assert first[0] == 0 and first[1] == second[1] == third[1]
    monkeypatch.setenv("LEIBCAP_THREADS", "many")
    assert run(capsys, *argv)[0] == 2


def test_suite_failure_lists_serialization(capsys, monkeypatch):
    import leibcap.cli as cli
    real = cli._suite_job

    def broken(job):
        r = real(job)
        if r["name"] == "nullfiliform2":
            r["invariants"].append({"id": "forced", "pass": False})
        return r
    monkeypatch.setattr(cli, "_suite_job", broken)
    code, out, _ = run(capsys, "suite", "--dim-max", "2", "--count", "0", "--format", "json")
    assert code == 1
    (f,) = json.loads(out)["failures"]
    assert f["failed"] == ["forced"] and f["algebra"]["basis"] == ["x", "y"]


def test_console_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "leibcap.cli", "check", "catalog:sl2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "valid" in out.stdout
