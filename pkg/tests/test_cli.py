import json

import pytest

from dend.catalog import default_catalog_bytes
from dend.cli import run_cli


def run(capsys, *args):
    code = run_cli(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_axioms_all(capsys):
    code, out, _ = run(capsys, "axioms", "--all")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12 and all(line.startswith("PASS ") for line in lines)


def test_system_json(capsys):
    code, out, _ = run(capsys, "system", "--algebra", "Dend2_1", "--op", "rota_baxter", "--weight", "0",
                       "--convention", "row", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["equations"]) == 16
    assert {"label": "prec(e2,e2)[e1]", "poly": "a21^2"} in doc["equations"]


def test_system_both_conventions_text(capsys):
    code, out, _ = run(capsys, "system", "--algebra", "Dend2_3", "--op", "averaging", "--convention", "both")
    assert code == 0
    assert out.count("32 equations") == 2


def test_solve_and_sample(capsys):
    code, out, _ = run(capsys, "solve", "--algebra", "Dend2_1", "--op", "rota_baxter")
    assert code == 0 and "a11 = 0; a21 = 0; a22 = 0; free: a12" in out
    code, out, _ = run(capsys, "sample", "--algebra", "Dend2_1", "--op", "rota_baxter", "--count", "3",
                       "--format", "json")
    assert code == 0
    (entry,) = json.loads(out)
    assert len(entry["points"]) == 3
    assert all(p["a11"] == p["a21"] == p["a22"] == "0" for p in entry["points"])


def test_help_exits_zero(capsys):
    for cmd in ("axioms", "system", "solve", "sample", "verify", "report"):
        assert run_cli([cmd, "--help"]) == 0
    assert run_cli(["--help"]) == 0
    capsys.readouterr()


@pytest.mark.parametrize("args", [
    ["axioms", "--bogus"],
    ["system", "--algebra", "Dend2_1"],
    ["system", "--algebra", "Dend2_99", "--op", "reynolds"],
    ["system", "--algebra", "Dend2_1", "--op", "reynolds", "--weight", "1"],
    ["system", "--algebra", "Dend2_1", "--op", "rota_baxter", "--weight", "x/y"],
    ["system", "--algebra", "Dend2_1", "--op", "rota_baxter", "--convention", "diag"],
    ["axioms", "--all", "--algebra", "Dend2_1"],
])
def test_usage_errors_exit_2(capsys, args):
    assert run_cli(args) == 2
    capsys.readouterr()


def test_bad_catalog_exits_2(tmp_path, capsys):
    doc = json.loads(default_catalog_bytes())
    doc["claims"][0]["matrix"][0][1] = "a12 +"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "axioms", "--all", "--catalog", str(path))
    assert code == 2 and "PolySyntaxError" in err


def test_missing_algebra_exits_2(tmp_path, capsys):
    doc = json.loads(default_catalog_bytes())
    doc["algebras"] = [a for a in doc["algebras"] if a["id"] != "Dend2_7"]
    doc["claims"] = [c for c in doc["claims"] if c["algebra"] != "Dend2_7"]
    path = tmp_path / "eleven.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "axioms", "--all", "--catalog", str(path))
    assert code == 0 and len(out.splitlines()) == 11
    code, _, err = run(capsys, "verify", "--all", "--catalog", str(path), "--out", str(tmp_path / "r"))
    assert code == 2 and "MissingAlgebra" in err and "Dend2_7" in err


def test_verify_single_algebra_and_report(tmp_path, capsys):
    out = tmp_path / "rep"
    code, text, _ = run(capsys, "verify", "--algebra", "Dend2_1", "--conventions", "both",
                        "--rb-tail", "both", "--out", str(out))
    assert code == 0
    assert "dual-engine disagreements: 0" in text
    md = (out / "report.md").read_bytes()
    (out / "report.md").unlink()
    code, _, _ = run(capsys, "report", "--out", str(out))
    assert code == 0 and (out / "report.md").read_bytes() == md


def test_strict_mode(tmp_path, capsys):
    out = tmp_path / "rep"
    # column convention leaves weight-0 solutions of Dend2_1 uncovered
    code, _, _ = run(capsys, "verify", "--algebra", "Dend2_1", "--op", "rota_baxter", "--weight", "0",
                     "--convention", "col", "--out", str(out), "--strict")
    assert code == 1
    code, _, _ = run(capsys, "verify", "--algebra", "Dend2_1", "--op", "rota_baxter", "--weight", "0",
                     "--convention", "row", "--out", str(out), "--strict")
    assert code == 0
    assert run_cli(["report", "--out", str(tmp_path / "nowhere")]) == 2
    capsys.readouterr()


def test_resource_limit_exits_3(monkeypatch, capsys):
    import dend.cli as cli
    from dend.errors import ResourceLimit

    def boom(*args, **kwargs):
        raise ResourceLimit("pair queue bound exceeded")

    monkeypatch.setattr(cli, "solve_components", boom)
    code, _, err = run(capsys, "solve", "--algebra", "Dend2_1", "--op", "reynolds")
    assert code == 3 and "resource limit" in err
