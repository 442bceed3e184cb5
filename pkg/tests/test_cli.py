import json
import subprocess
import sys

import pytest

from homcx.cli import main, run


def _json(argv):
    code, text = run(argv + ["--format", "json"])
    return code, json.loads(text)


def test_decompose_sym3():
    code, rep = _json(["decompose", "--group", "sym:3", "--family", "gamma:2", "--n", "3"])
    assert code == 0 and rep["version"] == 1
    strata = [r["stratum"] for r in rep["tables"]["strata"] if r["n"] == 2]
    assert strata == [7, 10, 1]
    assert all(c["status"] == "pass" for c in rep["checks"])
    assert rep["hashes"]["group"] and len(rep["hashes"]["presentations"]) == 4
    assert "timing" not in rep


def test_decompose_trivial_group():
    code, rep = _json(["decompose", "--group", "cyclic:1", "--family", "gamma:2", "--n", "4"])
    assert code == 0 and rep["results"]["sizes"] == [1] * 5


def test_decompose_q8():
    _, rep = _json(["decompose", "--group", "quaternion:8", "--family", "gamma:3", "--n", "2"])
    assert rep["results"]["sizes"][2] == 64


def test_homology_commands():
    _, rep = _json(["homology", "--group", "cyclic:2", "--family", "free", "--max-dim", "5"])
    torsion = {g["dim"]: g["torsion"] for g in rep["results"]["groups"]}
    assert torsion[1] == [2] and torsion[3] == [2]
    _, gamma = _json(["homology", "--group", "cyclic:2", "--family", "gamma:2", "--max-dim", "5"])
    assert gamma["results"]["groups"] == rep["results"]["groups"]
    _, s3 = _json(["homology", "--group", "sym:3", "--max-dim", "3"])
    assert s3["results"]["groups"][1]["torsion"] == [2]
    assert any("reliable range" in n for n in s3["notes"])


def test_cocycles():
    _, rep = _json(["cocycles", "--family", "gamma:3", "--exponent-bound", "5"])
    assert rep["results"]["cocycles"] == ["e", "a1"]
    code, rep = _json(["cocycles", "--family", "sigma23:involutive", "--exponent-bound", "0",
                       "--word", "s1*s2", "--pointwise-orders", "24"])
    assert code == 0 and "s1*s2" in rep["results"]["cocycles"]


def test_refuted_cocycle_exits_nonzero():
    code, rep = _json(["cocycles", "--family", "free", "--word", "a1^2", "--exponent-bound", "0"])
    assert code == 1


def test_verify_sigma23():
    code, rep = _json(["verify", "--family", "sigma23", "--pointwise-orders", "24"])
    assert code == 0
    assert len(rep["tables"]["symbolic"][0]["undecidable"]) == 3
    assert rep["tables"]["auto"][0]["undecidable"] == []
    assert any("cannot decide" in n for n in rep["notes"])


def test_verify_literal_maps_fail():
    code, _ = _json(["verify", "--family", "sigma23", "--pointwise-orders", "24", "--check-maps"])
    assert code == 1


def test_verify_pushout():
    code, rep = _json(["verify", "--family", "gamma:2", "--group", "sym:3", "--cocycle", "a1^2"])
    assert code == 0 and rep["tables"]["pushout"][2]["hom_Lb"] == 6 * 18


def test_irig():
    code, rep = _json(["irig", "--max-size", "5"])
    assert code == 0 and rep["results"]["instances"] == 100


def test_rep():
    _, rep = _json(["rep", "--group", "sym:3", "--family", "gamma:2", "--n", "2"])
    assert rep["results"]["rep"] == [1, 3, 8]


def test_formats():
    code, text = run(["rep", "--group", "sym:3", "--n", "1", "--format", "csv"])
    assert text.startswith("# checks\n")
    code, text = run(["rep", "--group", "sym:3", "--n", "1", "--format", "text", "--timing"])
    assert "orbits:" in text and "time build" in text


def test_determinism(tmp_path):
    argv = ["decompose", "--group", "sym:3", "--family", "gamma:2", "--n", "3", "--format", "json"]
    first = run(argv)[1]
    assert run(argv)[1] == first
    assert run(argv + ["--cache-dir", str(tmp_path)])[1] == first
    assert run(argv + ["--cache-dir", str(tmp_path)])[1] == first


@pytest.mark.parametrize(
    "argv,code",
    [
        (["decompose", "--group", "nope:1"], 3),
        (["decompose"], 3),
        (["decompose", "--group", "sym:3", "--family", "gamma:1"], 3),
        (["decompose", "--group", "sym:4", "--n", "3", "--budget", "100"], 2),
        (["verify", "--family", "free", "--cocycle", "a1"], 3),
        (["cocycles", "--family", "free", "--word", "b7"], 3),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    assert "homcx:" in capsys.readouterr().err


def test_usage_error_is_config(capsys):
    with pytest.raises(SystemExit) as info:
        main(["decompose", "--bogus"])
    assert info.value.code == 3


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "homcx.cli", "irig", "--max-size", "2", "--instances", "3", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["command"] == "irig"


def test_env_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HOMCX_CACHE", str(tmp_path))
    main(["rep", "--group", "sym:3", "--n", "2", "--format", "json"])
    assert list(tmp_path.glob("hom-*.json"))
