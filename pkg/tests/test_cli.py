import json

import pytest

from singk3 import cli
from singk3.errors import NotPositiveDefinite, PrecisionExhausted
from singk3.forms import Form


def run_json(capsys, argv):
    code = cli.run(argv + ["--json"])
    out = capsys.readouterr().out
    assert code == 0, out
    envelope = json.loads(out)
    assert envelope["schema_version"] == "1"
    return envelope


def test_parse_form():
    assert cli.parse_form("2,1,3") == Form(2, 1, 3)
    assert cli.parse_form("4,0,4") == Form(4, 0, 4)
    with pytest.raises(NotPositiveDefinite):
        cli.parse_form("1,0,-1")


def test_classgroup_verb(capsys):
    env = run_json(capsys, ["classgroup", "-23"])
    res = env["result"]
    assert res["h"] == 3
    forms = {Form.from_json(f) for f in res["forms"]}
    assert forms == {Form(1, 1, 6), Form(2, 1, 3), Form(2, -1, 3)}
    assert res["cyclic_decomposition"][0]["order"] == 3
    assert env["command"]["verb"] == "classgroup"


def test_classgroup_text(capsys):
    code = cli.run(["classgroup", "-23"])
    out = capsys.readouterr().out
    assert code == 0
    assert "h = 3" in out and "(2,1,3)" in out and "Z/3" in out


def test_genus_verb(capsys):
    res = run_json(capsys, ["genus", "-56"])["result"]
    assert (res["h"], res["g"], res["n"]) == (4, 2, 2)
    principal = {Form.from_json(f) for f in res["principal_genus"]}
    assert principal == {Form(1, 0, 14), Form(2, 0, 7)}


def test_bounds_verb(capsys):
    res = run_json(capsys, ["bounds", "--form", "2,1,3"])["result"]
    assert res["n"] == 3
    assert res["parity_forced"] is True
    assert res["exact_minimal_field"] == "K(j(tau1))"
    assert res["d"] == -23 and res["d_K"] == -23 and res["m"] == 1
    assert res["model_field"]["contained_in"] == "K(j(tau2))"


def test_factors_verb(capsys):
    res = run_json(capsys, ["factors", "--form", "4,0,4", "--kummer"])["result"]
    assert res["d"] == -64
    assert res["tau1"] == {"d_K": -4, "x": [0, 1], "y": [1, 2]}
    assert res["tau2"] == {"d_K": -4, "x": [0, 1], "y": [2, 1]}
    assert Form.from_json(res["kummer"]["half_form"]) == Form(2, 0, 2)
    assert res["kummer"]["tau2"] == {"d_K": -4, "x": [0, 1], "y": [1, 1]}
    assert res["tau1_lattice"]["conductor"] == 1


def test_factors_not_divisible_warns(capsys):
    env = run_json(capsys, ["factors", "--form", "2,1,3", "--kummer"])
    assert env["result"]["kummer"] is None
    assert any("not 2-divisible" in w for w in env["warnings"])


def test_equation_verb(capsys):
    res = run_json(capsys, ["equation", "--form", "1,0,1"])["result"]
    assert res["equation"] == "y^2 = x^3 - 3*t^4*x + t^5*(t^2 + 1)"
    assert res["A"] == {"type": "rational", "value": "1"}
    assert res["B"] == {"type": "rational", "value": "0"}
    assert res["degenerate_rule_applied"] is True
    assert res["a6"] == {
        "5": {"type": "rational", "value": "1"},
        "7": {"type": "rational", "value": "1"},
    }


def test_equation_kummer_flag(capsys):
    res = run_json(capsys, ["equation", "--form", "1,0,1", "--kummer"])["result"]
    assert res["kind"] == "kummer"
    assert res["equation"] == "y^2 = x^3 - 3*t^4*x + t^4*(t^4 + 1)"


def test_equation_numeric_warns(capsys):
    env = run_json(capsys, ["equation", "--form", "2,1,3", "--precision", "48"])
    assert env["result"]["A"]["type"] == "complex"
    assert any("numerically" in w for w in env["warnings"])


def test_classpoly_verb(capsys):
    res = run_json(capsys, ["classpoly", "-23"])["result"]
    assert res["degree"] == 3
    assert res["certified"] is True
    assert res["coefficients"] == ["12771880859375", "-5151296875", "3491750", "1"]


def test_scan_verb(capsys):
    env = run_json(capsys, ["scan", "--bound", "100"])
    res = env["result"]
    assert res["count"] == len(res["records"])
    assert res["records"][0] == {"d": -3, "h": 1, "g": 1, "n": 1, "d_K": -3, "f": 1}
    assert all(r["n"] == 1 for r in res["records"])
    assert res["field_count"] == len(set(r["d_K"] for r in res["records"]))
    assert any("cutoff" in w for w in env["warnings"])


def test_deterministic_output(capsys):
    cli.run(["scan", "--bound", "200", "--json"])
    first = capsys.readouterr().out
    cli.run(["scan", "--bound", "200", "--json"])
    second = capsys.readouterr().out
    assert first == second


def test_usage_errors_exit_2(capsys):
    assert cli.run(["classgroup", "5"]) == 2
    assert cli.run(["bounds", "--form", "1,0,-1"]) == 2
    assert cli.run(["bounds", "--form", "nonsense"]) == 2
    assert cli.run(["scan", "--bound", "3"]) == 2
    assert cli.run(["no-such-verb"]) == 2
    capsys.readouterr()


def test_computation_errors_exit_3(capsys, monkeypatch):
    def boom(d):
        raise PrecisionExhausted("not enough bits")

    monkeypatch.setattr(cli, "class_polynomial", boom)
    assert cli.run(["classpoly", "-23"]) == 3
    err = capsys.readouterr().err
    assert "not enough bits" in err


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("SINGK3_PRECISION", "64")
    env = run_json(capsys, ["bounds", "--form", "1,0,1"])
    assert env["command"]["arguments"]["precision"] == 64
    monkeypatch.setenv("SINGK3_KUMMER", "1")
    res = run_json(capsys, ["factors", "--form", "4,0,4"])["result"]
    assert "kummer" in res


def test_version_flag(capsys):
    assert cli.run(["--version"]) == 0
    assert "singk3" in capsys.readouterr().out
