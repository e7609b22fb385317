import io
import json
import subprocess
import sys

import pytest

from freecoherent.cli import parse_rational, run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--output", "json")
    return code, json.loads(text)


def walk_numbers(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from walk_numbers(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from walk_numbers(v)
    elif isinstance(obj, float):
        yield obj


def test_rho_first_digits_differ():
    code, doc = call_json("rho", "--gamma0", "1/2", "--gamma1", "1/2", "--u", "|0", "--v", "|1")
    assert code == 0
    row = doc["results"][0]
    assert row["common_prefix"] == 0
    assert row["rho"] == {"num": "1", "den": "1"}


def test_rho_identical():
    code, doc = call_json("rho", "--u", "|10", "--v", "1|01")
    assert doc["results"][0]["rho"] == {"num": "0", "den": "1"}
    assert doc["results"][0]["common_prefix"] == "inf"


def test_tau_two_thirds():
    code, doc = call_json("tau", "--gamma0", "1/2", "--gamma1", "1/2", "--u", "0|0", "--v", "1|1")
    assert code == 0
    assert doc["results"][0]["tau_sq_closed"] == {"num": "2", "den": "3"}
    assert doc["results"][0]["tau_approx"] == "0.816496580928"


def test_tau_text_output():
    code, text = call("tau", "--u", "0|0", "--v", "1|1")
    assert code == 0
    assert "tau_sq_closed=2/3" in text
    assert "approximations" in text


def test_coherent():
    code, doc = call_json("coherent", "--u", "|0", "--depth", "3")
    row = doc["results"][0]
    assert code == 0
    assert row["eigen_residual_sq"] == {"num": "1", "den": "64"}
    assert [r["word"] for r in row["vector"]] == ["", "0", "00", "000"]


def test_bounds_report_fields():
    code, doc = call_json("bounds", "--gamma0", "1/2", "--gamma1", "1/3", "--u", "|0", "--v", "|1")
    row = doc["results"][0]
    assert code == 0
    assert row["tau_sq_closed"] == {"num": "11", "den": "24"}
    assert row["c0_sq"] == {"num": "1", "den": "4"}
    assert row["c1_sq"] == {"num": "2", "den": "3"}
    assert row["lower_ok"] and row["upper_ok"]
    for key in ("rho_sq", "tau_sq_numeric", "tail_bound"):
        assert set(row[key]) == {"num", "den"}


def test_balls_single_and_all():
    code, doc = call_json("balls", "--prefix", "10", "--n", "4")
    assert code == 0 and doc["results"][0]["members"] == 8
    code, doc = call_json("balls", "--n", "3")
    assert code == 0 and len(doc["results"]) == 15


def test_padic():
    code, doc = call_json("padic", "--x", "12", "--y", "d:0001", "--precision", "8")
    row = doc["results"][0]
    assert row["x"] == "00110000"
    assert row["valuation"] == 2
    assert row["distance_exponent"] == 2  # 12 - 8 = 4


@pytest.mark.parametrize(
    "argv",
    [
        ["rho", "--u", "|2", "--v", "|1"],
        ["rho", "--u", "1|", "--v", "|1"],
        ["rho", "--gamma0", "1", "--u", "|0", "--v", "|1"],
        ["rho", "--gamma0", "0.5", "--u", "|0", "--v", "|1"],
        ["rho", "--gamma1", "3/0", "--u", "|0", "--v", "|1"],
        ["rho", "--u", "|0"],
        ["tau", "--u", "|0", "--v", "0|0"],
        ["tau", "--u", "00000|1", "--v", "|0", "--depth", "2"],
        ["balls", "--n", "13"],
        ["balls", "--prefix", "0101", "--n", "3"],
        ["padic", "--x", "abc"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, out = call(*argv)
    assert code == 2
    assert out == ""
    assert capsys.readouterr().err


def test_parse_rational():
    assert parse_rational("3/6") == parse_rational("1/2")
    assert parse_rational("2") == 2


def test_json_schema_and_exact_numbers():
    code, doc = call_json("bounds", "--u", "1|0", "--v", "|1")
    assert set(doc) == {"command", "config", "results", "pass"}
    assert doc["config"]["u"] == "1|0"
    assert list(walk_numbers(doc)) == []


def test_module_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "freecoherent", "rho", "--u", "|0", "--v", "|1"],
        capture_output=True, text=True,
    )
    assert p.returncode == 0
    assert "rho=1" in p.stdout
