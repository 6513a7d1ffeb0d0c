"""CLI end-to-end: exit codes, JSON schema, CSV byte-stability, SVG."""

import json
import xml.etree.ElementTree as ET

import jsonschema
import pytest

from koshliakov.cli import main, parse_complex_literal
from koshliakov.errors import DomainError
from koshliakov.identities import IDENTITIES, IdentityEntry
from koshliakov.reporting import CSV_HEADER

REPORT_SCHEMA = {
    "type": "object",
    "required": ["identity", "params", "lhs", "rhs", "abs_diff", "rel_diff",
                 "budgets", "pass"],
    "additionalProperties": False,
    "properties": {
        "identity": {"type": "string"},
        "params": {"type": "object"},
        "lhs": {"type": "array", "items": {"type": "number"},
                "minItems": 2, "maxItems": 2},
        "rhs": {"type": "array", "items": {"type": "number"},
                "minItems": 2, "maxItems": 2},
        "abs_diff": {"type": "number"},
        "rel_diff": {"type": "number"},
        "budgets": {"type": "object",
                    "additionalProperties": {"type": "number"}},
        "pass": {"type": "boolean"},
    },
}


def test_parse_complex_literal():
    assert parse_complex_literal("0.5") == 0.5
    assert parse_complex_literal("-0.3") == -0.3
    assert parse_complex_literal("0.5+0.25i") == 0.5 + 0.25j
    assert parse_complex_literal("0.5-0.25i") == 0.5 - 0.25j
    assert parse_complex_literal("0.25i") == 0.25j
    assert parse_complex_literal("-i") == -1j
    assert parse_complex_literal("i") == 1j
    assert parse_complex_literal("1e-3i") == 1e-3j
    assert parse_complex_literal("0.5-1e-2i") == 0.5 - 0.01j
    with pytest.raises(ValueError):
        parse_complex_literal("abc")


def test_verify_pass_json(capsys):
    code = main(["verify", "mellin-k", "--s", "2", "--nu", "0", "--q", "1"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["identity"] == "mellin-k"
    assert abs(doc["lhs"][0] - 1.0) < 1e-12
    assert abs(doc["rhs"][0] - 1.0) < 1e-12
    assert doc["pass"] is True


def test_verify_fail_exit_2(capsys):
    code = main(["verify", "mellin-k", "--s", "2", "--nu", "0", "--q", "1",
                 "--tolerance", "1e-30"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 2
    assert doc["pass"] is False


def test_verify_domain_exit_3(capsys):
    code = main(["verify", "rg-corollary", "--z", "1.5"])
    err = capsys.readouterr().err
    assert code == 3
    assert "|Re z| < 1 required" in err


def test_verify_rg_example(capsys):
    code = main(["verify", "rg-corollary", "--z", "0.5", "--alpha", "1",
                 "--terms", "10"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["rel_diff"] <= 1e-8


def test_usage_unknown_identity(capsys):
    assert main(["verify", "no-such-identity"]) == 64


def test_usage_inapplicable_flag(capsys):
    assert main(["verify", "rg-corollary", "--q", "3"]) == 64


def test_usage_bad_flag_value():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "rg-corollary", "--alpha", "wat"])
    assert exc.value.code == 64


def test_usage_missing_command():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 64


def test_sweep_csv_schema_and_stability(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = ["sweep", "rg-formula", "--z", "0.5", "--alpha-min", "0.5",
            "--alpha-max", "2", "--steps", "3", "--terms", "12"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    text = out1.read_text()
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4
    assert out1.read_bytes() == out2.read_bytes()
    first = lines[1].split(",")
    assert float(first[0]) == 0.5
    assert len(first) == 7


def test_sweep_two_point_grid(capsys):
    code = main(["sweep", "omega-modular", "--z", "0.5", "--alpha-min", "1",
                 "--alpha-max", "2", "--steps", "2"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 3


def test_sweep_svg_valid(tmp_path):
    svg = tmp_path / "chart.svg"
    code = main(["sweep", "rg-formula", "--z", "0.5", "--alpha-min", "0.5",
                 "--alpha-max", "2", "--steps", "3", "--terms", "12",
                 "--out", str(tmp_path / "c.csv"), "--svg", str(svg)])
    assert code == 0
    root = ET.parse(str(svg)).getroot()
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    assert root.get("version") == "1.1"
    polylines = root.findall(".//{http://www.w3.org/2000/svg}polyline")
    assert len(polylines) == 2


def test_sweep_invalid_config_usage():
    assert main(["sweep", "rg-formula", "--alpha-min", "0.1",
                 "--alpha-max", "2", "--steps", "3"]) == 64
    assert main(["sweep", "rg-formula", "--alpha-min", "0.5",
                 "--alpha-max", "2", "--steps", "1"]) == 64
    assert main(["sweep", "mellin-k"]) == 64  # no alpha to sweep


def test_sweep_partial_failure_nan_rows(tmp_path, capsys, monkeypatch):
    # A row that raises records nan fields and forces a nonzero exit.
    orig = IDENTITIES["rg-formula"].runner

    def flaky(z, alpha, terms, spec, tolerance):
        if alpha > 1.0:
            raise DomainError("synthetic failure")
        return orig(z, alpha, terms, spec=spec, tolerance=tolerance)

    monkeypatch.setitem(
        IDENTITIES, "rg-formula",
        IdentityEntry(flaky, ("z", "alpha", "terms"), 1e-8, "patched"))
    out = tmp_path / "d.csv"
    code = main(["sweep", "rg-formula", "--z", "0.5", "--alpha-min", "0.5",
                 "--alpha-max", "2", "--steps", "3", "--terms", "12",
                 "--out", str(out)])
    assert code == 2
    lines = out.read_text().strip().split("\n")
    assert len(lines) == 4
    assert "nan" in lines[-1] and "nan" in lines[-2]
    assert "nan" not in lines[1]


def test_eval_examples(capsys):
    assert main(["eval", "zeta", "--s", "2"]) == 0
    assert capsys.readouterr().out.startswith("1.6449340668")
    assert main(["eval", "bessel-k", "--nu", "0.5", "--x", "1"]) == 0
    assert capsys.readouterr().out.startswith("0.4610685044")
    assert main(["eval", "sigma", "--a", "0", "--n", "6"]) == 0
    assert capsys.readouterr().out.split() == ["4", "0"]


def test_eval_more_functions(capsys):
    for argv in (["eval", "gamma", "--s", "0.25"],
                 ["eval", "hurwitz", "--s", "1.5", "--a", "2.5"],
                 ["eval", "digamma", "--s", "0.5"],
                 ["eval", "xi", "--s", "0.5"],
                 ["eval", "big-xi", "--t", "0"],
                 ["eval", "bessel-j", "--nu", "0.25", "--x", "2"],
                 ["eval", "bessel-y", "--nu", "0.25", "--x", "2"],
                 ["eval", "li", "--x", "2"],
                 ["eval", "kernel", "--z", "0.5", "--x", "1"],
                 ["eval", "omega", "--x", "1", "--z", "0.4"],
                 ["eval", "lambda", "--x", "2", "--z", "0.5"]):
        assert main(argv) == 0
        out = capsys.readouterr().out
        assert len(out.split()) == 2


def test_eval_domain_exit_3(capsys):
    assert main(["eval", "zeta", "--s", "1"]) == 3
    assert main(["eval", "omega", "--x", "1", "--z", "1.5"]) == 3


def test_eval_unknown_function():
    assert main(["eval", "nope"]) == 64


def test_eval_complex_argument(capsys):
    assert main(["eval", "zeta", "--s", "0.5+3i"]) == 0
    re_s, im_s = capsys.readouterr().out.split()
    assert abs(float(im_s)) > 0


def test_profile_env(monkeypatch, capsys):
    monkeypatch.setenv("KOSHLIAKOV_PROFILE", "extended")
    assert main(["eval", "zeta", "--s", "2"]) == 0
    out = capsys.readouterr().out.split()[0]
    # 18 significant digits under the extended profile
    assert len(out.replace(".", "").lstrip("-").lstrip("0")) >= 17
    monkeypatch.setenv("KOSHLIAKOV_PROFILE", "bogus")
    assert main(["eval", "zeta", "--s", "2"]) == 3


def test_list_command(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for name in IDENTITIES:
        assert name in out
