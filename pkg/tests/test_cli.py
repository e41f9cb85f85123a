import json

import pytest

from rsdh.cli import main
from rsdh.errors import ParseError
from rsdh.field import gf
from rsdh.parsing import parse_element, parse_elements, parse_field, parse_poly
from rsdh.poly import Poly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_field_forms():
    assert parse_field("5").q == 5
    assert parse_field("2^3") == parse_field("8")
    F = parse_field("2^3/mod=1,1,0,1")
    assert F.modulus == (1, 1, 0, 1)
    for bad in ("6", "x", "2^3/mod=1,0,1", "8/mod=1,1,0,1"):
        with pytest.raises(Exception):
            parse_field(bad)


def test_parse_poly_forms():
    F = gf(8)
    g = F.primitive_element()
    assert parse_poly(F, "0,1,3") == Poly(F, [0, 1, 3])
    assert parse_poly(F, "x^3+g*x^2+g^2*x") == Poly(F, [0, F.mul(g, g), g, 1])
    assert parse_poly(F, "(x+1)^2") == Poly(F, [1, 0, 1])
    assert parse_element(F, "g^7") == 1
    assert parse_elements(F, "1,g,g^2") == [1, g, F.mul(g, g)]
    with pytest.raises(ParseError) as info:
        parse_poly(F, "x + 9")
    assert info.value.position == 4
    with pytest.raises(ParseError):
        parse_element(F, "x")


def test_distance_examples(capsys):
    code, out, _ = run(capsys, "distance", "--field", "5", "--kind", "standard", "--k", "2", "--poly", "x^3")
    res = json.loads(out)
    assert code == 0 and res["verdict"] == "exact" and res["d"] == 2
    code, out, _ = run(capsys, "distance", "--field", "8", "--kind", "standard", "--k", "1",
                       "--poly", "x^3+g*x^2+g^2*x")
    assert code == 0 and json.loads(out)["d"] == 7
    code, out, _ = run(capsys, "distance", "--field", "5", "--k", "2", "--word", "0,0,0,0,0")
    assert code == 0 and json.loads(out)["d"] == 0


def test_distance_json_schema(capsys):
    _, out, _ = run(capsys, "distance", "--field", "7", "--k", "2", "--poly", "x^3+x", "--method", "dp")
    res = json.loads(out)
    assert set(res) == {"verdict", "d", "method", "paper_case", "witness"}
    assert set(res["witness"]) >= {"elements", "extra_root"}


def test_unknown_verdict_exit_code(capsys):
    code, out, _ = run(capsys, "distance", "--field", "8", "--k", "1", "--poly", "x^3+g*x^2+g^2*x",
                       "--method", "closed-form")
    assert code == 3 and json.loads(out)["verdict"] == "unknown"


def test_parse_errors_exit_two(capsys):
    code, _, err = run(capsys, "distance", "--field", "5", "--k", "2", "--poly", "x^^3")
    assert code == 2 and "column 3" in err
    code, _, _ = run(capsys, "distance", "--field", "5", "--k", "2", "--word", "1,2")
    assert code == 2


def test_witness_examples(capsys):
    code, out, _ = run(capsys, "witness", "--lemma", "thm1-sum", "--q", "5", "--t", "3", "--b", "0")
    assert code == 0 and json.loads(out)["elements"] == [0, 1, 4]
    code, out, _ = run(capsys, "witness", "--lemma", "L5i", "--q", "4", "--t", "2", "--c", "1")
    res = json.loads(out)
    assert code == 0 and res["elements"] == [2, 3] and res["verified"]
    code, out, _ = run(capsys, "witness", "--lemma", "L6", "--q", "16", "--t", "4")
    res = json.loads(out)
    assert code == 0 and res["profile"]["e2"] == 0
    code, _, _ = run(capsys, "witness", "--lemma", "L6", "--q", "16", "--t", "5")
    assert code == 2


def test_output_is_deterministic(capsys):
    argv = ("witness", "--lemma", "L9", "--q", "13", "--t", "6", "--zeta", "g")
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)


def test_verify_writes_deterministic_table(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, "verify", "--field", "4,5,7")
    summary = json.loads(out)
    assert code == 0 and summary["disagreements"] == 0
    first = (tmp_path / summary["output"]).read_text()
    code, out, _ = run(capsys, "verify", "--field", "4,5,7", "--jobs", "2")
    assert (tmp_path / json.loads(out)["output"]).read_text() == first
    assert first.splitlines()[0].startswith("q\tkind\tk")


def test_verify_reports_literal_disagreements(capsys, tmp_path):
    out_path = tmp_path / "lit.tsv"
    code, out, _ = run(capsys, "verify", "--field", "5", "--degree", "2", "--literal", "--out", str(out_path))
    assert code == 1 and json.loads(out)["disagreements"] == 5


def test_verify_constructions(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--family", "constructions", "--field", "8,9",
                       "--out", str(tmp_path / "c.tsv"))
    assert code == 0 and json.loads(out)["disagreements"] == 0
