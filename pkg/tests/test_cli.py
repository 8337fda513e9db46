"""Tests for the command-line front end."""

import json

import pytest

from bbs.cli import (
    EXIT_BUDGET,
    EXIT_MATH,
    EXIT_OK,
    EXIT_USAGE,
    parse_ideal,
    run,
)


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out


def test_parse_ideal_shorthand():
    o = parse_ideal("box 2 2")
    assert o.terms == ((0, 0), (0, 1), (1, 0), (1, 1))
    o = parse_ideal("simplicial 2 1")
    assert o.terms == ((0, 0), (0, 1), (1, 0))
    o = parse_ideal("lshape")
    assert o.mu == 5


def test_parse_ideal_inline_and_file(tmp_path):
    spec = {"n": 2, "terms": [[0, 0], [0, 1]]}
    o = parse_ideal(json.dumps(spec))
    assert o.terms == ((0, 0), (0, 1))
    p = tmp_path / "ideal.json"
    p.write_text(json.dumps(spec))
    assert parse_ideal(str(p)).terms == ((0, 0), (0, 1))


def test_border_command_json(capsys):
    code, out = run_json(capsys, ["border", "--ideal", "box 2 2"])
    assert code == EXIT_OK
    rep = json.loads(out.out)
    assert rep["schema"] == 1
    assert rep["command"] == "border"
    assert rep["result"]["border"] == [[0, 2], [2, 0], [1, 2], [2, 1]]


def test_exposure_command(capsys):
    code, out = run_json(capsys, ["exposure", "--ideal", "box 2 1"])
    assert code == EXIT_OK
    rep = json.loads(out.out)
    assert rep["result"]["exposed"] == ["c13", "c21", "c22", "c23"]


def test_text_output(capsys):
    code, out = run_json(
        capsys, ["border", "--ideal", "box 1 1", "--out", "text"]
    )
    assert code == EXIT_OK
    assert "border:" in out.out


def test_weights_command(capsys):
    code, out = run_json(capsys, ["weights", "--ideal", "box 2 3"])
    assert code == EXIT_OK
    rep = json.loads(out.out)
    assert rep["result"]["table"][0] == [13, 15, 13, 20, 19]
    assert rep["result"]["flags"] == []


def test_eliminate_command(capsys):
    code, out = run_json(capsys, ["eliminate", "--ideal", "box 2 2"])
    assert code == EXIT_OK
    rep = json.loads(out.out)
    assert rep["result"]["generators"] == []
    assert len(rep["result"]["remaining"]) == 8


def test_gb_elim_command(capsys):
    code, out = run_json(
        capsys, ["gb-elim", "--ideal", "box 2 1", "--vars", "c11,c12"]
    )
    assert code == EXIT_OK
    rep = json.loads(out.out)
    assert rep["result"]["eliminated"] == ["c11", "c12"]


def test_missing_ideal_is_usage_error(capsys):
    code, out = run_json(capsys, ["border"])
    assert code == EXIT_USAGE
    rep = json.loads(out.err)
    assert rep["error"] == "usage"


def test_lshape_verify_rejects_ideal(capsys):
    code, out = run_json(capsys, ["lshape-verify", "--ideal", "box 1 1"])
    assert code == EXIT_USAGE


def test_invalid_ideal_is_math_rejection(capsys):
    bad = json.dumps({"n": 2, "terms": [[0, 0], [2, 0]]})
    code, out = run_json(capsys, ["border", "--ideal", bad])
    assert code == EXIT_MATH
    rep = json.loads(out.err)
    assert rep["error"] == "rejected"
    assert "divisor" in rep["reason"]


def test_simplicial_command_rejects_non_simplicial(capsys):
    code, out = run_json(capsys, ["simplicial", "--ideal", "lshape"])
    assert code == EXIT_MATH


def test_unknown_command_is_usage(capsys):
    code, out = run_json(capsys, ["frobnicate"])
    assert code == EXIT_USAGE


def test_gb_elim_unknown_variable(capsys):
    code, out = run_json(
        capsys, ["gb-elim", "--ideal", "box 1 1", "--vars", "c99"]
    )
    assert code == EXIT_USAGE


def test_simplicial_command(capsys):
    code, out = run_json(capsys, ["simplicial", "--ideal", "simplicial 2 2"])
    assert code == EXIT_OK
    rep = json.loads(out.out)
    assert len(rep["result"]["remaining"]) == 12
    assert rep["result"]["generators"] == []
