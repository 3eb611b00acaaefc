"""End-to-end tests of the command-line interface (in-process)."""

import json

import pytest

from su2slopes.cli import main
from su2slopes.laurent import LaurentPoly
from su2slopes.presentations import parse_presentation, surgery_presentation
from su2slopes.slopes import Slope


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_certify_exit_codes(capsys):
    assert run(capsys, "certify", "3/1")[0] == 0
    assert run(capsys, "certify", "9/2")[0] == 0
    assert run(capsys, "certify", "5")[0] == 3
    assert run(capsys, "certify", "19/5")[0] == 2
    assert run(capsys, "certify", "abc")[0] == 1
    assert run(capsys, "certify", "-3/1")[0] == 1


def test_certify_json(capsys):
    code, out, _ = run(capsys, "certify", "3/1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["slope"] == "3/1"
    assert data["verdict"] == "certified"
    assert data["chain"][0]["rule"] == "simple-knot-genus"
    assert Slope.parse(data["slope"]) == Slope(3, 1)


def test_alexander(capsys):
    code, out, _ = run(capsys, "alexander", "torus", "2", "5")
    assert code == 0
    assert out.strip() == "t^2 - t + 1 - t^-1 + t^-2"
    code, out, _ = run(capsys, "alexander", "torus", "2", "5", "--json")
    data = json.loads(out)
    assert LaurentPoly.parse(data["alexander"]) == LaurentPoly.parse(
        "t^2 - t + 1 - t^-1 + t^-2"
    )
    assert data["a"] == 2 and data["b"] == 5


def test_simple_knot_json(capsys):
    code, out, _ = run(capsys, "simple-knot", "9", "2")
    assert code == 0
    data = json.loads(out)
    assert data["p"] == 9 and data["q"] == 2
    assert data["d"] == 2
    assert data["genus"] == 2
    assert data["cover_order"] == "45"
    poly = LaurentPoly.parse(data["alexander"])
    assert poly == LaurentPoly.parse("t^2 - t + 1 - t^-1 + t^-2")
    euler = LaurentPoly([(e, c) for e, c in data["euler"]])
    assert euler.evaluate(1) == 9


def test_simple_knot_bad_input(capsys):
    code, _, err = run(capsys, "simple-knot", "8", "2")
    assert code == 1
    assert "error" in err


def test_lspace_alex(capsys):
    code, out, _ = run(capsys, "lspace-alex", "3", "--json")
    data = json.loads(out)
    assert data["count"] == 2
    parsed = {LaurentPoly.parse(s) for s in data["polynomials"]}
    assert parsed == {
        LaurentPoly.parse("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"),
        LaurentPoly.parse("t^3 - t^2 + 1 - t^-2 + t^-3"),
    }


def test_det(capsys):
    code, out, _ = run(capsys, "det", "t^2 - t + 1 - t^-1 + t^-2")
    assert code == 0 and out.strip() == "5"
    code, _, err = run(capsys, "det", "t^2 + + 3")
    assert code == 1
    assert "position" in err


def test_fox_json(capsys):
    code, out, _ = run(capsys, "fox", "t - 1 + t^-1", "2", "--json")
    data = json.loads(out)
    assert data["order"] == "3" and data["infinite"] is False
    assert LaurentPoly.parse(data["polynomial"]) == LaurentPoly.parse("t - 1 + t^-1")
    code, out, _ = run(capsys, "fox", "t - 1 + t^-1", "6", "--json")
    data = json.loads(out)
    assert data["order"] == "0" and data["infinite"] is True


def test_nondegenerate(capsys):
    code, out, _ = run(capsys, "nondegenerate", "t - 1 + t^-1", "3", "1", "--json")
    data = json.loads(out)
    assert data["nondegenerate"] is False and data["n"] == 6
    code, out, _ = run(capsys, "nondegenerate", "1", "7", "2", "--json")
    assert json.loads(out)["nondegenerate"] is True


def test_cyclic_reps(capsys):
    code, out, _ = run(capsys, "cyclic-reps", "3", "--json")
    data = json.loads(out)
    assert data["h"] == 3
    assert [r["pi_multiple"] for r in data["representations"]] == ["1/6", "5/6", "3/2"]
    assert data["representations"][2]["radians"] == pytest.approx(4.71238898038469)
    assert run(capsys, "cyclic-reps", "4")[0] == 1


def test_presentation_round_trip(capsys):
    code, out, _ = run(capsys, "presentation", "torus", "2", "3", "--slope", "5/1")
    assert code == 0
    assert parse_presentation(out) == surgery_presentation(2, 3, Slope(5, 1))
    code, out, _ = run(capsys, "presentation", "torus", "5", "2", "--unfilled")
    assert parse_presentation(out).relators == ((1,) * 5 + (-2, -2),)
    code, out, _ = run(capsys, "presentation", "lens", "5")
    assert out.splitlines() == ["gens 1", "rel x1 x1 x1 x1 x1"]
    assert run(capsys, "presentation", "torus", "2", "3")[0] == 1  # needs a slope


def test_su2_search_from_file(tmp_path, capsys):
    target = tmp_path / "poincare.pres"
    code, out, _ = run(capsys, "presentation", "torus", "2", "3", "--slope", "1/1")
    target.write_text(out)
    code, out, _ = run(
        capsys, "su2-search", "--file", str(target), "--restarts", "50",
        "--seed", "1", "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["found"] is True
    assert data["defect"] < 1e-8
    assert data["image_type_heuristic"] == "other"
    assert len(data["images"]) == 2


def test_su2_search_not_found_notes_evidence(tmp_path, capsys):
    target = tmp_path / "lens.pres"
    _, out, _ = run(capsys, "presentation", "lens", "5")
    target.write_text(out)
    code, out, _ = run(
        capsys, "su2-search", "--file", str(target), "--restarts", "20",
        "--seed", "1", "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["found"] is False
    assert "evidence" in data["note"]
    code, out, _ = run(
        capsys, "su2-search", "--file", str(target), "--restarts", "20", "--seed", "1"
    )
    assert "evidence" in out


def test_unknown_command_and_version(capsys):
    assert run(capsys, "nosuchcmd")[0] == 1
    assert run(capsys, "--version")[0] == 0
    assert run(capsys)[0] == 1  # no subcommand


def test_enumerate(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--max-p", "10", "--from", "3", "--to", "5", "--json"
    )
    assert code == 0
    data = json.loads(out)
    verdicts = {s["slope"]: s["verdict"] for s in data["slopes"]}
    assert verdicts["3/1"] == "certified"
    assert verdicts["7/2"] == "certified"
    assert verdicts["4/1"] == "certified"
    assert verdicts["9/2"] == "certified"
    assert data["summary"]["certified"] >= 4
