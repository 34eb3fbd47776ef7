from __future__ import annotations

import json
from fractions import Fraction

import pytest

from covercert.cli import main
from covercert.errors import InputError
from covercert.heights import LogValue, bound_product
from covercert.io import dumps, load_curve, parse_expr, parse_scalar
from covercert.suites import run_suites

from conftest import FIXTURES

E0 = str(FIXTURES / "e0.json")
E1 = str(FIXTURES / "e1.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_curve(tmp_path, obj, name="curve.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


# verify ---------------------------------------------------------------------------


@pytest.mark.parametrize("path,omega", [(E0, 10), (E1, 15)])
def test_verify_fixtures(capsys, path, omega):
    code, out, _ = run(capsys, "verify", path, "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["schema"] == 1
    assert data["report"]["omega"] == omega
    assert data["first_failure"] is None


def test_verify_text_mode(capsys):
    code, out, _ = run(capsys, "verify", E0)
    assert code == 0 and out.rstrip().endswith("all checks passed")


def test_verify_corrupted_model(capsys, tmp_path):
    obj = json.loads((FIXTURES / "e0.json").read_text())
    obj["F0"] = "y0^2 - (x^2 - 2)"  # branch points move to +-sqrt 2
    code, out, _ = run(capsys, "verify", write_curve(tmp_path, obj), "--json")
    assert code == 1 and json.loads(out)["first_failure"]["name"] == "model:f"
    del obj["f"]  # without a stated model the declared branch points are what fails
    code, out, _ = run(capsys, "verify", write_curve(tmp_path, obj), "--json")
    assert code == 1 and json.loads(out)["first_failure"]["name"] == "V:disc"


def test_verify_corrupted_coefficient(capsys, tmp_path):
    obj = {"f": "y^2 - x*y + 1/3", "declared_branch_points": ["1", "-1"]}
    code, out, _ = run(capsys, "verify", write_curve(tmp_path, obj), "--json")
    assert code == 1 and json.loads(out)["first_failure"]["name"] == "V:disc"


def test_verify_general_case_section(capsys, tmp_path):
    obj = json.loads((FIXTURES / "e0.json").read_text())
    obj["rho"] = 2
    code, out, _ = run(capsys, "verify", write_curve(tmp_path, obj), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["general_case"]["shifted_alphas"] == ["-1", "-1/3"]


def test_verify_writes_out_file(capsys, tmp_path):
    dest = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", E0, "--json", "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["passed"]


# input errors -> exit 2, nothing on stdout --------------------------------------------


@pytest.mark.parametrize("obj", [
    {"f": "y^2 - x*"},
    {"f": "y^2 - z"},
    {"f": "y^2 / x"},
    {"F0": "y0^2 - x"},
    {"declared_branch_points": ["1"]},
    {"f": "y^2 - x", "declared_branch_points": [0.5]},
])
def test_bad_input_exit_2(capsys, tmp_path, obj):
    code, out, err = run(capsys, "verify", write_curve(tmp_path, obj))
    assert code == 2 and out == "" and "input error" in err


def test_missing_file_and_low_precision(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", str(tmp_path / "nope.json"))
    assert code == 2 and out == ""
    code, out, _ = run(capsys, "verify", E0, "--prec", "10")
    assert code == 2 and out == ""


# other commands ----------------------------------------------------------------------


def test_analyze_command(capsys):
    code, out, _ = run(capsys, "analyze", E1, "--json")
    data = json.loads(out)
    assert code == 0 and data["report"]["omega"] == 15
    assert data["report"]["infinity"]["kappas"] == [2, 0]
    assert data["normalization"]["seed_c_minus_m"] == "2"


def test_analyze_ramified_declared(capsys, tmp_path):
    obj = {"f": "y^2 - x*y + 1/4", "declared_branch_points": ["1"]}
    code, out, _ = run(capsys, "analyze", write_curve(tmp_path, obj), "--json")
    assert code == 1 and json.loads(out)["error"] == "RamifiedAtDeclaredBeta"


def test_vset_emit(capsys, tmp_path):
    dest = tmp_path / "v.json"
    code, _, _ = run(capsys, "vset", E0, "--emit", str(dest))
    assert code == 0
    data = json.loads(dest.read_text())
    assert len(data["equations"]) == data["count"] == 10


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "--genus", "0", "--degree", "2", "--height", "0", "--hf", "4", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["Lambda"] == str(2**72) and data["LambdaPrime"] == str(8**21)
    assert data["LambdaPrime_le_Lambda"] and data["log_hf_le_Lambda_h_plus_1"]
    code, _, _ = run(capsys, "bounds", "--genus", "0", "--degree", "1")
    assert code == 2


def test_lemma_suite_fast_path(capsys):
    code, out, _ = run(capsys, "lemma-suite", "--count", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and len(data["results"]) == 7
    code, _, _ = run(capsys, "lemma-suite", "--suite", "bogus")
    assert code == 2


def test_suite_catches_faulty_constant():
    def faulty(fs):
        return bound_product(fs, log_np1=LogValue.zero())

    (res,) = run_suites(seed=0, count=200, names=["product"], overrides={"product": faulty})
    assert not res.ok
    ce = res.counterexample
    assert LogValue.log(Fraction(ce["detail"]["lhs"]["log_of"])) > LogValue.log(Fraction(ce["detail"]["rhs"]["log_of"]))


def test_suites_are_seeded():
    a = [r.to_json() for r in run_suites(seed=3, count=20, names=["product", "rho", "kps"])]
    b = [r.to_json() for r in run_suites(seed=3, count=20, names=["product", "rho", "kps"])]
    assert a == b


# io ----------------------------------------------------------------------------------


def test_parse_expr_and_scalars():
    p = parse_expr("(y0 + x^2)/2 + 5/4")
    assert str(p) == str(parse_expr("1/2*y0 + 1/2*x**2 + 5/4"))
    assert parse_scalar("3/4") == Fraction(3, 4) and parse_scalar(2) == 2
    with pytest.raises(InputError):
        parse_scalar(0.25)
    with pytest.raises(InputError):
        parse_expr("x^(1/2)")
    with pytest.raises(InputError):
        parse_expr("__import__('os')")


def test_field_curves():
    ci = load_curve({"field": {"minpoly": ["-2", "0", "1"], "name": "s"}, "f": "y^2 - s*x",
                     "declared_branch_points": ["0"]})
    assert ci.field.degree == 2 and ci.f.coeff(1, 0) == ci.field.gen * -1


def test_dumps_deterministic():
    assert dumps({"b": 1, "a": [1, "x"]}) == '{\n  "a": [\n    1,\n    "x"\n  ],\n  "b": 1\n}\n'
