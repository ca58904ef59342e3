import json

import pytest

from nijenhuis.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_mul(capsys):
    assert run(capsys, "mul", "x|x", "x|x", "--base", "binomial") == (0, "-x^2|1|x^2 + 2*x^2|x|x", "")
    assert run(capsys, "mul", "u3", "u4", "--base", "trivial")[1] == "u7"


def test_pr_coprod_counit(capsys):
    assert run(capsys, "pr", "x|x")[1] == "1|x|x"
    assert run(capsys, "coprod", "x|x", "--base", "binomial")[1] == "(1, x|x) + (x, 1|x) + (x, x|1) + (x^2, 1|1)"
    assert run(capsys, "coprod", "u3", "--base", "trivial")[1] == "(u0, u3)"
    assert run(capsys, "counit", "3*1|1 + x")[1] == "3"


def test_antipode_and_conv(capsys):
    assert run(capsys, "antipode", "u3", "--base", "trivial")[1] == "u0"
    assert run(capsys, "conv", "x|x")[1] == "0"
    code, _, err = run(capsys, "antipode", "x", "--base", "binomial")
    assert code == 2 and err.startswith("error:") and "admissible" in err
    assert run(capsys, "antipode", "x", "--base", "binomial", "--allow-inadmissible")[0] == 0


def test_stuffle_and_identity_table(capsys):
    assert run(capsys, "stuffle", "2", "1", "--lambda", "-1")[1] == "-2*u2 + 3*u3"
    assert run(capsys, "stuffle", "1", "1", "--lambda", "1/2")[1] == "1/2*u1 + 2*u2"
    code, out, _ = run(capsys, "identity-table", "--max", "3")
    assert code == 0 and out.splitlines() == ["1 1 1 1"] * 4


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "mul", "x|", "x")
    assert code == 2 and out == "" and "position 2" in err


def test_check_json(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "--base", "binomial", "--axioms", "right-counicity", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "pass"
    assert doc["axioms"][0]["status"] == "expected-failure"
    path = tmp_path / "report.json"
    assert run(capsys, "check", "--base", "trivial", "--max-u", "3", "--json", "-o", str(path))[:2] == (0, "")
    assert json.loads(path.read_text())["config"]["max_u"] == 3


def test_check_failing_verdict_exit_code(capsys):
    code, out, _ = run(
        capsys, "check", "--base", "binomial", "--axioms", "coproduct-filtration", "--allow-inadmissible"
    )
    assert code == 1 and out.endswith("verdict: fail")


def test_check_unknown_axiom(capsys):
    code, _, err = run(capsys, "check", "--axioms", "bogus")
    assert code == 2 and "unknown axiom" in err


def test_bad_arguments_exit_via_argparse(capsys):
    with pytest.raises(SystemExit):
        main(["stuffle", "-1", "2"])
