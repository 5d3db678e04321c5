import json
from pathlib import Path

import pytest

from polyinv.cli import (EXIT_FAIL, EXIT_GENERIC, EXIT_NON_ISOLATED, EXIT_NON_LINEAR, EXIT_OK,
                         EXIT_PARSE, main, parse_binding)
from polyinv.parametric import AlgebraicValue

POLYS = Path(__file__).resolve().parent.parent / "polys"


def p(name):
    return str(POLYS / name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_binding():
    assert parse_binding("s=2")[1] == 2
    assert parse_binding("s=-1/2")[1] == -0.5
    name, v = parse_binding("s=root(s^2 - s + 1, 1)")
    assert name == "s" and isinstance(v, AlgebraicValue) and v.embedding_index == 1


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", p("family_a.poly"), "--set", "s=2", "--json", "--stable")
    assert code == EXIT_OK
    r = json.loads(out)
    assert r["multi_integer"] == [14, 3, 0, 0, 3]
    assert "timing_seconds" not in r


def test_stable_json_is_deterministic(capsys):
    argv = ("analyze", p("broughton.poly"), "--json", "--stable", "--cross-check")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == EXIT_OK


def test_analyze_at_algebraic_value(capsys):
    code, out, _ = run(capsys, "analyze", p("family_a.poly"), "--set", "s=root(s^2-s+1)",
                       "--json", "--stable")
    assert code == EXIT_OK
    assert json.loads(out)["multi_integer"] == [14, 2, 0, 0, 2]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", p("cusp.poly"))
    assert code == EXIT_OK and "(2, 1, 0, 0, 1)" in out


def test_non_isolated_exit(capsys):
    code, out, _ = run(capsys, "analyze", p("family_a.poly"), "--set", "s=0")
    assert code == EXIT_NON_ISOLATED and "non-isolated" in out


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "analyze", p("broken.poly"))
    assert code == EXIT_PARSE and "column" in err


def test_unbound_parameter(capsys):
    code, _, _ = run(capsys, "analyze", p("family_a.poly"))
    assert code == EXIT_PARSE


def test_wrong_parameter_name(capsys):
    code, _, _ = run(capsys, "analyze", p("family_a.poly"), "--set", "t=2")
    assert code == EXIT_PARSE


def test_missing_file(capsys):
    code, _, _ = run(capsys, "analyze", p("no_such_file.poly"))
    assert code == EXIT_PARSE


def test_bad_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--frobnicate"])
    assert exc.value.code == EXIT_PARSE


def test_equiv_found(capsys):
    code, out, _ = run(capsys, "equiv", p("a_at_2.poly"), p("a_at_minus1.poly"), "--json")
    assert code == EXIT_OK
    assert json.loads(out)["equivalent"]


def test_equiv_with_bindings(capsys):
    code, out, _ = run(capsys, "equiv", p("family_a.poly"), p("family_a.poly"),
                       "--set-f", "s=2", "--set-g", "s=3")
    assert code == EXIT_FAIL and "NOT EQUIVALENT" in out


def test_equiv_conjugate_roots(capsys):
    code, _, _ = run(capsys, "equiv", p("family_a.poly"), p("family_a.poly"),
                     "--set-f", "s=root(s^2-s+1,0)", "--set-g", "s=root(s^2-s+1,1)")
    assert code == EXIT_OK


def test_equiv_scalar_policy(capsys):
    argv = ("equiv", p("family_a.poly"), p("family_a.poly"), "--set-f", "s=2", "--set-g", "s=1/2")
    assert run(capsys, *argv)[0] == EXIT_FAIL
    assert run(capsys, *argv, "--scalars", "any")[0] == EXIT_OK


def test_equiv_not_lines(capsys):
    code, _, _ = run(capsys, "equiv", p("not_lines.poly"), p("not_lines.poly"))
    assert code == EXIT_NON_LINEAR


def test_family_linear(capsys):
    code, out, _ = run(capsys, "family", p("linear_family.poly"))
    assert code == EXIT_OK and "empty" in out


def test_family_generic_degenerate(tmp_path, capsys):
    f = tmp_path / "deg.poly"
    f.write_text("vars: x y\nparam: s\npoly: s*x^2*y^2\n")
    code, _, _ = run(capsys, "family", str(f))
    assert code == EXIT_GENERIC


def test_family_without_parameter(capsys):
    code, _, _ = run(capsys, "family", p("cusp.poly"))
    assert code == EXIT_PARSE


def test_family_svg(tmp_path, capsys):
    out = tmp_path / "plane.svg"
    code, text, _ = run(capsys, "family", p("family_a.poly"), "--svg", str(out), "--json", "--stable")
    assert code == EXIT_OK
    assert out.read_text().startswith("<svg")
    r = json.loads(text)
    assert r["exceptional_polynomial"] == "s^4 - 2*s^3 + 2*s^2 - s"
