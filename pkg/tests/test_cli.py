import ast
import io
import pathlib
import re
import subprocess
import sys

import pytest

import convalgebra.cli as cli
from convalgebra.ideals import PrincipalIdeal, ZZ, project, quotient_invert
from convalgebra.poly import evaluate, parse_polynomial
from convalgebra.scalars import PrimeField

from cli_cases import CASES, GOLDEN, render


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    argv, status = CASES[name]
    got_status, text = render(argv)
    assert got_status == status
    assert text == (GOLDEN / f"{name}.out").read_text(encoding="utf-8")


def test_every_verb_covered_by_golden_corpus():
    verbs = {argv[0] for argv, _ in CASES.values()}
    assert verbs == {
        "conv", "series-invert", "laurent-recip", "poly-eval", "poly-compose",
        "quotient", "classify", "specrad", "fourier", "characteristic",
    }


@pytest.mark.parametrize("name", sorted(n for n, (_, s) in CASES.items() if s == 1))
def test_domain_errors_are_one_machine_line(name):
    out, err = io.StringIO(), io.StringIO()
    assert cli.run(CASES[name][0], out=out, err=err) == 1
    assert out.getvalue() == ""
    lines = err.getvalue().splitlines()
    assert len(lines) == 1
    assert re.fullmatch(r"error: [a-z][a-z-]*: \S.*", lines[0])


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        [],
        ["conv", "--monoid", "W"],
        ["series-invert", "--field", "Q", "--input", "1-t", "--order", "six"],
        ["specrad", "--input", "1", "--bogus"],
    ],
)
def test_usage_errors_exit_2(argv):
    err = io.StringIO()
    assert cli.run(argv, out=io.StringIO(), err=err) == 2
    assert "usage:" in err.getvalue()


def test_file_parse_error_names_line():
    _, text = render(CASES["conv_bad_file"][0])
    assert "line 2" in text


def test_help_exits_zero(capsys):
    assert cli.run(["--help"]) == 0
    assert "series-invert" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "convalgebra", "quotient", "--ring", "Z", "--mod", "6", "--eval", "2*3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "0\n"
    proc = subprocess.run(
        [sys.executable, "-m", "convalgebra", "nope"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 2


def test_outputs_match_library_calls():
    F7 = PrimeField(7)
    _, text = render(["poly-eval", "--field", "Fp:7", "--input", "t1*t2+3*t1", "--at", "2,5"])
    want = evaluate(parse_polynomial("t1*t2+3*t1", F7, 2), [F7(2), F7(5)])
    assert text == F7.format(want) + "\n"
    _, text = render(["quotient", "--ring", "Z", "--mod", "11", "--eval", "4", "--invert"])
    assert text == f"{quotient_invert(project(4, PrincipalIdeal(ZZ, 11)))}\n"


# the CLI is a thin adapter: no arithmetic beyond index bookkeeping

_ARITHMETIC_OPS = (ast.Mult, ast.Div, ast.FloorDiv, ast.Mod, ast.Pow, ast.MatMult)
_NUMERIC_MODULES = {"math", "cmath", "numpy", "fractions", "decimal"}


def test_cli_contains_no_arithmetic():
    tree = ast.parse(pathlib.Path(cli.__file__).read_text(encoding="utf-8"))
    for node in ast.walk(tree):
        if isinstance(node, (ast.BinOp, ast.AugAssign)):
            assert not isinstance(node.op, _ARITHMETIC_OPS), ast.unparse(node)
        if isinstance(node, ast.Import):
            assert not {a.name.split(".")[0] for a in node.names} & _NUMERIC_MODULES
        if isinstance(node, ast.ImportFrom) and node.level == 0:
            assert node.module.split(".")[0] not in _NUMERIC_MODULES
