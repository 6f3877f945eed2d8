"""Fixed CLI corpus shared by the golden tests.

Run ``python3 tests/cli_cases.py`` from the repository root to regenerate
``tests/golden/*.out`` after an intentional output change, or with
``--transcript`` to print every case in one stream.
"""

import io
import pathlib

from convalgebra.cli import run

ROOT = pathlib.Path(__file__).resolve().parent
DATA = ROOT / "data"
GOLDEN = ROOT / "golden"


def _d(name):
    return str(DATA / name)


# name -> (argv, expected exit status)
CASES = {
    "conv_files": (["conv", "--monoid", "W", "--field", "Q", _d("a.coef"), _d("b.coef")], 0),
    "conv_inline_w2": (["conv", "--monoid", "W^2", "--field", "F5", _d("w2.coef"), "t1 - 2*t2"], 0),
    "conv_pointwise": (["conv", "--monoid", "W", "--field", "Q", "--pointwise", _d("a.coef"), "3 + t + t^2"], 0),
    "conv_residues": (["conv", "--monoid", "Zmod:6", "--field", "Q", _d("z6.coef"), _d("z6.coef")], 0),
    "conv_bad_file": (["conv", "--monoid", "W", "--field", "Q", _d("bad.coef"), _d("a.coef")], 1),
    "series_invert_geometric": (["series-invert", "--field", "Q", "--input", "1 - 1*t^1", "--order", "6"], 0),
    "series_invert_rational": (["series-invert", "--field", "Q", "--input", "(1 + t) / (1 - t - t^2)", "--order", "10"], 0),
    "series_invert_builtin": (["series-invert", "--field", "F7", "--input", "geom", "--order", "8"], 0),
    "series_invert_two_vars": (["series-invert", "--field", "Q", "--input", "1 - t1 - t2", "--order", "3"], 0),
    "series_invert_zero_constant": (["series-invert", "--field", "Q", "--input", "t + t^2", "--order", "4"], 1),
    "laurent_recip_f7": (["laurent-recip", "--field", "F7", "--input", "2*t^2"], 0),
    "laurent_recip_shifted": (["laurent-recip", "--field", "Q", "--input", "(1 - t)/t", "--order", "6"], 0),
    "poly_eval_f7": (["poly-eval", "--field", "Fp:7", "--input", "t1*t2", "--at", "2,5"], 0),
    "poly_eval_complex": (["poly-eval", "--field", "C", "--input", "t^2 + 1", "--at", "2i"], 0),
    "poly_compose": (["poly-compose", "--field", "Q", "--input", "t^2", "--with", "t+1"], 0),
    "poly_compose_two": (["poly-compose", "--field", "Q", "--input", "t1 + t2", "--with", "t^2", "--with", "t^3"], 0),
    "quotient_zero_divisor": (["quotient", "--ring", "Z", "--mod", "6", "--eval", "2*3"], 0),
    "quotient_invert": (["quotient", "--ring", "Z", "--mod", "7", "--eval", "3", "--invert"], 0),
    "quotient_invert_fails": (["quotient", "--ring", "Z", "--mod", "6", "--eval", "2", "--invert"], 1),
    "quotient_poly": (["quotient", "--ring", "Q[t]", "--mod", "t^2+1", "--eval", "t", "--invert"], 0),
    "classify_f3": (["classify", "--ring", "F3[t]", "--gen", "t^2+1"], 0),
    "classify_z6": (["classify", "--ring", "Z", "--gen", "6"], 0),
    "classify_zero": (["classify", "--ring", "Z", "--gen", "0"], 0),
    "classify_unsupported": (["classify", "--ring", "Q[t]", "--gen", "t^4+1"], 1),
    "specrad_file": (["specrad", "--input", _d("f.coef"), "--nmax", "256", "--grid", "10000"], 0),
    "specrad_inline": (["specrad", "--input", "(t + t^-1)/2", "--nmax", "16", "--grid", "100"], 0),
    "fourier": (["fourier", "--input", "1 + t - t^-1", "--grid", "8"], 0),
    "fourier_wholes": (["fourier", "--input", "t^2", "--monoid", "W", "--grid", "4"], 0),
    "characteristic_f7": (["characteristic", "--field", "Fp:7"], 0),
    "characteristic_q": (["characteristic", "--field", "Q"], 0),
    "characteristic_bad_field": (["characteristic", "--field", "Fp:6"], 1),
}


def render(argv):
    """Exit status and combined transcript (stdout then stderr)."""
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, out=out, err=err)
    text = out.getvalue()
    if err.getvalue():
        text += "--- stderr\n" + err.getvalue()
    return status, text.replace(str(DATA), "DATA")


def regenerate():
    GOLDEN.mkdir(exist_ok=True)
    for name, (argv, _) in CASES.items():
        _, text = render(argv)
        (GOLDEN / f"{name}.out").write_text(text, encoding="utf-8")


def transcript():
    """Every case rendered in name order, as one text."""
    parts = []
    for name in sorted(CASES):
        status, text = render(CASES[name][0])
        parts.append(f"### {name} exit={status}\n{text}")
    return "".join(parts)


if __name__ == "__main__":
    import sys

    if sys.argv[1:] == ["--transcript"]:
        sys.stdout.write(transcript())
    else:
        regenerate()
