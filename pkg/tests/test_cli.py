import json
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

from centralriordan.cli import main

from oracles import catalan_numbers
from tables import HALF_POWER_7, PASCAL_7

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(out):
    return [[Fraction(t) for t in line.split()] for line in out.strip().splitlines()]


@pytest.mark.parametrize("name, argv", [
    ("half_power.table", ["central", "matrix", "--g", "1", "--f", "(1+x)^(1/2)", "--rows", "7"]),
    ("half_power.csv", ["central", "matrix", "--g", "1", "--f", "(1+x)^(1/2)", "--rows", "7",
                        "--format", "csv"]),
    ("half_power.json", ["central", "matrix", "--g", "1", "--f", "(1+x)^(1/2)", "--rows", "7",
                         "--format", "json"]),
    ("from_standard.table", ["central", "from-standard", "--u", "1/(1-x-x^2)", "--v", "x/(1-2*x)",
                             "--order", "6"]),
    ("from_standard.csv", ["central", "from-standard", "--u", "1/(1-x-x^2)", "--v", "x/(1-2*x)",
                           "--order", "6", "--format", "csv"]),
    ("from_standard.json", ["central", "from-standard", "--u", "1/(1-x-x^2)", "--v", "x/(1-2*x)",
                            "--order", "6", "--format", "json"]),
    ("catalan.json", ["series", "C(x)", "--order", "5", "--format", "json"]),
    ("verify_mismatch.json", ["verify", "--lhs", "central:{1,1+x}", "--rhs", "riordan:{1,x}",
                              "--rows", "6", "--format", "json"]),
    ("verify_mismatch.csv", ["verify", "--lhs", "central:{1,1+x}", "--rhs", "riordan:{1,x}",
                             "--rows", "6", "--format", "csv"]),
])
def test_golden(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert out == (GOLDEN / name).read_text()
    assert code == (1 if name.startswith("verify") else 0)


def test_goldens_agree_with_printed_table():
    csv_rows = [[Fraction(t) for t in line.split(",")]
                for line in (GOLDEN / "half_power.csv").read_text().splitlines()]
    assert csv_rows == HALF_POWER_7
    doc = json.loads((GOLDEN / "half_power.json").read_text())
    assert set(doc) == {"kind", "rows", "meta"}
    assert [[Fraction(t) for t in r] for r in doc["rows"]] == HALF_POWER_7
    assert rows_of((GOLDEN / "half_power.table").read_text()) == HALF_POWER_7


def test_table_columns_are_aligned():
    lines = (GOLDEN / "half_power.table").read_text().splitlines()
    # right-aligned: every column ends at the same offset in every row
    ends = [[i + 1 for i, ch in enumerate(line)
             if ch != " " and (i + 1 == len(line) or line[i + 1] == " ")] for line in lines]
    longest = ends[-1]
    for e in ends:
        assert e == longest[:len(e)]


def test_rationals_in_lowest_terms(capsys):
    _, out, _ = run(capsys, "series", "(2+2*x)/(4-2*x)", "--order", "3", "--format", "csv")
    assert out.strip() == "1/2,3/4,3/8,3/16"


def test_series_examples(capsys):
    assert run(capsys, "series", "1/(1-x)", "--order", "4")[1].split() == ["1"] * 5
    out = run(capsys, "series", "C(x)", "--order", "5")[1]
    assert [int(t) for t in out.split()] == catalan_numbers(5)
    assert run(capsys, "series", "rev(x/(1-x))", "--order", "3")[1].split() == ["0", "1", "-1", "1"]


def test_default_order(capsys):
    assert len(run(capsys, "series", "1/(1-x)")[1].split()) == 17
    assert len(rows_of(run(capsys, "central", "matrix", "--g", "1", "--f", "1+x")[1])) == 12


def test_matrix_examples(capsys):
    code, out, _ = run(capsys, "riordan", "matrix", "--u", "1/(1-x)", "--v", "x/(1-x)", "--rows", "7")
    assert code == 0 and rows_of(out) == PASCAL_7
    out = run(capsys, "central", "matrix", "--g", "1", "--f", "1", "--rows", "3")[1]
    assert rows_of(out) == [[1], [0, 1], [0, 0, 1]]


def test_conversion_examples(capsys):
    out = run(capsys, "central", "from-standard", "--u", "1/(1-x-x^2)", "--v", "x/(1-2*x)",
              "--order", "8")[1]
    g = run(capsys, "series", "(1+2*x)/(1+3*x+x^2)", "--order", "8")[1].split()
    lines = out.splitlines()
    assert lines[0].split()[1:] == g
    assert lines[1].split()[1:] == ["1", "2"] + ["0"] * 7
    out = run(capsys, "central", "to-standard", "--g", "1", "--f", "1+x", "--order", "5")[1]
    assert [l.split()[1:] for l in out.splitlines()] == [["1"] * 6, ["0"] + ["1"] * 5]
    out = run(capsys, "central", "to-standard", "--g", "1", "--f", "1", "--order", "4")[1]
    assert [l.split()[1:] for l in out.splitlines()] == [list("10000"), list("01000")]


def test_group_commands(capsys):
    out = run(capsys, "riordan", "mul", "--u", "1/(1-x)", "--v", "x/(1-x)",
              "--u2", "1/(1-x)", "--v2", "x/(1-x)", "--order", "4")[1]
    assert [l.split()[1:] for l in out.splitlines()] == [["1", "2", "4", "8", "16"],
                                                         ["0", "1", "2", "4", "8"]]
    out = run(capsys, "riordan", "inv", "--u", "1/(1-x)", "--v", "x/(1-x)", "--order", "4")[1]
    assert [l.split()[1:] for l in out.splitlines()] == [["1", "-1", "1", "-1", "1"],
                                                         ["0", "1", "-1", "1", "-1"]]
    out = run(capsys, "central", "inv", "--g", "1", "--f", "1+x", "--order", "4")[1]
    assert [l.split()[1:] for l in out.splitlines()] == [["1", "0", "0", "0", "0"],
                                                         ["1", "-1", "0", "0", "0"]]
    out = run(capsys, "central", "mul", "--g", "1", "--f", "1/(1-x)", "--g2", "1", "--f2", "1+2*x",
              "--order", "4")[1]
    f3 = run(capsys, "series", "(1+2*x)^2/(1+x)", "--order", "4")[1].split()
    assert out.splitlines()[1].split()[1:] == f3


def test_az_command(capsys):
    out = run(capsys, "riordan", "az", "--u", "1/(1-x)", "--v", "x/(1-x)", "--order", "4")[1]
    assert out.splitlines() == ["A: 1 1 0 0 0", "Z: 1 0 0 0 0"]
    code, _, err = run(capsys, "riordan", "az", "--u", "2", "--v", "x", "--order", "4")
    assert code == 3 and "Z-sequence" in err


def test_halves_example(capsys):
    out = run(capsys, "riordan", "halves", "--u", "1/(1-x)", "--v", "x/(1-x)",
              "--which", "horizontal", "--rows", "7")[1]
    assert rows_of(out) == [[comb(2 * n, n + k) for k in range(n + 1)] for n in range(7)]
    out = run(capsys, "riordan", "halves", "--u", "1/(1-x)", "--v", "x/(1-x)",
              "--which", "vertical", "--rows", "7")[1]
    assert rows_of(out) == [[comb(2 * n - k, n) for k in range(n + 1)] for n in range(7)]


def test_antecedent_example(capsys):
    out = run(capsys, "central", "antecedent", "--g", "1", "--f", "1+x", "--order", "5")[1]
    assert [l.split()[1:] for l in out.splitlines()] == [["1", "0", "0", "0", "0", "0"],
                                                         ["0", "1", "-1", "0", "0", "0"]]


def test_moments_example(capsys):
    out = run(capsys, "central", "moments", "--s", "0", "--t", "0", "--a", "1", "--b", "1",
              "--order", "8")[1]
    assert out.split() == "1 1 2 4 9 21 51 127 323".split()


def test_exp_matrix(capsys):
    out = run(capsys, "exp", "matrix", "--u", "exp(x)", "--v", "x", "--rows", "6")[1]
    assert rows_of(out) == [[comb(n, k) for k in range(n + 1)] for n in range(6)]
    out = run(capsys, "exp", "matrix", "--g", "exp(x)", "--f", "1", "--rows", "6")[1]
    assert rows_of(out) == [[comb(n, k) for k in range(n + 1)] for n in range(6)]
    code, _, _ = run(capsys, "exp", "matrix", "--u", "1", "--rows", "3")
    assert code == 2


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--lhs", "inv(central:1+x+x^2,1/(1-x))",
                       "--rhs", "central:{1/(2-x-sqrt(1-4*x)),1/C(x)}", "--rows", "10")
    assert code == 0 and out.strip() == "true"
    code, _, _ = run(capsys, "verify", "--lhs", "central:{1,1+x}",
                     "--rhs", "riordan:{1/(1-x),x/(1-x)}", "--rows", "12")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--lhs", "central:{1,1+x}", "--rhs", "riordan:{1,x}",
                       "--rows", "6")
    assert code == 1
    assert "first mismatch at (1, 0): lhs=1 rhs=0" in out


def test_verify_combinators(capsys):
    pascal = "riordan:1/(1-x),x/(1-x)"
    # the horizontal half of Pascal is (1/sqrt(1-4x), x c(x)^2)
    code, _, _ = run(capsys, "verify", "--lhs", "hhalf(%s)" % pascal,
                     "--rhs", "riordan:1/sqrt(1-4*x),x*C(x)^2", "--rows", "8")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--lhs", "vhalf(%s)" % pascal,
                     "--rhs", "central:1/(1-x),1/(1-x)", "--rows", "8")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--lhs", "mul(%s;inv(%s))" % (pascal, pascal),
                     "--rhs", "central:1,1", "--rows", "8")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--lhs", "expriordan:exp(x),x",
                     "--rhs", "riordan:{1/(1-x),x/(1-x)}", "--rows", "8")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--lhs", "expcentral:exp(x),1",
                     "--rhs", "expriordan:exp(x),x", "--rows", "8")
    assert code == 0


@pytest.mark.parametrize("argv, code", [
    (["series", "2x"], 2),
    (["series", "cos(x)"], 2),
    (["series", "1/x"], 3),
    (["series", "sqrt(x)"], 3),
    (["central", "matrix", "--g", "1", "--f", "x"], 3),
    (["verify", "--lhs", "bogus:1", "--rhs", "central:1,1"], 2),
    (["verify", "--lhs", "central:1", "--rhs", "central:1,1"], 2),
    (["verify", "--lhs", "inv(central:1,1", "--rhs", "central:1,1"], 2),
    (["series", "x", "--order", "-1"], 2),
])
def test_error_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as e:  # argparse usage errors
        got = e.code
    _, err = capsys.readouterr()
    assert got == code
    assert err


def test_syntax_error_reports_column(capsys):
    _, out, err = run(capsys, "series", "2x")
    assert out == "" and "column 2" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["central", "nonsense"])
    assert ei.value.code == 2
