"""
Command-line front end.

Exit codes: 0 success (or equal), 1 verified unequal, 2 usage or parse
error, 3 math-domain error.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import central as C
from . import exponential as X
from . import riordan as R
from .exprlang import ExprSyntaxError, evaluate
from .series import SeriesError, as_rat

DEFAULT_ORDER = 16
DEFAULT_ROWS = 12

EXIT_OK, EXIT_UNEQUAL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class SpecError(ValueError):
    """Malformed ``verify`` operand."""


@dataclass
class OutputDoc:
    kind: str  # triangle | series | pair | boolean
    rows: list
    meta: dict = field(default_factory=dict)
    labels: list = None


def fmt_rat(c):
    c = as_rat(c)
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def _cells(doc):
    if doc.kind == "boolean":
        return [["true" if v else "false" for v in row] for row in doc.rows]
    return [[fmt_rat(c) for c in row] for row in doc.rows]


def render(doc, fmt):
    cells = _cells(doc)
    if fmt == "json":
        rows = doc.rows if doc.kind == "boolean" else cells
        return json.dumps({"kind": doc.kind, "rows": rows, "meta": doc.meta})
    if fmt == "csv":
        lines = []
        for i, row in enumerate(cells):
            if doc.labels:
                row = [doc.labels[i]] + row
            lines.append(",".join(row))
        return "\n".join(lines)
    # table: right-aligned columns
    if doc.labels:
        cells = [[lab + ":"] + row for lab, row in zip(doc.labels, cells)]
    ncol = max((len(r) for r in cells), default=0)
    widths = [max((len(r[j]) for r in cells if j < len(r)), default=0) for j in range(ncol)]
    lines = [" ".join(s.rjust(widths[j]) for j, s in enumerate(row)) for row in cells]
    if doc.kind == "boolean" and "mismatch" in doc.meta:
        m = doc.meta["mismatch"]
        lines.append("first mismatch at (%d, %d): lhs=%s rhs=%s"
                     % (m["n"], m["k"], m["lhs"], m["rhs"]))
    return "\n".join(lines)


def _series(text, order):
    return evaluate(text, order)


def _at_order(build, order):
    """Call build(work_order), raising the working order until the result reaches ``order``."""
    work = order
    for _ in range(16):
        res = build(work)
        got = res.order
        if got >= order:
            return res.truncate(order)
        work += order - got
    return res


def _pair_doc(pair, names, meta):
    a, b = (getattr(pair, n) for n in names)
    return OutputDoc("pair", [list(a), list(b)], dict(meta, names=list(names)), list(names))


def _triangle_doc(t, meta):
    return OutputDoc("triangle", t.to_lists(), meta)


# -- verify operand specs -------------------------------------------------

def _split_top(text, sep):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
            if depth < 0:
                raise SpecError("unbalanced brackets in %r" % text)
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise SpecError("unbalanced brackets in %r" % text)
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _strip_brackets(text):
    text = text.strip()
    while len(text) >= 2 and text[0] + text[-1] in ("{}", "()", "[]"):
        inner = text[1:-1]
        try:
            _split_top(inner, ",")
        except SpecError:
            break
        text = inner.strip()
    return text


_LEAF_KINDS = ("riordan", "central", "expriordan", "expcentral")


def parse_spec(text):
    """Parse a verify operand into a nested tuple tree."""
    text = text.strip()
    for name in ("inv", "vhalf", "hhalf", "mul"):
        if text.startswith(name + "(") and text.endswith(")"):
            inner = text[len(name) + 1:-1]
            if name == "mul":
                parts = _split_top(inner, ";")
                if len(parts) != 2:
                    raise SpecError("mul(a;b) takes exactly two operands")
                return ("mul", parse_spec(parts[0]), parse_spec(parts[1]))
            return (name, parse_spec(inner))
    kind, sep, body = text.partition(":")
    kind = kind.strip()
    if not sep or kind not in _LEAF_KINDS:
        raise SpecError("expected one of %s followed by ':', or inv/mul/vhalf/hhalf, got %r"
                        % ("/".join(_LEAF_KINDS), text))
    parts = _split_top(_strip_brackets(body), ",")
    if len(parts) != 2 or not all(parts):
        raise SpecError("%s needs two comma-separated expressions" % kind)
    return (kind,) + tuple(parts)


def build_triangle(spec, rows):
    kind = spec[0]
    if kind == "inv":
        return R.triangle_invert(build_triangle(spec[1], rows))
    if kind == "mul":
        return build_triangle(spec[1], rows) @ build_triangle(spec[2], rows)
    if kind == "vhalf":
        return R.vertical_half(build_triangle(spec[1], 2 * rows - 1), rows)
    if kind == "hhalf":
        return R.horizontal_half(build_triangle(spec[1], 2 * rows - 1), rows)
    order = max(rows - 1, 1)
    a, b = _series(spec[1], order), _series(spec[2], order)
    if kind == "riordan":
        return R.triangle(R.RiordanPair(a, b), rows)
    if kind == "central":
        return C.central_triangle(C.CentralPair(a, b), rows)
    if kind == "expriordan":
        return X.exp_triangle(X.ExpRiordanPair(a, b), rows)
    return X.exp_triangle(X.ExpCentralPair(a, b), rows)


# -- command handlers -----------------------------------------------------

def cmd_series(args):
    s = _series(args.expr, args.order)
    return OutputDoc("series", [list(s)], {"command": "series", "order": args.order,
                                           "expr": args.expr})


def _rpair(u, v, order):
    return R.RiordanPair(_series(u, order), _series(v, order))


def _cpair(g, f, order):
    return C.CentralPair(_series(g, order), _series(f, order))


def cmd_riordan_matrix(args):
    t = R.triangle(_rpair(args.u, args.v, max(args.rows - 1, 1)), args.rows)
    return _triangle_doc(t, {"command": "riordan matrix", "rows": args.rows,
                             "u": args.u, "v": args.v})


def cmd_riordan_mul(args):
    pair = _at_order(lambda n: R.group_mul(_rpair(args.u, args.v, n),
                                           _rpair(args.u2, args.v2, n)), args.order)
    return _pair_doc(pair, ("u", "v"), {"command": "riordan mul", "order": args.order,
                                        "inputs": [args.u, args.v, args.u2, args.v2]})


def cmd_riordan_inv(args):
    pair = _at_order(lambda n: R.group_inv(_rpair(args.u, args.v, n)), args.order)
    return _pair_doc(pair, ("u", "v"), {"command": "riordan inv", "order": args.order,
                                        "inputs": [args.u, args.v]})


def cmd_riordan_az(args):
    def build(n):
        p = _rpair(args.u, args.v, n)
        return R.AZPair(R.a_sequence(p), R.z_sequence(p))
    az = _at_order(build, args.order)
    return _pair_doc(az, ("A", "Z"), {"command": "riordan az", "order": args.order,
                                      "inputs": [args.u, args.v]})


def cmd_riordan_halves(args):
    src = R.triangle(_rpair(args.u, args.v, max(2 * args.rows - 2, 1)), 2 * args.rows - 1)
    half = R.vertical_half if args.which == "vertical" else R.horizontal_half
    return _triangle_doc(half(src, args.rows), {"command": "riordan halves",
                                                "which": args.which, "rows": args.rows,
                                                "u": args.u, "v": args.v})


def cmd_central_matrix(args):
    t = C.central_triangle(_cpair(args.g, args.f, max(args.rows - 1, 1)), args.rows)
    return _triangle_doc(t, {"command": "central matrix", "rows": args.rows,
                             "g": args.g, "f": args.f})


def cmd_central_from_standard(args):
    pair = _at_order(lambda n: C.from_standard(_rpair(args.u, args.v, n)), args.order)
    return _pair_doc(pair, ("g", "f"), {"command": "central from-standard",
                                        "order": args.order, "inputs": [args.u, args.v]})


def cmd_central_to_standard(args):
    pair = _at_order(lambda n: C.to_standard(_cpair(args.g, args.f, n)), args.order)
    return _pair_doc(pair, ("u", "v"), {"command": "central to-standard",
                                        "order": args.order, "inputs": [args.g, args.f]})


def cmd_central_mul(args):
    pair = _at_order(lambda n: C.central_mul(_cpair(args.g, args.f, n),
                                             _cpair(args.g2, args.f2, n)), args.order)
    return _pair_doc(pair, ("g", "f"), {"command": "central mul", "order": args.order,
                                        "inputs": [args.g, args.f, args.g2, args.f2]})


def cmd_central_inv(args):
    pair = _at_order(lambda n: C.central_inv(_cpair(args.g, args.f, n)), args.order)
    return _pair_doc(pair, ("g", "f"), {"command": "central inv", "order": args.order,
                                        "inputs": [args.g, args.f]})


def cmd_central_antecedent(args):
    pair = _at_order(lambda n: C.vertical_antecedent(_cpair(args.g, args.f, n)), args.order)
    return _pair_doc(pair, ("u", "v"), {"command": "central antecedent",
                                        "order": args.order, "inputs": [args.g, args.f]})


def cmd_central_moments(args):
    s = C.chebyshev_moments(args.s, args.t, args.a, args.b, args.order)
    return OutputDoc("series", [list(s)], {"command": "central moments", "order": args.order,
                                           "s": args.s, "t": args.t, "a": args.a, "b": args.b})


def cmd_exp_matrix(args):
    order = max(args.rows - 1, 1)
    if args.u is not None and args.v is not None and args.g is None and args.f is None:
        pair = X.ExpRiordanPair(_series(args.u, order), _series(args.v, order))
        meta = {"u": args.u, "v": args.v}
    elif args.g is not None and args.f is not None and args.u is None and args.v is None:
        pair = X.ExpCentralPair(_series(args.g, order), _series(args.f, order))
        meta = {"g": args.g, "f": args.f}
    else:
        raise SpecError("exp matrix takes either --u/--v or --g/--f")
    return _triangle_doc(X.exp_triangle(pair, args.rows),
                         dict(meta, command="exp matrix", rows=args.rows))


def cmd_verify(args):
    lhs, rhs = parse_spec(args.lhs), parse_spec(args.rhs)
    a, b = build_triangle(lhs, args.rows), build_triangle(rhs, args.rows)
    diff = a.first_difference(b)
    meta = {"command": "verify", "rows": args.rows, "lhs": args.lhs, "rhs": args.rhs}
    if diff is not None:
        n, k, x, y = diff
        meta["mismatch"] = {"n": n, "k": k,
                            "lhs": None if x is None else fmt_rat(x),
                            "rhs": None if y is None else fmt_rat(y)}
    return OutputDoc("boolean", [[diff is None]], meta)


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational number: %r" % text)


def _count(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer, got %d" % n)
    return n


def build_parser():
    parser = argparse.ArgumentParser(
        prog="centralriordan",
        description="Riordan arrays in classical (u, v) and central {g, f} form, "
                    "computed with exact rationals.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "csv", "json"), default="table")
    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--order", type=_count, default=DEFAULT_ORDER)
    rows = argparse.ArgumentParser(add_help=False)
    rows.add_argument("--rows", type=_count, default=DEFAULT_ROWS)
    uv = argparse.ArgumentParser(add_help=False)
    uv.add_argument("--u", required=True)
    uv.add_argument("--v", required=True)
    gf = argparse.ArgumentParser(add_help=False)
    gf.add_argument("--g", required=True)
    gf.add_argument("--f", required=True)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[order, fmt], help="expand an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_series)

    rp = sub.add_parser("riordan", help="classical (u, v) arrays")
    rsub = rp.add_subparsers(dest="action", required=True)
    p = rsub.add_parser("matrix", parents=[uv, rows, fmt])
    p.set_defaults(func=cmd_riordan_matrix)
    p = rsub.add_parser("mul", parents=[uv, order, fmt])
    p.add_argument("--u2", required=True)
    p.add_argument("--v2", required=True)
    p.set_defaults(func=cmd_riordan_mul)
    p = rsub.add_parser("inv", parents=[uv, order, fmt])
    p.set_defaults(func=cmd_riordan_inv)
    p = rsub.add_parser("az", parents=[uv, order, fmt])
    p.set_defaults(func=cmd_riordan_az)
    p = rsub.add_parser("halves", parents=[uv, rows, fmt])
    p.add_argument("--which", choices=("vertical", "horizontal"), required=True)
    p.set_defaults(func=cmd_riordan_halves)

    cp = sub.add_parser("central", help="central {g, f} arrays")
    csub = cp.add_subparsers(dest="action", required=True)
    p = csub.add_parser("matrix", parents=[gf, rows, fmt])
    p.set_defaults(func=cmd_central_matrix)
    p = csub.add_parser("from-standard", parents=[uv, order, fmt])
    p.set_defaults(func=cmd_central_from_standard)
    p = csub.add_parser("to-standard", parents=[gf, order, fmt])
    p.set_defaults(func=cmd_central_to_standard)
    p = csub.add_parser("mul", parents=[gf, order, fmt])
    p.add_argument("--g2", required=True)
    p.add_argument("--f2", required=True)
    p.set_defaults(func=cmd_central_mul)
    p = csub.add_parser("inv", parents=[gf, order, fmt])
    p.set_defaults(func=cmd_central_inv)
    p = csub.add_parser("antecedent", parents=[gf, order, fmt])
    p.set_defaults(func=cmd_central_antecedent)
    p = csub.add_parser("moments", parents=[order, fmt])
    for name in ("s", "t", "a", "b"):
        p.add_argument("--" + name, type=_rational, default=Fraction(0))
    p.set_defaults(func=cmd_central_moments)

    ep = sub.add_parser("exp", help="exponential arrays")
    esub = ep.add_subparsers(dest="action", required=True)
    p = esub.add_parser("matrix", parents=[rows, fmt])
    for name in ("u", "v", "g", "f"):
        p.add_argument("--" + name)
    p.set_defaults(func=cmd_exp_matrix)

    p = sub.add_parser("verify", parents=[rows, fmt],
                       help="compare two triangles entry by entry")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except (ExprSyntaxError, SpecError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except SeriesError as e:
        print("math error: %s" % e, file=sys.stderr)
        return EXIT_DOMAIN
    print(render(doc, args.format))
    if doc.kind == "boolean":
        return EXIT_OK if doc.rows[0][0] else EXIT_UNEQUAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
