"""
A small language for generating functions, e.g. ``(1+2*x)/(1+3*x+x^2)`` or
``1/(C(x)*sqrt(1-4*x))``.

Grammar (LL(1), whitespace ignored, no implicit multiplication)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | atom ('^' exponent)?
    atom     := INT | 'x' | '(' expr ')' | IDENT '(' expr ')'
    exponent := '-'? INT | '(' '-'? INT ('/' INT)? ')'

IDENT is one of sqrt, C, exp, log, rev.  ``C`` is the Catalan generating
function c(x) = 1 + x c(x)^2 composed with its argument.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import series as S
from .series import Series, SeriesError, TruncationError

__all__ = [
    "ExprSyntaxError", "BUILTINS", "Num", "Var", "Neg", "BinOp", "Pow", "Call",
    "parse", "unparse", "eval_ast", "evaluate",
]

BUILTINS = ("sqrt", "C", "exp", "log", "rev")


class ExprSyntaxError(ValueError):
    def __init__(self, message, column):
        super().__init__("%s at column %d" % (message, column))
        self.column = column


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: Fraction
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    arg: object
    pos: int = field(default=0, compare=False)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    tokens = []
    i = 0
    while True:
        m = _TOKEN.match(text, i)
        if m is None:
            break
        if m.group(1):
            tokens.append(("INT", m.group(1), m.start(1) + 1))
        elif m.group(2):
            tokens.append(("NAME", m.group(2), m.start(2) + 1))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError("unexpected character %r" % ch, m.start(3) + 1)
            tokens.append((ch, ch, m.start(3) + 1))
        i = m.end()
    tokens.append(("END", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        t = self.tok
        if t[0] != kind:
            self.fail("expected %r" % kind)
        return self.advance()

    def fail(self, what):
        kind, text, col = self.tok
        found = "end of input" if kind == "END" else repr(text)
        raise ExprSyntaxError("%s, found %s" % (what, found), col)

    def parse(self):
        node = self.expr()
        if self.tok[0] != "END":
            self.fail("expected an operator or end of input")
        return node

    def expr(self):
        node = self.term()
        while self.tok[0] in ("+", "-"):
            op, _, col = self.advance()
            node = BinOp(op, node, self.term(), col)
        return node

    def term(self):
        node = self.factor()
        while self.tok[0] in ("*", "/"):
            op, _, col = self.advance()
            node = BinOp(op, node, self.factor(), col)
        return node

    def factor(self):
        if self.tok[0] == "-":
            col = self.advance()[2]
            return Neg(self.factor(), col)
        node = self.atom()
        if self.tok[0] == "^":
            col = self.advance()[2]
            node = Pow(node, self.exponent(), col)
        return node

    def exponent(self):
        if self.tok[0] == "(":
            self.advance()
            sign = self.sign()
            num = int(self.expect("INT")[1])
            den = 1
            if self.tok[0] == "/":
                self.advance()
                den = int(self.expect("INT")[1])
                if den == 0:
                    raise ExprSyntaxError("zero denominator in exponent", self.tokens[self.i - 1][2])
            self.expect(")")
            return Fraction(sign * num, den)
        sign = self.sign()
        if self.tok[0] != "INT":
            self.fail("expected an integer or parenthesized rational exponent")
        return Fraction(sign * int(self.advance()[1]))

    def sign(self):
        if self.tok[0] == "-":
            self.advance()
            return -1
        return 1

    def atom(self):
        kind, text, col = self.tok
        if kind == "INT":
            self.advance()
            return Num(Fraction(int(text)), col)
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "NAME":
            self.advance()
            if text == "x":
                return Var(col)
            if text not in BUILTINS:
                raise ExprSyntaxError("unknown identifier %r (builtins: %s)"
                                      % (text, ", ".join(BUILTINS)), col)
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Call(text, arg, col)
        self.fail("expected a number, 'x', '(' or a function")


def parse(text):
    return _Parser(text).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node):
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    if isinstance(node, Num) and (node.value.denominator != 1 or node.value < 0):
        return 2
    return 5


def _wrap(node, ok):
    s = unparse(node)
    return s if ok else "(" + s + ")"


def unparse(node):
    """Render an AST so that ``parse(unparse(t)) == t`` for any parsed t."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _prec(node.operand) >= 3)
    if isinstance(node, Pow):
        e = node.exponent
        if e.denominator == 1:
            es = str(e.numerator)
        else:
            es = "(%d/%d)" % (e.numerator, e.denominator)
        return _wrap(node.base, _prec(node.base) == 5) + "^" + es
    if isinstance(node, Call):
        return "%s(%s)" % (node.name, unparse(node.arg))
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        left = _wrap(node.left, _prec(node.left) >= p)
        right = _wrap(node.right, _prec(node.right) > p)
        return "%s%s%s" % (left, node.op, right)
    raise TypeError("not an expression node: %r" % (node,))


def _tag(err, pos):
    if getattr(err, "column", None) is None:
        err.column = pos
        err.args = ("%s (at column %d)" % (err.args[0] if err.args else err, pos),) + err.args[1:]


def eval_ast(node, order):
    """Evaluate with series semantics at working order ``order``.

    The result may come back with a lower order when divisions cancel powers
    of x or reversions are taken; ``evaluate`` compensates for that.
    """
    try:
        return _eval(node, order)
    except SeriesError as e:
        _tag(e, getattr(node, "pos", 0))
        raise


def _eval(node, order):
    if isinstance(node, Num):
        return Series.const(node.value, order)
    if isinstance(node, Var):
        return Series.x(order)
    try:
        if isinstance(node, Neg):
            return -_eval(node.operand, order)
        if isinstance(node, BinOp):
            a = _eval(node.left, order)
            b = _eval(node.right, order)
            if node.op == "+":
                return S.add(a, b)
            if node.op == "-":
                return S.sub(a, b)
            if node.op == "*":
                return S.mul(a, b)
            return S.div(a, b)
        if isinstance(node, Pow):
            base = _eval(node.base, order)
            e = node.exponent
            if e.denominator == 1:
                return S.pow_int(base, e.numerator)
            return S.pow_rat(base, e.numerator, e.denominator)
        if isinstance(node, Call):
            if node.name == "C" and isinstance(node.arg, Var):
                return S.catalan(order)
            arg = _eval(node.arg, order)
            if node.name == "sqrt":
                return S.pow_rat(arg, 1, 2)
            if node.name == "C":
                if arg[0]:
                    raise S.DomainError("C() needs an argument with zero constant term")
                return S.compose(S.catalan(arg.order), arg)
            if node.name == "exp":
                return S.exp(arg)
            if node.name == "log":
                return S.log(arg)
            if node.name == "rev":
                return S.revert(arg)
    except SeriesError as e:
        _tag(e, node.pos)
        raise
    raise TypeError("not an expression node: %r" % (node,))


def evaluate(expr, order):
    """Parse (if needed) and evaluate to a series of exactly the given order."""
    node = parse(expr) if isinstance(expr, str) else expr
    work = order
    for _ in range(16):
        try:
            s = eval_ast(node, work)
        except (S.SeriesZeroDivisionError, TruncationError):
            # a divisor like x^2 is zero at low working order, and rev() needs
            # order 1; genuine failures persist and the last error propagates
            if work >= order + 64:
                raise
            work = 2 * work + 2
            continue
        if s.order >= order:
            return s.truncate(order)
        work += order - s.order
    raise TruncationError("could not reach order %d" % order)
