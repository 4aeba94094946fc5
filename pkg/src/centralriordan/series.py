"""
Truncated formal power series with exact rational coefficients.

A ``Series`` of order N knows the coefficients of x^0 .. x^N and nothing
beyond.  Binary operations return the smaller of the two orders, and asking
for a coefficient past the order raises ``TruncationError`` instead of
quietly answering zero.
"""

from fractions import Fraction
from math import gcd, inf

__all__ = [
    "SeriesError", "TruncationError", "DomainError", "SeriesZeroDivisionError",
    "Series", "coeff", "add", "sub", "mul", "div", "reciprocal", "compose",
    "revert", "revert_newton", "derivative", "integral", "pow_int", "pow_rat",
    "exp", "log", "catalan", "eq_to_order", "exact_root", "as_rat",
]


class SeriesError(ArithmeticError):
    """Base class for failures of the series algebra."""


class TruncationError(SeriesError, IndexError):
    """A coefficient past the known truncation order was needed."""


class DomainError(SeriesError, ValueError):
    """An operation was applied outside of its domain."""


class SeriesZeroDivisionError(DomainError, ZeroDivisionError):
    pass


def as_rat(value):
    """Coerce an int, Fraction or "p/q" string to a Fraction.  Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError("exact rational expected, got %r" % (value,))


class Series:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [as_rat(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("a series needs order >= 0")
        if len(cs) > order + 1:
            cs = cs[:order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs):
        # trusted constructor: coeffs is already a tuple of Fractions
        s = object.__new__(cls)
        s._coeffs = coeffs
        return s

    @classmethod
    def const(cls, c, order):
        return cls([c], order)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def x(cls, order):
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, k, order, c=1):
        return cls([0] * k + [c], order)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, n):
        return coeff(self, n)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return "Series([%s], order=%d)" % (
            ", ".join(_fmt(c) for c in self._coeffs), self.order)

    def valuation(self):
        """Index of the first nonzero coefficient, ``math.inf`` for the zero series."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return inf

    def is_unit(self):
        return self._coeffs[0] != 0

    def truncate(self, order):
        if order > self.order:
            raise TruncationError("cannot extend order %d to %d" % (self.order, order))
        return Series._raw(self._coeffs[:order + 1])

    def shift(self, k):
        """Multiply by x**k; the product is known to order + k."""
        return Series._raw((Fraction(0),) * k + self._coeffs)

    def scale(self, c):
        c = as_rat(c)
        return Series._raw(tuple(c * a for a in self._coeffs))

    def derivative(self):
        return derivative(self)

    def __neg__(self):
        return Series._raw(tuple(-c for c in self._coeffs))

    def __pos__(self):
        return self

    def __add__(self, other):
        return add(self, _promote(other, self.order))

    def __radd__(self, other):
        return add(_promote(other, self.order), self)

    def __sub__(self, other):
        return sub(self, _promote(other, self.order))

    def __rsub__(self, other):
        return sub(_promote(other, self.order), self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return div(self, other)
        other = as_rat(other)
        if not other:
            raise SeriesZeroDivisionError("division by the zero scalar")
        return self.scale(1 / other)

    def __rtruediv__(self, other):
        return div(_promote(other, self.order), self)

    def __pow__(self, e):
        if isinstance(e, int):
            return pow_int(self, e)
        e = as_rat(e)
        return pow_rat(self, e.numerator, e.denominator)

    def __call__(self, inner):
        return compose(self, inner)


def _fmt(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def _promote(value, order):
    if isinstance(value, Series):
        return value
    return Series.const(value, order)


def coeff(s, n):
    if n < 0:
        raise IndexError("negative coefficient index %d" % n)
    if n > s.order:
        raise TruncationError("coefficient of x^%d requested from a series of order %d"
                              % (n, s.order))
    return s._coeffs[n]


def add(a, b):
    n = min(a.order, b.order)
    return Series._raw(tuple(a._coeffs[i] + b._coeffs[i] for i in range(n + 1)))


def sub(a, b):
    n = min(a.order, b.order)
    return Series._raw(tuple(a._coeffs[i] - b._coeffs[i] for i in range(n + 1)))


def _mul_list(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def mul(a, b):
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    return Series._raw(tuple(_mul_list(a._coeffs, b._coeffs, n)))


def _divide_units(a, b, n):
    # a / b with b[0] != 0, both lists long enough for n + 1 terms
    b0 = b[0]
    q = []
    for k in range(n + 1):
        acc = a[k]
        for j in range(1, k + 1):
            if b[j]:
                acc -= b[j] * q[k - j]
        q.append(acc / b0)
    return q


def reciprocal(s):
    if not s._coeffs[0]:
        raise DomainError("reciprocal needs a nonzero constant term")
    n = s.order
    return Series._raw(tuple(_divide_units([Fraction(1)] + [Fraction(0)] * n, s._coeffs, n)))


def div(a, b):
    """
    Exact quotient a / b.

    Common powers of x are cancelled first, so x/v makes sense for v in F1.
    The result has order min(a.order, b.order) - valuation(b).
    """
    vb = b.valuation()
    if vb == inf:
        raise SeriesZeroDivisionError("division by a series that is zero to order %d" % b.order)
    va = a.valuation()
    if va < vb:
        raise DomainError("numerator valuation %d is below denominator valuation %d"
                          % (va, vb))
    n = min(a.order, b.order) - vb
    if n < 0:
        raise TruncationError("numerator is not known past x^%d" % a.order)
    q = _divide_units(a._coeffs[vb:], b._coeffs[vb:], n)
    return Series._raw(tuple(q))


def compose(outer, inner):
    """outer(inner(x)), by Horner's rule.  inner must have zero constant term."""
    if inner._coeffs[0]:
        raise DomainError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    ic = inner._coeffs[:n + 1]
    oc = outer._coeffs
    acc = [Fraction(0)] * (n + 1)
    acc[0] = oc[n]
    for i in range(n - 1, -1, -1):
        acc = _mul_list(acc, ic, n)
        acc[0] += oc[i]
    return Series._raw(tuple(acc))


def _check_f1(v, what):
    if v.order < 1:
        raise TruncationError("%s needs a series known to order 1 or more" % what)
    if v._coeffs[0] or not v._coeffs[1]:
        raise DomainError("%s needs a series with zero constant term and nonzero x term" % what)


def revert(v):
    """
    Compositional inverse by Lagrange inversion.

    [x^n] Rev(v) = (1/n) [x^(n-1)] (x/v)^n.
    """
    _check_f1(v, "reversion")
    N = v.order
    h = div(Series.x(N), v)
    out = [Fraction(0)]
    p = h
    for n in range(1, N + 1):
        out.append(p._coeffs[n - 1] / n)
        if n < N:
            p = mul(p, h)
    return Series._raw(tuple(out))


def revert_newton(v):
    """Compositional inverse by Newton iteration; must agree with ``revert``."""
    _check_f1(v, "reversion")
    N = v.order
    x = Series.x(N)
    w = Series([0, 1 / v._coeffs[1]], N)
    dv = derivative(v)
    while True:
        r = compose(v, w) - x
        if r.valuation() == inf:
            return w
        # r has valuation >= 2, so the quotient's top coefficient never
        # reads the unknown x^N term of v'(w); a zero placeholder is safe.
        d = Series(compose(dv, w).coeffs, N)
        w = w - div(r, d)


def derivative(s):
    if s.order == 0:
        raise TruncationError("the derivative of an order-0 series carries no coefficients")
    return Series._raw(tuple(i * c for i, c in enumerate(s._coeffs) if i))


def integral(s):
    """Antiderivative with zero constant term; order grows by one."""
    return Series._raw((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(s._coeffs)))


def pow_int(s, n):
    if n < 0:
        if not s._coeffs[0]:
            raise DomainError("negative power of a series with zero constant term")
        return pow_int(reciprocal(s), -n)
    result = Series.one(s.order)
    base = s
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def _iroot(n, q):
    # floor of the q-th root of a non-negative integer
    if n < 2:
        return n
    r = 1 << ((n.bit_length() + q - 1) // q)
    while True:
        t = ((q - 1) * r + n // r ** (q - 1)) // q
        if t >= r:
            return r
        r = t


def exact_root(c, q):
    """The rational r with r**q == c, or None if there is none."""
    c = as_rat(c)
    if c < 0:
        if q % 2 == 0:
            return None
        r = exact_root(-c, q)
        return None if r is None else -r
    a, b = _iroot(c.numerator, q), _iroot(c.denominator, q)
    if a ** q == c.numerator and b ** q == c.denominator:
        return Fraction(a, b)
    return None


def pow_rat(s, p, q):
    """
    s ** (p/q) for a series whose constant term has an exact rational q-th root.

    The unit part is raised with the recurrence that follows from
    a * (a^e)' = e * a' * a^e.
    """
    if q <= 0:
        raise ValueError("exponent denominator must be positive")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q == 1:
        return pow_int(s, p)
    c0 = s._coeffs[0]
    if not c0:
        raise DomainError("fractional power of a series with zero constant term")
    r = exact_root(c0, q)
    if r is None:
        raise DomainError("constant term %s has no rational %d-th root" % (_fmt(c0), q))
    e = Fraction(p, q)
    a = [c / c0 for c in s._coeffs]
    N = s.order
    b = [Fraction(1)]
    for n in range(1, N + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if a[k]:
                acc += (e * k - (n - k)) * a[k] * b[n - k]
        b.append(acc / n)
    scale = r ** p
    return Series._raw(tuple(scale * c for c in b))


def exp(s):
    if s._coeffs[0]:
        raise DomainError("exp needs a series with zero constant term")
    a = s._coeffs
    e = [Fraction(1)]
    for n in range(1, s.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if a[k]:
                acc += k * a[k] * e[n - k]
        e.append(acc / n)
    return Series._raw(tuple(e))


def log(s):
    if s._coeffs[0] != 1:
        raise DomainError("log needs a series with constant term 1")
    if s.order == 0:
        return Series.zero(0)
    return integral(div(derivative(s), s))


def catalan(order):
    """c(x) as the power-series solution of c = 1 + x c^2."""
    c = [Fraction(1)]
    for n in range(order):
        c.append(sum((c[i] * c[n - i] for i in range(n + 1)), Fraction(0)))
    return Series._raw(tuple(c))


def eq_to_order(a, b, n):
    if n > a.order or n > b.order:
        raise TruncationError("cannot compare to order %d (orders %d, %d)"
                              % (n, a.order, b.order))
    return a._coeffs[:n + 1] == b._coeffs[:n + 1]
