"""
The central description {g, f} of a Riordan array, with entries

    t[n, k] = [x^(n-k)] g(x) f(x)^n,       g(0) != 0, f(0) != 0.

Every conversion that reverts a series or differentiates costs one order of
precision; results carry the reduced order rather than padding.
"""

from dataclasses import dataclass
from fractions import Fraction

from .riordan import AZPair, RiordanPair, Triangle, reversal
from .series import (
    DomainError, Series, TruncationError, as_rat, compose, derivative, div,
    eq_to_order, mul, reciprocal, revert,
)

__all__ = [
    "CentralPair", "central_entry", "central_triangle", "to_standard",
    "from_standard", "standard_inverse_pair", "reversal_pair_triangle",
    "central_mul", "central_inv", "az_from_central", "central_from_az",
    "central_is_hitting_time", "vertical_antecedent", "half_of_lifted",
    "chebyshev_moments", "central_column", "factored_form",
]


@dataclass(frozen=True)
class CentralPair:
    g: Series
    f: Series

    def __post_init__(self):
        if not self.g[0]:
            raise DomainError("g must have a nonzero constant term")
        if not self.f[0]:
            raise DomainError("f must have a nonzero constant term")
        n = min(self.g.order, self.f.order)
        object.__setattr__(self, "g", self.g.truncate(n))
        object.__setattr__(self, "f", self.f.truncate(n))

    @property
    def order(self):
        return self.g.order

    @classmethod
    def identity(cls, order):
        return cls(Series.one(order), Series.one(order))

    def truncate(self, order):
        return CentralPair(self.g.truncate(order), self.f.truncate(order))

    def eq_to_order(self, other, n):
        return eq_to_order(self.g, other.g, n) and eq_to_order(self.f, other.f, n)

    def triangle(self, rows):
        return central_triangle(self, rows)

    def __mul__(self, other):
        return central_mul(self, other)

    def inverse(self):
        return central_inv(self)


def _x_over(f):
    return div(Series.x(f.order), f)


def central_entry(c, n, k):
    if n < 0 or k < 0:
        raise IndexError("negative index (%d, %d)" % (n, k))
    if k > n:
        return Fraction(0)
    m = n - k
    if m > c.order:
        raise TruncationError("entry (%d, %d) needs order %d, pair has order %d"
                              % (n, k, m, c.order))
    # only coefficients up to x^(n-k) matter
    g, f = c.g.truncate(m), c.f.truncate(m)
    return mul(g, f ** n)[m]


def central_triangle(c, rows):
    if rows - 1 > c.order:
        raise TruncationError("%d rows need order %d, pair has order %d"
                              % (rows, rows - 1, c.order))
    if rows == 0:
        return Triangle([])
    g, f = c.g.truncate(rows - 1), c.f.truncate(rows - 1)
    out = []
    gf = g
    for n in range(rows):
        out.append([gf[n - k] for k in range(n + 1)])
        gf = mul(gf, f)
    return Triangle(out)


def reversal_pair_triangle(c, rows):
    """Rows [x^k] g f^n for k = 0..n."""
    if rows - 1 > c.order:
        raise TruncationError("%d rows need order %d, pair has order %d"
                              % (rows, rows - 1, c.order))
    if rows == 0:
        return Triangle([])
    g, f = c.g.truncate(rows - 1), c.f.truncate(rows - 1)
    out = []
    gf = g
    for n in range(rows):
        out.append([gf[k] for k in range(n + 1)])
        gf = mul(gf, f)
    return Triangle(out)


def central_column(c, n_max):
    """The sequence [x^n] g f^n, n = 0..n_max."""
    if n_max > c.order:
        raise TruncationError("column to %d needs order %d, pair has order %d"
                              % (n_max, n_max, c.order))
    g, f = c.g.truncate(n_max), c.f.truncate(n_max)
    out = []
    gf = g
    for n in range(n_max + 1):
        out.append(gf[n])
        gf = mul(gf, f)
    return Series(out)


def to_standard(c):
    """(g(R) x R'/R, R) with R = Rev(x/f)."""
    R = revert(_x_over(c.f))
    return RiordanPair(mul(compose(c.g, R), div(derivative(R).shift(1), R)), R)


def factored_form(c):
    """The two factors (x R'/R, R) and (g, x) whose product is to_standard(c)."""
    R = revert(_x_over(c.f))
    return (RiordanPair(div(derivative(R).shift(1), R), R),
            RiordanPair(c.g, Series.x(c.order)))


def from_standard(p):
    """f = x/Rev(v), g = f u(Rev v) / v'(Rev v)."""
    w = revert(p.v)
    f = div(Series.x(p.order), w)
    g = div(mul(f, compose(p.u, w)), compose(derivative(p.v), w))
    return CentralPair(g, f)


def standard_inverse_pair(c):
    """The classical pair ((1/g) x (x/f)'/(x/f), x/f) of the inverse matrix."""
    h = _x_over(c.f)
    lead = div(derivative(h).shift(1), h)
    return RiordanPair(mul(reciprocal(c.g), lead), h)


def central_mul(c1, c2):
    """{g1(x/f2) g2, x / ((x/f1) o (x/f2))}."""
    h1, h2 = _x_over(c1.f), _x_over(c2.f)
    g = mul(compose(c1.g, h2), c2.g)
    f = div(Series.x(c1.order), compose(h1, h2))
    return CentralPair(g, f)


def central_inv(c):
    R = revert(_x_over(c.f))
    return CentralPair(reciprocal(compose(c.g, R)), div(Series.x(c.order), R))


def az_from_central(c):
    """
    A = f and Z = (f/x) (1 - (1/g)(1 - x f'/f)).

    The bracket must vanish at 0 for Z to be a power series; that happens
    exactly when g(0) = 1, i.e. when the array's corner entry is 1.
    """
    f, g = c.f, c.g
    inner = 1 - div(derivative(f).shift(1), f)
    bracket = 1 - div(inner, g)
    if bracket[0]:
        raise DomainError("inconsistent central pair: no Z-sequence when g(0) = %s" % g[0])
    Z = mul(div(bracket, Series.x(bracket.order)), f)
    return AZPair(f.truncate(Z.order), Z)


def central_from_az(az):
    """f = A, g = (A - x A') / (A - x Z)."""
    A, Z = az.A, az.Z
    num = A - derivative(A).shift(1)
    den = A - Z.shift(1)
    g = div(num, den)
    return CentralPair(g, A.truncate(g.order))


def central_is_hitting_time(c):
    return all(a == (1 if i == 0 else 0) for i, a in enumerate(c.g))


def vertical_antecedent(c):
    """(1/g(Rev(x/f)), x^2/Rev(x/f)); its vertical half is the inverse of {g, f}."""
    R = revert(_x_over(c.f))
    return RiordanPair(reciprocal(compose(c.g, R)), div(Series.x(c.order).shift(1), R))


def half_of_lifted(c):
    """(g, x f): the classical array whose vertical half is {g, f}."""
    return RiordanPair(c.g, c.f.shift(1))


def chebyshev_moments(s, t, a, b, order):
    """mu_n = [x^n] (1 - b x^2)/(1 - s x - t x^2) (1 + a x + b x^2)^n for n <= order."""
    s, t, a, b = (as_rat(z) for z in (s, t, a, b))
    weight = div(Series([1, 0, -b], order), Series([1, -s, -t], order))
    base = Series([1, a, b], order)
    out = []
    acc = weight
    for n in range(order + 1):
        out.append(acc[n])
        if n < order:
            acc = mul(acc, base)
    return Series(out)
