"""
Exponential Riordan arrays [u, v] and the exponential central matrices {g, f}_e.

    [u, v]:    t[n, k] = n!/k! [x^n] u v^k
    {g, f}_e:  t[n, k] = n!/k! [x^(n-k)] g f^n

Series hold ordinary coefficients; the n!/k! factor is applied per entry.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial as _factorial

from .riordan import Triangle
from .series import DomainError, Series, TruncationError, compose, mul, reciprocal, revert

__all__ = [
    "ExpRiordanPair", "ExpCentralPair", "exp_entry", "exp_central_entry",
    "exp_triangle", "exp_group_inv", "factorial",
]


@lru_cache(maxsize=None)
def factorial(n):
    return _factorial(n)


@dataclass(frozen=True)
class ExpRiordanPair:
    u: Series
    v: Series

    def __post_init__(self):
        if not self.u[0]:
            raise DomainError("u must have a nonzero constant term")
        if self.v.order < 1 or self.v[0] or not self.v[1]:
            raise DomainError("v must have zero constant term and nonzero x term")
        n = min(self.u.order, self.v.order)
        object.__setattr__(self, "u", self.u.truncate(n))
        object.__setattr__(self, "v", self.v.truncate(n))

    @property
    def order(self):
        return self.u.order


@dataclass(frozen=True)
class ExpCentralPair:
    g: Series
    f: Series

    def __post_init__(self):
        if not self.g[0] or not self.f[0]:
            raise DomainError("g and f must have nonzero constant terms")
        n = min(self.g.order, self.f.order)
        object.__setattr__(self, "g", self.g.truncate(n))
        object.__setattr__(self, "f", self.f.truncate(n))

    @property
    def order(self):
        return self.g.order


def _scale(n, k):
    return Fraction(factorial(n), factorial(k))


def exp_entry(p, n, k):
    if n < 0 or k < 0:
        raise IndexError("negative index (%d, %d)" % (n, k))
    if n > p.order:
        raise TruncationError("row %d needs order %d, pair has order %d" % (n, n, p.order))
    if k > n:
        return Fraction(0)
    col = p.u.truncate(n)
    v = p.v.truncate(n)
    for _ in range(k):
        col = mul(col, v)
    return _scale(n, k) * col[n]


def exp_central_entry(c, n, k):
    if n < 0 or k < 0:
        raise IndexError("negative index (%d, %d)" % (n, k))
    if k > n:
        return Fraction(0)
    m = n - k
    if m > c.order:
        raise TruncationError("entry (%d, %d) needs order %d, pair has order %d"
                              % (n, k, m, c.order))
    g, f = c.g.truncate(m), c.f.truncate(m)
    return _scale(n, k) * mul(g, f ** n)[m]


def exp_triangle(p, rows):
    """Materialize either kind of exponential pair."""
    if rows - 1 > p.order:
        raise TruncationError("%d rows need order %d, pair has order %d"
                              % (rows, rows - 1, p.order))
    if rows == 0:
        return Triangle([])
    out = [[] for _ in range(rows)]
    if isinstance(p, ExpRiordanPair):
        col = p.u.truncate(rows - 1)
        v = p.v.truncate(rows - 1)
        for k in range(rows):
            for n in range(k, rows):
                out[n].append(_scale(n, k) * col[n])
            if k < rows - 1:
                col = mul(col, v)
    elif isinstance(p, ExpCentralPair):
        g, f = p.g.truncate(rows - 1), p.f.truncate(rows - 1)
        gf = g
        for n in range(rows):
            out[n] = [_scale(n, k) * gf[n - k] for k in range(n + 1)]
            gf = mul(gf, f)
    else:
        raise TypeError("expected an exponential pair, got %r" % type(p).__name__)
    return Triangle(out)


def exp_group_inv(p):
    """[u, v]^-1 = [1/u(Rev v), Rev v]."""
    w = revert(p.v)
    return ExpRiordanPair(reciprocal(compose(p.u, w)), w)
