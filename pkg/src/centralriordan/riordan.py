"""
Riordan arrays in the classical (u, v) description, plus exact
lower-triangular matrices.
"""

from dataclasses import dataclass
from fractions import Fraction

from .series import (
    DomainError, Series, TruncationError, as_rat, compose, derivative, div,
    eq_to_order, mul, reciprocal, revert,
)

__all__ = [
    "SingularTriangleError", "Triangle", "RiordanPair", "AZPair", "entry",
    "triangle", "group_mul", "group_inv", "triangle_invert", "a_sequence",
    "z_sequence", "is_hitting_time", "vertical_half", "horizontal_half",
    "halves_formula", "reversal",
]


class SingularTriangleError(DomainError):
    pass


class Triangle:
    """Lower-triangular matrix stored by rows; row n holds entries k = 0..n."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        out = []
        for n, row in enumerate(rows):
            row = tuple(as_rat(c) for c in row)
            if len(row) != n + 1:
                raise ValueError("row %d has %d entries, expected %d" % (n, len(row), n + 1))
            out.append(row)
        self._rows = tuple(out)

    @classmethod
    def identity(cls, size):
        return cls([[int(k == n) for k in range(n + 1)] for n in range(size)])

    @classmethod
    def from_square(cls, matrix):
        """Build from a full square listing; entries above the diagonal must be zero."""
        for n, row in enumerate(matrix):
            if any(row[n + 1:]):
                raise ValueError("row %d is not lower-triangular" % n)
        return cls([row[:n + 1] for n, row in enumerate(matrix)])

    @property
    def size(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __len__(self):
        return len(self._rows)

    def __getitem__(self, nk):
        n, k = nk
        if n < 0 or k < 0:
            raise IndexError("negative triangle index (%d, %d)" % (n, k))
        if n >= len(self._rows):
            raise TruncationError("row %d requested from a %d-row triangle" % (n, len(self._rows)))
        if k > n:
            return Fraction(0)
        return self._rows[n][k]

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return "Triangle(%r)" % ([[str(c) for c in row] for row in self._rows],)

    def truncate(self, size):
        if size > len(self._rows):
            raise TruncationError("cannot take %d rows of a %d-row triangle" % (size, len(self._rows)))
        t = object.__new__(Triangle)
        t._rows = self._rows[:size]
        return t

    def column(self, k):
        return [self[n, k] for n in range(k, len(self._rows))]

    def to_lists(self):
        return [list(row) for row in self._rows]

    def first_difference(self, other):
        """First (n, k, mine, theirs) where the triangles disagree, or None."""
        size = max(len(self), len(other))
        for n in range(size):
            for k in range(n + 1):
                a = self._rows[n][k] if n < len(self) else None
                b = other._rows[n][k] if n < len(other) else None
                if a != b:
                    return n, k, a, b
        return None

    def __matmul__(self, other):
        if len(self) != len(other):
            raise ValueError("size mismatch %d vs %d" % (len(self), len(other)))
        a, b = self._rows, other._rows
        rows = []
        for n in range(len(a)):
            rows.append([sum((a[n][j] * b[j][k] for j in range(k, n + 1)), Fraction(0))
                         for k in range(n + 1)])
        return Triangle(rows)


def triangle_invert(t):
    """Inverse of a lower-triangular matrix by forward substitution."""
    rows = t.rows
    inv = []
    for n, row in enumerate(rows):
        d = row[n]
        if not d:
            raise SingularTriangleError("zero diagonal entry in row %d" % n)
        new = []
        for k in range(n):
            acc = sum((row[j] * inv[j][k] for j in range(k, n)), Fraction(0))
            new.append(-acc / d)
        new.append(1 / d)
        inv.append(new)
    return Triangle(inv)


def reversal(t):
    return Triangle([row[::-1] for row in t.rows])


def _half_size(t, rows):
    if rows is None:
        rows = (len(t) + 1) // 2
    if 2 * rows - 1 > len(t):
        raise TruncationError("a %d-row half needs %d source rows, have %d"
                              % (rows, 2 * rows - 1, len(t)))
    return rows


def vertical_half(t, rows=None):
    """The triangle (t[2n-k, n])."""
    rows = _half_size(t, rows)
    return Triangle([[t[2 * n - k, n] for k in range(n + 1)] for n in range(rows)])


def horizontal_half(t, rows=None):
    """The triangle (t[2n, n+k])."""
    rows = _half_size(t, rows)
    return Triangle([[t[2 * n, n + k] for k in range(n + 1)] for n in range(rows)])


@dataclass(frozen=True)
class RiordanPair:
    """A Riordan array (u, v) with u(0) != 0, v(0) = 0 and v'(0) != 0."""

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

    @classmethod
    def identity(cls, order):
        return cls(Series.one(order), Series.x(order))

    def truncate(self, order):
        return RiordanPair(self.u.truncate(order), self.v.truncate(order))

    def triangle(self, rows):
        return triangle(self, rows)

    def __mul__(self, other):
        return group_mul(self, other)

    def inverse(self):
        return group_inv(self)


@dataclass(frozen=True)
class AZPair:
    A: Series
    Z: Series

    def __post_init__(self):
        if not self.A[0]:
            raise DomainError("the A-sequence must have a nonzero constant term")
        n = min(self.A.order, self.Z.order)
        object.__setattr__(self, "A", self.A.truncate(n))
        object.__setattr__(self, "Z", self.Z.truncate(n))

    @property
    def order(self):
        return self.A.order

    def truncate(self, order):
        return AZPair(self.A.truncate(order), self.Z.truncate(order))


def entry(p, n, k):
    """[x^n] u v^k."""
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
    return col[n]


def triangle(p, rows):
    if rows - 1 > p.order:
        raise TruncationError("%d rows need order %d, pair has order %d"
                              % (rows, rows - 1, p.order))
    out = [[] for _ in range(rows)]
    if rows == 0:
        return Triangle([])
    col = p.u.truncate(rows - 1)
    v = p.v.truncate(rows - 1)
    for k in range(rows):
        for n in range(k, rows):
            out[n].append(col[n])
        if k < rows - 1:
            col = mul(col, v)
    return Triangle(out)


def group_mul(p, q):
    """(d, h) . (u, v) = (d u(h), v(h)); the left operand supplies the substitution."""
    return RiordanPair(mul(p.u, compose(q.u, p.v)), compose(q.v, p.v))


def group_inv(p):
    w = revert(p.v)
    return RiordanPair(reciprocal(compose(p.u, w)), w)


def a_sequence(p):
    return div(Series.x(p.order), revert(p.v))


def z_sequence(p):
    """
    Z = (1/Rev v) (1 - 1/u(Rev v)).

    Only defined when u(0) = 1; otherwise the bracket keeps a constant term
    and the quotient would need a 1/x term.
    """
    w = revert(p.v)
    bracket = 1 - reciprocal(compose(p.u, w))
    if bracket[0]:
        raise DomainError("no Z-sequence: u(0) = %s, expected 1" % p.u[0])
    return div(bracket, w)


def is_hitting_time(p):
    """True when u = x v'/v to the available order."""
    target = div(derivative(p.v).shift(1), p.v)
    n = min(target.order, p.u.order)
    return eq_to_order(p.u, target, n)


def halves_formula(p):
    """
    Closed-form pairs (V, H) for the vertical and horizontal halves.

    With phi = Rev(x^2/v):  V = (u(phi) x phi'/phi, phi),
    H = (u(phi), x) . (x phi'/phi, v(phi)).
    """
    N = p.order
    phi = revert(div(Series.x(N).shift(1), p.v))
    lead = div(derivative(phi).shift(1), phi)
    first = mul(compose(p.u, phi), lead)
    V = RiordanPair(first, phi)
    H = group_mul(RiordanPair(compose(p.u, phi), Series.x(N)),
                  RiordanPair(lead, compose(p.v, phi)))
    return V, H
