"""Exact rational scalars, inequalities and linear-algebra kernels.

Scalars are :class:`fractions.Fraction`, which is already canonical
(positive denominator, reduced) and arbitrary precision.  All kernels
clear denominators row by row and run fraction-free (Bareiss)
elimination over Python integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .errors import ParseError

Rational = Fraction

_TOKEN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(token: str, line: Optional[int] = None) -> Fraction:
    """Parse ``p`` or ``p/q`` (q > 0) into a Fraction."""
    m = _TOKEN.match(token)
    if m is None:
        raise ParseError(f"not a rational number: {token!r}", line)
    if m.group(2) is not None:
        q = int(m.group(2))
        if q == 0:
            raise ParseError(f"zero denominator in {token!r}", line)
        return Fraction(int(m.group(1)), q)
    return Fraction(int(m.group(1)))


def format_rational(r) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def as_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in values)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def integer_row(row: Sequence) -> list[int]:
    """Positive rescaling of a rational row to integers."""
    den = reduce(lcm, (Fraction(x).denominator for x in row), 1)
    return [int(Fraction(x) * den) for x in row]


def primitive(row: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, row, 0)
    if g == 0:
        return tuple(row)
    return tuple(x // g for x in row)


@dataclass(frozen=True)
class Inequality:
    """Half-space ``a . x <= b``."""

    a: tuple
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_vector(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not any(self.a):
            raise ValueError("inequality with zero normal vector")

    @property
    def dim(self) -> int:
        return len(self.a)

    def slack(self, x) -> Fraction:
        return self.b - dot(self.a, x)

    def satisfied(self, x, strict: bool = False) -> bool:
        s = self.slack(x)
        return s > 0 if strict else s >= 0

    def key(self) -> tuple[int, ...]:
        """Primitive integer form of (a, b); equal keys mean the same half-space."""
        return primitive(integer_row(self.a + (self.b,)))

    def canonical(self) -> "Inequality":
        k = self.key()
        return Inequality(k[:-1], k[-1])

    def lifted(self, extra: int = 1, coeffs=None) -> "Inequality":
        coeffs = (0,) * extra if coeffs is None else tuple(coeffs)
        return Inequality(self.a + as_vector(coeffs), self.b)


@dataclass(frozen=True)
class Hyperplane:
    """Affine hyperplane ``a . x = b``; the orientation is irrelevant."""

    a: tuple
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_vector(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not any(self.a):
            raise ValueError("hyperplane with zero normal vector")

    def contains(self, x) -> bool:
        return dot(self.a, x) == self.b

    def key(self) -> tuple[int, ...]:
        k = primitive(integer_row(self.a + (self.b,)))
        first = next(c for c in k if c != 0)
        return k if first > 0 else tuple(-c for c in k)


def _bareiss_rank(m: list[list[int]]) -> int:
    """Rank of an integer matrix; destroys ``m``."""
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rank(rows: Sequence[Sequence]) -> int:
    """Dimension of the span of ``rows``."""
    rows = list(rows)
    if not rows:
        return 0
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("rows of unequal length")
    return _bareiss_rank([integer_row(r) for r in rows])


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    return _bareiss_rank([list(r) for r in rows])


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull; -1 for no points."""
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    return rank([[x - y for x, y in zip(p, p0)] for p in points[1:]])


def int_affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return _bareiss_rank([[x - y for x, y in zip(p, p0)] for p in points[1:]])


def solve_square(A: Sequence[Sequence], b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Exact solution of ``A x = b`` or None when A is singular."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve_square needs an n x n matrix and length-n vector")
    m = [integer_row(list(A[i]) + [b[i]]) for i in range(n)]
    return _solve_int(m, n)


def _solve_int(m: list[list[int]], n: int) -> Optional[tuple[Fraction, ...]]:
    # fraction-free forward elimination on augmented [A | b]
    prev = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        row_c = m[c]
        for i in range(c + 1, n):
            row_i = m[i]
            mic = row_i[c]
            for j in range(c + 1, n + 1):
                row_i[j] = (p * row_i[j] - mic * row_c[j]) // prev
            row_i[c] = 0
        prev = p
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n]) - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return tuple(x)


def solve_int_system(rows: Sequence[Sequence[int]], rhs: Sequence[int]):
    """Integer variant of :func:`solve_square` used by the hot loops."""
    n = len(rows)
    return _solve_int([list(rows[i]) + [rhs[i]] for i in range(n)], n)


def determinant_int(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        for i in range(c + 1, n):
            aic = a[i][c]
            for j in range(c + 1, n):
                a[i][j] = (p * a[i][j] - aic * a[c][j]) // prev
        prev = p
    return sign * a[n - 1][n - 1]


def hyperplane_normal(points: Sequence[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """Normal of the hyperplane through d integer points in R^d.

    Returns a primitive integer vector, or None if the points are
    affinely dependent.
    """
    p0 = points[0]
    d = len(p0)
    diffs = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    normal = []
    for k in range(d):
        minor = [row[:k] + row[k + 1:] for row in diffs]
        det = determinant_int(minor)
        normal.append(-det if k % 2 else det)
    if not any(normal):
        return None
    return primitive(normal)


def _simplex_max(c, A, b):
    """Maximise c.y subject to A y <= b, y >= 0, with b >= 0.

    Dense tableau, Bland's rule.  Returns (value, y).  The caller
    guarantees boundedness.
    """
    m, n = len(A), len(c)
    width = n + m
    T = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]] + [Fraction(0)] * m + [Fraction(b[i])]
        row[n + i] = Fraction(1)
        T.append(row)
    z = [Fraction(-v) for v in c] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]
    while True:
        enter = next((j for j in range(width) if z[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = T[i][enter]
            if coef > 0:
                ratio = T[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise ArithmeticError("unbounded LP in _simplex_max")
        prow = T[leave]
        pv = prow[enter]
        if pv != 1:
            prow = [v / pv for v in prow]
            T[leave] = prow
        for i in range(m):
            if i != leave:
                f = T[i][enter]
                if f:
                    row = T[i]
                    T[i] = [rv - f * pv_ for rv, pv_ in zip(row, prow)]
        f = z[enter]
        z = [zv - f * pv_ for zv, pv_ in zip(z, prow)]
        basis[leave] = enter
    y = [Fraction(0)] * width
    for i, j in enumerate(basis):
        y[j] = T[i][-1]
    return z[-1], y[:n]


def max_margin(ineqs: Sequence[Inequality], cap=1):
    """Largest t <= cap such that some x has a.x + t <= b for every inequality.

    Returns (t, x).  The system is always feasible for small enough t, so
    a single phase of the simplex method suffices.
    """
    ineqs = list(ineqs)
    if not ineqs:
        raise ValueError("empty system")
    d = ineqs[0].dim
    t0 = min(min(q.b for q in ineqs), Fraction(0)) - 1
    # x = xp - xn, t = t0 + w, all of xp, xn, w >= 0
    A, rhs = [], []
    for q in ineqs:
        A.append(list(q.a) + [-v for v in q.a] + [1])
        rhs.append(q.b - t0)
    A.append([0] * (2 * d) + [1])
    rhs.append(Fraction(cap) - t0)
    c = [0] * (2 * d) + [1]
    w, y = _simplex_max(c, A, rhs)
    x = tuple(y[i] - y[d + i] for i in range(d))
    return t0 + w, x


def feasible_point(ineqs: Sequence[Inequality], strict: bool = False):
    """A point satisfying every inequality (strictly if asked), or None."""
    t, x = max_margin(ineqs)
    if t > 0 or (t == 0 and not strict):
        return x
    return None
