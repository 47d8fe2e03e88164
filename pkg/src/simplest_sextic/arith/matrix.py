"""Exact square-matrix routines over Z and Q.

Matrices are lists of rows.  Rational entries are ``Fraction``; integer
matrices go through fraction-free Bareiss elimination.
"""

from fractions import Fraction
from math import lcm

from . import poly as P


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vec_mat(v, a):
    """Row vector times matrix."""
    n = len(a[0])
    out = [0] * n
    for x, row in zip(v, a):
        if x:
            for j in range(n):
                out[j] += x * row[j]
    return out


def common_denominator(a):
    d = 1
    for row in a:
        for x in row:
            if isinstance(x, Fraction):
                d = lcm(d, x.denominator)
    return d


def det_int(a):
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - f * rk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det(a):
    """Exact determinant of an integer or rational matrix."""
    n = len(a)
    d = common_denominator(a)
    if d == 1:
        return det_int([[int(x) for x in row] for row in a])
    scaled = [[int(x * d) for x in row] for row in a]
    return Fraction(det_int(scaled), d ** n)


def inverse(a):
    """Exact inverse by Gauss-Jordan over Q; raises ZeroDivisionError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k]:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n:] for row in m]


def _interpolate(values):
    """Coefficients of the polynomial taking ``values[t]`` at t = 0..n (Newton form)."""
    n = len(values)
    dd = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / j
    coeffs = []
    for i in range(n - 1, -1, -1):
        # coeffs <- coeffs * (x - i) + dd[i]
        coeffs = P.add(P.mul(coeffs, [-i, 1]), [dd[i]] if dd[i] else [])
    return coeffs


def charpoly(a):
    """det(t*I - a) as an ascending coefficient list (monic, degree n).

    Denominators are cleared first so the determinants at t = 0..n are
    integer Bareiss eliminations; the result is rescaled afterwards.
    """
    n = len(a)
    d = common_denominator(a)
    scaled = [[int(x * d) for x in row] for row in a]
    values = []
    for t in range(n + 1):
        m = [[(t if i == j else 0) - x for j, x in enumerate(row)]
             for i, row in enumerate(scaled)]
        values.append(det_int(m))
    cp = _interpolate(values)
    if d == 1:
        return P.to_int(cp)
    # charpoly(a)(t) = d**-n * charpoly(d*a)(d*t)
    out = [Fraction(c) * d ** k / d ** n for k, c in enumerate(cp)]
    return [int(c) if c.denominator == 1 else c for c in out]
