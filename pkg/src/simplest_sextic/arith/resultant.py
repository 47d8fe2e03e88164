"""Resultants and discriminants over Z via the subresultant PRS."""

from . import poly as P


def resultant(a, b):
    """Res(a, b) for nonzero integer polynomials.

    Collins/Brown subresultant remainder sequence; every division below is
    exact over Z, so no fractions appear.
    """
    a, b = P.normalize(a), P.normalize(b)
    if not a or not b:
        raise ValueError("resultant of a zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da & db & 1:
            s = -1
    ca, cb = P.content(a), P.content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca ** db * cb ** da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da & db & 1:
            s = -s
        r = P.pseudo_rem(a, b)
        if not r:
            return 0
        a = b
        div = g * h ** delta
        b = [c // div for c in r]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g ** delta // h ** (delta - 1)
        if len(b) == 1:
            break
    da = len(a) - 1
    h = b[0] ** da // h ** (da - 1)
    return s * t * h


def discriminant(a):
    """Discriminant of a monic integer polynomial of degree >= 2."""
    a = P.normalize(a)
    n = len(a) - 1
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    if a[-1] != 1:
        raise ValueError("discriminant is only implemented for monic input")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(a, P.derivative(a))


def sylvester_matrix(a, b):
    """Sylvester matrix of ``a`` and ``b`` (rows of shifted descending coefficients)."""
    a, b = P.normalize(a), P.normalize(b)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    ra, rb = a[::-1], b[::-1]
    for i in range(n):
        rows.append([0] * i + ra + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + rb + [0] * (size - n - 1 - i))
    return rows
