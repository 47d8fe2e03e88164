"""Dense univariate polynomials over Z and Q.

A polynomial is a list of coefficients in ascending order, so
``[1, 0, 2]`` is ``1 + 2*x**2``.  Coefficients are Python ints or
``fractions.Fraction``; trailing zeros are always stripped and the zero
polynomial is the empty list.  Functions never mutate their arguments.
"""

from fractions import Fraction
from math import gcd


def normalize(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return list(a[:n])


def degree(a):
    """Degree of ``a``; the zero polynomial has degree -1."""
    return len(normalize(a)) - 1


def lead(a):
    return a[-1] if a else 0


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] += c
    return normalize(res)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    return normalize([c * x for x in a])


def mul(a, b):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            res[i + j] += x * y
    return normalize(res)


def power(a, n):
    if n < 0:
        raise ValueError("negative exponent")
    result = [1]
    base = normalize(a)
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def derivative(a):
    return normalize([i * c for i, c in enumerate(a)][1:])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def compose(a, b):
    """Return ``a(b(x))``."""
    acc = []
    for c in reversed(a):
        acc = add(mul(acc, b), [c] if c else [])
    return acc


def divmod_field(a, b):
    """Quotient and remainder of ``a / b`` over Q (exact Fractions).

    If ``b`` is monic with integer coefficients and ``a`` is integral the
    result stays integral.
    """
    b = normalize(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = normalize(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    r = list(r)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        if lb == 1:
            t = c
        elif isinstance(c, int) and isinstance(lb, int) and c % lb == 0:
            t = c // lb
        else:
            t = Fraction(c) / lb
        q[k - db] = t
        for j in range(db + 1):
            r[k - db + j] -= t * b[j]
    return normalize(q), normalize(r[:db])


def rem(a, b):
    return divmod_field(a, b)[1]


def pseudo_rem(a, b):
    """Pseudo-remainder ``prem(a, b)`` = remainder of lc(b)**(da-db+1) * a by b, over Z."""
    a = normalize(a)
    b = normalize(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a
    lb = b[-1]
    r = list(a)
    for k in range(da, db - 1, -1):
        c = r[k]
        r = [lb * x for x in r[:k]]
        if c:
            for j in range(db):
                r[k - db + j] -= c * b[j]
    return normalize(r)


def content(a):
    """Non-negative gcd of the integer coefficients (0 for the zero polynomial)."""
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def primitive_part(a):
    a = normalize(a)
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def monic(a):
    a = normalize(a)
    if not a:
        raise ZeroDivisionError("zero polynomial has no monic associate")
    lc = a[-1]
    return [Fraction(c) / lc for c in a]


def gcd_rational(a, b):
    """Monic gcd over Q."""
    a, b = normalize(a), normalize(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a) if a else []


def ext_gcd_rational(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic, over Q."""
    r0, r1 = normalize(a), normalize(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_field(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    lc = r0[-1]
    inv = Fraction(1) / lc
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def is_integral(a):
    return all(Fraction(c).denominator == 1 for c in a)


def to_int(a):
    """Convert an integral rational polynomial to int coefficients."""
    out = []
    for c in a:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"coefficient {c} is not an integer")
        out.append(c.numerator)
    return normalize(out)
