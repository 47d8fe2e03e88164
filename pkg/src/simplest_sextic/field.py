"""Arithmetic in the simplest sextic field K_m = Q(alpha), f_m(alpha) = 0.

Elements carry rational coordinates in the power basis 1, alpha, ..., alpha^5.
Everything is exact; conjugates are never computed numerically, only
through the cyclic automorphism ``sigma: alpha -> (alpha - 1)/(alpha + 2)``.
"""

from fractions import Fraction
from functools import cached_property
from math import lcm

from .arith import matrix as M
from .arith import poly as P

EXCLUDED_M = frozenset({-8, -3, 0, 5})
DEGREE = 6


class DomainError(ValueError):
    """Input outside the range where the construction is defined."""


class InconsistencyError(ArithmeticError):
    """A property that must hold for every admissible m failed."""


def defining_poly(m):
    """Coefficients of f_m, ascending."""
    return [1, 2 * m + 6, 5 * m, -20, -(5 * m + 15), -2 * m, 1]


def qm_of(m):
    return m * m + 3 * m + 9


class SexticField:
    def __init__(self, m):
        m = int(m)
        if m in EXCLUDED_M:
            raise DomainError(f"excluded parameter m={m}: f_m is reducible")
        self.m = m
        self.f = defining_poly(m)
        self.q = qm_of(m)
        if P.evaluate(self.f, -2) == 0:
            raise InconsistencyError("f_m(-2) = 0, sigma is undefined")

    def __repr__(self):
        return f"SexticField(m={self.m})"

    def __eq__(self, other):
        return isinstance(other, SexticField) and other.m == self.m

    def __hash__(self):
        return hash(("SexticField", self.m))

    def __reduce__(self):
        return (SexticField, (self.m,))

    # -- constructors -------------------------------------------------------

    def element(self, coords):
        return FieldElement(self, coords)

    def from_poly(self, coeffs):
        """Element given by a rational polynomial in alpha, reduced mod f_m."""
        r = P.rem(P.normalize(list(coeffs)), self.f)
        return FieldElement(self, r)

    def one(self):
        return FieldElement(self, [1])

    def zero(self):
        return FieldElement(self, [])

    @property
    def alpha(self):
        return FieldElement(self, [0, 1])

    # -- cached linear data -------------------------------------------------

    @cached_property
    def _alpha_power_matrices(self):
        """Integer matrices of multiplication by alpha^j, j = 0..5 (row convention)."""
        mats = []
        rows = [[int(i == j) for j in range(DEGREE)] for i in range(DEGREE)]
        for j in range(DEGREE):
            mats.append([list(r) for r in rows])
            rows = [self._times_alpha(r) for r in rows]
        return mats

    def _times_alpha(self, v):
        # alpha^6 = -(f_0 + f_1 alpha + ... + f_5 alpha^5)
        top = v[-1]
        out = [0] + list(v[:-1])
        if top:
            for i in range(DEGREE):
                out[i] -= top * self.f[i]
        return out

    @cached_property
    def sigma_matrix(self):
        """Row j holds the coordinates of sigma(alpha)^j."""
        a = self.alpha
        s = (a - 1) * (a + 2).inverse()
        rows = []
        cur = self.one()
        for _ in range(DEGREE):
            rows.append(cur.coords)
            cur = cur * s
        return rows

    def sigma_power_matrix(self, k):
        k %= DEGREE
        out = M.identity(DEGREE)
        for _ in range(k):
            out = M.mat_mul(out, self.sigma_matrix)
        return out


def _as_coords(field, coords):
    c = [x if isinstance(x, int) else Fraction(x) for x in coords]
    if len(c) > DEGREE:
        c = P.rem(P.normalize(c), field.f)
    c = list(c) + [0] * (DEGREE - len(c))
    return tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in c)


class FieldElement:
    """Immutable element of K_m in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", _as_coords(field, coords))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.field, self.coords))

    def __repr__(self):
        return f"FieldElement(m={self.field.m}, coords={[str(c) for c in self.coords]})"

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement(self.field, [other])
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.m, self.coords))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DomainError("elements belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, [x + y for x, y in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-x for x in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, [x - y for x, y in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = P.mul(P.normalize(list(self.coords)), P.normalize(list(other.coords)))
        return FieldElement(self.field, P.rem(prod, self.field.f))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [Fraction(x) / other for x in self.coords])
        return self * self._coerce(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def inverse(self):
        """Inverse through the extended Euclidean algorithm against f_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = P.ext_gcd_rational(P.normalize(list(self.coords)), self.field.f)
        if len(g) != 1:
            raise InconsistencyError(f"gcd with f_m has degree {len(g) - 1}; f_m is reducible")
        return FieldElement(self.field, s)

    def sigma(self, k=1):
        """Image under sigma^k, sigma(alpha) = (alpha - 1)/(alpha + 2)."""
        k %= DEGREE
        if k == 0:
            return self
        rows = self.field.sigma_matrix
        out = self
        for _ in range(k):
            out = FieldElement(self.field, M.vec_mat(out.coords, rows))
        return out

    def scaled(self):
        """``(d, v)`` with ``d`` the least positive integer making ``v = d*coords`` integral."""
        d = 1
        for c in self.coords:
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
        if d == 1:
            return 1, [int(c) for c in self.coords]
        return d, [int(c * d) for c in self.coords]

    def _int_multiplication_matrix(self, v):
        mats = self.field._alpha_power_matrices
        out = [[0] * DEGREE for _ in range(DEGREE)]
        for c, a in zip(v, mats):
            if c:
                for i in range(DEGREE):
                    oi, ai = out[i], a[i]
                    for j in range(DEGREE):
                        oi[j] += c * ai[j]
        return out

    def multiplication_matrix(self):
        """Matrix of x -> self*x on row vectors: row i = coords of self*alpha^i."""
        d, v = self.scaled()
        mm = self._int_multiplication_matrix(v)
        if d == 1:
            return mm
        return [[Fraction(x, d) for x in row] for row in mm]

    def norm(self):
        d, v = self.scaled()
        n = M.det_int(self._int_multiplication_matrix(v))
        return n if d == 1 else Fraction(n, d**DEGREE)

    def trace(self):
        d, v = self.scaled()
        mm = self._int_multiplication_matrix(v)
        t = sum(mm[i][i] for i in range(DEGREE))
        return t if d == 1 else Fraction(t, d)

    def charpoly(self):
        d, v = self.scaled()
        cp = M.charpoly(self._int_multiplication_matrix(v))
        if d == 1:
            return cp
        # charpoly(a)(t) = d^-6 * charpoly(d*a)(d*t)
        out = [Fraction(c * d**k, d**DEGREE) for k, c in enumerate(cp)]
        return [int(c) if c.denominator == 1 else c for c in out]

    def is_algebraic_integer(self):
        return P.is_integral(self.charpoly())


def galois_sigma(a, k=1):
    return a.sigma(k)


def elem_norm(a):
    return a.norm()


def elem_trace(a):
    return a.trace()


def is_algebraic_integer(a):
    return a.is_algebraic_integer()
