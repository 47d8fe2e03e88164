"""Polynomials over the prime field F_p."""

from dataclasses import dataclass


@dataclass(frozen=True)
class ModPolynomial:
    """Dense polynomial over F_p, ascending coefficients reduced into [0, p).

    ``p`` is assumed prime; nothing here checks that.
    """

    p: int
    coeffs: tuple = ()

    def __post_init__(self):
        p = self.p
        c = [x % p for x in self.coeffs]
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_ints(cls, coeffs, p):
        return cls(p, tuple(coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def _check(self, other):
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return ModPolynomial(self.p, tuple(res))

    def __neg__(self):
        return ModPolynomial(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPolynomial(self.p)
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return ModPolynomial(self.p, tuple(res))

    def __eq__(self, other):
        return isinstance(other, ModPolynomial) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"ModPolynomial(p={self.p}, coeffs={list(self.coeffs)})"

    def monic(self):
        if not self.coeffs:
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return ModPolynomial(self.p, tuple(c * inv for c in self.coeffs))

    def divmod(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        p = self.p
        b = other.coeffs
        db = len(b) - 1
        inv = pow(b[-1], -1, p)
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return ModPolynomial(p), self
        q = [0] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] % p
            if not c:
                continue
            t = c * inv % p
            q[k - db] = t
            for j in range(db + 1):
                r[k - db + j] = (r[k - db + j] - t * b[j]) % p
        return ModPolynomial(p, tuple(q)), ModPolynomial(p, tuple(r[:db]))

    def __floordiv__(self, other):
        q, r = self.divmod(other)
        return q

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self):
        return ModPolynomial(self.p, tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pth_root(self):
        """Given ``a(x) = b(x**p)``, return ``b`` (coefficients are fixed by Frobenius on F_p)."""
        p = self.p
        c = self.coeffs
        if any(c[i] for i in range(len(c)) if i % p):
            raise ArithmeticError("polynomial is not a p-th power")
        return ModPolynomial(p, c[::p])


def mod_radical(a):
    """Product of the distinct monic irreducible factors of ``a`` over F_p."""
    if a.is_zero():
        raise ValueError("radical of the zero polynomial")
    a = a.monic()
    if a.degree <= 0:
        return ModPolynomial(a.p, (1,))
    da = a.derivative()
    if da.is_zero():
        return mod_radical(a.pth_root())
    g = a.gcd(da)
    # w collects every irreducible whose multiplicity is prime to p
    w = a.exact_div(g)
    rest = g
    while True:
        c = rest.gcd(w)
        if c.is_one():
            break
        rest = rest.exact_div(c)
    if rest.degree > 0:
        w = w * mod_radical(rest.pth_root())
    return w.monic()
