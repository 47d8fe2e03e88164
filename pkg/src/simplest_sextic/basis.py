"""Integral bases of K_m: template instantiation and per-m certification."""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import isqrt

from .arith import matrix as M
from .arith import poly as P
from .arith.modpoly import ModPolynomial, mod_radical
from .arith.resultant import discriminant
from .field import EXCLUDED_M, DomainError, InconsistencyError, SexticField, defining_poly, qm_of
from .templates import BasisTemplate, template_for_residue

TRIAL_DIVISION_BOUND = 10**6


class UndecidedError(DomainError):
    """Squarefreeness could not be settled by trial division up to the bound."""


@lru_cache(maxsize=4)
def _primes_up_to(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i in range(n + 1) if sieve[i])


def factorize(n, bound=TRIAL_DIVISION_BOUND):
    """Trial-division factorization of ``|n|``.

    Returns ``(factors, complete)`` where ``factors`` maps primes to
    exponents.  ``complete`` is False when an unfactored cofactor remains
    (it is then stored under its own value with exponent 1).
    """
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    factors = {}
    for p in _primes_up_to(bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    else:
        if n > 1 and n > bound * bound:
            factors[n] = 1
            return factors, False
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors, True


def is_squarefree(n, bound=TRIAL_DIVISION_BOUND):
    """Squarefreeness by complete trial division; raises UndecidedError past ``bound``."""
    factors, complete = factorize(n, bound)
    if any(e > 1 for e in factors.values()):
        return False
    if not complete:
        raise UndecidedError(f"{n} not fully factored by trial division up to {bound}")
    return True


def residue_of(m):
    """Representative of m mod 36 in 1..36."""
    r = m % 36
    return r if r else 36


def template_for(m):
    m = int(m)
    if m in EXCLUDED_M:
        raise DomainError(f"excluded parameter m={m}")
    r = residue_of(m)
    if r % 3 == 0:
        raise DomainError(f"m={m} is divisible by 3, so 9 | q_m and q_m is not squarefree")
    return template_for_residue(r)


class IntegralBasis:
    """The basis B_m obtained by substituting x = alpha_m into a template."""

    def __init__(self, field, template, r=None):
        self.field = field
        self.template = template
        self.template_r = r if r is not None else residue_of(field.m)
        self.elements = tuple(
            field.from_poly([Fraction(c, d) for c in num])
            for num, d in zip(template.numerators, template.denominators)
        )
        self.basis_matrix = [list(b.coords) for b in self.elements]

    def __repr__(self):
        return f"IntegralBasis(m={self.field.m}, r={self.template_r})"

    @property
    def m(self):
        return self.field.m

    @property
    def ell(self):
        return self.template.ell

    @cached_property
    def inverse_matrix(self):
        return M.inverse(self.basis_matrix)

    def to_coords(self, a):
        """Coordinates of ``a`` with respect to this basis."""
        return M.vec_mat(a.coords, self.inverse_matrix)

    def element(self, y):
        """Element sum y_i b_i; ``y`` has six entries, or five (y_2..y_6)."""
        y = list(y)
        if len(y) == 5:
            y = [0] + y
        coords = M.vec_mat(y, self.basis_matrix)
        return self.field.element(coords)

    def claimed_discriminant(self):
        return 2 ** (2 * self.ell) * self.field.q ** 5


def instantiate_basis(m):
    t = template_for(m)
    return IntegralBasis(SexticField(m), t)


def power_basis(m):
    """1, alpha, ..., alpha^5 packaged like an IntegralBasis (used as a control)."""
    ident = BasisTemplate((), 3, tuple(tuple([0] * i + [1]) for i in range(6)), (1,) * 6)
    return IntegralBasis(SexticField(m), ident, r=None)


def trace_form_discriminant(elements):
    gram = [[(a * b).trace() for b in elements] for a in elements]
    return M.det(gram)


def basis_discriminant(B):
    """disc of the order spanned by B, computed two independent ways."""
    dm = M.det(B.basis_matrix)
    via_change = dm * dm * discriminant(B.field.f)
    via_trace = trace_form_discriminant(B.elements)
    if via_change != via_trace:
        raise InconsistencyError(f"discriminants disagree: {via_change} vs {via_trace}")
    if Fraction(via_change).denominator != 1:
        raise InconsistencyError(f"non-integral discriminant {via_change}")
    return int(via_change)


def dedekind_test(m, p):
    """True iff Z[alpha_m] is p-maximal (Dedekind criterion)."""
    f = SexticField(m).f
    fbar = ModPolynomial.from_ints(f, p)
    gbar = mod_radical(fbar)
    hbar = fbar.exact_div(gbar)
    g = list(gbar.coeffs)
    h = list(hbar.coeffs)
    diff = P.sub(P.mul(g, h), f)
    if any(c % p for c in diff):
        raise InconsistencyError("g*h does not reduce to f mod p")
    t = [c // p for c in diff]
    tbar = ModPolynomial.from_ints(t, p)
    return tbar.gcd(gbar).gcd(hbar).is_one()


def verify_qm_congruence(m):
    """f_m == (x - m/3)^6 in (Z/q_m)[x]."""
    q = qm_of(m)
    if q % 3 == 0:
        raise DomainError(f"3 divides q_m = {q}")
    c = m * pow(3, -1, q) % q
    lhs = [x % q for x in P.power([-c, 1], 6)]
    rhs = [x % q for x in SexticField(m).f]
    return lhs == rhs


def ell_poly(m):
    """The quartic whose multiple by q_m/3^6 is (x - m/3)^6 - f_m."""
    return [
        -3 * m**3 + m**4 + 27 * m - 81,
        54 * m**2 - 18 * m**3 - 486,
        135 * m**2 - 405 * m,
        -540 * m + 1620,
        1215,
    ]


def ell_cubic(m):
    return [4 * m**3 + 33 * m**2 - 162, 45 * m + 30 * m**2, -45 * m + 540, 405]


def ell_remainder(m):
    return 5 * (m + 6) * (m - 3) * qm_of(m) + 3**6


def verify_ell_identity(m, sign=3):
    """Check (x - m/3)^6 - f_m = (q_m/3^6) * ell(x) and
    ell(x) = sign * (x - m/3) * cubic(x) + (5(m+6)(m-3)q_m + 3^6).

    Only ``sign = 3`` makes the second identity true; ``sign = -3`` is kept
    callable so the tests can show that variant fails.
    """
    q = qm_of(m)
    f = defining_poly(m)
    lin = [Fraction(-m, 3), 1]
    ell = P.normalize(ell_poly(m))
    first = P.sub(P.power(lin, 6), f) == P.scale(ell, Fraction(q, 3**6))
    second = P.add(P.scale(P.mul(lin, ell_cubic(m)), sign), [ell_remainder(m)]) == ell
    return first and second


def _elements_of(basis):
    return basis.elements if hasattr(basis, "elements") else tuple(basis)


def p_maximality_witness(basis, p):
    """First a != 0 in {0..p-1}^6 with (sum a_i b_i)/p integral, else None.

    The trace is linear, so candidates whose trace is not divisible by p are
    discarded before the characteristic polynomial is formed.
    """
    elems = _elements_of(basis)
    coords = [e.coords for e in elems]
    traces = [e.trace() for e in elems]
    K = elems[0].field
    for a in product(range(p), repeat=len(elems)):
        if not any(a):
            continue
        if Fraction(sum(ai * t for ai, t in zip(a, traces)), p).denominator != 1:
            continue
        v = [Fraction(sum(ai * c[j] for ai, c in zip(a, coords)), p) for j in range(6)]
        beta = K.element(v)
        if beta.is_algebraic_integer():
            return a, beta
    return None


def enumerate_p_maximality(basis, p):
    """True iff no nonzero (sum a_i b_i)/p with 0 <= a_i < p is integral."""
    return p_maximality_witness(basis, p) is None


@dataclass
class Evidence:
    prime: object  # int, or None for "every other prime"
    method: str  # "dedekind-on-Z[alpha]" | "enumeration" | "disc-squarefree"
    verdict: bool

    def to_dict(self):
        return {"prime": self.prime, "method": self.method, "verdict": self.verdict}


@dataclass
class CertificationReport:
    m: int
    q: int
    r: int = None
    ell: int = None
    q_squarefree: bool = False
    q_factors: dict = dc_field(default_factory=dict)
    integrality_ok: bool = False
    disc_computed: int = None
    disc_claimed: int = None
    maximality_evidence: list = dc_field(default_factory=list)
    certified: bool = False
    reason: str = ""

    def to_dict(self):
        return {
            "m": self.m,
            "q": self.q,
            "r": self.r,
            "ell": self.ell,
            "q_squarefree": self.q_squarefree,
            "q_factors": {str(k): v for k, v in self.q_factors.items()},
            "integrality_ok": self.integrality_ok,
            "disc_computed": self.disc_computed,
            "disc_claimed": self.disc_claimed,
            "maximality_evidence": [e.to_dict() for e in self.maximality_evidence],
            "certified": self.certified,
            "reason": self.reason,
        }


def certify_integral_basis(m, bound=TRIAL_DIVISION_BOUND):
    """Check every step needed to conclude that B_m is an integral basis of K_m.

    Raises DomainError for excluded m and UndecidedError when q_m cannot be
    factored within ``bound``; a non-squarefree q_m gives an uncertified
    report instead of an exception.
    """
    m = int(m)
    if m in EXCLUDED_M:
        raise DomainError(f"excluded parameter m={m}")
    q = qm_of(m)
    rep = CertificationReport(m=m, q=q, r=residue_of(m))
    factors, complete = factorize(q, bound)
    rep.q_factors = factors
    if any(e > 1 for e in factors.values()):
        rep.reason = f"q={q} not squarefree"
        return rep
    if not complete:
        raise UndecidedError(f"q={q} not fully factored by trial division up to {bound}")
    rep.q_squarefree = True

    B = instantiate_basis(m)
    rep.ell = B.ell
    rep.integrality_ok = all(b.is_algebraic_integer() for b in B.elements)
    if not rep.integrality_ok:
        rep.reason = "basis element is not an algebraic integer"
        return rep
    rep.disc_computed = basis_discriminant(B)
    rep.disc_claimed = B.claimed_discriminant()
    disc_ok = rep.disc_computed == rep.disc_claimed

    ev = rep.maximality_evidence
    for p in (2, 3):
        ev.append(Evidence(p, "enumeration", enumerate_p_maximality(B, p)))
    for p in sorted(factors):
        # the spanned order contains Z[alpha] with index a power of 6, so
        # p-maximality of Z[alpha] transfers for p | q (q is prime to 6)
        ev.append(Evidence(p, "dedekind-on-Z[alpha]", dedekind_test(m, p)))
    cof = rep.disc_computed
    for p in [2, 3, *factors]:
        while cof % p == 0:
            cof //= p
    ev.append(Evidence(None, "disc-squarefree", cof == 1))

    rep.certified = disc_ok and all(e.verdict for e in ev)
    if not disc_ok:
        rep.reason = f"discriminant {rep.disc_computed} != claimed {rep.disc_claimed}"
    elif not rep.certified:
        failed = [e for e in ev if not e.verdict]
        rep.reason = "maximality failed at " + ", ".join(f"{e.method}:{e.prime}" for e in failed)
    return rep
