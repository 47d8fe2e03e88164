"""Element indices, the three-factor index form, and monogenity checks.

For beta = y2*b2 + ... + y6*b6 in the integral basis B_m the index form
splits into

    F1 = N(beta - sigma beta),  F2 = N(beta - sigma^2 beta),
    N(beta - sigma^3 beta) = -F3^2,

with F1 = q*G1, F2 = q*G2, F3 = 2^ell * sqrt(q) * G3 and index = |G1*G2*G3|.
All values are computed exactly, one coordinate vector at a time.
"""

import enum
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import product
from math import isqrt, lcm

import numpy as np

from . import _modfilter
from .arith import matrix as M
from .basis import (
    TRIAL_DIVISION_BOUND,
    UndecidedError,
    certify_integral_basis,
    instantiate_basis,
    residue_of,
)
from .field import EXCLUDED_M, DEGREE, DomainError, InconsistencyError, qm_of

DEFAULT_SAMPLES = 200
SAMPLE_COORD_BOUND = 10**6
DEFAULT_WORK_LIMIT = 20_000_000


class UncertifiedError(DomainError):
    """The integral basis for this m could not be certified."""


class Verdict(str, enum.Enum):
    NON_MONOGENIC = "non-monogenic"
    INCONCLUSIVE = "obstruction-inconclusive"


@lru_cache(maxsize=1024)
def certification(m, bound=TRIAL_DIVISION_BOUND):
    return certify_integral_basis(m, bound)


@lru_cache(maxsize=256)
def certified_basis(m):
    rep = certification(m)
    if not rep.certified:
        raise UncertifiedError(f"m={m}: basis not certified ({rep.reason})")
    return instantiate_basis(m)


def _as_y(y):
    y = [int(v) for v in y]
    if len(y) != 5:
        raise DomainError(f"expected five coordinates y2..y6, got {len(y)}")
    return y


def index_of(m, y):
    """Index (Z_K : Z[beta]) for beta = sum y_i b_i, via the powers of beta.

    Returns 0 exactly when beta does not generate K_m.
    """
    B = certified_basis(int(m))
    return element_index(B, B.element(_as_y(y)))


def element_index(B, beta):
    """|det| of the B-coordinates of 1, beta, ..., beta^5."""
    rows = []
    cur = B.field.one()
    for _ in range(DEGREE):
        rows.append(B.to_coords(cur))
        cur = cur * beta
    d = M.det(rows)
    if Fraction(d).denominator != 1:
        raise InconsistencyError(f"non-integral index determinant {d}")
    return abs(int(d))


@dataclass(frozen=True)
class IndexFactorization:
    G1: int
    G2: int
    absG3: int
    qm: int
    ell: int

    @property
    def index(self):
        return abs(self.G1 * self.G2) * self.absG3

    @property
    def obstruction_residue(self):
        return (27 * self.G1 + self.G2) % self.qm

    def to_dict(self):
        d = asdict(self)
        d["index"] = self.index
        return d


class IndexForm:
    """Exact evaluation of the index form factors for one certified basis.

    beta - sigma^k beta is linear in y, so each factor is the norm of
    y @ W_k / D_k for a fixed integer matrix W_k.
    """

    def __init__(self, basis):
        self.basis = basis
        self.field = basis.field
        self.q = self.field.q
        self.ell = basis.ell
        self._rows = {}
        for k in (1, 2, 3):
            diffs = [b - b.sigma(k) for b in basis.elements[1:]]
            d = 1
            for e in diffs:
                d = lcm(d, e.scaled()[0])
            w = [[int(c * d) for c in e.coords] for e in diffs]
            self._rows[k] = (d, w)

    def _norm_scaled(self, k, y):
        d, w = self._rows[k]
        v = M.vec_mat(y, w)
        mm = self.field.one()._int_multiplication_matrix(v)
        return M.det_int(mm), d

    def raw_norms(self, y):
        """(F1, F2, N(beta - sigma^3 beta)) as exact rationals."""
        out = []
        for k in (1, 2, 3):
            n, d = self._norm_scaled(k, y)
            out.append(Fraction(n, d**DEGREE))
        return tuple(out)

    def factors(self, y):
        y = _as_y(y)
        if not any(y):
            raise DomainError("zero coordinate vector")
        q = self.q
        F1, F2, N3 = self.raw_norms(y)
        for name, F in (("F1", F1), ("F2", F2)):
            if F.denominator != 1 or F.numerator % q:
                raise InconsistencyError(f"m={self.field.m} y={y}: {name}={F} not an integer multiple of q={q}")
        c3 = 2 ** (2 * self.ell) * q
        s = -N3 / c3
        if s.denominator != 1 or s.numerator < 0 or isqrt(s.numerator) ** 2 != s.numerator:
            raise InconsistencyError(f"m={self.field.m} y={y}: -N3/(2^(2l) q) = {s} is not a square")
        return IndexFactorization(
            G1=F1.numerator // q, G2=F2.numerator // q, absG3=isqrt(s.numerator), qm=q, ell=self.ell
        )

    def scaled_norm_matrices(self, k):
        """Integer matrices A_i with det(sum y_i A_i) = D_k^6 * N(beta - sigma^k beta)."""
        d, w = self._rows[k]
        one = self.field.one()
        return d, [one._int_multiplication_matrix(row) for row in w]


@lru_cache(maxsize=256)
def index_form(m):
    return IndexForm(certified_basis(int(m)))


def index_form_factors(m, y):
    return index_form(int(m)).factors(y)


@dataclass
class ObstructionResult:
    m: int
    q: int
    verdict: Verdict
    points_checked: int


def _obstruction_points(samples, seed):
    rng = random.Random(seed)
    pts = [list(v) for v in product((-1, 0, 1), repeat=5) if any(v)]
    for _ in range(samples):
        v = [rng.randint(-SAMPLE_COORD_BOUND, SAMPLE_COORD_BOUND) for _ in range(5)]
        if any(v):
            pts.append(v)
    return pts


def obstruction_check(m, samples=DEFAULT_SAMPLES, seed=0):
    """Evidence that q_m | 27*G1 + G2, then the divisibility verdict.

    A power integral basis needs G1, G2 = +-1, so q_m would have to divide
    one of 26 or 28.
    """
    form = index_form(int(m))
    q = form.q
    pts = _obstruction_points(samples, seed)
    for y in pts:
        fac = form.factors(y)
        if fac.obstruction_residue:
            raise InconsistencyError(f"m={m} y={y}: 27*G1+G2 = {27 * fac.G1 + fac.G2} not divisible by q={q}")
    if 26 % q and 28 % q:
        verdict = Verdict.NON_MONOGENIC
    else:
        verdict = Verdict.INCONCLUSIVE
    return ObstructionResult(int(m), q, verdict, len(pts))


# -- generator tables -------------------------------------------------------

_TABLE_FILES = {1: "data/generators_m1.txt", -1: "data/generators_m-1.txt"}


def parse_generator_rows(text):
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            row = tuple(int(x) for x in line.split())
            if len(row) != 5:
                raise ValueError(f"expected five integers: {line!r}")
            rows.append(row)
    return rows


def generator_table(m):
    if m not in _TABLE_FILES:
        raise DomainError(f"no generator table for m={m} (only m = 1 and m = -1)")
    text = resources.files("simplest_sextic").joinpath(_TABLE_FILES[m]).read_text()
    return parse_generator_rows(text)


@dataclass
class TableReport:
    m: int
    checked: int
    failures: list  # (vector, index) pairs

    @property
    def ok(self):
        return not self.failures


def verify_generator_table(m, rows=None):
    """Index of every listed generator; ``rows`` overrides the shipped table."""
    m = int(m)
    if rows is None:
        rows = generator_table(m)
    failures = []
    for y in rows:
        ind = index_of(m, y)
        if ind != 1:
            failures.append((tuple(y), ind))
    return TableReport(m, len(rows), failures)


# -- box search -------------------------------------------------------------


def canonical(y):
    """Sign-normalize so the first nonzero coordinate is positive."""
    y = tuple(int(v) for v in y)
    for v in y:
        if v:
            return y if v > 0 else tuple(-x for x in y)
    return y


def _canonical_box(bound):
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(r, r, r, r, r, indexing="ij"), axis=-1).reshape(-1, 5)
    nz = grid != 0
    first = nz.argmax(axis=1)
    lead = grid[np.arange(len(grid)), first]
    return grid[lead > 0]


def search_generators(m, bound, work_limit=DEFAULT_WORK_LIMIT, batch=50_000, prefilter=True):
    """All y with max|y_i| <= bound and index 1, one per sign class, sorted.

    With ``prefilter`` the three factor determinants are first reduced mod a
    31-bit prime in bulk; only candidates matching the targets +-q,
    +-q, -2^(2l) q there are evaluated exactly.
    """
    m, bound = int(m), int(bound)
    if bound < 0:
        raise DomainError("bound must be non-negative")
    total = (2 * bound + 1) ** 5
    if total > work_limit:
        raise DomainError(f"box of {total} candidates exceeds work limit {work_limit}")
    form = index_form(m)
    q, ell = form.q, form.ell
    p = _modfilter.PRIME
    targets = {}
    for k in (1, 2, 3):
        d, mats = form.scaled_norm_matrices(k)
        scale = pow(d, DEGREE, p)
        if k == 3:
            ok = {(-(2 ** (2 * ell)) * q * scale) % p}
        else:
            ok = {q * scale % p, -q * scale % p}
        targets[k] = (mats, ok)

    found = []
    cands = _canonical_box(bound)
    for start in range(0, len(cands), batch):
        ys = cands[start : start + batch]
        keep = np.ones(len(ys), dtype=bool)
        for k in (1, 2, 3) if prefilter else ():
            mats, ok = targets[k]
            sub = ys[keep]
            if not len(sub):
                break
            dets = _modfilter.batch_det_mod(_modfilter.linear_combination_mod(sub, mats, p), p)
            hit = np.zeros(len(sub), dtype=bool)
            for t in ok:
                hit |= dets == t
            keep[np.flatnonzero(keep)[~hit]] = False
        for y in ys[keep]:
            y = [int(v) for v in y]
            fac = form.factors(y)
            if abs(fac.G1) == 1 and abs(fac.G2) == 1 and fac.absG3 == 1 and index_of(m, y) == 1:
                found.append(canonical(y))
    return sorted(found)


# -- range scans ------------------------------------------------------------


@dataclass
class ScanRecord:
    m: int
    q: int
    r: int = None
    disc: int = None
    certified: bool = False
    verdict: str = None
    skipped_reason: str = None

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line):
        return cls(**json.loads(line))


def scan_one(m, samples=DEFAULT_SAMPLES, bound=TRIAL_DIVISION_BOUND):
    m = int(m)
    q = qm_of(m)
    if m in EXCLUDED_M:
        return ScanRecord(m, q, skipped_reason="excluded")
    try:
        rep = certification(m, bound)
    except UndecidedError as exc:
        return ScanRecord(m, q, skipped_reason=f"undecided: {exc}")
    if not rep.q_squarefree:
        return ScanRecord(m, q, skipped_reason="q-not-squarefree")
    rec = ScanRecord(m, q, r=residue_of(m), disc=rep.disc_computed, certified=rep.certified)
    if not rep.certified:
        rec.verdict = "uncertified"
        return rec
    rec.verdict = obstruction_check(m, samples).verdict.value
    return rec


def scan_range(m_from, m_to, samples=DEFAULT_SAMPLES, workers=1):
    """Yield one ScanRecord per m in [m_from, m_to], in increasing m."""
    ms = range(int(m_from), int(m_to) + 1)
    if workers <= 1:
        for m in ms:
            yield scan_one(m, samples)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(scan_one, ms, [samples] * len(ms), chunksize=4)
