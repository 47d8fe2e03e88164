import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from simplest_sextic import _modfilter
from simplest_sextic.arith.matrix import det_int
from simplest_sextic.arith.resultant import discriminant
from simplest_sextic.field import DomainError, defining_poly
from simplest_sextic.monogenity import (
    ScanRecord,
    UncertifiedError,
    Verdict,
    canonical,
    certified_basis,
    element_index,
    generator_table,
    index_form,
    index_form_factors,
    index_of,
    obstruction_check,
    scan_range,
    search_generators,
    verify_generator_table,
)

CERTIFIED_M = [1, -1, 2, 4, 7, 13, -5, 25, 38, -31]
ys = st.lists(st.integers(-40, 40), min_size=5, max_size=5).filter(any)


def test_index_examples():
    assert index_of(1, (0, 6, 4, 0, -1)) == 1
    assert index_of(-1, (0, 0, 2, 0, -1)) == 1


def test_index_of_alpha_m1():
    # oracle: sqrt(disc(f_1) / D_K) from the discriminants alone
    ratio = sympy.Rational(discriminant(defining_poly(1)), 371293)
    assert index_of(1, (1, 0, 0, 0, 0)) == int(sympy.sqrt(ratio)) == 216


def test_index_of_non_generator_is_zero():
    # alpha + sigma^3(alpha) lies in the cubic subfield
    B = certified_basis(1)
    a = B.field.alpha
    beta = a + a.sigma(3)
    assert element_index(B, beta) == 0


def test_index_requires_certified_m():
    with pytest.raises(UncertifiedError):
        index_of(6, (1, 0, 0, 0, 0))
    with pytest.raises(DomainError):
        index_of(0, (1, 0, 0, 0, 0))


def test_index_wrong_length():
    with pytest.raises(DomainError):
        index_of(1, (1, 0, 0, 0))


def test_factor_examples():
    fac = index_form_factors(1, (0, 6, 4, 0, -1))
    assert (abs(fac.G1), abs(fac.G2), fac.absG3) == (1, 1, 1)
    assert index_form_factors(1, (1, 0, 0, 0, 0)).index == 216 == index_of(1, (1, 0, 0, 0, 0))


def test_factor_zero_vector():
    with pytest.raises(DomainError):
        index_form_factors(1, (0, 0, 0, 0, 0))


@pytest.mark.parametrize("m", CERTIFIED_M)
@given(y=ys)
@settings(max_examples=8, deadline=None)
def test_factor_consistency(m, y):
    form = index_form(m)
    F1, F2, N3 = form.raw_norms(y)
    q = form.q
    assert F1.denominator == 1 and F1.numerator % q == 0
    assert F2.denominator == 1 and F2.numerator % q == 0
    s = -N3 / (2 ** (2 * form.ell) * q)
    assert s.denominator == 1 and sympy.sqrt(s.numerator).is_integer
    fac = form.factors(y)
    assert fac.index == index_of(m, y)
    assert (27 * fac.G1 + fac.G2) % q == 0


@pytest.mark.parametrize("m", [1, 2, -5])
@given(y=ys, shift=st.integers(-5, 5))
@settings(max_examples=6, deadline=None)
def test_index_invariances(m, y, shift):
    B = certified_basis(m)
    beta = B.element(y)
    base = element_index(B, beta)
    assert element_index(B, beta + shift) == base
    sb = B.to_coords(beta.sigma())
    assert all(c == int(c) for c in sb)
    assert index_of(m, [int(c) for c in sb[1:]]) == base


def test_obstruction_examples():
    assert obstruction_check(2, samples=20).verdict is Verdict.NON_MONOGENIC
    assert obstruction_check(1, samples=20).verdict is Verdict.INCONCLUSIVE
    assert obstruction_check(-1, samples=20).verdict is Verdict.INCONCLUSIVE


def test_obstruction_point_count():
    res = obstruction_check(4, samples=10)
    assert res.points_checked == 242 + 10


def test_generator_tables():
    assert len(generator_table(1)) == 36
    assert len(generator_table(-1)) == 14
    assert verify_generator_table(1).ok
    assert verify_generator_table(-1).ok
    with pytest.raises(DomainError):
        generator_table(2)


def test_perturbed_vector_reported():
    rep = verify_generator_table(1, rows=[(0, 6, 4, 0, 1), (0, 6, 4, 0, -1)])
    assert rep.checked == 2
    assert len(rep.failures) == 1
    assert rep.failures[0][0] == (0, 6, 4, 0, 1) and rep.failures[0][1] != 1


def test_canonical():
    assert canonical((0, -1, 2, 0, 0)) == (0, 1, -2, 0, 0)
    assert canonical((3, -1, 0, 0, 0)) == (3, -1, 0, 0, 0)


@pytest.mark.parametrize("m,bound", [(1, 2), (-1, 2), (2, 1), (-4, 1)])
def test_prefilter_never_drops_solutions(m, bound):
    assert search_generators(m, bound) == search_generators(m, bound, prefilter=False)


def test_search_small_boxes():
    assert search_generators(1, 2) == [(1, 1, -2, -2, 1)]
    assert search_generators(2, 3) == []


def test_search_work_limit():
    with pytest.raises(DomainError):
        search_generators(1, 6, work_limit=1000)


mats = st.lists(st.lists(st.integers(-10**12, 10**12), min_size=6, max_size=6), min_size=6, max_size=6)


@given(st.lists(mats, min_size=1, max_size=8))
@settings(max_examples=40, deadline=None)
def test_batch_det_mod_matches_exact(stack):
    p = _modfilter.PRIME
    got = _modfilter.batch_det_mod(np.array([[[x % p for x in r] for r in m] for m in stack]), p)
    assert [int(g) for g in got] == [det_int(m) % p for m in stack]


def test_batch_det_mod_singular_and_pivoting():
    p = _modfilter.PRIME
    stack = [
        [[0, 1], [1, 0]],
        [[1, 2], [2, 4]],
        [[0, 0], [0, 5]],
    ]
    assert list(_modfilter.batch_det_mod(np.array(stack), p)) == [p - 1, 0, 0]


def test_scan_small_range():
    recs = list(scan_range(-5, 5, samples=5))
    by_m = {r.m: r for r in recs}
    assert [r.m for r in recs] == list(range(-5, 6))
    for m in (-3, 0, 5):
        assert by_m[m].skipped_reason == "excluded"
    assert by_m[3].skipped_reason == "q-not-squarefree"
    possible = [r.m for r in recs if r.verdict == Verdict.INCONCLUSIVE.value]
    assert possible == [-4, -2, -1, 1]
    assert by_m[-4].disc == 371293 and by_m[-2].disc == 1075648


def test_scan_record_roundtrip():
    for rec in scan_range(-2, 2, samples=2):
        assert ScanRecord.from_json(rec.to_json()) == rec
