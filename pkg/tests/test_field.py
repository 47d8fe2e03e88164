from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplest_sextic.arith import poly as P
from simplest_sextic.field import (
    DomainError,
    SexticField,
    defining_poly,
    galois_sigma,
    is_algebraic_integer,
    qm_of,
)

FIELDS = {m: SexticField(m) for m in (1, -1, 2, 7, 38, -113)}

coords = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=6), min_size=6, max_size=6)
int_coords = st.lists(st.integers(-30, 30), min_size=6, max_size=6)
some_m = st.sampled_from(sorted(FIELDS))


def test_defining_polynomial_coefficients():
    m = 7
    # x^6 - 2m x^5 - (5m+15) x^4 - 20 x^3 + 5m x^2 + (2m+6) x + 1
    assert defining_poly(m) == [1, 2 * m + 6, 5 * m, -20, -(5 * m + 15), -2 * m, 1]


@pytest.mark.parametrize("m", [-8, -3, 0, 5])
def test_excluded_parameters(m):
    with pytest.raises(DomainError):
        SexticField(m)


@pytest.mark.parametrize("m", [-100, -7, 1, 2, 10**6])
def test_f_at_minus_two(m):
    assert P.evaluate(defining_poly(m), -2) == -27


@given(st.integers(-10**6, 10**6))
def test_q_symmetry(m):
    assert qm_of(m) == qm_of(-m - 3)


def test_mul_identity_and_reduction(K1):
    a = K1.alpha
    assert K1.one() * a == a
    m = 1
    assert a * a**5 == K1.element([-1, -(2 * m + 6), -5 * m, 20, 5 * m + 15, 2 * m])


def test_field_mismatch():
    with pytest.raises(DomainError):
        FIELDS[1].alpha * FIELDS[2].alpha


def test_inverse(K1):
    a = K1.alpha
    assert K1.one().inverse() == 1
    assert a.inverse() * a == 1
    assert (a + 2) * (a + 2).inverse() == 1
    with pytest.raises(ZeroDivisionError):
        K1.zero().inverse()


def test_inverse_of_alpha_m1(K1):
    # f(x) = x*g(x) + 1 so 1/alpha = -g(alpha)
    g = defining_poly(1)[1:]
    assert K1.alpha.inverse() == K1.from_poly([-c for c in g])


@pytest.mark.parametrize("m", sorted(FIELDS))
def test_sigma_has_order_six(m):
    K = FIELDS[m]
    a = K.alpha
    images = [a.sigma(k) for k in range(1, 7)]
    assert all(img != a for img in images[:5])
    assert images[5] == a
    assert a.sigma(3).sigma(3) == a
    assert galois_sigma(a) == (a - 1) / (a + 2)


def test_sigma_fixes_rationals(K1):
    assert K1.element([Fraction(5, 7)]).sigma() == Fraction(5, 7)


@given(some_m, coords, coords)
@settings(max_examples=40, deadline=None)
def test_sigma_is_ring_homomorphism(m, u, v):
    K = FIELDS[m]
    a, b = K.element(u), K.element(v)
    assert (a + b).sigma() == a.sigma() + b.sigma()
    assert (a * b).sigma() == a.sigma() * b.sigma()


@pytest.mark.parametrize("m", sorted(FIELDS))
def test_norm_trace_of_alpha(m):
    a = FIELDS[m].alpha
    assert a.norm() == 1
    assert a.trace() == 2 * m


@given(some_m, coords, coords)
@settings(max_examples=40, deadline=None)
def test_norm_multiplicative(m, u, v):
    K = FIELDS[m]
    a, b = K.element(u), K.element(v)
    assert (a * b).norm() == a.norm() * b.norm()


@given(some_m, coords)
@settings(max_examples=30, deadline=None)
def test_norm_is_product_of_conjugates(m, u):
    K = FIELDS[m]
    a = K.element(u)
    prod = K.one()
    for k in range(6):
        prod = prod * a.sigma(k)
    assert prod.is_rational()
    assert prod.rational_value() == a.norm()
    tr = sum((a.sigma(k) for k in range(6)), K.zero())
    assert tr.rational_value() == a.trace()


@given(some_m, int_coords)
@settings(max_examples=30, deadline=None)
def test_integral_elements_have_integral_norm_and_trace(m, v):
    a = FIELDS[m].element(v)
    assert isinstance(a.norm(), int)
    assert isinstance(a.trace(), int)
    assert a.is_algebraic_integer()


def test_charpoly_of_alpha(K1):
    assert K1.alpha.charpoly() == defining_poly(1)


def test_integrality_examples(K1):
    a = K1.alpha
    assert is_algebraic_integer((1 + a + a**3) / 2)
    half = a / 2
    assert not is_algebraic_integer(half)
    # oracle: the charpoly of alpha/2 is f(2t)/64, whose constant term is 1/64
    assert half.charpoly()[0] == Fraction(1, 64)


def test_elements_are_immutable_and_hashable(K1):
    a = K1.alpha
    with pytest.raises(AttributeError):
        a.coords = (0,) * 6
    assert len({a, K1.alpha, a + 0}) == 1
