from fractions import Fraction
from itertools import product

import pytest
import sympy

from simplest_sextic.arith.resultant import discriminant
from simplest_sextic.basis import (
    UndecidedError,
    basis_discriminant,
    certify_integral_basis,
    dedekind_test,
    enumerate_p_maximality,
    factorize,
    instantiate_basis,
    is_squarefree,
    p_maximality_witness,
    power_basis,
    residue_of,
    template_for,
    trace_form_discriminant,
    verify_ell_identity,
    verify_qm_congruence,
)
from simplest_sextic.field import DomainError, qm_of
from simplest_sextic.templates import TEMPLATES, load_template_file, parse_template_file

CERT_SAMPLE = [1, -1, 2, 4, 7, 8, 13, 38, -5, -31, 77, 113, -200]


def test_template_table_matches_data_file():
    assert load_template_file() == TEMPLATES


def test_template_file_parser_rejects_short_rows():
    with pytest.raises(ValueError):
        parse_template_file("1 | 0 | 1; 0 1 | 1 1")


def test_template_invariants():
    assert len(TEMPLATES) == 19
    residues = sorted(r for t in TEMPLATES for r in t.residues)
    assert residues == [r for r in range(1, 37) if r % 3]
    merged = sorted(t.residues for t in TEMPLATES if len(t.residues) > 1)
    assert merged == [(7, 34), (10, 19), (14, 23), (22, 31), (26, 35)]
    for t in TEMPLATES:
        assert t.numerators[:3] == ((1,), (0, 1), (0, 0, 1))
        assert t.denominators[:3] == (1, 1, 1)
        if t.denominators[3:] == (2, 6, 18):
            assert t.ell == 0
        else:
            assert t.denominators[3:] == (1, 3, 9) and t.ell == 3
        # numerator of b_i is monic of degree i-1
        for i, num in enumerate(t.numerators):
            assert len(num) == i + 1 and num[-1] == 1


def test_qm_of():
    assert qm_of(1) == 13


def test_squarefree():
    assert is_squarefree(13)
    assert not is_squarefree(qm_of(6))
    assert factorize(63) == ({3: 2, 7: 1}, True)


def test_squarefree_undecided():
    with pytest.raises(UndecidedError):
        is_squarefree(101 * 103, bound=100)
    # a square factor found below the bound settles the question anyway
    assert not is_squarefree(4 * 101 * 103, bound=100)
    # cofactor below bound**2 is prime
    assert is_squarefree(2 * 9973, bound=100)


@pytest.mark.parametrize("m,r", [(1, 1), (-1, 35), (37, 1), (36, 36), (-36, 36), (-200, 16)])
def test_residue_convention(m, r):
    assert residue_of(m) == r


def test_template_for_examples():
    t1 = template_for(1)
    assert t1.numerators[5] == (11, 3, 13, 6, 2, 1) and t1.denominators[5] == 18
    tm1 = template_for(-1)
    assert tm1.residues == (26, 35)
    assert tm1.numerators[4] == (1, 0, 0, 1, 1) and tm1.denominators[4] == 3
    assert template_for(37) is t1


@pytest.mark.parametrize("m", [5, -8, 3, 6, -9])
def test_template_for_errors(m):
    with pytest.raises(DomainError):
        template_for(m)


def test_instantiate_m1(K1):
    B = instantiate_basis(1)
    a = B.field.alpha
    expected = [1, a, a**2, (1 + a + a**3) / 2, (4 + a + 3 * a**2 + a**4) / 6,
                (11 + 3 * a + 13 * a**2 + 6 * a**3 + 2 * a**4 + a**5) / 18]
    assert list(B.elements) == expected


def test_instantiate_m_minus1():
    B = instantiate_basis(-1)
    a = B.field.alpha
    assert B.elements[3] == a**3
    assert B.elements[4] == (1 + a**3 + a**4) / 3
    assert B.elements[5] == (5 + 4 * a + 8 * a**3 + a**5) / 9


def test_instantiate_m2():
    B = instantiate_basis(2)
    a = B.field.alpha
    assert B.elements[4] == (1 + a**3 + a**4) / 3


def test_basis_matrix_shape():
    B = instantiate_basis(13)
    bm = B.basis_matrix
    assert all(bm[i][j] == 0 for i in range(6) for j in range(i + 1, 6))
    assert [bm[i][i] for i in range(6)] == [1, 1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 18)]
    assert sympy.Matrix(bm).det() == sympy.Rational(1, 216)


@pytest.mark.parametrize("m,disc", [(1, 371293), (-1, 1075648), (2, 2**6 * 19**5)])
def test_basis_discriminant(m, disc):
    B = instantiate_basis(m)
    assert basis_discriminant(B) == disc
    # oracle: Gram determinant of the trace form, evaluated by sympy
    gram = [[int((a * b).trace()) for b in B.elements] for a in B.elements]
    assert int(sympy.Matrix(gram).det()) == disc
    assert trace_form_discriminant(B.elements) == disc


def test_dedekind_examples():
    assert dedekind_test(1, 13)
    assert not dedekind_test(1, 2)
    assert dedekind_test(2, 2)


def test_dedekind_index_oracle():
    # [Z_K : Z[alpha_1]]^2 = disc(f_1)/D_K = 6^6, so the index 216 is even
    assert discriminant(instantiate_basis(1).field.f) // 371293 == 216**2
    # for m = 2 the ratio is 3^6, odd index 27
    assert discriminant(instantiate_basis(2).field.f) // (2**6 * 19**5) == 27**2


@pytest.mark.parametrize("m", CERT_SAMPLE)
def test_dedekind_agrees_with_template_index(m):
    t = template_for(m)
    for p in (2, 3):
        assert dedekind_test(m, p) == (t.index % p != 0)
    for p in sympy.factorint(qm_of(m)):
        assert dedekind_test(m, p)


@pytest.mark.parametrize("m,q", [(1, 13), (2, 19), (4, 37)])
def test_qm_congruence(m, q):
    assert qm_of(m) == q
    assert verify_qm_congruence(m)
    # oracle: expand (x - m/3)^6 with sympy over Z/q
    x = sympy.Symbol("x")
    c = m * pow(3, -1, q) % q
    f = sympy.Poly(x**6 - 2 * m * x**5 - (5 * m + 15) * x**4 - 20 * x**3 + 5 * m * x**2 + (2 * m + 6) * x + 1, x, modulus=q)
    assert f == sympy.Poly((x - c) ** 6, x, modulus=q)


def test_qm_congruence_requires_unit_three():
    with pytest.raises(DomainError):
        verify_qm_congruence(3)


@pytest.mark.parametrize("m", [1, -1, 10, 77, -1000])
def test_ell_identity(m):
    assert verify_ell_identity(m)


@pytest.mark.parametrize("m", [1, -1, 10])
def test_ell_identity_with_negative_factor_fails(m):
    assert not verify_ell_identity(m, sign=-3)


def test_ell_identity_symbolic():
    # independent check over Q(m)[x]
    x, m = sympy.symbols("x m")
    q = m**2 + 3 * m + 9
    f = x**6 - 2 * m * x**5 - (5 * m + 15) * x**4 - 20 * x**3 + 5 * m * x**2 + (2 * m + 6) * x + 1
    ell = (1215 * x**4 - 540 * m * x**3 + 1620 * x**3 + 135 * m**2 * x**2 - 405 * m * x**2
           + 54 * m**2 * x - 18 * m**3 * x - 486 * x - 3 * m**3 + m**4 + 27 * m - 81)
    assert sympy.expand((x - m / 3) ** 6 - f - q * ell / 729) == 0
    cubic = 405 * x**3 - 45 * m * x**2 + 540 * x**2 + 45 * m * x + 30 * m**2 * x + 4 * m**3 + 33 * m**2 - 162
    rest = 5 * (m + 6) * (m - 3) * q + 3**6
    assert sympy.expand(3 * (x - m / 3) * cubic + rest - ell) == 0


def _brute_force_maximal(elements, p):
    K = elements[0].field
    for a in product(range(p), repeat=6):
        if any(a):
            beta = sum((ai * b for ai, b in zip(a, elements)), K.zero()) / p
            if all(Fraction(c).denominator == 1 for c in beta.charpoly()):
                return False
    return True


@pytest.mark.parametrize("p", [2, 3])
def test_enumerate_b1(p):
    B = instantiate_basis(1)
    assert enumerate_p_maximality(B, p)
    assert _brute_force_maximal(B.elements, p)


def test_enumerate_power_basis_fails_at_two():
    pb = power_basis(1)
    assert not enumerate_p_maximality(pb, 2)
    a = pb.field.alpha
    assert ((1 + a + a**3) / 2).is_algebraic_integer()
    witness, beta = p_maximality_witness(pb, 2)
    assert beta.is_algebraic_integer()
    assert beta == sum((w * b for w, b in zip(witness, pb.elements)), pb.field.zero()) / 2


@pytest.mark.parametrize("m", CERT_SAMPLE)
def test_certify(m):
    rep = certify_integral_basis(m)
    assert rep.certified, rep.reason
    assert rep.disc_computed == rep.disc_claimed == 2 ** (2 * rep.ell) * qm_of(m) ** 5
    assert rep.integrality_ok and rep.q_squarefree
    methods = {e.method for e in rep.maximality_evidence}
    assert methods == {"enumeration", "dedekind-on-Z[alpha]", "disc-squarefree"}
    B = instantiate_basis(m)
    det = sympy.Matrix(B.basis_matrix).det()
    assert det**2 * discriminant(B.field.f) / rep.disc_computed == 1


def test_certify_m1():
    rep = certify_integral_basis(1)
    assert rep.certified and rep.disc_computed == 13**5


def test_certify_excluded():
    with pytest.raises(DomainError):
        certify_integral_basis(5)


def test_certify_non_squarefree():
    rep = certify_integral_basis(6)
    assert not rep.certified
    assert "63" in rep.reason and "squarefree" in rep.reason


def test_certify_detects_wrong_template():
    # the m = 2 template applied to m = 1 is not an integral basis there
    from simplest_sextic.basis import IntegralBasis
    from simplest_sextic.field import SexticField
    from simplest_sextic.templates import template_for_residue

    B = IntegralBasis(SexticField(1), template_for_residue(2))
    ints = [b.is_algebraic_integer() for b in B.elements]
    assert not all(ints) or basis_discriminant(B) != 13**5


def test_report_dict_roundtrip():
    import json

    d = certify_integral_basis(-1).to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["disc_computed"] == 1075648
