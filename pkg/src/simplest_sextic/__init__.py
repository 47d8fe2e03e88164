"""Integral bases and monogenity of the simplest sextic fields.

K_m = Q(alpha), alpha a root of
    f_m = x^6 - 2m x^5 - (5m+15) x^4 - 20 x^3 + 5m x^2 + (2m+6) x + 1,
for integers m not in {-8, -3, 0, 5}.
"""

from .basis import (
    CertificationReport,
    IntegralBasis,
    basis_discriminant,
    certify_integral_basis,
    dedekind_test,
    enumerate_p_maximality,
    instantiate_basis,
    is_squarefree,
    template_for,
    verify_ell_identity,
    verify_qm_congruence,
)
from .field import DomainError, FieldElement, InconsistencyError, SexticField, defining_poly, qm_of
from .monogenity import (
    IndexFactorization,
    Verdict,
    index_form_factors,
    index_of,
    obstruction_check,
    scan_range,
    search_generators,
    verify_generator_table,
)
from .templates import TEMPLATES, BasisTemplate

__version__ = "0.1.0"
