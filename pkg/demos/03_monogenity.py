"""
Indices, index form factors and the non-monogenity obstruction
==============================================================
"""

from simplest_sextic import (
    index_form_factors,
    index_of,
    obstruction_check,
    search_generators,
    verify_generator_table,
)

# alpha itself has index 216 in K_1; the first listed generator has index 1
print(index_of(1, (1, 0, 0, 0, 0)))
print(index_of(1, (0, 6, 4, 0, -1)))

# The index splits into three factors
fac = index_form_factors(1, (1, 0, 0, 0, 0))
print(fac, fac.index)

# q_m always divides 27*G1 + G2; for m = 2 this rules out index 1
print(obstruction_check(2, samples=20))

# Both generator tables check out
print(verify_generator_table(1).ok, verify_generator_table(-1).ok)

# A small box search recovers the short generators
print(search_generators(-1, 5))
