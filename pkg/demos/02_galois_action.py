"""
The cyclic Galois action
========================

sigma(alpha) = (alpha - 1)/(alpha + 2) has order 6.  Norms and traces can
be read either from the multiplication matrix or from the conjugates.
"""

from simplest_sextic import SexticField

K = SexticField(2)
a = K.alpha

orbit = [a.sigma(k) for k in range(6)]
print("sigma^6(alpha) == alpha:", a.sigma(6) == a)
print("sigma(alpha) =", orbit[1])

beta = 3 + a - a**4 / 2
prod = K.one()
for k in range(6):
    prod = prod * beta.sigma(k)
print("N(beta) from conjugates:", prod.rational_value())
print("N(beta) from determinant:", beta.norm())

# sigma^3 is the involution fixing the cubic subfield
gamma = a + a.sigma(3)
print("alpha + sigma^3(alpha) fixed by sigma^3:", gamma.sigma(3) == gamma)
