"""
Binomial Groebner bases
=======================

The ideal <y_i - x^a_i> under lex x > y1 > ... > yk.  Its reduced basis
decides membership: x^N reduces to an x-free monomial exactly when N is
in the semigroup, and the exponents of that monomial give the sum.
"""

from nsgroebner import groebner, staircase

B = groebner.buchberger((5, 7))
for b in B:
    print(b)

for N in (13, 19, 23, 24):
    cert = staircase.certify(B, N)
    print("member" if cert.member else "gap   ", cert.certificate, cert.decomposition((5, 7)))

# Weight is preserved along every reduction.
print(groebner.normal_forms_upto(B, 12))
