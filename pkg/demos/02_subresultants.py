"""q-subresultants and the symbolic gcd.

Builds two q-polynomials with a known common right factor, reads the q-degree
of their gcrd off the subresultant chain, and compares the nullities of the
intermediate matrices with the expected drop.  The last part shows that for
g = x^(q^n) - x the padded subresultant determinants coincide with the
Dickson minors, so either chain gives the rank.
"""

import random

from linrank import GF, LinearizedPoly, lp_compose, lp_gcrd
from linrank.linpoly import random_poly
from linrank.dickson import dickson_minor
from linrank.matrix import det
from linrank.subres import (build_subresultant_padded, build_subresultant_q,
                            gcd_qdeg_via_subres, subres_nullity)

F = GF(2, 1, 4)
rng = random.Random(7)

w = LinearizedPoly(F, [3, 0, 1])  # common right factor of q-degree 2
f = lp_compose(random_poly(F, 2, rng), w)
g = lp_compose(random_poly(F, 1, rng), w)
print("f =", list(f.coeffs))
print("g =", list(g.coeffs))
print("gcrd =", list(lp_gcrd(f, g).coeffs))

chain = gcd_qdeg_via_subres(f, g)
print("subresultant sizes", chain.sizes, "determinants", chain.det_chain)
print("first nonzero at m =", chain.mu)
for m in range(chain.mu + 1):
    print(f"  m={m}: nullity {subres_nullity(f, g, m)}")

print("\nR_0 for the pair:")
for row in build_subresultant_q(f, g, 0).tolist():
    print("   ", row)

h = LinearizedPoly(F, [5, 1, 1, 9])
print("\n|D_m(h)| vs padded |R_m(h)| for h =", list(h.coeffs))
for m in range(F.n):
    print(f"  m={m}: {det(dickson_minor(h, m))} {det(build_subresultant_padded(h, m))}")
