"""Dickson minors for sigma = q^s.

Over F_32 with sigma = q^2 the Dickson matrix of a sigma-polynomial is a
permuted copy of the ordinary one.  Its minor chain still gives the rank, and
any m x m block of consecutive removed rows and columns (cyclically) detects
the same vanishing as the corner minor.
"""

import random

from linrank import GF
from linrank.linpoly import random_with_kernel
from linrank.dickson import consecutive_run, dickson_minor, minor_MJK, rank_via_minor_chain_sigma
from linrank.linpoly import lp_kernel_brute
from linrank.matrix import det

F = GF(2, 1, 5)
rng = random.Random(3)

for dim in range(F.n + 1):
    f = random_with_kernel(F, dim, rng, stride=2)
    cert = rank_via_minor_chain_sigma(f)
    print(f"kernel dim {dim}: coefficients {list(f.coeffs)} chain {cert.det_chain}"
          f" -> mu {cert.mu}, brute {lp_kernel_brute(f).dim}")

f = random_with_kernel(F, 2, rng, stride=2)
print("\nzero pattern of consecutive minors for", list(f.coeffs))
for m in range(3):
    corner = det(dickson_minor(f, m)) == 0
    same = all((det(minor_MJK(f, consecutive_run(range(j, j + m), 5),
                              consecutive_run(range(k, k + m), 5))) == 0) == corner
               for j in range(5) for k in range(5))
    print(f"  m={m}: corner minor zero={corner}, all 25 placements agree={same}")
