"""Search for low-rank members of the family

    f_c = -x + (1 + c^(-q)) x^q + c x^(q^2) - x^(q^4)   over F_(2^9).

Any c giving rank at most 5 shows that the span of x, x^q, x^(q^2), x^(q^4)
is not MRD.  The minor chain stops at the first nonzero minor, so most c are
rejected after one 9 x 9 determinant.
"""

import time

from linrank import GF
from linrank.apps import mrd_candidate, mrd_search_9
from linrank.linpoly import lp_kernel_brute

F = GF(2, 1, 9)
start = time.perf_counter()
hits = mrd_search_9(F, threads=4)
print(f"searched 511 values of c in {time.perf_counter() - start:.2f}s")
for c, cert in hits:
    brute = lp_kernel_brute(mrd_candidate(F, c))
    print(f"c = {c}: chain {cert.det_chain}, rank {cert.rank}, brute rank {brute.rank}")
