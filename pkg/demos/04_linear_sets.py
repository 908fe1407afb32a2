"""Point weights of the linear set of f and the scattered test.

For each slope b the weight of <(1, b)> is the F_q-dimension of the kernel of
f(x) - b x.  The H-chain reads all of them from one family of Dickson minors.
"""

from linrank import GF, LinearizedPoly
from linrank.apps import direction_count_brute, scattered_check, weight_spectrum

F = GF(2, 1, 4)
for label, f in (("x^q", LinearizedPoly.monomial(F, 1)),
                 ("x^(q^2)", LinearizedPoly.monomial(F, 2)),
                 ("x^q + t x^(q^3)", LinearizedPoly(F, [0, 1, 0, 2]))):
    spec = weight_spectrum(f)
    res = scattered_check(f)
    print(f"{label}: weight counts {spec.counts}, directions {direction_count_brute(f)}")
    print(f"  identity holds: {spec.consistent(F.q, F.n)}; scattered: {res.scattered}")
    if not res.scattered:
        print(f"  heavy point: slope {res.slope} with weight {res.weight}")
