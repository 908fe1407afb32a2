"""Property suites shared by ``linrank selftest`` and the acceptance tests.

Each suite compares a fast path against an independent oracle and returns a
:class:`CheckResult` counting agreeing cases.  Randomised suites take an
explicit ``random.Random`` so runs are reproducible.
"""

import itertools
from dataclasses import dataclass, field

from . import upoly
from .apps import (direction_count_brute, mrd_search_9, point_weights_brute,
                   scattered_check, weight_spectrum)
from .dickson import (consecutive_run, dickson_minor, minor_MJK, rank_via_minor_chain,
                      rank_via_minor_chain_sigma)
from .linpoly import (LinearizedPoly, lp_compose, lp_gcrd, lp_kernel_brute,
                      lp_ordinary_gcd_oracle, random_poly, random_with_kernel)
from .matrix import MatrixF, bordered_blocks, det, schur_block_det, vstack, hstack
from .subres import (build_subresultant_padded, classical_gcd_deg, gcd_qdeg_via_subres,
                     subres_nullity)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.total > 0 and self.passed == self.total

    def record(self, good, detail=None):
        self.total += 1
        if good:
            self.passed += 1
        elif len(self.failures) < 10:
            self.failures.append(detail)

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}: {self.passed}/{self.total}"

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "total": self.total,
                "ok": self.ok, "failures": [str(f) for f in self.failures]}


def conn_polys(F, polys, name="minor chain vs brute kernel"):
    res = CheckResult(name)
    for f in polys:
        mu = rank_via_minor_chain(f).mu
        res.record(mu == lp_kernel_brute(f).dim, f)
    return res


def all_polys(F):
    for coeffs in itertools.product(range(F.order), repeat=F.n):
        yield LinearizedPoly(F, coeffs)


def random_polys(F, count, rng, kernel_mix=True):
    """Random q-polynomials of q-degree < n; every third one has a forced kernel."""
    for i in range(count):
        if kernel_mix and i % 3 == 2:
            yield random_with_kernel(F, rng.randrange(1, F.n + 1), rng)
        else:
            yield LinearizedPoly(F, [F.random_element(rng) for _ in range(F.n)])


def dm_equals_rm(F, polys):
    """|D_m(f)| == |R_m(f)| exactly; failures carry (m, parity of n, parity of m, sign)."""
    res = CheckResult(f"|D_m| = |R_m| over F_{F.order}")
    for f in polys:
        for m in range(F.n):
            d = det(dickson_minor(f, m))
            r = det(build_subresultant_padded(f, m))
            sign = "+" if d == r else "-" if d == F.neg(r) else "?"
            res.record(d == r, (list(f.coeffs), m, F.n % 2, m % 2, sign))
    return res


def random_pair(F, max_qdeg, rng):
    """(u o w, v o w) with a random common right factor w."""
    dw = rng.randrange(0, max_qdeg + 1)
    u = random_poly(F, rng.randrange(0, max_qdeg - dw + 1), rng)
    v = random_poly(F, rng.randrange(0, max_qdeg - dw + 1), rng)
    w = random_poly(F, dw, rng)
    return lp_compose(u, w), lp_compose(v, w)


def subres_pairs(F, count, rng, max_qdeg=4):
    chain = CheckResult("q-subresultant chain mu = qdeg gcrd")
    nullity = CheckResult("nullity(R_m) = mu - m")
    for _ in range(count):
        f, g = random_pair(F, max_qdeg, rng)
        mu = lp_gcrd(f, g).qdeg
        chain.record(gcd_qdeg_via_subres(f, g).mu == mu, (f, g))
        for m in range(mu + 1):
            nullity.record(subres_nullity(f, g, m) == mu - m, (f, g, m))
    return chain, nullity


def gcrd_vs_gcd(F, count, rng, max_qdeg=3):
    res = CheckResult("monic gcrd = monic ordinary gcd")
    for i in range(count):
        if i % 2:
            f, g = random_pair(F, max_qdeg, rng)
        else:
            f = random_poly(F, rng.randrange(0, max_qdeg + 1), rng)
            g = random_poly(F, rng.randrange(0, max_qdeg + 1), rng)
        res.record(lp_gcrd(f, g).to_upoly() == lp_ordinary_gcd_oracle(f, g), (f, g))
    return res


def sigma_minors(F, stride, count, rng):
    chain = CheckResult(f"sigma-minor chain (stride {stride}) vs brute kernel")
    runs = CheckResult("|M_JK| = 0 <=> |D_m,sigma| = 0 for consecutive J, K")
    n = F.n
    for i in range(count):
        f = random_with_kernel(F, i % (n + 1), rng, stride=stride)
        mu = rank_via_minor_chain_sigma(f).mu
        chain.record(mu == lp_kernel_brute(f).dim, f)
        for m in range(mu + 1):
            base = det(dickson_minor(f, m)) == 0
            starts = range(n) if 0 < m < n else [0]
            for j, k in itertools.product(starts, starts):
                J = consecutive_run(range(j, j + m), n)
                K = consecutive_run(range(k, k + m), n)
                runs.record((det(minor_MJK(f, J, K)) == 0) == base, (f, m, j, k))
    return chain, runs


def spectra(F, count, rng):
    res = CheckResult(f"H-chain weight spectrum vs brute over F_{F.order}")
    ident = CheckResult(f"spectrum consistency identity over F_{F.order}")
    scat = CheckResult(f"scattered_check vs direction count over F_{F.order}")
    full = (F.order - 1) // (F.q - 1)
    for f in random_polys(F, count, rng):
        spec = weight_spectrum(f)
        res.record(spec.points == point_weights_brute(f), f)
        ident.record(spec.consistent(F.q, F.n), f)
        scat.record(scattered_check(f).scattered == (direction_count_brute(f) == full), f)
    return res, ident, scat


def mrd(q=2, threads=4):
    res = CheckResult(f"rank <= 5 witnesses over F_{q}^9")
    hits = mrd_search_9(q, threads=threads)
    for c, cert in hits:
        res.record(cert.det_chain[:4] == [0, 0, 0, 0] and cert.rank <= 5, c)
    return res, hits


def _random_matrix(F, rows, cols, rng):
    return MatrixF(F, [[F.random_element(rng) for _ in range(cols)] for _ in range(rows)],
                   rows, cols)


def schur_blocks(F, count, rng):
    res = CheckResult(f"Schur block determinant over F_{F.order}")
    done = 0
    while done < count:
        a, b = rng.randrange(0, 4), rng.randrange(1, 4)
        X, Y = _random_matrix(F, a, a, rng), _random_matrix(F, a, b, rng)
        Z, W = _random_matrix(F, b, a, rng), _random_matrix(F, b, b, rng)
        if det(W) == 0:
            continue
        full = vstack(hstack(X, Y), hstack(Z, W))
        res.record(schur_block_det(X, Y, Z, W) == det(full), (X, Y, Z, W))
        done += 1
    return res


def bordered(F, count, rng):
    res = CheckResult(f"bordered block determinant over F_{F.order}")
    for _ in range(count):
        k = rng.randrange(1, 7)
        l = rng.randrange(1, k + 1)
        A, C = _random_matrix(F, k, l, rng), _random_matrix(F, k, l, rng)
        B = _random_matrix(F, k, k - l, rng)
        M, N = bordered_blocks(A, B, C)
        sign = 1 if l * (k - l + 1) % 2 == 0 else F.minus_one()
        res.record(det(M) == F.mul(sign, det(N)), (k, l))
    return res


def euclid_degree(F, A, B):
    return len(upoly.gcd(F, A, B)) - 1


def classical(F, count, rng, max_deg=6):
    res = CheckResult(f"classical subresultant index = Euclid gcd degree over F_{F.order}")
    for i in range(count):
        G = [F.random_element(rng) for _ in range(rng.randrange(0, 4))] + [1]
        A = upoly.mul(F, G, [F.random_element(rng) for _ in range(rng.randrange(0, max_deg - len(G) + 2))] + [1])
        B = upoly.mul(F, G, [F.random_element(rng) for _ in range(rng.randrange(0, max_deg - len(G) + 2))] + [1])
        if i % 2:
            A = [F.random_element(rng) for _ in range(rng.randrange(0, max_deg))] + [F.random_element(rng, True)]
        res.record(classical_gcd_deg(F, A, B) == euclid_degree(F, A, B), (A, B))
    return res
