"""Dickson matrices and their minor chains.

For f = sum_{i<n} a_i x^(sigma^i) the Dickson matrix has (r, c) entry
a_{(c - r) mod n}^(sigma^r), rows and columns indexed from 0.  D_m(f) drops
the first m columns and the last m rows.  The first m with |D_m(f)| != 0 is
the F_q-dimension of ker f, so the rank of f comes out of at most n + 1
determinants scanned in ascending order.
"""

from dataclasses import dataclass, field

from .errors import NotConsecutive, OutOfRange, SizeMismatch, StrideNotOne
from .linpoly import LinearizedPoly
from .matrix import MatrixF, det


@dataclass
class RankCertificate:
    mu: int
    rank: int
    det_chain: list = field(default_factory=list)

    @property
    def zero_map(self):
        # the chain only terminates through the 0x0 convention
        return self.rank == 0

    def to_json(self):
        return {"mu": self.mu, "rank": self.rank,
                "det_chain": [str(d) for d in self.det_chain],
                "zero_map": self.zero_map}


def dickson_sigma(f):
    """D_sigma(f) for sigma = q^stride, coefficients folded to length n."""
    F, n, st = f.ctx, f.ctx.n, f.stride
    a = f.padded()
    return MatrixF(F, [[F.frob(a[(c - r) % n], r * st) for c in range(n)]
                       for r in range(n)], n, n)


def dickson_matrix(f):
    if f.stride != 1:
        raise StrideNotOne("dickson_matrix needs a q-polynomial; use dickson_sigma")
    return dickson_sigma(f)


def _minor_of(D, m):
    n = D.rows
    if not 0 <= m <= n:
        raise OutOfRange(f"minor index {m} outside [0, {n}]")
    return D.submatrix(range(n - m), range(m, n))


def dickson_minor(f, m):
    """D_m(f), or D_{m,sigma}(f) when f has stride > 1."""
    return _minor_of(dickson_sigma(f), m)


def _scan(D):
    n = D.rows
    chain = []
    for m in range(n + 1):
        d = det(_minor_of(D, m))
        chain.append(d)
        if d:
            return RankCertificate(m, n - m, chain)
    raise AssertionError("unreachable: the 0x0 minor has determinant 1")


def rank_via_minor_chain(f):
    """Kernel dimension and rank of a q-polynomial from its Dickson minors."""
    return _scan(dickson_matrix(f))


def rank_via_minor_chain_sigma(f):
    return _scan(dickson_sigma(f))


def consecutive_run(indices, n):
    """Return the run as an ordered list, or raise NotConsecutive."""
    s = sorted(set(i % n for i in indices))
    if len(s) != len(list(indices)):
        raise NotConsecutive(f"{list(indices)} repeats an index modulo {n}")
    m = len(s)
    if m in (0, n):
        return s
    for start in s:
        run = [(start + i) % n for i in range(m)]
        if sorted(run) == s:
            return run
    raise NotConsecutive(f"{s} is not a run of consecutive residues mod {n}")


def minor_MJK(f, J, K):
    """D_sigma(f) with the rows in J and the columns in K removed."""
    J, K = list(J), list(K)
    n = f.ctx.n
    if len(J) != len(K):
        raise SizeMismatch(f"|J| = {len(J)} but |K| = {len(K)}")
    J, K = consecutive_run(J, n), consecutive_run(K, n)
    return dickson_sigma(f).delete(rows=J, cols=K)


def sigma_hat(g):
    """g-hat with coefficients b_{(n-i) mod n}^(sigma^i); D(g)^T = D(g-hat)."""
    F, n = g.ctx, g.ctx.n
    b = g.padded()
    return LinearizedPoly(F, [F.frob(b[(n - i) % n], i * g.stride) for i in range(n)],
                          g.stride)
