"""Scalar q-subresultants and their classical counterparts.

R_{m,q}(f, g) for q-polynomials f (q-degree k) and g (q-degree l) is the
(k+l-2m)-square matrix whose first l-m rows are shifted copies of
(a_k, ..., a_0) and whose last k-m rows are shifted copies of
(b_l, ..., b_0).  Row i of the a-block is raised to q^(l-m-1-i), row j of
the b-block to q^(k-m-1-j).  The classical Sylvester-style matrix is the
same band layout without the Frobenius twists.  The first m with a nonzero
determinant is the q-degree (resp. degree) of the gcd.
"""

from dataclasses import dataclass, field

from . import upoly
from .errors import DegreeRange, OutOfRange, StrideNotOne, ZeroLeadingCoefficient
from .linpoly import LinearizedPoly
from .matrix import MatrixF, det, rank_nullity


@dataclass
class SubresChain:
    mu: int
    det_chain: list = field(default_factory=list)
    sizes: list = field(default_factory=list)

    def to_json(self):
        return {"mu": self.mu, "det_chain": [str(d) for d in self.det_chain],
                "sizes": list(self.sizes)}


def _band(F, a, k, b, l, m, twist):
    """Shared index function for the classical and the q-twisted matrices.

    ``a`` and ``b`` are coefficient lists of formal degrees k and l; the
    entry in row r of a block at column c is a_{k-c+r}, zero out of range.
    """
    if not 0 <= m <= min(k, l):
        raise DegreeRange(f"m = {m} outside [0, min({k}, {l})]")
    size = k + l - 2 * m

    def block(coeffs, top, nrows):
        rows = []
        for r in range(nrows):
            e = nrows - 1 - r
            row = []
            for c in range(size):
                i = top - c + r
                x = coeffs[i] if 0 <= i < len(coeffs) else 0
                row.append(F.frob(x, e) if twist and x else x)
            rows.append(row)
        return rows

    return MatrixF(F, block(a, k, l - m) + block(b, l, k - m), size, size)


def _degrees(f, g):
    if f.stride != 1 or g.stride != 1:
        raise StrideNotOne("q-subresultants are defined for stride-1 polynomials")
    if not f or not g:
        raise ZeroLeadingCoefficient("both polynomials need a nonzero leading coefficient")
    return f.qdeg, g.qdeg


def build_subresultant_q(f, g, m):
    k, l = _degrees(f, g)
    return _band(f.ctx, f.coeffs, k, g.coeffs, l, m, twist=True)


def structural_shrink_check(f, g, m, R_m=None):
    """R_{m+1} equals R_m minus its first/last columns and rows 0 and l-m.

    ``R_m`` may be supplied (e.g. a deliberately corrupted copy).
    """
    k, l = _degrees(f, g)
    if m + 1 > min(k, l):
        raise DegreeRange(f"m + 1 = {m + 1} exceeds min({k}, {l})")
    if R_m is None:
        R_m = build_subresultant_q(f, g, m)
    size = R_m.rows
    shrunk = R_m.delete(rows=(0, l - m), cols=(0, size - 1))
    return shrunk == build_subresultant_q(f, g, m + 1)


def gcd_qdeg_via_subres(f, g):
    k, l = _degrees(f, g)
    chain, sizes = [], []
    for m in range(min(k, l) + 1):
        d = det(build_subresultant_q(f, g, m))
        chain.append(d)
        sizes.append(k + l - 2 * m)
        if d:
            return SubresChain(m, chain, sizes)
    raise AssertionError("unreachable: R_min(k,l) has nonzero determinant")


def subres_nullity(f, g, m):
    return rank_nullity(build_subresultant_q(f, g, m))[1]


def _padded_coeffs(f):
    if f.stride != 1:
        raise StrideNotOne("padded subresultants need a q-polynomial")
    return f.padded()


def build_subresultant_padded(f, m):
    """R_m(f) := R_{m,q}(f, x^(q^n) - x) with f read at formal q-degree n-1.

    The top coefficient a_{n-1} may vanish, which is what makes this usable
    when the true q-degree of f is unknown.
    """
    F, n = f.ctx, f.ctx.n
    if not 0 <= m <= n - 1:
        raise OutOfRange(f"m = {m} outside [0, {n - 1}]")
    g = LinearizedPoly.frobenius_fixer(F)
    return _band(F, _padded_coeffs(f), n - 1, g.coeffs, n, m, twist=True)


def padded_chain(f):
    """Scan |R_0(f)|, |R_1(f)|, ... in the padded form; mu = dim ker f."""
    n = f.ctx.n
    chain, sizes = [], []
    for m in range(n):
        d = det(build_subresultant_padded(f, m))
        chain.append(d)
        sizes.append(2 * n - 1 - 2 * m)
        if d:
            return SubresChain(m, chain, sizes)
    # only the zero map gets here
    chain.append(1)
    sizes.append(0)
    return SubresChain(n, chain, sizes)


def classical_subresultant(F, A, B, m):
    """Untwisted (k+l-2m)-square matrix of two ordinary polynomials."""
    A, B = upoly.trim(A), upoly.trim(B)
    if not A or not B:
        raise ZeroLeadingCoefficient("both polynomials need a nonzero leading coefficient")
    return _band(F, A, len(A) - 1, B, len(B) - 1, m, twist=False)


def classical_gcd_deg(F, A, B):
    A, B = upoly.trim(A), upoly.trim(B)
    if not A or not B:
        raise ZeroLeadingCoefficient("both polynomials need a nonzero leading coefficient")
    for m in range(min(len(A), len(B))):
        if det(classical_subresultant(F, A, B, m)):
            return m
    raise AssertionError("unreachable: the last subresultant is nonzero")
