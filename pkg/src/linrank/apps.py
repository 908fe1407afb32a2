"""Linear sets, scattered polynomials and the F_{q^9} rank search.

For f = sum a_i x^(q^i) let H be D(f) with a_0 replaced by a variable y.
H_m(y0) is the determinant of the m-th minor of H at y = y0, i.e. the m-th
Dickson minor of g_{y0} = y0 x + sum_{i>=1} a_i x^(q^i).  Every root of H_0
lies in F_{q^n}, so all H-chain questions are settled by evaluating at the
q^n field elements instead of expanding H_m symbolically.
"""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .dickson import RankCertificate, _minor_of, dickson_matrix, rank_via_minor_chain
from .errors import InternalInconsistency, OutOfRange, StrideNotOne, ValidationError
from .field import GF, FieldCtx, check_sweep, prime_power
from .linpoly import LinearizedPoly, lp_eval, lp_kernel_brute
from .matrix import det


@dataclass
class WeightSpectrum:
    """Number of points of L_f of each weight.

    ``points`` maps the slope b of the point <(1, b)> to its weight.  The
    point <(0, 1)> never meets U_f outside 0, so ``infinity_weight`` is 0.
    """
    counts: dict
    points: dict = field(default_factory=dict)
    infinity_weight: int = 0

    def consistent(self, q, n):
        return sum(c * (q**w - 1) for w, c in self.counts.items()) == q**n - 1

    @property
    def scattered(self):
        return set(self.counts) == {1}

    def to_json(self):
        return {"counts": {str(w): c for w, c in sorted(self.counts.items())},
                "points": {str(b): w for b, w in sorted(self.points.items())},
                "infinity_weight": self.infinity_weight}


@dataclass
class ScatteredResult:
    scattered: bool
    witness: int = None
    slope: int = None
    weight: int = None

    def to_json(self):
        return {"scattered": self.scattered, "witness": _opt(self.witness),
                "slope": _opt(self.slope), "weight": self.weight}


def _opt(x):
    return None if x is None else str(x)


def _q_poly(f):
    if f.stride != 1:
        raise StrideNotOne("linear-set routines take q-polynomials")
    return f.padded()


def _with_a0(f, y0):
    a = _q_poly(f)
    a[0] = y0
    return LinearizedPoly(f.ctx, a)


def h_eval(f, y0, m):
    """H_m(y0)."""
    n = f.ctx.n
    if not 0 <= m <= n:
        raise OutOfRange(f"m = {m} outside [0, {n}]")
    return det(_minor_of(dickson_matrix(_with_a0(f, f.ctx.check(y0))), m))


def h_weight(f, y0):
    """Largest mu with H_0(y0) = ... = H_{mu-1}(y0) = 0, H_mu(y0) != 0."""
    return rank_via_minor_chain(_with_a0(f, y0)).mu


def weight_spectrum(f, budget=None):
    F = f.ctx
    check_sweep(F.order, budget)
    a0 = _q_poly(f)[0]
    points = {}
    for y0 in range(F.order):
        w = h_weight(f, y0)
        if w:
            points[F.sub(a0, y0)] = w
    counts = Counter(points.values())
    return WeightSpectrum(dict(sorted(counts.items())), dict(sorted(points.items())))


def point_weights_brute(f, budget=None):
    """Weights of the points <(1, b)> of L_f by grouping U_f by slope."""
    F = f.ctx
    check_sweep(F.order, budget)
    g = f.expanded()
    sizes = Counter(F.div(lp_eval(g, x), x) for x in range(1, F.order))
    out = {}
    for b, c in sizes.items():
        w = 0
        while F.q**w - 1 < c:
            w += 1
        if F.q**w - 1 != c:
            raise InternalInconsistency(f"slope {b} is hit {c} times")
        out[b] = w
    return dict(sorted(out.items()))


def direction_count_brute(f, budget=None):
    F = f.ctx
    check_sweep(F.order, budget)
    g = f.expanded()
    return len({F.div(lp_eval(g, x), x) for x in range(1, F.order)})


def scattered_check(f, budget=None):
    """f is scattered iff H_0 and H_1 have no common root in F_{q^n}."""
    F = f.ctx
    check_sweep(F.order, budget)
    a0 = _q_poly(f)[0]
    for y0 in range(F.order):
        if h_eval(f, y0, 0) == 0 and h_eval(f, y0, 1) == 0:
            return ScatteredResult(False, y0, F.sub(a0, y0), h_weight(f, y0))
    return ScatteredResult(True)


def mrd_candidate(F, c):
    """-x + (1 + c^(-q)) x^q + c x^(q^2) - x^(q^4)."""
    minus = F.minus_one()
    a1 = F.add(1, F.frob(F.inv(c), 1))
    return LinearizedPoly(F, [minus, a1, c, 0, minus])


def mrd_search_9(field_or_q=2, threads=1, budget=None):
    """All nonzero c whose candidate has rank at most 5 on F_{q^9}.

    A candidate is a hit when |D_0| = |D_1| = |D_2| = |D_3| = 0; each hit
    is re-checked by brute-force kernel enumeration.  Returns a list of
    (c, RankCertificate) in ascending order of c.
    """
    if isinstance(field_or_q, FieldCtx):
        F = field_or_q
    else:
        F = GF(*prime_power(field_or_q), 9)
    if F.n != 9:
        raise ValidationError("the search is defined over F_{q^9}")
    check_sweep(F.order, budget)

    def probe(c):
        f = mrd_candidate(F, c)
        D = dickson_matrix(f)
        if any(det(_minor_of(D, m)) for m in range(4)):
            return None
        cert = rank_via_minor_chain(f)
        if cert.rank > 5 or lp_kernel_brute(f, budget=budget).dim != cert.mu:
            raise InternalInconsistency(f"minor chain and brute kernel disagree at c={c}")
        return c, cert

    cs = range(1, F.order)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(probe, cs, chunksize=32))
    else:
        found = [probe(c) for c in cs]
    return [hit for hit in found if hit is not None]

