"""Linearized (sigma-)polynomials over F_{q^n} under symbolic composition.

A :class:`LinearizedPoly` with coefficients (a_0, ..., a_k) and stride s'
stands for sum a_i x^(sigma^i) with sigma = q^s'.  Stride 1 gives ordinary
q-polynomials.  Coefficients are stored without reduction modulo
x^(q^n) - x; folding is explicit (:meth:`LinearizedPoly.reduced`).
"""

from dataclasses import dataclass
from math import gcd

from . import upoly
from .errors import (BothZero, CtxMismatch, DivisionByZero, InternalInconsistency,
                     OutOfRange, SizeBudgetExceeded, StrideMismatch, StrideNotCoprime)
from .field import check_sweep

ORDINARY_DEGREE_CAP = 2**20


class LinearizedPoly:
    __slots__ = ("ctx", "coeffs", "stride")

    def __init__(self, ctx, coeffs, stride=1):
        if stride < 1 or gcd(stride, ctx.n) != 1:
            raise StrideNotCoprime(f"stride {stride} is not coprime to n={ctx.n}")
        coeffs = [ctx.check(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)
        self.stride = stride

    @classmethod
    def monomial(cls, ctx, i, coeff=1, stride=1):
        return cls(ctx, [0] * i + [coeff], stride)

    @classmethod
    def identity(cls, ctx, stride=1):
        return cls(ctx, [1], stride)

    @classmethod
    def zero(cls, ctx, stride=1):
        return cls(ctx, [], stride)

    @classmethod
    def frobenius_fixer(cls, ctx, k=None):
        """x^(q^k) - x; with the default k = n this is x^(q^n) - x."""
        k = ctx.n if k is None else k
        return cls(ctx, [ctx.minus_one()] + [0] * (k - 1) + [1])

    def __repr__(self):
        s = f", stride={self.stride}" if self.stride != 1 else ""
        return f"LinearizedPoly({list(self.coeffs)}{s})"

    def __eq__(self, other):
        return (isinstance(other, LinearizedPoly) and self.ctx == other.ctx
                and self.stride == other.stride and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.stride))

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def qdeg(self):
        """Index of the top nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _compatible(self, other):
        if self.ctx != other.ctx:
            raise CtxMismatch("polynomials live over different fields")
        if self.stride != other.stride:
            raise StrideMismatch(f"strides {self.stride} and {other.stride} differ")

    def _new(self, coeffs):
        return LinearizedPoly(self.ctx, coeffs, self.stride)

    def __add__(self, other):
        self._compatible(other)
        F = self.ctx
        m = max(len(self.coeffs), len(other.coeffs))
        return self._new([F.add(self[i], other[i]) for i in range(m)])

    def __neg__(self):
        return self._new([self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, alpha):
        """alpha * f, i.e. left composition with the map x -> alpha x."""
        return self._new([self.ctx.mul(alpha, c) for c in self.coeffs])

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.ctx.inv(self.lead))

    def __call__(self, x):
        return lp_eval(self, x)

    def padded(self, length=None):
        """Coefficient list folded modulo x^(q^n) - x and padded to n entries."""
        F = self.ctx
        n = F.n if length is None else length
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] = F.add(out[i % n], c)
        return out

    def reduced(self):
        """The same map on F_{q^n} with sigma-degree below n."""
        return self._new(self.padded())

    def expanded(self):
        """Stride-1 q-polynomial of q-degree < n inducing the same map."""
        F, n = self.ctx, self.ctx.n
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            j = i * self.stride % n
            out[j] = F.add(out[j], c)
        return LinearizedPoly(F, out)

    def frobenius_power(self, t):
        """f(x)^(sigma^t) folded modulo x^(q^n) - x."""
        F, n = self.ctx, self.ctx.n
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            j = (i + t) % n
            out[j] = F.add(out[j], F.frob(c, t * self.stride))
        return self._new(out)

    def to_upoly(self, cap=ORDINARY_DEGREE_CAP):
        """The underlying sparse ordinary polynomial as a dense coefficient list."""
        if not self.coeffs:
            return []
        step = self.ctx.q**self.stride
        top = step**self.qdeg
        if top > cap:
            raise SizeBudgetExceeded(f"ordinary degree {top} exceeds {cap}")
        out = [0] * (top + 1)
        for i, c in enumerate(self.coeffs):
            out[step**i] = c
        return out


@dataclass
class KernelReport:
    dim: int
    rank: int
    kernel_elements: list = None


def lp_eval(f, x):
    F = f.ctx
    F.check(x)
    acc = 0
    for i, c in enumerate(f.coeffs):
        if c:
            acc = F.add(acc, F.mul(c, F.frob(x, i * f.stride)))
    return acc


def lp_compose(f, g, reduce_mod=False):
    """Symbolic composition f o g; q-degrees add unless ``reduce_mod``."""
    f._compatible(g)
    F, st = f.ctx, f.stride
    if not f or not g:
        return f._new([])
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, F.frob(b, i * st)))
    h = f._new(out)
    return h.reduced() if reduce_mod else h


def lp_right_divide(f, h):
    """Return (quotient, remainder) with f = quotient o h + remainder."""
    f._compatible(h)
    if not h:
        raise DivisionByZero("right division by the zero polynomial")
    F, st = f.ctx, f.stride
    e = h.qdeg
    rem = list(f.coeffs)
    quo = [0] * max(len(rem) - e, 0)
    for d in range(len(rem) - 1, e - 1, -1):
        if not rem[d]:
            continue
        shift = d - e
        t = F.div(rem[d], F.frob(h.lead, shift * st))
        quo[shift] = t
        for j, b in enumerate(h.coeffs):
            if b:
                rem[j + shift] = F.sub(rem[j + shift], F.mul(t, F.frob(b, shift * st)))
    return f._new(quo), f._new(rem[:e])


def lp_gcrd(f, g):
    """Monic greatest common symbolic right divisor."""
    f._compatible(g)
    if not f and not g:
        raise BothZero("gcrd of two zero polynomials")
    while g:
        f, g = g, lp_right_divide(f, g)[1]
    return f.monic()


def lp_ordinary_gcd_oracle(f, g, cap=ORDINARY_DEGREE_CAP):
    """Monic ordinary gcd of f and g as dense polynomials (an oracle)."""
    f._compatible(g)
    return upoly.gcd(f.ctx, f.to_upoly(cap), g.to_upoly(cap))


def lp_kernel_brute(f, materialize=False, budget=None):
    """Kernel dimension over F_q of the map f on F_{q^n}, by enumeration."""
    F = f.ctx
    check_sweep(F.order, budget)
    g = f.expanded()
    zeros = [x for x in range(F.order) if lp_eval(g, x) == 0]
    count, mu = len(zeros), 0
    while F.q**mu < count:
        mu += 1
    if F.q**mu != count:
        raise InternalInconsistency(f"kernel has {count} elements, not a power of {F.q}")
    return KernelReport(mu, F.n - mu, zeros if materialize else None)


def random_poly(ctx, qdeg, rng, stride=1, monic=False):
    """Random polynomial of exactly the given q-degree (-1 gives zero)."""
    if qdeg < 0:
        return LinearizedPoly(ctx, [], stride)
    coeffs = [ctx.random_element(rng) for _ in range(qdeg)]
    coeffs.append(1 if monic else ctx.random_element(rng, nonzero=True))
    return LinearizedPoly(ctx, coeffs, stride)


def restride(f, stride):
    """Rewrite the map of f as a sigma-polynomial with sigma = q^stride."""
    F, n = f.ctx, f.ctx.n
    g = f.expanded()
    out = [0] * n
    for i in range(n):
        out[i] = g[i * stride % n]
    return LinearizedPoly(F, out, stride)


def subspace_poly(ctx, vectors):
    """Monic q-polynomial whose roots are the F_q-span of ``vectors``.

    Dependent vectors are skipped, so the q-degree is the dimension of the span.
    """
    L = LinearizedPoly.identity(ctx)
    for w in vectors:
        v = lp_eval(L, w)
        if v:
            # x^q - v^(q-1) x kills L(span + w)
            step = LinearizedPoly(ctx, [ctx.neg(ctx.pow(v, ctx.q - 1)), 1])
            L = lp_compose(step, L)
    return L


def random_with_kernel(ctx, dim, rng, stride=1):
    """Random map on F_{q^n} whose kernel has F_q-dimension exactly ``dim``."""
    if not 0 <= dim <= ctx.n:
        raise OutOfRange(f"kernel dimension {dim} outside [0, {ctx.n}]")
    W = LinearizedPoly.identity(ctx)
    while W.qdeg < dim:
        W = subspace_poly(ctx, [ctx.random_element(rng) for _ in range(dim)])
    fixer = LinearizedPoly.frobenius_fixer(ctx)
    while True:
        # u is injective iff it shares no root with x^(q^n) - x
        u = LinearizedPoly(ctx, [ctx.random_element(rng) for _ in range(ctx.n)])
        if u and lp_gcrd(u, fixer).qdeg == 0:
            break
    return restride(lp_compose(u, W, reduce_mod=True), stride)
