"""Arithmetic in F_{q^n} with q = p^s, realised as one extension F_p[t]/(g).

Elements are plain Python ints.  The integer ``a`` encodes the polynomial
whose power-basis coordinates (constant term first) are the base-p digits
of ``a``, least significant digit first.  So ``0`` and ``1`` are the zero
and unit of the field, and the prime field F_p is ``range(p)``.

Small fields (order at most ``TABLE_LIMIT``) get exp/log tables for
multiplication; larger fields fall back to polynomial arithmetic.  Both
paths give identical results and the tests check that they do.
"""

import os
from dataclasses import dataclass
from functools import reduce

from .errors import (CtxMismatch, DivisionByZero, NotIrreducible, NotPrime,
                     SizeBudgetExceeded)

WORD_BUDGET = 2**64
TABLE_LIMIT = 2**16
ADD_TABLE_LIMIT = 1024


def sweep_budget():
    """Largest field order that enumeration-based routines will accept."""
    return int(os.environ.get("LINRANK_BUDGET", 2**48))


def check_sweep(order, budget=None):
    budget = sweep_budget() if budget is None else budget
    if order > budget:
        raise SizeBudgetExceeded(f"sweep over {order} elements exceeds budget {budget}")


def is_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for r in small:
        if n % r == 0:
            return n == r
    d, e = n - 1, 0
    while d % 2 == 0:
        d //= 2
        e += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(e - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n):
    out, r = [], 2
    while r * r <= n:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q):
    """(p, s) with q = p^s."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise ValueError(f"{q} is not a prime power")
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return p, s


# --- dense polynomials over F_p, lists with constant term first ------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a, b, p):
    m = max(len(a), len(b))
    a = a + [0] * (m - len(a))
    b = b + [0] * (m - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _pdivmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                a[i - db + j] = (a[i - db + j] - c * y) % p
    return _trim(q), _trim(a[:db])


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(a, e, g, p):
    result, base = [1], _pmod(a, g, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), g, p)
        base = _pmod(_pmul(base, base, p), g, p)
        e >>= 1
    return result


def is_irreducible(g, p):
    """Rabin's test for a monic polynomial ``g`` over F_p (constant first)."""
    g = _trim(list(g))
    d = len(g) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    # xp[i] = x^(p^i) mod g
    xp = [x]
    for _ in range(d):
        xp.append(_ppowmod(xp[-1], p, g, p))
    if _psub(xp[d], _pmod(x, g, p), p):
        return False
    for r in prime_factors(d):
        h = _psub(xp[d // r], x, p)
        if len(_pgcd(g, h, p)) != 1:
            return False
    return True


def default_modulus(p, degree):
    """First monic irreducible of the given degree in ascending digit order."""
    for i in range(p**degree):
        coeffs = []
        for _ in range(degree):
            i, c = divmod(i, p)
            coeffs.append(c)
        g = coeffs + [1]
        if is_irreducible(g, p):
            return tuple(g)
    raise NotIrreducible(f"no irreducible polynomial of degree {degree} over F_{p}")


# --- the field context ------------------------------------------------------

@dataclass(frozen=True)
class FieldParams:
    p: int
    s: int = 1
    n: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.s < 1 or self.n < 1:
            raise ValueError("s and n must be positive")
        if self.p ** (self.s * self.n) > WORD_BUDGET:
            raise SizeBudgetExceeded(f"field order {self.p}^{self.s * self.n} exceeds 2^64")

    @property
    def q(self):
        return self.p**self.s

    @property
    def degree(self):
        return self.s * self.n

    @property
    def order(self):
        return self.p ** (self.s * self.n)


class FieldCtx:
    """The field F_{q^n} = F_p[t]/(modulus) together with q = p^s.

    Build instances with :func:`make_field_ctx` or :func:`GF`; the
    constructor does not validate its arguments.
    """

    __slots__ = ("params", "p", "s", "n", "q", "degree", "order", "modulus",
                 "_mod_int", "_exp", "_log", "_add", "_frob_exp")

    def __init__(self, params, modulus, tables=None):
        self.params = params
        self.p, self.s, self.n = params.p, params.s, params.n
        self.q = params.q
        self.degree = params.degree
        self.order = params.order
        self.modulus = tuple(modulus)
        self._mod_int = self._encode_digits(self.modulus) if self.p == 2 else None
        self._exp = self._log = self._add = None
        if tables is None:
            tables = self.order <= TABLE_LIMIT
        if tables and self.order > 2:
            self._build_tables()
        if self.p != 2 and self.order <= ADD_TABLE_LIMIT:
            self._add = [[self._add_digits(a, b) for b in range(self.order)]
                         for a in range(self.order)]
        # q^k mod (order - 1), used by the table path of frob()
        self._frob_exp = [pow(self.q, k, self.order - 1) if self.order > 2 else 1
                          for k in range(self.n)]

    def __repr__(self):
        return f"FieldCtx(p={self.p}, s={self.s}, n={self.n}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.params == other.params
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.params, self.modulus))

    @property
    def has_tables(self):
        return self._exp is not None

    # encoding

    def _encode_digits(self, digits):
        return reduce(lambda acc, c: acc * self.p + c, reversed(digits), 0)

    def to_coeffs(self, a):
        """Power-basis coordinates of ``a`` over F_p, constant term first."""
        self.check(a)
        out = []
        for _ in range(self.degree):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != self.degree or any(not 0 <= c < self.p for c in coeffs):
            raise CtxMismatch(f"expected {self.degree} residues mod {self.p}")
        return self._encode_digits(coeffs)

    def check(self, a):
        if not (isinstance(a, int) and 0 <= a < self.order):
            raise CtxMismatch(f"{a!r} is not an element of F_{self.order}")
        return a

    def elements(self, budget=None):
        """All elements in ascending encoding order."""
        check_sweep(self.order, budget)
        return range(self.order)

    def random_element(self, rng, nonzero=False):
        return rng.randrange(1 if nonzero else 0, self.order)

    # additive structure

    def _add_digits(self, a, b, sign=1):
        p, out, scale = self.p, 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + sign * y) % p) * scale
            scale *= p
        return out

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        if self.p == 2 or not a:
            return a
        return self._add_digits(0, a, -1)

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][self.neg(b)]
        return self._add_digits(a, b, -1)

    def minus_one(self):
        return self.p - 1

    def from_int(self, c):
        """Image of the integer ``c`` under Z -> F_p -> F_{q^n}."""
        return c % self.p

    # multiplicative structure

    def _mul_poly(self, a, b):
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
            d, m = self.degree, self._mod_int
            for i in range(r.bit_length() - 1, d - 1, -1):
                if r >> i & 1:
                    r ^= m << (i - d)
            return r
        prod = _pmul(self.to_coeffs(a), self.to_coeffs(b), self.p)
        return self._encode_digits(_pmod(prod, list(self.modulus), self.p))

    def _build_tables(self):
        order = self.order
        factors = prime_factors(order - 1)
        for g in range(2, order):
            if all(self._pow_poly(g, (order - 1) // r) != 1 for r in factors):
                break
        exp = [0] * (2 * order)
        log = [0] * order
        x = 1
        for i in range(order - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        for i in range(order - 1, 2 * order):
            exp[i] = exp[i - (order - 1)]
        self._exp, self._log = exp, log

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_poly(a, b)

    def _pow_poly(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return result

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        # extended Euclid on the coordinate polynomials
        p, g = self.p, list(self.modulus)
        r0, r1 = g, _trim(self.to_coeffs(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = _pdivmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quo, s1, p), p)
        c = pow(r1[0], p - 2, p)
        out = [x * c % p for x in s1]
        return self._encode_digits(out + [0] * (self.degree - len(out)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if not a:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        return self._pow_poly(a, e % (self.order - 1))

    def frob(self, a, k=1):
        """a^(q^k); the exponent k is taken mod n."""
        k %= self.n
        if not k or a < self.p:
            return a
        if self._exp is not None:
            return self._exp[self._log[a] * self._frob_exp[k] % (self.order - 1)]
        for _ in range(k * self.s):
            a = self._pow_poly(a, self.p)
        return a

    def norm(self, a):
        """Relative norm F_{q^n} -> F_q."""
        return reduce(self.mul, (self.frob(a, i) for i in range(self.n)), 1)

    def trace(self, a):
        """Relative trace F_{q^n} -> F_q."""
        return reduce(self.add, (self.frob(a, i) for i in range(self.n)), 0)

    def sum(self, values):
        return reduce(self.add, values, 0)


def make_field_ctx(params, modulus=None, tables=None):
    """Validated field context; the default modulus is deterministic."""
    if not isinstance(params, FieldParams):
        params = FieldParams(*params)
    p, d = params.p, params.degree
    if modulus is None:
        modulus = default_modulus(p, d)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise NotIrreducible(f"modulus must be monic of degree {d}")
        if any(not 0 <= c < p for c in modulus):
            raise NotIrreducible(f"modulus coefficients must lie in [0, {p})")
        if not is_irreducible(modulus, p):
            raise NotIrreducible(f"{list(modulus)} is reducible over F_{p}")
    return FieldCtx(params, modulus, tables=tables)


def GF(p, s=1, n=1, modulus=None, tables=None):
    """Shorthand for ``make_field_ctx(FieldParams(p, s, n), modulus)``."""
    return make_field_ctx(FieldParams(p, s, n), modulus, tables=tables)
