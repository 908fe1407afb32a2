"""Dense univariate polynomials over a FieldCtx.

Polynomials are lists of field elements, constant term first, with no
trailing zeros; ``[]`` is the zero polynomial.  Only used by oracles and the
classical subresultant routines, never on a fast path.
"""

from .errors import DivisionByZero


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    return trim(out)


def sub(F, a, b):
    return add(F, a, [F.neg(y) for y in b])


def scale(F, c, a):
    return trim([F.mul(c, x) for x in a])


def mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def divmod_(F, a, b):
    b = trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = trim(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    quo = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = F.mul(rem[i], lead_inv)
        if c:
            quo[i - db] = c
            for j, y in enumerate(b):
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, y))
    return trim(quo), trim(rem[:db])


def monic(F, a):
    a = trim(a)
    if not a:
        return a
    return scale(F, F.inv(a[-1]), a)


def gcd(F, a, b):
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(F, a, b)[1]
    return monic(F, a)
