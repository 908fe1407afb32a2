import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from linrank.errors import CtxMismatch, DivisionByZero, NotIrreducible, NotPrime
from linrank.field import (GF, FieldParams, default_modulus, is_irreducible, is_prime,
                           make_field_ctx, prime_power)

FIELDS = [GF(2, 1, 2), GF(2, 1, 3), GF(3, 1, 2), GF(2, 2, 2), GF(5, 1, 3), GF(2, 1, 9),
          GF(3, 1, 3, tables=False), GF(2, 3, 2, tables=False)]


def _has_root(g, p):
    return any(sum(c * x**i for i, c in enumerate(g)) % p == 0 for x in range(p))


def test_default_modulus_f4():
    # the monic quadratics over F_2 in scan order are x^2, x^2+1, x^2+x, x^2+x+1;
    # a quadratic is irreducible iff it has no root in F_2
    scan = [(c0, c1, 1) for c1 in range(2) for c0 in range(2)]
    first = next(g for g in scan if not _has_root(g, 2))
    assert first == (1, 1, 1)
    assert GF(2, 1, 2).modulus == first


def test_degree_one_modulus_is_x():
    assert GF(2, 1, 1).modulus == (0, 1)
    assert GF(7).modulus == (0, 1)


def test_not_prime():
    with pytest.raises(NotPrime):
        FieldParams(4, 1, 2)
    with pytest.raises(NotPrime):
        GF(1)


def test_reducible_modulus_rejected():
    with pytest.raises(NotIrreducible):
        make_field_ctx(FieldParams(2, 1, 2), [0, 1, 1])
    with pytest.raises(NotIrreducible):
        make_field_ctx(FieldParams(2, 1, 2), [1, 1])


def test_explicit_modulus():
    F = make_field_ctx(FieldParams(2, 1, 3), [1, 0, 1, 1])
    assert F.modulus == (1, 0, 1, 1)
    # t^3 = t^2 + 1 under this modulus
    assert F.mul(2, 4) == 0b101


@pytest.mark.parametrize("p,d", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_irreducibility_against_root_free_factor_search(p, d):
    # a polynomial of degree <= 3 is irreducible iff it has no roots; for
    # degree 4 also rule out products of two monic quadratics
    quads = [(a, b, 1) for a in range(p) for b in range(p)]

    def mul(u, v):
        out = [0] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                out[i + j] = (out[i + j] + x * y) % p
        return tuple(out)

    products = {mul(u, v) for u in quads for v in quads} if d == 4 else set()
    for coeffs in itertools.product(range(p), repeat=d):
        g = coeffs + (1,)
        expect = not _has_root(g, p) and g not in products
        assert is_irreducible(g, p) == expect, g


def test_default_modulus_is_first_irreducible():
    for p, d in [(2, 5), (3, 4), (2, 9)]:
        g = default_modulus(p, d)
        assert is_irreducible(g, p)
        rank = sum(c * p**i for i, c in enumerate(g[:-1]))
        for i in range(rank):
            digits = [(i // p**j) % p for j in range(d)]
            assert not is_irreducible(digits + [1], p)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**31 - 1)
    assert not is_prime(3215031751)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    with pytest.raises(ValueError):
        prime_power(12)


def test_f4_products():
    F = GF(2, 1, 2)
    t = 2
    assert F.mul(0, t) == 0
    assert F.mul(1, t) == t
    assert F.mul(t, t) == 3  # t + 1
    assert F.inv(1) == 1
    assert F.inv(t) == 3
    with pytest.raises(DivisionByZero):
        F.inv(0)


def test_frobenius_examples():
    F = GF(2, 1, 2)
    assert F.frob(2, 0) == 2
    assert F.frob(2, 1) == 3
    for a in range(F.order):
        assert F.frob(a, F.n) == a


def test_enumeration():
    assert list(GF(2).elements()) == [0, 1]
    assert list(GF(2, 1, 2).elements()) == [0, 1, 2, 3]
    assert len(list(GF(2, 1, 3).elements())) == 8


def test_encoding_round_trip():
    for F in FIELDS[:5]:
        for a in F.elements():
            assert F.from_coeffs(F.to_coeffs(a)) == a
    assert GF(3, 1, 2).to_coeffs(5) == [2, 1]


def test_ctx_mismatch():
    F = GF(2, 1, 2)
    with pytest.raises(CtxMismatch):
        F.check(4)
    with pytest.raises(CtxMismatch):
        F.from_coeffs([1, 0, 0])


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_fixed_field_has_q_elements(F):
    if F.order > 2**12:
        pytest.skip("enumeration kept small")
    fixed = [a for a in F.elements() if F.frob(a, 1) == a]
    assert len(fixed) == F.q


@pytest.mark.parametrize("p,s,n", [(2, 1, 4), (3, 1, 3), (2, 2, 3), (5, 1, 2), (3, 2, 2)])
def test_table_and_polynomial_paths_agree(p, s, n):
    A, B = GF(p, s, n, tables=True), GF(p, s, n, tables=False)
    assert A.has_tables and not B.has_tables
    rng = random.Random(7)
    for _ in range(300):
        a, b = rng.randrange(A.order), rng.randrange(A.order)
        assert A.mul(a, b) == B.mul(a, b)
        assert A.frob(a, 1) == B.frob(a, 1)
        assert A.pow(a, 17) == B.pow(a, 17)
        if a:
            assert A.inv(a) == B.inv(a)


def test_norm_and_trace_land_in_base_field():
    F = GF(2, 1, 4)
    for a in F.elements():
        assert F.frob(F.norm(a)) == F.norm(a)
        assert F.frob(F.trace(a)) == F.trace(a)
    assert sum(1 for a in F.elements() if F.trace(a) == 0) == F.order // F.q


def _triples(F):
    e = st.integers(0, F.order - 1)
    return st.tuples(st.sampled_from([F]), e, e, e)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(_triples))
def test_field_axioms(case):
    F, a, b, c = case
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(_triples), st.integers(0, 12))
def test_frobenius_is_a_ring_map(case, k):
    F, a, b, _ = case
    assert F.frob(F.add(a, b), k) == F.add(F.frob(a, k), F.frob(b, k))
    assert F.frob(F.mul(a, b), k) == F.mul(F.frob(a, k), F.frob(b, k))
    assert F.frob(a, k) == F.pow(a, F.q ** (k % F.n))
