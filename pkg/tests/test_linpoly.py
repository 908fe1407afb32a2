import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from linrank import upoly
from linrank.errors import (BothZero, CtxMismatch, DivisionByZero, OutOfRange, StrideMismatch,
                            StrideNotCoprime)
from linrank.field import GF
from linrank.linpoly import (LinearizedPoly, lp_compose, lp_eval, lp_gcrd, lp_kernel_brute,
                             lp_ordinary_gcd_oracle, lp_right_divide, random_poly,
                             random_with_kernel, restride, subspace_poly)

F4, F8, F16, F32 = GF(2, 1, 2), GF(2, 1, 3), GF(2, 1, 4), GF(2, 1, 5)
F9 = GF(3, 1, 2)


def X(F, i=0, c=1, stride=1):
    return LinearizedPoly.monomial(F, i, c, stride)


def fixer(F, k):
    return LinearizedPoly.frobenius_fixer(F, k)


def test_construction_trims_and_validates():
    f = LinearizedPoly(F8, [1, 2, 0, 0])
    assert f.coeffs == (1, 2) and f.qdeg == 1
    assert LinearizedPoly.zero(F8).qdeg == -1
    with pytest.raises(StrideNotCoprime):
        LinearizedPoly(GF(2, 1, 4), [1], stride=2)
    with pytest.raises(CtxMismatch):
        LinearizedPoly(F4, [7])


def test_eval_examples():
    assert all(lp_eval(X(F8), a) == a for a in F8.elements())
    assert lp_eval(fixer(F4, 1), 1) == 0
    # x^q at t under t^2 + t + 1 is t + 1
    assert lp_eval(X(F4, 1), 2) == 3


def test_eval_is_additive():
    rng = random.Random(1)
    for F in (F8, F9, F32):
        f = random_poly(F, 4, rng, stride=2 if F is F32 else 1)
        for _ in range(50):
            a, b = F.random_element(rng), F.random_element(rng)
            assert f(F.add(a, b)) == F.add(f(a), f(b))


def test_compose_examples():
    assert lp_compose(X(F8, 1), X(F8, 1)) == X(F8, 2)
    f = LinearizedPoly(F8, [3, 5, 7])
    assert lp_compose(f, X(F8)) == f
    assert lp_compose(X(F8), f) == f
    for alpha in F8.elements():
        # x^q o alpha x = alpha^q x^q
        assert lp_compose(X(F8, 1), X(F8, 0, alpha)) == X(F8, 1, F8.frob(alpha))


def test_compose_degree_and_reduction():
    rng = random.Random(2)
    f, g = random_poly(F8, 3, rng), random_poly(F8, 4, rng)
    h = lp_compose(f, g)
    assert h.qdeg == 7
    r = lp_compose(f, g, reduce_mod=True)
    assert r.qdeg < F8.n
    for a in F8.elements():
        assert h(a) == r(a) == f(g(a))


def test_compose_matches_map_composition_with_stride():
    rng = random.Random(3)
    f, g = random_poly(F32, 3, rng, stride=2), random_poly(F32, 2, rng, stride=2)
    h = lp_compose(f, g)
    for a in F32.elements():
        assert h(a) == f(g(a))


def test_compose_mismatches():
    with pytest.raises(StrideMismatch):
        lp_compose(X(F32, 1), X(F32, 1, stride=2))
    with pytest.raises(CtxMismatch):
        lp_compose(X(F8, 1), X(F16, 1))


def test_noncommutative_witness_over_f4():
    polys = [LinearizedPoly(F4, c) for c in itertools.product(range(4), repeat=2)]
    witness = next((f, g) for f in polys for g in polys
                   if lp_compose(f, g) != lp_compose(g, f))
    f, g = witness
    assert lp_compose(f, g) != lp_compose(g, f)


def test_right_divide_examples():
    q, r = lp_right_divide(X(F8, 2), X(F8, 1))
    assert q == X(F8, 1) and not r
    f = LinearizedPoly(F8, [3, 0, 5])
    q, r = lp_right_divide(f, X(F8))
    assert q == f and not r
    q, r = lp_right_divide(fixer(F8, 2), fixer(F8, 1))
    # (x^q + x) o (x^q - x) = x^(q^2) - x in characteristic 2
    assert q == LinearizedPoly(F8, [1, 1]) and not r
    assert lp_compose(q, fixer(F8, 1)) == fixer(F8, 2)
    with pytest.raises(DivisionByZero):
        lp_right_divide(f, LinearizedPoly.zero(F8))


def test_right_divide_odd_characteristic():
    # over F_9: (x^3 + x) o (x^3 - x) = x^9 - x
    q, r = lp_right_divide(fixer(F9, 2), fixer(F9, 1))
    assert q == LinearizedPoly(F9, [1, 1]) and not r


polys8 = st.lists(st.integers(0, 7), max_size=6).map(lambda c: LinearizedPoly(F8, c))


@settings(max_examples=300, deadline=None)
@given(polys8, polys8.filter(bool))
def test_right_division_identity(f, h):
    q, r = lp_right_divide(f, h)
    assert lp_compose(q, h) + r == f
    assert r.qdeg < h.qdeg


@settings(max_examples=100, deadline=None)
@given(polys8, polys8, polys8)
def test_composition_laws(f, g, h):
    assert lp_compose(lp_compose(f, g), h) == lp_compose(f, lp_compose(g, h))
    assert lp_compose(f, g + h) == lp_compose(f, g) + lp_compose(f, h)
    assert lp_compose(f + g, h) == lp_compose(f, h) + lp_compose(g, h)


def test_gcrd_examples():
    f = LinearizedPoly(F8, [3, 1, 6])
    assert lp_gcrd(f, f) == f.monic()
    assert lp_gcrd(fixer(F8, 2), fixer(F8, 1)) == fixer(F8, 1)
    assert lp_gcrd(f, LinearizedPoly.zero(F8)) == f.monic()
    with pytest.raises(BothZero):
        lp_gcrd(LinearizedPoly.zero(F8), LinearizedPoly.zero(F8))


def test_gcrd_recovers_common_right_factor():
    rng = random.Random(4)
    found = 0
    while found < 30:
        u, v = random_poly(F16, rng.randrange(1, 4), rng), random_poly(F16, rng.randrange(1, 4), rng)
        if lp_gcrd(u, v).qdeg != 0:
            continue
        w = random_poly(F16, rng.randrange(0, 3), rng)
        g = lp_gcrd(lp_compose(u, w), lp_compose(v, w))
        assert g == w.monic()
        assert not lp_right_divide(lp_compose(u, w), g)[1]
        found += 1


def test_ordinary_gcd_oracle_examples():
    f = LinearizedPoly(F8, [3, 1, 6])
    assert lp_ordinary_gcd_oracle(f, LinearizedPoly.zero(F8)) == upoly.monic(F8, f.to_upoly())
    assert lp_ordinary_gcd_oracle(fixer(F8, 1), fixer(F8, 2)) == fixer(F8, 1).to_upoly()


def test_gcrd_equals_ordinary_gcd_exhaustive_f4():
    polys = [LinearizedPoly(F4, c) for c in itertools.product(range(4), repeat=3)]
    for f, g in itertools.product(polys, repeat=2):
        if f or g:
            assert lp_gcrd(f, g).to_upoly() == lp_ordinary_gcd_oracle(f, g)


def test_gcrd_equals_ordinary_gcd_random_f8():
    rng = random.Random(5)
    for _ in range(200):
        f, g = random_poly(F8, rng.randrange(0, 3), rng), random_poly(F8, rng.randrange(0, 3), rng)
        assert lp_gcrd(f, g).to_upoly() == lp_ordinary_gcd_oracle(f, g)


def test_kernel_brute_examples():
    assert (lp_kernel_brute(X(F8)).dim, lp_kernel_brute(X(F8)).rank) == (0, 3)
    assert (lp_kernel_brute(fixer(F8, 1)).dim, lp_kernel_brute(fixer(F8, 1)).rank) == (1, 2)
    trace = LinearizedPoly(F8, [1, 1, 1])
    rep = lp_kernel_brute(trace, materialize=True)
    assert (rep.dim, rep.rank) == (2, 1)
    assert len(rep.kernel_elements) == F8.q**rep.dim


def test_kernel_brute_sigma_stride():
    # x^sigma - x with sigma = q^2 on F_32 fixes exactly F_2
    f = LinearizedPoly(F32, [1, 1], stride=2)
    assert lp_kernel_brute(f).dim == 1


def test_gcd_with_field_polynomial_has_degree_q_to_nullity():
    rng = random.Random(6)
    for F in (F8, F9, F16):
        for _ in range(20):
            f = random_with_kernel(F, rng.randrange(0, F.n + 1), rng)
            G = lp_ordinary_gcd_oracle(f, fixer(F, F.n))
            assert len(G) - 1 == F.q ** lp_kernel_brute(f).dim


def test_kernel_of_gcrd_with_field_polynomial():
    rng = random.Random(7)
    for _ in range(20):
        f = random_with_kernel(F16, rng.randrange(0, 5), rng)
        h = lp_gcrd(f, fixer(F16, 4))
        ker_f = set(lp_kernel_brute(f, materialize=True).kernel_elements)
        ker_h = {a for a in F16.elements() if h(a) == 0}
        assert ker_h == ker_f
        assert h.qdeg == lp_kernel_brute(f).dim


def test_subspace_poly_and_restride():
    rng = random.Random(8)
    L = subspace_poly(F16, [1, 2, 3])  # span{1, t} since 3 = 1 + t
    assert L.qdeg == 2
    assert {a for a in F16.elements() if L(a) == 0} == {0, 1, 2, 3}
    f = random_poly(F32, 4, rng)
    g = restride(f, 3)
    assert g.stride == 3
    assert all(f(a) == g(a) for a in F32.elements())


def test_random_with_kernel_is_exact():
    rng = random.Random(9)
    for F, strides in ((F8, (1,)), (F9, (1,)), (F32, (1, 2, 3))):
        for stride in strides:
            for dim in range(F.n + 1):
                f = random_with_kernel(F, dim, rng, stride)
                assert f.stride == stride and lp_kernel_brute(f).dim == dim
    with pytest.raises(OutOfRange):
        random_with_kernel(F8, 4, rng)
