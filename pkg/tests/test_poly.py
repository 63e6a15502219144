from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from uniserial.errors import ImperfectFieldError, NoRootError
from uniserial.fields import ExtensionField, PrimeField, RationalFunctionField, Rationals
from uniserial.poly import (
    GF,
    Poly,
    factor_qq,
    find_root,
    is_irreducible,
    is_squarefree,
    poly_gcd,
    poly_lcm,
    poly_xgcd,
    prime_power_shape,
    random_irreducible,
    roots_in_field,
    split_factor,
    squarefree_part,
)
from uniserial.primelt import embed_subfield

from support import irreducible_by_trial_division, monic_polys, sympy_poly

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)
QQ = Rationals()


def polys(F, max_deg=6):
    seeds = st.integers(0, 2**32)
    degs = st.integers(0, max_deg)
    return st.tuples(seeds, degs).map(
        lambda sd: Poly([F.random(random.Random(sd[0] * 7 + i)) for i in range(sd[1] + 1)], F)
    )


def test_arithmetic_and_division():
    f = Poly([1, 0, 1], F3)  # X^2 + 1
    g = Poly([2, 1], F3)  # X + 2
    q, r = divmod(f * g + Poly([1], F3), g)
    assert q == f and r == Poly([1], F3)
    assert (f**3).degree == 6
    assert f(F3(1)) == F3(2)
    assert Poly([], F3).degree == -1
    assert f.derivative() == Poly([0, 2], F3)


@pytest.mark.parametrize("F", [F2, F5, GF(4), QQ], ids=lambda F: F.name)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_xgcd_bezout(F, data):
    f, g = data.draw(polys(F)), data.draw(polys(F))
    if not f and not g:
        return
    d, u, v = poly_xgcd(f, g)
    assert u * f + v * g == d
    assert d == poly_gcd(f, g)
    if d:
        assert not f % d and not g % d
    if f and g:
        assert poly_lcm(f, g) * d == (f * g).monic()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_irreducible_matches_trial_division(p):
    F = PrimeField(p)
    top = {2: 8, 3: 5, 5: 4}[p]
    for deg in range(1, top + 1):
        for coeffs in monic_polys(p, deg):
            assert is_irreducible(Poly(coeffs, F)) == irreducible_by_trial_division(coeffs, p), coeffs


@pytest.mark.parametrize("p,deg", [(2, 40), (2, 105), (3, 30), (7, 12)])
def test_irreducible_matches_sympy_at_larger_degree(p, deg):
    F = PrimeField(p)
    rng = random.Random(p * deg)
    for _ in range(6):
        f = Poly([rng.randrange(p) for _ in range(deg)] + [1], F)
        assert is_irreducible(f) == sympy_poly(f).is_irreducible
    f = random_irreducible(p, deg, rng)
    assert sympy_poly(f).is_irreducible


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6))
def test_irreducible_over_q_matches_sympy(coeffs):
    if coeffs[-1] == 0:
        coeffs[-1] = 1
    f = Poly(coeffs, QQ)
    assert is_irreducible(f) == sympy_poly(f).is_irreducible


def test_irreducible_over_extension():
    F = GF(4)
    a = F.gen
    # X^2 + X + a is irreducible over GF(4); X^2 + X + 1 splits there
    assert is_irreducible(Poly([a, 1, 1], F))
    assert not is_irreducible(Poly([1, 1, 1], F))


@pytest.mark.parametrize("F", [F2, F3, GF(9), QQ], ids=lambda F: F.name)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_squarefree_part(F, data):
    f = data.draw(polys(F, 4))
    g = data.draw(polys(F, 3))
    if f.degree < 1 or g.degree < 0:
        return
    h = f * f * g
    if not h:
        return
    s = squarefree_part(h)
    assert is_squarefree(s)
    assert not h % s
    # s has the same roots as h: h divides a power of s
    assert not (s ** h.degree) % h


def test_squarefree_part_characteristic_p():
    X = Poly.x(F3)
    f = (X**3 + 2) * (X + 1) ** 2  # X^3 + 2 = (X + 2)^3
    assert squarefree_part(f) == (X + 2) * (X + 1)


def test_squarefree_part_imperfect_refuses():
    F = RationalFunctionField(F2)
    t = F.gen
    X = Poly.x(F)
    f = X**2 - Poly.constant(t, F)  # irreducible but f' = 0
    with pytest.raises(ImperfectFieldError):
        squarefree_part(f * f)


def test_prime_power_shape():
    X = Poly.x(F2)
    p = X**2 + X + Poly.one(F2)
    assert prime_power_shape(p**3) == (p, 3)
    assert prime_power_shape(p * (X + 1)) is None
    assert prime_power_shape((X + 1) ** 4) == (X + 1, 4)


def test_roots_and_split_factor():
    F = GF(9)
    rng = random.Random(1)
    for _ in range(10):
        rs = [F.element(F.random(rng)) for _ in range(3)]
        X = Poly.x(F)
        f = Poly.one(F)
        for r in rs:
            f = f * (X - Poly.constant(r, F))
        got = roots_in_field(f)
        assert set(got) == set(rs)
    g = split_factor(Poly([1, 0, 0, 0, 0, 1], F2))  # X^5 + 1 = (X+1)(X^4+X^3+X^2+X+1)
    assert g is not None and 0 < g.degree < 5
    assert split_factor(Poly([1, 0, 1, 0, 0, 1], F2)) is None


def test_factor_qq():
    X = Poly.x(QQ)
    f = (X**2 - Poly.constant(Fraction(2), QQ)) * (X + 1) ** 2
    got = sorted((g.degree, e) for g, e in factor_qq(f))
    assert got == [(1, 2), (2, 1)]


@pytest.mark.parametrize("q,k,deg", [(2, 12, 4), (4, 6, 3), (3, 6, 2), (2, 70, 7)])
def test_find_root_in_extension(q, k, deg):
    Fq = GF(q)
    p = Fq.characteristic
    e = Fq.order.bit_length() - 1 if p == 2 else 1
    K = GF(p ** (e * k)) if e * k < 20 else None
    rng = random.Random(q + k)
    if K is None:
        K = ExtensionField(p, list(random_irreducible(p, e * k, rng).coeffs))
    f = random_irreducible(Fq, deg, rng)
    r = find_root(f, K, rng)
    # evaluate f at r through the embedding of Fq into K
    emb = embed_subfield(Fq, K)
    acc = K.element(K.zero)
    for c in reversed(f.coeffs):
        acc = acc * r + emb(c)
    assert acc == K.element(K.zero)


def test_find_root_rejects_wrong_degree():
    f = random_irreducible(2, 5, random.Random(0))
    with pytest.raises(NoRootError):
        find_root(f, GF(2**6))
