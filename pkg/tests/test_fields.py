from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from uniserial.errors import FieldMismatchError, ImperfectFieldError, NotFiniteFieldError
from uniserial.fields import (
    ExtensionField,
    PrimeField,
    RationalFunctionField,
    Rationals,
    element_degree,
    frobenius,
    nonzero_by_primitive_root,
    primitive_root,
    pth_root,
)
from uniserial.poly import GF

from support import degree_by_powering

FIELDS = [PrimeField(2), PrimeField(7), GF(4), GF(9), GF(2**5), Rationals(),
          RationalFunctionField(PrimeField(3))]


def elements(F):
    seeds = st.integers(min_value=0, max_value=2**32)
    return seeds.map(lambda s: F.element(F.random(random.Random(s))))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(elements(F)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == F.element(F.zero)
    if a:
        assert a * a.inverse() == F.element(F.one)
        assert (b / a) * a == b


def test_prime_field_basics():
    F = PrimeField(7)
    assert F(3) + F(5) == F(1)
    assert F(3) * F(5) == F(1)
    assert F(3).inverse() == F(5)
    assert F(-1) == F(6)
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()
    with pytest.raises(ValueError):
        PrimeField(6)


def test_extension_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        ExtensionField(2, [1, 0, 1])  # (X+1)^2
    with pytest.raises(ValueError):
        ExtensionField(3, [1, 0, 2])  # not monic


def test_descriptors_compare_structurally():
    assert ExtensionField(2, [1, 1, 1]) == GF(4)
    assert hash(ExtensionField(2, [1, 1, 1])) == hash(GF(4))
    assert GF(4) != GF(8)
    with pytest.raises(FieldMismatchError):
        GF(4).gen + GF(8).gen


def test_gf_order_and_elements():
    for q in (2, 3, 4, 8, 9, 25):
        F = GF(q)
        els = list(F.elements())
        assert len(els) == q == F.order
        assert len(set(els)) == q


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16])
def test_primitive_root_generates(q):
    F = GF(q)
    g = primitive_root(F)
    powers = nonzero_by_primitive_root(F)
    assert powers[0] == F.one
    assert F.pow(g, q - 1) == F.one
    assert len(set(powers)) == q - 1


@pytest.mark.parametrize("q,k", [(2, 6), (3, 4), (4, 3), (2, 12)])
def test_element_degree_matches_powering(q, k):
    p = 2 if q in (2, 4) else 3
    s = {2: 1, 4: 2, 3: 1}[q]
    K = GF(p ** (s * k))
    rng = random.Random(q * 100 + k)
    for _ in range(20):
        x = K.element(K.random(rng))
        d = element_degree(x, q)
        assert d == degree_by_powering(x, q)
        assert k % d == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 6))
def test_frobenius_is_a_ring_map(seed, j):
    K = GF(3**5)
    rng = random.Random(seed)
    a, b = K.element(K.random(rng)), K.element(K.random(rng))
    assert frobenius(a + b, j) == frobenius(a, j) + frobenius(b, j)
    assert frobenius(a * b, j) == frobenius(a, j) * frobenius(b, j)
    assert frobenius(a, 1) == a**3


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_pth_root_finite(seed):
    for K in (GF(7), GF(2**6), GF(3**3)):
        a = K.element(K.random(random.Random(seed)))
        r = pth_root(a)
        assert r**K.characteristic == a


def test_element_degree_needs_finite_field():
    with pytest.raises(NotFiniteFieldError):
        element_degree(Rationals()(3))
    with pytest.raises(ValueError):
        element_degree(GF(8).gen, 4)


def test_rational_function_field():
    F = RationalFunctionField(PrimeField(3))
    t = F.gen
    assert (t + 1) * (t - 1) == t * t - 1
    u = (t * t - 1) / (t - 1)
    assert u == t + 1
    assert u.value[1] == (1,)  # normalized: denominator monic, common factor gone
    assert not F.perfect
    with pytest.raises(ImperfectFieldError):
        pth_root(t)
    assert pth_root(t**3 + 1) == t + 1


def test_rationals_have_no_pth_root():
    Q = Rationals()
    assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Q(Fraction(5, 6))
    with pytest.raises(ImperfectFieldError):
        pth_root(Q(2))
