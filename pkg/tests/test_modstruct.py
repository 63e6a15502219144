import random

import pytest
from hypothesis import given, settings, strategies as st

from uniserial.errors import ImperfectFieldError, NonCommutingError, NotUniserialError, ShapeError
from uniserial.fields import PrimeField, RationalFunctionField, Rationals
from uniserial.linalg import Mat, companion, jordan_block, jordan_chevalley, min_poly_matrix
from uniserial.modstruct import (
    algebra_closure,
    is_field,
    is_invariant,
    is_irreducible_module,
    is_uniserial,
    nilradical,
    residue_degree,
    socle,
    socle_chain,
)
from uniserial.poly import GF, Poly, is_irreducible

from support import (
    f2_invariant_subspaces,
    f2_socle_oracle,
    f2_span,
    obfuscated_uniserial,
    random_commuting_f2,
    random_irreducible_any,
    totally_ordered,
)

F2, F3, QQ = PrimeField(2), PrimeField(3), Rationals()


def test_closure_of_companion_is_polynomial_algebra():
    C = companion(Poly([1, 1, 0, 1], F2) ** 2)
    A = algebra_closure([C])
    assert A.dim == 6
    assert A.words[:3] == [(), (0,), (0, 0)]
    assert A.contains(C @ C @ C)
    coeffs = A.express(C @ C)
    assert A.element(coeffs) == C @ C


def test_closure_errors():
    a = Mat([[1, 1], [0, 1]], F2)
    b = Mat([[1, 0], [1, 1]], F2)
    with pytest.raises(NonCommutingError):
        algebra_closure([a, b])
    with pytest.raises(ShapeError):
        algebra_closure([a, Mat.identity(3, F2)])
    with pytest.raises(ValueError):
        algebra_closure([])
    assert algebra_closure([], field=F2, n=3).dim == 1


def test_closure_of_diagonal_pair():
    # two independent idempotents span a 3-dim algebra with the identity
    e1 = Mat.diag([1, 0, 0], F3)
    e2 = Mat.diag([0, 1, 0], F3)
    assert algebra_closure([e1, e2]).dim == 3


@pytest.mark.parametrize("F", [F2, GF(4), F3, QQ], ids=lambda F: F.name)
def test_is_field(F):
    rng = random.Random(1)
    for d in (1, 2, 3):
        p = random_irreducible_any(F, d, rng)
        C = companion(p)
        cert = is_field(algebra_closure([C, C @ C]))
        assert cert.is_field
        assert cert.min_poly.degree == d and is_irreducible(cert.min_poly)
    X = Poly.x(F)
    cert = is_field(algebra_closure([companion(X * (X + 1))]))
    assert not cert.is_field and cert.witness is not None
    assert not is_field(algebra_closure([jordan_block(2, 0, F)])).is_field


def test_is_field_when_no_generator_is_primitive():
    # GF(64) = F_2[x, y] with x of degree 2 and y of degree 3
    C = companion(Poly([1, 1, 0, 0, 0, 0, 1], F2))  # X^6 + X + 1
    x, y = C**21, C**9
    assert min_poly_matrix(x).degree == 2 and min_poly_matrix(y).degree == 3
    cert = is_field(algebra_closure([x, y]))
    assert cert.is_field and cert.min_poly.degree == 6


def test_not_a_field_although_generators_are_irreducible():
    # F_4 x F_4: both generators have min poly X^2 + X + 1
    C = companion(Poly([1, 1, 1], F2))
    x = Mat.block_diag(C, C)
    y = Mat.block_diag(C, C @ C)
    A = algebra_closure([x, y])
    assert A.dim == 4
    cert = is_field(A)
    assert not cert.is_field
    assert not is_irreducible(min_poly_matrix(cert.witness))


def test_socle_of_jordan_block_is_a_line():
    J = jordan_block(4, 1, F3)
    A = algebra_closure([J])
    W = socle(A)
    assert len(W) == 1
    ch = socle_chain(A)
    assert ch.layer_dims == [1, 1, 1, 1]
    assert is_uniserial(A)


def test_direct_sum_is_not_uniserial():
    M = Mat.block_diag(jordan_block(2, 0, F2), jordan_block(1, 0, F2))
    A = algebra_closure([M])
    cert = is_uniserial(A)
    assert not cert.uniserial and cert.first_reducible_layer == 0
    sub = cert.layers[0].subspace
    assert sub and len(sub) < cert.chain.layer_dims[0]
    with pytest.raises(NotUniserialError):
        residue_degree(A)


def test_irreducible_module_certificates():
    p = Poly([1, 1, 1], F2)
    A = algebra_closure([companion(p)])
    assert is_irreducible_module(A).irreducible
    B = algebra_closure([Mat.block_diag(companion(p), companion(p))])
    cert = is_irreducible_module(B)
    assert not cert.irreducible
    assert 0 < len(cert.subspace) < 4
    assert is_invariant(B.generators, cert.subspace, F2, 4)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 4))
def test_uniserial_and_socle_match_enumeration(seed, n):
    rng = random.Random(seed)
    gens = random_commuting_f2(n, rng)
    A = algebra_closure(gens)
    inv = f2_invariant_subspaces(gens, n)
    assert is_uniserial(A).uniserial == totally_ordered(inv)
    assert f2_span(socle(A), n) == f2_socle_oracle(gens, n)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_socle_chain_layers_are_invariant(seed):
    rng = random.Random(seed)
    F = [F2, F3, GF(4), QQ][seed % 4]
    gens, p, ell = obfuscated_uniserial(F, rng)
    A = algebra_closure(gens)
    ch = socle_chain(A)
    assert ch.length == ell
    assert ch.layer_dims == [p.degree] * ell
    for W in ch.chain[1:]:
        assert is_invariant(gens, W, F, A.dim_V)
    assert residue_degree(A) == (p.degree, {1: 0, 2: 1, 3: 1}[p.degree])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_nilradical_is_additive_and_nilpotent(seed):
    rng = random.Random(seed)
    F = [F2, F3, GF(4), QQ][seed % 4]
    gens, p, ell = obfuscated_uniserial(F, rng)
    A = algebra_closure(gens)
    nil = nilradical(A)
    assert len(nil) == A.dim - p.degree
    a = A.element([F.random(rng) for _ in range(A.dim)])
    b = A.element([F.random(rng) for _ in range(A.dim)])
    assert jordan_chevalley(a + b).n == jordan_chevalley(a).n + jordan_chevalley(b).n
    prod = Mat.identity(A.dim_V, F)
    for k in range(ell):
        prod = prod @ (nil[k % len(nil)] if nil else Mat.zeros(A.dim_V, A.dim_V, F))
    assert prod.is_zero()


def test_imperfect_field_refused():
    F = RationalFunctionField(F2)
    t = F.gen
    C = companion(Poly([-t, 0, 1], F))
    A = algebra_closure([C])
    with pytest.raises(ImperfectFieldError):
        socle(A)
    with pytest.raises(ImperfectFieldError):
        is_uniserial(A)
