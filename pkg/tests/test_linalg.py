from fractions import Fraction
import random

import pytest
import sympy
from sympy import GF as SGF
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings, strategies as st

from uniserial.errors import ImperfectFieldError, InconsistentSystemError, NotInAlgebraError, ShapeError
from uniserial.fields import PrimeField, RationalFunctionField, Rationals
from uniserial.linalg import (
    Mat,
    companion,
    cyclic_vector,
    inverse,
    jordan_block,
    jordan_chevalley,
    kernel,
    min_poly_matrix,
    min_poly_on_vector,
    rank,
    solve,
    to_companion_basis,
)
from uniserial.poly import GF, Poly

from support import is_minimal_annihilator, jc_invariants, random_structured_matrix

F2, F5, QQ = PrimeField(2), PrimeField(5), Rationals()
FIELDS = [F2, GF(4), F5, QQ]


def rand_mat(F, n, m, rng):
    return Mat([[F.random(rng) for _ in range(m)] for _ in range(n)], F)


def to_sympy(M):
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                          for c in row] for row in M.rows])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6), st.integers(1, 6))
def test_rank_and_kernel_over_q_against_sympy(seed, n, m):
    rng = random.Random(seed)
    M = rand_mat(QQ, n, m, rng)
    if rng.random() < 0.5 and n > 1:
        M = Mat(list(M.rows[:-1]) + [M.rows[0]], QQ)
    ker = kernel(M)
    assert rank(M) == to_sympy(M).rank()
    assert rank(M) + len(ker) == m
    for v in ker:
        assert all(c == QQ.zero for c in M.apply(v))


def test_rank_mod_p_against_sympy():
    rng = random.Random(3)
    for _ in range(30):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        M = rand_mat(F5, n, m, rng)
        if n > 2:
            rows = list(M.rows)
            rows[2] = tuple((a + 2 * b) % 5 for a, b in zip(rows[0], rows[1]))
            M = Mat(rows, F5)
        D = DomainMatrix([[SGF(5)(c) for c in row] for row in M.rows], (n, m), SGF(5))
        assert rank(M) == D.rank()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_solve_and_inverse(F):
    rng = random.Random(11)
    for _ in range(10):
        M = rand_mat(F, 4, 4, rng)
        if rank(M) < 4:
            continue
        x = tuple(F.random(rng) for _ in range(4))
        b = M.apply(x)
        assert solve(M, b) == x
        assert M @ inverse(M) == Mat.identity(4, F)
    with pytest.raises(InconsistentSystemError):
        solve(Mat([[1, 0], [0, 0]], F), (F.zero, F.one))
    with pytest.raises(ShapeError):
        solve(Mat([[1, 0], [0, 1]], F), (F.one,))


def test_companion_convention():
    F = F5
    f = Poly([2, 3, 0, 1], F)  # X^3 + 3X + 2
    C = companion(f)
    e0 = (1, 0, 0)
    assert C.apply(e0) == (0, 1, 0)
    assert C.apply((0, 1, 0)) == (0, 0, 1)
    assert [C.rows[i][2] for i in range(3)] == [3, 2, 0]
    assert min_poly_matrix(C) == f
    assert min_poly_on_vector(C, e0) == f


@pytest.mark.parametrize("F", [F2, F5, QQ], ids=lambda F: F.name)
def test_min_poly_is_minimal(F):
    rng = random.Random(5)
    for k in range(25):
        n = rng.randint(1, 6)
        M = random_structured_matrix(F, n, rng) if k % 2 else rand_mat(F, n, n, rng)
        m = min_poly_matrix(M)
        assert m.is_monic()
        assert is_minimal_annihilator(M, m)


def test_min_poly_over_extension_field():
    F = GF(4)
    rng = random.Random(2)
    for _ in range(10):
        M = random_structured_matrix(F, 5, rng)
        m = min_poly_matrix(M)
        assert M.polyval(m).is_zero()
        powers = [(M**i).vec() for i in range(m.degree)]
        assert rank(Mat(powers, F)) == m.degree


def test_jordan_block_min_poly():
    J = jordan_block(4, 3, F5)
    X = Poly.x(F5)
    assert min_poly_matrix(J) == (X - Poly.constant(3, F5)) ** 4


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_cyclic_vector_and_companion_basis(F):
    rng = random.Random(8)
    for _ in range(8):
        M = random_structured_matrix(F, rng.randint(1, 5), rng)
        v = cyclic_vector(M)
        if min_poly_matrix(M).degree < M.nrows:
            assert v is None
            continue
        P, exprs = to_companion_basis(M, [M @ M, M + Mat.identity(M.nrows, F)])
        assert inverse(P) @ M @ P == companion(min_poly_matrix(M))
        assert M.polyval(exprs[0]) == M @ M
        assert exprs[1].degree <= 1


def test_companion_basis_rejects_outsiders():
    F = F2
    M = companion(Poly([1, 1, 1], F))
    N = Mat([[1, 0], [0, 0]], F)  # does not commute with M
    with pytest.raises(NotInAlgebraError):
        to_companion_basis(M, [N])


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_jordan_chevalley_invariants(F):
    rng = random.Random(13)
    for k in range(12):
        n = rng.randint(1, 7)
        M = random_structured_matrix(F, n, rng) if k % 3 else rand_mat(F, n, n, rng)
        inv = jc_invariants(M, jordan_chevalley(M))
        assert all(inv.values()), inv


def test_jordan_chevalley_of_jordan_block():
    J = jordan_block(3, 2, F5)
    jc = jordan_chevalley(J)
    assert jc.s == Mat.identity(3, F5).scale(2)
    assert jc.n == J - jc.s


def test_jordan_chevalley_characteristic_p_multiplicity():
    # (X^2 + X + 1)^2 over F_2: the naive s = X fails, Newton must move it
    M = companion(Poly([1, 1, 1], F2) ** 2)
    inv = jc_invariants(M, jordan_chevalley(M))
    assert all(inv.values())
    assert not jordan_chevalley(M).n.is_zero()


def test_jordan_chevalley_refuses_imperfect():
    F = RationalFunctionField(F2)
    t = F.gen
    M = companion(Poly([-t, 0, 1], F))
    with pytest.raises(ImperfectFieldError):
        jordan_chevalley(M)
    with pytest.raises(ShapeError):
        jordan_chevalley(Mat([[1, 0]], F2))
