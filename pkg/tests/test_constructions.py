import random

import pytest

from uniserial.constructions import build_menti, build_pedo, build_unomas, unomas_primes
from uniserial.errors import GuardExceededError
from uniserial.fields import element_degree
from uniserial.linalg import Mat, min_poly_matrix

from support import degree_by_powering


def test_unomas_primes_skip_the_characteristic():
    assert unomas_primes(2, 1) == ([3], 5, 7, [])
    assert unomas_primes(3, 2) == ([2, 5], 7, 11, [])
    assert unomas_primes(2, 2) == ([3], 5, 7, [11])
    with pytest.raises(ValueError):
        unomas_primes(4, 2)


def test_unomas_q2():
    inst = build_unomas(2, 1, rng=random.Random(1))
    cert = inst.certificate
    assert cert.passed, cert.failures()
    assert inst.t == 105
    assert degree_by_powering(inst.x, 2) == 15
    assert degree_by_powering(inst.y, 2) == 21
    assert degree_by_powering(inst.x + inst.y, 2) == 35
    assert cert["combination_degrees"] == {"1,1": 35}


def test_unomas_guard():
    with pytest.raises(GuardExceededError):
        build_unomas(2, 2)  # t = 3 * 11 * 5 * 7 = 1155


@pytest.mark.slow
def test_unomas_q3():
    inst = build_unomas(3, 2, rng=random.Random(2))
    cert = inst.certificate
    assert cert.passed, cert.failures()
    assert inst.t == 770
    assert element_degree(inst.x, 3) == 70 and element_degree(inst.y, 3) == 110
    assert all(v < 770 for v in cert["combination_degrees"].values())


@pytest.mark.parametrize("p", [2, 3])
def test_pedo(p):
    inst = build_pedo(p)
    assert inst.certificate.passed, inst.certificate.failures()
    F, x, y = inst.F, inst.x, inst.y
    n = p * p
    X = Mat.identity(n, F).scale(F.gen.value)
    # x^p + x = X and y^p + a^(1-p) y = X, checked by direct matrix arithmetic
    assert x**p + x == X
    c = F.coerce(inst.a ** (1 - p))
    assert y**p + y.scale(c) == X
    low = [k for k, v in inst.degrees.items() if v == p]
    assert len(low) == p - 1
    assert all(v in (p, n) for v in inst.degrees.values())


def test_pedo_rejects_other_primes():
    with pytest.raises(ValueError):
        build_pedo(5)


@pytest.mark.parametrize("p", [2, 3])
def test_menti(p):
    inst = build_menti(p, rng=random.Random(p), samples=10 if p == 3 else 50)
    assert inst.certificate.passed, inst.certificate.failures()
    F, D, E, B = inst.F, inst.D, inst.E, inst.B
    n = 2 * p
    assert (E @ E).is_zero()
    assert D @ E == E @ D
    assert min_poly_matrix(B).degree == p < n
