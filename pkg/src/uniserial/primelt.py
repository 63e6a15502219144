"""Primitive linear combinations in finite field extensions.

For x, y in a finite extension of F = GF(q) of degrees a = md and b = nd
(d = gcd(a, b)), F[x, y] has degree mnd and every x + alpha*y has degree a
multiple of mn.  x + alpha*y fails to generate exactly when it lies in the
subfield of index p for some prime p dividing d but not mn, and each such p
rules out at most one alpha.  So at most A values fail, A the number of such
primes, and a generator exists as soon as q > A + 1.
"""

from dataclasses import dataclass, field as dc_field
from math import gcd
import random
from typing import Optional

from . import _gfp
from .errors import FieldMismatchError, InvariantViolation
from .fields import (
    ExtensionField,
    FieldElement,
    PrimeField,
    _require_finite,
    element_degree,
    nonzero_by_primitive_root,
)
from .poly import GF, Poly, find_root


@dataclass(frozen=True)
class DegreeProfile:
    a: int
    b: int
    d: int
    m: int
    n: int
    A: int
    lcm: int


def degree_profile(a, b):
    if a < 1 or b < 1:
        raise ValueError("degrees must be positive")
    d = gcd(a, b)
    m, n = a // d, b // d
    A = sum(1 for p in _gfp.prime_factors(d) if (m * n) % p)
    return DegreeProfile(a, b, d, m, n, A, m * n * d)


def _base_field(over):
    if over is None:
        return None
    if isinstance(over, int):
        return GF(over)
    _require_finite(over)
    return over


def embed_subfield(Fq, K):
    """Map sending raw values of Fq to elements of K (Fq must be a subfield of K)."""
    _require_finite(K)
    if Fq.characteristic != K.characteristic or K.degree % Fq.degree:
        raise FieldMismatchError(f"{Fq} is not a subfield of {K}")
    if isinstance(Fq, PrimeField):
        return lambda c: K.element(K.from_int(c))
    if Fq == K:
        return K.element
    gamma = find_root(Poly(list(Fq.modulus), PrimeField(Fq.p)), K, random.Random(0)).value

    def embed(c):
        v = K.zero
        for coeff in reversed(c):
            v = K.add(K.mul(v, gamma), K.from_int(coeff))
        return K.element(v)

    return embed


def alpha_sweep(K, over):
    """Nonzero elements of GF(q) inside K, as powers of a fixed primitive root."""
    Fq = _base_field(over) or PrimeField(K.characteristic)
    embed = embed_subfield(Fq, K)
    return [embed(c) for c in nonzero_by_primitive_root(Fq)]


def _check_pair(x, y):
    if not isinstance(x, FieldElement) or not isinstance(y, FieldElement):
        raise TypeError("expected FieldElement arguments")
    if x.field != y.field:
        raise FieldMismatchError(f"{x.field} vs {y.field}")
    _require_finite(x.field)


def _order(K, over):
    Fq = _base_field(over)
    return Fq.order if Fq is not None else K.characteristic


def find_primitive_pair(x, y, over=None):
    """First alpha in GF(q)^x with F[x + alpha*y] = F[x, y], or None."""
    _check_pair(x, y)
    K = x.field
    q = _order(K, over)
    target = _lcm(element_degree(x, q), element_degree(y, q))
    for alpha in alpha_sweep(K, over):
        if element_degree(x + alpha * y, q) == target:
            return alpha
    return None


def _lcm(a, b):
    return a * b // gcd(a, b)


def find_primitive_combination(xs, over=None):
    """Nonzero coefficients c with F[sum c_i x_i] = F[x_1, ..., x_l], or None.

    Folds the pair search left to right: u_1 = x_1 and u_i = u_{i-1} + alpha_i x_i.
    """
    xs = list(xs)
    if not xs:
        raise ValueError("need at least one element")
    K = xs[0].field
    coeffs = [K.element(K.one)]
    u = xs[0]
    for x in xs[1:]:
        alpha = find_primitive_pair(u, x, over)
        if alpha is None:
            return None
        u = u + alpha * x
        coeffs.append(alpha)
    return coeffs


@dataclass
class AlphaStatistics:
    profile: DegreeProfile
    degrees: dict = dc_field(default_factory=dict)
    failing_alphas: list = dc_field(default_factory=list)

    @property
    def A(self):
        return self.profile.A


def sweep_alpha_statistics(x, y, over=None):
    """deg(x + alpha*y) for every alpha in GF(q)^x, with the failing set."""
    _check_pair(x, y)
    K = x.field
    q = _order(K, over)
    prof = degree_profile(element_degree(x, q), element_degree(y, q))
    stats = AlphaStatistics(prof)
    mn = prof.m * prof.n
    for alpha in alpha_sweep(K, over):
        deg = element_degree(x + alpha * y, q)
        if deg % mn or prof.lcm % deg:
            raise InvariantViolation(f"degree {deg} is not between mn = {mn} and mnd = {prof.lcm}")
        stats.degrees[alpha] = deg
        if deg != prof.lcm:
            stats.failing_alphas.append(alpha)
    if len(stats.failing_alphas) > prof.A:
        raise InvariantViolation(
            f"{len(stats.failing_alphas)} failing alphas exceed the bound A = {prof.A}"
        )
    return stats
