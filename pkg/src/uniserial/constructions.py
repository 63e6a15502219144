"""The three explicit constructions, each returned with a checkable certificate.

* ``build_unomas``: a pair x, y in GF(q^t) such that no GF(q)-linear
  combination generates GF(q)[x, y], so the bound |F| > A + 1 on pairs is
  sharp.
* ``build_pedo``: an Artin-Schreier extension K = F[Z]/(Z^{p^2} - Z - X) of
  F = GF(p^2)(X) in which x + b*y drops to degree p exactly for b in F_p*a.
* ``build_menti``: a commutative algebra over GF(p)(t) acting faithfully and
  uniserially on F^{2p} with no single generator, because F is imperfect.

A certificate is a plain dict: parameters, then a list of claims each with
expected and observed values and a pass flag.
"""

from dataclasses import dataclass, field as dc_field
import random
from typing import Optional

from . import _gfp
from .errors import GuardExceededError, ImperfectFieldError
from .fields import (
    ExtensionField,
    PrimeField,
    RationalFunctionField,
    element_degree,
    nonzero_by_primitive_root,
    pth_root,
)
from .linalg import (
    Mat,
    companion,
    image,
    jordan_chevalley,
    kernel,
    min_poly_matrix,
    min_poly_on_vector,
    span_basis,
)
from .modstruct import algebra_closure, complement, induced_action, is_invariant, restrict
from .poly import GF, Poly, find_root, random_irreducible
from .primelt import degree_profile, embed_subfield

SCHEMA_VERSION = 1
UNOMAS_MAX_T = 1000


class Certificate(dict):
    """Claims with expected/observed values; ``passed`` is true iff all claims hold."""

    def __init__(self, kind, params):
        super().__init__(schema_version=SCHEMA_VERSION, kind=kind, params=params, claims=[])

    def claim(self, name, expected, observed, ok=None):
        if ok is None:
            ok = expected == observed
        self["claims"].append({"name": name, "expected": expected, "observed": observed, "pass": bool(ok)})
        return ok

    @property
    def passed(self):
        return all(c["pass"] for c in self["claims"])

    def failures(self):
        return [c for c in self["claims"] if not c["pass"]]


# ---------------------------------------------------------------------------
# sharpness of the pair bound over GF(q)


@dataclass
class UnomasInstance:
    q: int
    A: int
    primes: list
    extra_primes: list
    r: int
    s: int
    t: int
    K: ExtensionField
    x: object
    y: object
    a: int
    b: int
    certificate: Certificate = dc_field(repr=False, default=None)

    @property
    def d(self):
        return self.t // (self.r * self.s)


def unomas_primes(q, A):
    """Smallest distinct primes (skipping the characteristic) for p_i, r, s and the extra q_j."""
    p, _ = _gfp.prime_power(q)
    if A < q - 1:
        raise ValueError(f"A = {A} must be at least q - 1 = {q - 1}")
    need = (q - 1) + 2 + (A - (q - 1))
    out = []
    n = 2
    while len(out) < need:
        if n != p and _gfp.is_prime(n):
            out.append(n)
        n += 1
    ps = out[: q - 1]
    r, s = out[q - 1], out[q]
    extra = out[q + 1 :]
    return ps, r, s, extra


def build_unomas(q, A, rng=None, max_t=UNOMAS_MAX_T, check=True):
    """Two elements of GF(q^t) no GF(q)-combination of which generates GF(q)[x, y]."""
    if rng is None:
        rng = random.Random(0)
    ps, r, s, extra = unomas_primes(q, A)
    d = 1
    for prime in ps + extra:
        d *= prime
    t = d * r * s
    if t > max_t:
        raise GuardExceededError(f"t = {t} exceeds the guard {max_t}")
    p, e = _gfp.prime_power(q)
    Fq = GF(q)
    K = ExtensionField(p, list(random_irreducible(p, e * t, rng).coeffs))
    embed = embed_subfield(Fq, K)

    def planted(deg):
        return find_root(random_irreducible(Fq, deg, rng), K, rng)

    scalars = nonzero_by_primitive_root(Fq)
    us = [planted(pi) for pi in ps]
    x0, y0 = planted(r), planted(s)
    x, y = x0, y0
    for i, u in zip(scalars, us):
        x = x + embed(i) * u
        y = y + u
    for qj in extra:
        v = planted(qj)
        x = x + v
        y = y + v
    inst = UnomasInstance(q, A, ps, extra, r, s, t, K, x, y, t // s, t // r)
    inst.certificate = _certify_unomas(inst, Fq, embed, scalars, check)
    return inst


def _certify_unomas(inst, Fq, embed, scalars, full):
    q, t = inst.q, inst.t
    cert = Certificate(
        "unomas",
        {"q": q, "A": inst.A, "primes": inst.primes, "extra_primes": inst.extra_primes,
         "r": inst.r, "s": inst.s, "t": t, "field": inst.K.name},
    )
    cert.claim("primes distinct", True, len(set(inst.primes + inst.extra_primes + [inst.r, inst.s]))
               == len(inst.primes) + len(inst.extra_primes) + 2)
    dx, dy = element_degree(inst.x, q), element_degree(inst.y, q)
    cert.claim("degree of x", inst.a, dx)
    cert.claim("degree of y", inst.b, dy)
    prof = degree_profile(dx, dy)
    cert.claim("lcm of degrees", t, prof.lcm)
    cert.claim("gcd of degrees", inst.d, prof.d)
    cert.claim("A (primes of d not dividing mn)", inst.A, prof.A)
    degrees = {}
    if full:
        for beta in scalars:
            for gamma in scalars:
                z = embed(beta) * inst.x + embed(gamma) * inst.y
                degrees[f"{Fq.format(beta)},{Fq.format(gamma)}"] = element_degree(z, q)
        rs, drs = inst.r * inst.s, t
        cert.claim("every combination has degree < t", True, all(v < t for v in degrees.values()))
        cert.claim("every combination degree divisible by r*s", True, all(v % rs == 0 for v in degrees.values()))
        cert.claim("no combination degree divisible by t", True, all(v % drs for v in degrees.values()))
    cert["combination_degrees"] = degrees
    cert["degrees"] = {"x": dx, "y": dy, "t": t}
    if q == 2:
        cert["degrees"]["x+y"] = element_degree(inst.x + inst.y, q)
    return cert


# ---------------------------------------------------------------------------
# Artin-Schreier example over GF(p^2)(X)

_PEDO_MODULI = {2: [1, 1, 1], 3: [1, 0, 1]}


@dataclass
class PedoInstance:
    p: int
    E: ExtensionField
    a: object
    F: RationalFunctionField
    alpha: Mat
    x: Mat
    y: Mat
    min_poly_x: Poly
    min_poly_y: Poly
    degrees: dict
    certificate: Certificate = dc_field(repr=False, default=None)

    @property
    def dim(self):
        return self.p * self.p


def build_pedo(p):
    """K = F[Z]/(Z^{p^2} - Z - X) with F = GF(p^2)(X), as p^2 x p^2 multiplication matrices.

    Elements of K are represented by their multiplication matrices in the
    power basis 1, alpha, ..., so degrees over F are minimal-polynomial
    degrees; these are read off the Krylov sequence of the vector 1.
    """
    if p not in (2, 3):
        raise ValueError("build_pedo supports p = 2 and p = 3 only")
    E = ExtensionField(p, _PEDO_MODULI[p], var="a")
    a = E.gen
    F = RationalFunctionField(E, var="X")
    Xf = F.gen
    n = p * p
    Zc = [F.zero] * (n + 1)
    Zc[0] = F.neg(Xf.value)
    Zc[1] = F.neg(F.one)
    Zc[n] = F.one
    qpoly = Poly._raw(F, tuple(Zc))
    alpha = companion(qpoly)
    x = alpha**p - alpha
    ap1 = F.coerce(a ** (p - 1))
    y = alpha**p - alpha.scale(ap1)
    one = tuple([F.one] + [F.zero] * (n - 1))

    def mp(M):
        return min_poly_on_vector(M, one)

    mx, my = mp(x), mp(y)
    degrees = {}
    for b in nonzero_by_primitive_root(E):
        bF = F.coerce(E.element(b))
        degrees[E.format(b)] = mp(x + y.scale(bF)).degree
    inst = PedoInstance(p, E, a, F, alpha, x, y, mx, my, degrees)
    inst.certificate = _certify_pedo(inst, qpoly, one)
    return inst


def _fp_multiples(E, a, p):
    out = set()
    for f in range(1, p):
        out.add(E.mul(E.from_int(f), a.value))
    return out


def _certify_pedo(inst, qpoly, one):
    p, E, F = inst.p, inst.E, inst.F
    Xv = F.gen.value
    cert = Certificate("pedo", {"p": p, "E": E.name, "F": F.name, "a": E.format(inst.a.value),
                                "K": f"F[Z]/({qpoly.format('Z')})"})
    n = p * p
    cert.claim("alpha is a root of Z^(p^2) - Z - X", True, inst.alpha.polyval(qpoly).is_zero())
    cert.claim("degree of alpha", n, min_poly_on_vector(inst.alpha, one).degree)
    # Z^p + Z - X and Z^p + a^(1-p) Z - X
    c = [F.zero] * (p + 1)
    c[0], c[1], c[p] = F.neg(Xv), F.one, F.one
    expect_x = Poly._raw(F, tuple(c))
    c = list(c)
    c[1] = F.coerce(inst.a ** (1 - p))
    expect_y = Poly._raw(F, tuple(c))
    cert.claim("min poly of x", expect_x.format("Z"), inst.min_poly_x.format("Z"))
    cert.claim("min poly of y", expect_y.format("Z"), inst.min_poly_y.format("Z"))
    cert.claim("min poly of x (full Krylov)", expect_x.format("Z"), min_poly_matrix(inst.x).format("Z"))
    cert.claim("min poly of y (full Krylov)", expect_y.format("Z"), min_poly_matrix(inst.y).format("Z"))
    low = _fp_multiples(E, inst.a, p)
    expected = {E.format(b): (p if b in low else n) for b in nonzero_by_primitive_root(E)}
    for key in expected:
        cert.claim(f"degree of x + ({key})*y", expected[key], inst.degrees[key])
    cert["failing_b"] = sorted(k for k, v in inst.degrees.items() if v < n)
    return cert


# ---------------------------------------------------------------------------
# imperfect-field failure over GF(p)(t)


@dataclass
class MentiInstance:
    p: int
    F: RationalFunctionField
    t: object
    D: Mat
    E: Mat
    B: Mat
    basis: list
    certificate: Certificate = dc_field(repr=False, default=None)


def build_menti(p, rng=None, samples=50):
    """D = diag(C, C) and E = [[0, I], [0, 0]] with C the companion matrix of X^p - t."""
    if not _gfp.is_prime(p) or p > 3:
        raise ValueError("build_menti supports p = 2 and p = 3 only")
    if rng is None:
        rng = random.Random(0)
    F = RationalFunctionField(PrimeField(p), var="t")
    t = F.gen
    C = companion(Poly._raw(F, tuple([F.neg(t.value)] + [F.zero] * (p - 1) + [F.one])))
    Z = Mat.zeros(p, p, F)
    I = Mat.identity(p, F)
    D = _blocks([[C, Z], [Z, C]], F)
    E = _blocks([[Z, I], [Z, Z]], F)
    B = D + E
    basis = [D**i @ E**j for j in (0, 1) for i in range(p)]
    inst = MentiInstance(p, F, t, D, E, B, basis)
    inst.certificate = _certify_menti(inst, rng, samples)
    return inst


def _blocks(rows, F):
    out = []
    for brow in rows:
        for i in range(brow[0].nrows):
            out.append([a for blk in brow for a in blk.rows[i]])
    return Mat._raw(F, out, len(out[0]))


def _is_jc_pair(M, s, n, ms_irreducible):
    """s + n = M, sn = ns, n nilpotent, s annihilated by an irreducible polynomial."""
    k = M.nrows
    return {
        "sum": s + n == M,
        "commute": s @ n == n @ s,
        "nilpotent": (n**k).is_zero(),
        "semisimple": ms_irreducible(s),
    }


def _certify_menti(inst, rng, samples):
    p, F, D, E, B = inst.p, inst.F, inst.D, inst.E, inst.B
    t = inst.t
    n = 2 * p
    I = Mat.identity(n, F)
    tI = I.scale(t.value)
    cert = Certificate("menti", {"p": p, "F": F.name, "a": "t", "dim": n})
    cert.claim("E^2 = 0", True, (E @ E).is_zero())
    cert.claim("D^p = t I", True, D**p == tI)
    cert.claim("DE = ED", True, D @ E == E @ D)
    cert.claim("B^p = t I", True, B**p == tI)
    try:
        pth_root(t)
        not_pth_power = False
    except ImperfectFieldError:
        not_pth_power = True
    cert.claim("t is not a p-th power (so X^p - t is irreducible)", True, not_pth_power)
    f = Poly._raw(F, tuple([F.neg(t.value)] + [F.zero] * (p - 1) + [F.one]))
    A = algebra_closure([D, E])
    cert.claim("algebra dimension", n, A.dim)
    cert.claim("basis D^i E^j spans the algebra", True, all(A.contains(b) for b in inst.basis)
               and len(span_basis([b.vec() for b in inst.basis], F, n * n)) == n)
    # uniserial structure: W = im E = ker E, both layers irreducible under D
    W = span_basis(image(E), F, n)
    K = kernel(E)
    cert.claim("dim im E", p, len(W))
    cert.claim("im E = ker E", True, len(span_basis(W + K, F, n)) == p)
    cert.claim("im E is invariant", True, is_invariant([D, E], W, F, n))
    DW = restrict(D, W)
    comp = complement(W, [tuple(F.one if i == j else F.zero for i in range(n)) for j in range(n)], F, n)
    DQ = induced_action(D, W, comp)
    cert.claim("min poly of D on W", f.format(), min_poly_matrix(DW).format())
    cert.claim("min poly of D on V/W", f.format(), min_poly_matrix(DQ).format())
    cert.claim("min poly of B", f.format(), min_poly_matrix(B).format())

    def annihilated_by_f(s):
        return s.polyval(f).is_zero()

    jc1 = _is_jc_pair(B, D, E, annihilated_by_f)
    jc2 = _is_jc_pair(B, B, Mat.zeros(n, n, F), annihilated_by_f)
    cert.claim("(D, E) is a Jordan-Chevalley pair for B", True, all(jc1.values()))
    cert.claim("(B, 0) is a Jordan-Chevalley pair for B", True, all(jc2.values()))
    cert.claim("the two decompositions differ", True, D != B)
    try:
        jordan_chevalley(B)
        refused = False
    except ImperfectFieldError:
        refused = True
    cert.claim("jordan_chevalley(B) refused over an imperfect field", True, refused)
    # x^p is scalar for every x in the algebra, so dim F[x] <= p < 2p
    ok_scalar, max_deg = True, 0
    for _ in range(samples):
        coeffs = [F.random(rng) for _ in inst.basis]
        x = Mat.zeros(n, n, F)
        for c, b in zip(coeffs, inst.basis):
            x = x + b.scale(c)
        s = F.zero
        for i in range(p):
            s = F.add(s, F.mul(F.pow(coeffs[i], p), F.pow(t.value, i)))
        ok_scalar &= x**p == I.scale(s)
        max_deg = max(max_deg, min_poly_matrix(x).degree)
    cert.claim(f"x^p = (sum a_i0^p t^i) I on {samples} random x", True, ok_scalar)
    cert.claim("largest min poly degree among samples <= p", True, max_deg <= p)
    cert["jc_pairs"] = {"D,E": jc1, "B,0": jc2}
    return cert
