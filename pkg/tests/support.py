"""Independent oracles and instance generators shared by the test modules.

The oracles avoid the library's own algorithms wherever that is cheap:
irreducibility by trial division or sympy, subspaces of F_2^n by brute
enumeration, element degrees by repeated powering.
"""

from fractions import Fraction
import itertools

import sympy

from uniserial.fields import PrimeField, Rationals, element_degree
from uniserial.linalg import Mat, companion, conjugate, inverse, min_poly_matrix, random_invertible
from uniserial.modstruct import algebra_closure
from uniserial.poly import GF, Poly, is_irreducible, poly_gcd, random_irreducible, squarefree_part


def small_fields():
    return [PrimeField(2), GF(4), PrimeField(5), Rationals()]


# ---------------------------------------------------------------------------
# polynomials


def monic_polys(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def int_polymod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def irreducible_by_trial_division(coeffs, p):
    n = len(coeffs) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in monic_polys(p, d):
            if not int_polymod(coeffs, g, p):
                return False
    return True


def sympy_poly(f):
    """sympy Poly of a Poly over GF(p) or Q."""
    X = sympy.Symbol("X")
    F = f.field
    coeffs = [sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else int(c)
              for c in reversed(f.coeffs)]
    if isinstance(F, PrimeField):
        return sympy.Poly(coeffs, X, modulus=F.p)
    return sympy.Poly(coeffs, X, domain="QQ")


def random_irreducible_any(F, d, rng):
    if F.is_finite:
        return random_irreducible(F, d, rng)
    while True:
        f = Poly([F.from_int(rng.randint(-4, 4)) for _ in range(d)] + [F.one], F)
        if is_irreducible(f):
            return f


# ---------------------------------------------------------------------------
# finite field elements


def degree_by_powering(x, q):
    """Least d >= 1 with x^(q^d) = x, computed with plain exponentiation."""
    y = x
    for d in range(1, 200):
        y = y**q
        if y == x:
            return d
    raise AssertionError("no fixed power found")


# ---------------------------------------------------------------------------
# subspaces of F_2^n by enumeration


def f2_span(vectors, n):
    out = {tuple([0] * n)}
    for v in vectors:
        out |= {tuple((a + b) % 2 for a, b in zip(u, v)) for u in out}
    return frozenset(out)


def f2_all_subspaces(n):
    vecs = [v for v in itertools.product((0, 1), repeat=n) if any(v)]
    seen = {f2_span([], n)}
    for k in range(1, n + 1):
        for combo in itertools.combinations(vecs, k):
            seen.add(f2_span(combo, n))
    return seen


def f2_apply(M, v):
    return tuple(sum(M.rows[i][j] * v[j] for j in range(len(v))) % 2 for i in range(M.nrows))


def f2_invariant_subspaces(mats, n):
    out = []
    for S in f2_all_subspaces(n):
        if all(f2_apply(M, v) in S for M in mats for v in S):
            out.append(S)
    return out


def totally_ordered(subspaces):
    return all(a <= b or b <= a for a, b in itertools.combinations(subspaces, 2))


def f2_socle_oracle(mats, n):
    inv = [S for S in f2_invariant_subspaces(mats, n) if len(S) > 1]
    minimal = [S for S in inv if not any(T < S for T in inv)]
    vecs = set()
    for S in minimal:
        vecs |= S
    return f2_span(sorted(vecs), n)


# ---------------------------------------------------------------------------
# instance generators


def random_poly_in(C, F, rng):
    n = C.nrows
    return C.polyval(Poly([F.random(rng) for _ in range(n)], F))


def obfuscated_uniserial(F, rng, max_d=3, max_ell=3, max_gens=3):
    """(gens, p, ell): a random generating set of F[C_{p^ell}] conjugated by a random matrix."""
    d = rng.randint(1, max_d)
    ell = rng.randint(1, max_ell)
    p = random_irreducible_any(F, d, rng)
    n = d * ell
    C = companion(p**ell)
    while True:
        r = rng.randint(1, max_gens)
        gens = [random_poly_in(C, F, rng) for _ in range(r)]
        if algebra_closure(gens).dim == n:
            break
    P = random_invertible(n, F, rng)
    Pi = inverse(P)
    return [conjugate(g, P, Pi) for g in gens], p, ell


def random_commuting_f2(n, rng, max_gens=3):
    """Random commuting matrices over F_2: polynomials in one random matrix, or block mixes."""
    F = PrimeField(2)
    kind = rng.random()
    if kind < 0.5:
        M = Mat([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)], F)
        return [random_poly_in(M, F, rng) for _ in range(rng.randint(1, max_gens))]
    # block diagonal pieces, each a polynomial in its own matrix
    sizes = []
    left = n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    bases = [Mat([[rng.randint(0, 1) for _ in range(s)] for _ in range(s)], F) for s in sizes]
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        gens.append(Mat.block_diag(*[random_poly_in(B, F, rng) for B in bases]))
    if rng.random() < 0.5:
        P = random_invertible(n, F, rng)
        Pi = inverse(P)
        gens = [conjugate(g, P, Pi) for g in gens]
    return gens


# ---------------------------------------------------------------------------
# linear algebra oracles


def from_sympy(g, F):
    """Our Poly from a sympy Poly over GF(p) or Q."""
    coeffs = []
    for c in reversed(g.all_coeffs()):
        if isinstance(F, PrimeField):
            coeffs.append(int(c) % F.p)
        else:
            c = sympy.Rational(c)
            coeffs.append(Fraction(int(c.p), int(c.q)))
    return Poly(coeffs, F)


def is_minimal_annihilator(M, m):
    """m(M) = 0 and m / f(M) != 0 for every irreducible factor f (sympy factorization)."""
    F = M.field
    if not M.polyval(m).is_zero():
        return False
    if m.degree == 0:
        return M.nrows == 0
    for g, _ in sympy_poly(m).factor_list()[1]:
        f = from_sympy(g, F)
        if M.polyval(m // f).is_zero():
            return False
    return True


def random_structured_matrix(F, n, rng):
    """Block diagonal of companion matrices of prime powers, conjugated: nontrivial nilpotent parts."""
    blocks = []
    left = n
    while left:
        d = rng.randint(1, min(2, left))
        e = rng.randint(1, left // d)
        p = random_irreducible_any(F, d, rng)
        blocks.append(companion(p**e))
        left -= d * e
    M = Mat.block_diag(*blocks)
    P = random_invertible(n, F, rng)
    return conjugate(M, P)


def jc_invariants(M, jc):
    """The Jordan-Chevalley invariants as a dict of booleans."""
    s, n = jc.s, jc.n
    k = M.nrows
    ms = min_poly_matrix(s)
    g = squarefree_part(min_poly_matrix(M))
    return {
        "sum": s + n == M,
        "commute": s @ n == n @ s,
        "squarefree": poly_gcd(ms, ms.derivative()).degree == 0 and s.polyval(g).is_zero(),
        "nilpotent": (n**k).is_zero(),
        "polynomial": M.polyval(jc.s_poly) == s,
    }


def planted_element(Fq, K, deg, rng, tries=200):
    """An element of K of degree exactly ``deg`` over Fq.

    Uses the norm map z -> z^((Q^k - 1)/(Q^deg - 1)), Q = |Fq|, which is onto
    the nonzero elements of the degree-``deg`` subfield.
    """
    q = Fq.order
    k = K.degree // getattr(Fq, "degree", 1)
    e = (q**k - 1) // (q**deg - 1)
    for _ in range(tries):
        z = K.element(K.random(rng))
        if z.is_zero():
            continue
        w = z**e
        if element_degree(w, q) == deg:
            return w
    raise AssertionError(f"no element of degree {deg} found")


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]
