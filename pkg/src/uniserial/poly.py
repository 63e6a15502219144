"""Univariate polynomials over any supported field.

Besides ring arithmetic this module provides the operations the structure
theory needs: gcds, squarefree parts (with the p-th root step that fails over
imperfect fields), Rabin's irreducibility test, random irreducibles, root
finding inside finite extensions and detection of prime-power shape p^l.
"""

from fractions import Fraction
import random

import numpy as np

from . import _dense, _gfp
from .errors import FieldMismatchError, NoRootError, NotFiniteFieldError
from .fields import (
    ExtensionField,
    FieldElement,
    PrimeField,
    Rationals,
    RationalFunctionField,
    _format_poly,
    element_degree,
)


class Poly:
    """Dense univariate polynomial with coefficients in ``field``.

    ``coeffs`` is a tuple of raw field values, little-endian and trimmed;
    the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs, field):
        F = field
        raw = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != F:
                    raise FieldMismatchError(f"coefficient over {c.field}, expected {F}")
                raw.append(c.value)
            else:
                raw.append(F.coerce(c))
        self.field = F
        self.coeffs = _dense.strip(F, raw)

    @classmethod
    def _raw(cls, field, coeffs):
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, field):
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def one(cls, field):
        return cls._raw(field, (field.one,))

    @classmethod
    def zero(cls, field):
        return cls._raw(field, ())

    @classmethod
    def constant(cls, c, field):
        return cls([c], field)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.field.element(self.coeffs[-1]) if self.coeffs else self.field.element(self.field.zero)

    def coeff(self, i):
        F = self.field
        return F.element(self.coeffs[i] if i < len(self.coeffs) else F.zero)

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.coeffs
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.field(other).value
            return (c,) if c != self.field.zero else ()
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Poly._raw(self.field, _dense.add(self.field, self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Poly._raw(self.field, _dense.sub(self.field, self.coeffs, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Poly._raw(self.field, _dense.sub(self.field, b, self.coeffs))

    def __neg__(self):
        return Poly._raw(self.field, _dense.neg(self.field, self.coeffs))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Poly._raw(self.field, _mul(self.field, self.coeffs, b))

    __rmul__ = __mul__

    def __divmod__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        q, r = _divmod(self.field, self.coeffs, b)
        return Poly._raw(self.field, q), Poly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        return Poly._raw(self.field, _dense.power(self.field, self.coeffs, e))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.coeffs == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __call__(self, x):
        """Evaluate at a field element, an int, or a square matrix."""
        if hasattr(x, "polyval"):
            return x.polyval(self)
        x = self.field(x)
        return self.field.element(_dense.evaluate(self.field, self.coeffs, x.value))

    def monic(self):
        return Poly._raw(self.field, _dense.monic(self.field, self.coeffs))

    def derivative(self):
        return Poly._raw(self.field, _dense.deriv(self.field, self.coeffs))

    def compose(self, other):
        F = self.field
        r = ()
        for c in reversed(self.coeffs):
            r = _dense.add(F, _mul(F, r, other.coeffs), (c,))
        return Poly._raw(F, r)

    def map_coeffs(self, fn, field):
        """Apply ``fn`` (FieldElement -> FieldElement of ``field``) to each coefficient."""
        return Poly([fn(self.field.element(c)) for c in self.coeffs], field)

    def to_list(self):
        return [self.field.element(c) for c in self.coeffs]

    def format(self, var="X"):
        return _format_poly(self.field, self.coeffs, var)

    def __repr__(self):
        return self.format()


def _mul(F, a, b):
    if isinstance(F, PrimeField) and a and b:
        return tuple(_gfp.mul(list(a), list(b), F.p))
    return _dense.mul(F, a, b)


def _divmod(F, a, b):
    if isinstance(F, PrimeField):
        q, r = _gfp.divmod_(list(a), list(b), F.p)
        return tuple(q), tuple(r)
    return _dense.divmod_(F, a, b)


def _same_field(f, g):
    if f.field != g.field:
        raise FieldMismatchError(f"{f.field} vs {g.field}")


def poly_gcd(f, g):
    """Monic gcd; gcd(f, 0) = monic(f) and gcd(0, 0) = 0."""
    _same_field(f, g)
    F = f.field
    if isinstance(F, PrimeField):
        return Poly._raw(F, tuple(_gfp.gcd(list(f.coeffs), list(g.coeffs), F.p)))
    return Poly._raw(F, _dense.gcd(F, f.coeffs, g.coeffs))


def poly_xgcd(f, g):
    """Return (d, u, v) with u*f + v*g = d = gcd(f, g)."""
    _same_field(f, g)
    F = f.field
    d, u, v = _dense.xgcd(F, f.coeffs, g.coeffs)
    return Poly._raw(F, d), Poly._raw(F, u), Poly._raw(F, v)


def poly_lcm(f, g):
    _same_field(f, g)
    if not f or not g:
        return Poly.zero(f.field)
    return (f * g // poly_gcd(f, g)).monic()


def poly_inverse_mod(f, m):
    """Inverse of f modulo m; raises ZeroDivisionError if they share a factor."""
    d, u, _ = poly_xgcd(f % m, m)
    if d.degree != 0:
        raise ZeroDivisionError(f"{f} is not invertible modulo {m}")
    return u % m


def squarefree_part(f):
    """Product of the distinct monic irreducible factors of ``f``.

    In characteristic p a factor of multiplicity divisible by p survives in
    gcd(f, f') and its derivative vanishes; recovering it needs p-th roots of
    coefficients, which is where an imperfect field raises
    :class:`ImperfectFieldError`.
    """
    if not f:
        raise ValueError("squarefree part of the zero polynomial")
    F = f.field
    f = f.monic()
    if f.degree <= 0:
        return Poly.one(F)
    df = f.derivative()
    if not df:
        return squarefree_part(_pth_root_poly(f))
    u = poly_gcd(f, df)
    w = f // u
    z = u
    while True:
        g = poly_gcd(z, w)
        if g.degree <= 0:
            break
        z = z // g
    if z.degree <= 0:
        return w.monic()
    return (w * squarefree_part(_pth_root_poly(z))).monic()


def _pth_root_poly(f):
    """h with h^p = f, for f in F[X^p] (uses coefficient p-th roots)."""
    F = f.field
    p = F.characteristic
    if p == 0:
        raise ValueError("p-th roots of polynomials need positive characteristic")
    out = []
    for i, c in enumerate(f.coeffs):
        if i % p:
            if c != F.zero:
                raise ValueError("polynomial is not in F[X^p]")
        else:
            out.append(F.pth_root(c))
    return Poly._raw(F, _dense.strip(F, out))


def is_squarefree(f):
    return poly_gcd(f, f.derivative()).degree == 0 if f.degree > 0 else True


def _require_finite(F):
    if not isinstance(F, (PrimeField, ExtensionField)):
        raise NotFiniteFieldError(f"{F} is not a finite field")


def _frobenius_power_mod(F, a, f):
    """a^q mod f with q = |F|, a, f raw coefficient tuples."""
    return _dense.powmod(F, a, F.order, f)


def is_irreducible(f):
    """Irreducibility test.

    Over finite fields this is Rabin's criterion: X^(q^n) = X mod f and
    gcd(X^(q^(n/l)) - X, f) = 1 for each prime l | n.  Over QQ the decision is
    delegated to sympy's factorization.
    """
    F = f.field
    n = f.degree
    if n < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if isinstance(F, Rationals):
        return _is_irreducible_qq(f)
    _require_finite(F)
    if n == 1:
        return True
    if isinstance(F, PrimeField):
        return _gfp.is_irreducible(list(f.coeffs), F.p)
    m = _dense.monic(F, f.coeffs)
    x = (F.zero, F.one)
    powers = {}
    cur = x
    for i in range(1, n + 1):
        cur = _frobenius_power_mod(F, cur, m)
        powers[i] = cur
    if _dense.sub(F, powers[n], x):
        return False
    for ell in _gfp.prime_factors(n):
        h = _dense.sub(F, powers[n // ell], x)
        if len(_dense.gcd(F, h, m)) != 1:
            return False
    return True


def _is_irreducible_qq(f):
    import sympy

    X = sympy.Symbol("X")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(f.coeffs))
    return sympy.Poly(expr, X, domain="QQ").is_irreducible


def factor_qq(f):
    """Monic irreducible factors of f over QQ with multiplicities (via sympy)."""
    import sympy

    X = sympy.Symbol("X")
    QQ = f.field
    expr = sum(sympy.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(f.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, X, domain="QQ"))
    out = []
    for g, e in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        out.append((Poly(coeffs, QQ).monic(), int(e)))
    return out


def GF(q, var="X"):
    """The field with q elements.

    For prime q this is GF(q); otherwise GF(p)[X]/(m) where m is the first
    monic irreducible of degree e in lexicographic coefficient order, so the
    choice is reproducible.
    """
    p, e = _gfp.prime_power(q)
    if e == 1:
        return PrimeField(p)
    for n in range(p**e):
        digits = []
        for _ in range(e):
            digits.append(n % p)
            n //= p
        m = digits + [1]
        if _gfp.is_irreducible(m, p):
            return ExtensionField(p, m, var=var)
    raise AssertionError("no irreducible polynomial found")


def _as_field(q):
    if isinstance(q, int):
        return GF(q)
    _require_finite(q)
    return q


def random_irreducible(q, n, rng=None, max_trials=None):
    """A random monic irreducible polynomial of degree ``n`` over GF(q).

    ``q`` is a prime power or a finite field descriptor.  About 1/n of monic
    polynomials are irreducible, so the expected number of trials is O(n).
    """
    F = _as_field(q)
    if n < 1:
        raise ValueError("degree must be >= 1")
    if rng is None:
        rng = random.Random(0)
    if max_trials is None:
        max_trials = 100 * n + 100
    for _ in range(max_trials):
        coeffs = [F.random(rng) for _ in range(n)] + [F.one]
        if n > 1 and coeffs[0] == F.zero:
            continue
        f = Poly._raw(F, tuple(coeffs))
        if is_irreducible(f):
            return f
    raise RuntimeError(f"no irreducible of degree {n} found in {max_trials} trials")


def prime_power_shape(f):
    """Return (p, l) with f = p^l and p irreducible, or None."""
    if f.degree < 1:
        raise ValueError("prime_power_shape needs a nonconstant polynomial")
    f = f.monic()
    p = squarefree_part(f)
    if f.degree % p.degree:
        return None
    ell = f.degree // p.degree
    if p**ell != f:
        return None
    if not is_irreducible(p):
        return None
    return p, ell


# ---------------------------------------------------------------------------
# Factoring helpers used for certificates and root finding over finite fields


def _equal_degree_split(F, h, d, rng):
    """A nontrivial monic factor of h (squarefree, all irreducible factors of degree d)."""
    q = F.order
    n = len(h) - 1
    for _ in range(200):
        a = _dense.strip(F, [F.random(rng) for _ in range(n)])
        if len(a) < 2:
            continue
        if F.characteristic == 2:
            # trace map Tr_{GF(q^d)/GF(2)}(a) = sum a^(2^i)
            m = (q.bit_length() - 1) * d
            t = a
            acc = a
            for _ in range(m - 1):
                t = _dense.rem(F, _dense.mul(F, t, t), h)
                acc = _dense.add(F, acc, t)
            b = acc
        else:
            b = _dense.powmod(F, a, (q**d - 1) // 2, h)
            b = _dense.sub(F, b, (F.one,))
        g = _dense.gcd(F, b, h)
        if 0 < len(g) - 1 < n:
            return g
    raise RuntimeError("equal-degree splitting failed")


def _linear_factor_roots(F, h, rng):
    """All roots of h, a product of distinct monic linear factors over F."""
    h = _dense.monic(F, h)
    if len(h) - 1 == 0:
        return []
    if len(h) - 1 == 1:
        return [F.neg(h[0])]
    g = _equal_degree_split(F, h, 1, rng)
    return _linear_factor_roots(F, g, rng) + _linear_factor_roots(F, _dense.divmod_(F, h, g)[0], rng)


def roots_in_field(f, rng=None):
    """All distinct roots of ``f`` lying in its own (finite) coefficient field."""
    F = f.field
    _require_finite(F)
    if rng is None:
        rng = random.Random(0)
    m = _dense.monic(F, f.coeffs)
    if len(m) - 1 < 1:
        return []
    x = (F.zero, F.one)
    xq = _dense.powmod(F, x, F.order, m)
    h = _dense.gcd(F, _dense.sub(F, xq, x), m)
    try:
        roots = _linear_factor_roots(F, h, rng)
    except RuntimeError:
        roots = [c for c in F.elements() if _dense.evaluate(F, h, c) == F.zero]
    return sorted((F.element(r) for r in roots), key=lambda e: F.index(e.value) if hasattr(F, "index") else 0)


def split_factor(f, rng=None):
    """A nontrivial monic factor of a reducible ``f`` (None if irreducible).

    Used to exhibit zero divisors: non-squarefree input yields its squarefree
    part; squarefree input over a finite field is split by distinct- and
    equal-degree factorization; over QQ sympy factors it.
    """
    f = f.monic()
    F = f.field
    if f.degree < 2:
        return None
    sf = squarefree_part(f)
    if sf != f:
        return sf
    if isinstance(F, Rationals):
        factors = factor_qq(f)
        if len(factors) == 1:
            return None
        return factors[0][0]
    _require_finite(F)
    if rng is None:
        rng = random.Random(0)
    m = f.coeffs
    x = (F.zero, F.one)
    cur = x
    n = f.degree
    for d in range(1, n // 2 + 1):
        cur = _frobenius_power_mod(F, cur, m)
        g = _dense.gcd(F, _dense.sub(F, cur, x), m)
        if len(g) - 1 == n:
            # all factors have degree d
            if d == n:
                return None
            return Poly._raw(F, _equal_degree_split(F, m, d, rng))
        if len(g) > 1:
            return Poly._raw(F, g)
    return None


# ---------------------------------------------------------------------------
# Root finding in finite extensions

_DIRECT_ROOT_DEGREE = 64


def find_root(f, K, rng=None):
    """A root of ``f`` (irreducible over a finite field F) inside the extension K of F.

    F is embedded into K by locating a root of F's own modulus (no stored
    embeddings).  For large K the search moves to the subfield that contains
    the roots: an element beta of the right degree is produced with a trace
    map, f is rewritten over GF(p)[beta], split there by Cantor-Zassenhaus,
    and the root is mapped back.
    """
    F = f.field
    _require_finite(F)
    _require_finite(K)
    if rng is None:
        rng = random.Random(0)
    if F.characteristic != K.characteristic:
        raise NoRootError(f"{F} and {K} have different characteristics")
    r = f.degree
    if r < 1:
        raise NoRootError("constant polynomials have no roots")
    ext_deg = F.degree * r
    if K.degree % ext_deg:
        raise NoRootError(f"degree {r} over {F} does not divide [{K}:{F}]")
    fK = _embed_poly(f, K, rng)
    if K == F or K.degree <= _DIRECT_ROOT_DEGREE:
        roots = roots_in_field(fK, rng)
        if not roots:
            raise NoRootError(f"{f} has no root in {K}")
        return roots[0]
    return _root_via_subfield(fK, K, ext_deg, rng)


def _embed_poly(f, K, rng):
    """Map f over a subfield F of K to a polynomial over K."""
    F = f.field
    if F == K:
        return f
    if isinstance(F, PrimeField):
        return Poly._raw(K, _dense.strip(K, [K.from_int(c) for c in f.coeffs]))
    gamma = find_root(Poly(list(F.modulus), PrimeField(F.p)), K, rng)
    out = []
    for c in f.coeffs:
        v = K.zero
        for coeff in reversed(c):
            v = K.add(K.mul(v, gamma.value), K.from_int(coeff))
        out.append(v)
    return Poly._raw(K, _dense.strip(K, out))


class _SpanSolver:
    """Express vectors of GF(p)^k in a fixed list of basis vectors (mod p)."""

    def __init__(self, vectors, p, k):
        self.p = p
        self.k = k
        rows = np.zeros((len(vectors), k), dtype=object)
        for i, v in enumerate(vectors):
            rows[i, : len(v)] = v
        self.n = len(vectors)
        # combination[i] records which input vectors make up echelon row i
        combo = np.zeros((self.n, self.n), dtype=object)
        for i in range(self.n):
            combo[i, i] = 1
        pivots = []
        r = 0
        for col in range(k):
            if r == self.n:
                break
            piv = next((i for i in range(r, self.n) if rows[i, col] % p), None)
            if piv is None:
                continue
            rows[[r, piv]] = rows[[piv, r]]
            combo[[r, piv]] = combo[[piv, r]]
            inv = pow(int(rows[r, col]), -1, p)
            rows[r] = (rows[r] * inv) % p
            combo[r] = (combo[r] * inv) % p
            for i in range(self.n):
                if i != r and rows[i, col] % p:
                    c = rows[i, col]
                    rows[i] = (rows[i] - c * rows[r]) % p
                    combo[i] = (combo[i] - c * combo[r]) % p
            pivots.append(col)
            r += 1
        self.rank = r
        self.rows = rows[:r]
        self.combo = combo[:r]
        self.pivots = pivots

    def solve(self, target):
        t = np.zeros(self.k, dtype=object)
        t[: len(target)] = target
        coeffs = np.zeros(self.n, dtype=object)
        for i, col in enumerate(self.pivots):
            c = t[col] % self.p
            if c:
                t = (t - c * self.rows[i]) % self.p
                coeffs = (coeffs + c * self.combo[i]) % self.p
        if any(int(x) % self.p for x in t):
            return None
        return [int(x) for x in coeffs]


def _root_via_subfield(fK, K, e, rng):
    p = K.p
    k = K.degree
    # beta: an element of exact degree e over GF(p), via Tr_{K/GF(p^e)}
    beta = None
    for _ in range(200):
        a = K.random(rng)
        tr = K.zero
        cur = a
        for i in range(k // e):
            tr = K.add(tr, cur)
            for _ in range(e):
                cur = K.frobenius_raw(cur)
        if tr and element_degree(K.element(tr)) == e:
            beta = tr
            break
    if beta is None:
        raise NoRootError("could not find a generator of the root subfield")
    powers = [K.one]
    for _ in range(e):
        powers.append(K.mul(powers[-1], beta))
    solver = _SpanSolver([list(v) for v in powers[:e]], p, k)
    h = solver.solve([(-c) % p for c in powers[e]])
    g = h + [1]
    R = ExtensionField(p, g)
    coeffs_R = []
    for c in fK.coeffs:
        sol = solver.solve(list(c))
        if sol is None:
            raise NoRootError("polynomial coefficients do not lie in the root subfield")
        coeffs_R.append(R.coerce(sol))
    fR = Poly._raw(R, _dense.strip(R, coeffs_R))
    roots = roots_in_field(fR, rng)
    if not roots:
        raise NoRootError(f"no root found in {K}")
    rho = roots[0].value
    out = K.zero
    for c in reversed(rho):
        out = K.add(K.mul(out, beta), K.from_int(c))
    root = K.element(out)
    if _dense.evaluate(K, fK.coeffs, root.value) != K.zero:
        raise NoRootError("root transfer failed")
    return root
