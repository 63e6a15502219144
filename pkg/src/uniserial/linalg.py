"""Exact dense linear algebra over any supported field.

Matrices are immutable :class:`Mat` values holding raw field entries.
Vectors are plain tuples of raw field values (column vectors).  On top of
elimination (rank, kernel, solve) this module computes minimal polynomials
from Krylov sequences, cyclic vectors, the Jordan-Chevalley decomposition by
Newton iteration, and the change of basis to companion form.
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools
import random

from . import _dense
from .errors import (
    FieldMismatchError,
    ImperfectFieldError,
    InconsistentSystemError,
    NotCyclicError,
    NotInAlgebraError,
    ShapeError,
)
from .fields import FieldElement, PrimeField, Rationals
from .poly import Poly, poly_inverse_mod, poly_lcm, squarefree_part


class Mat:
    """Immutable dense matrix over a field (row-major raw entries)."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows, field, ncols=None):
        F = field
        out = []
        for row in rows:
            out.append(tuple(c.value if isinstance(c, FieldElement) and c.field == F else F.coerce(c) for c in row))
        self.field = F
        self.rows = tuple(out)
        self.nrows = len(out)
        if out:
            self.ncols = len(out[0])
            if any(len(r) != self.ncols for r in out):
                raise ShapeError("ragged matrix rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def _raw(cls, field, rows, ncols=None):
        obj = cls.__new__(cls)
        obj.field = field
        obj.rows = tuple(tuple(r) for r in rows)
        obj.nrows = len(obj.rows)
        obj.ncols = len(obj.rows[0]) if obj.rows else (ncols or 0)
        return obj

    # constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, n, field):
        z, o = field.zero, field.one
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, n, m, field):
        return cls._raw(field, [[field.zero] * m for _ in range(n)], m)

    @classmethod
    def from_columns(cls, cols, field, nrows=None):
        cols = [tuple(c) for c in cols]
        if not cols:
            return cls._raw(field, [() for _ in range(nrows or 0)], 0)
        return cls._raw(field, list(zip(*cols)))

    @classmethod
    def diag(cls, entries, field):
        n = len(entries)
        M = [[field.zero] * n for _ in range(n)]
        for i, e in enumerate(entries):
            M[i][i] = field(e).value
        return cls._raw(field, M, n)

    @classmethod
    def block_diag(cls, *blocks):
        F = blocks[0].field
        n = sum(b.nrows for b in blocks)
        M = [[F.zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                M[off + i][off : off + b.ncols] = row
            off += b.nrows
        return cls._raw(F, M, n)

    # basic protocol -------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.field.element(self.rows[i][j])

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [tuple(c) for c in zip(*self.rows)] if self.rows else [() for _ in range(self.ncols)]

    @property
    def T(self):
        return Mat._raw(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} + {other.shape}")
        add = self.field.add
        return Mat._raw(self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} - {other.shape}")
        sub = self.field.sub
        return Mat._raw(self.field, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        neg = self.field.neg
        return Mat._raw(self.field, [[neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        F = self.field
        if isinstance(c, FieldElement):
            c = F(c).value
        elif isinstance(c, (int, Fraction)):
            c = F.coerce(c)
        mul = F.mul
        return Mat._raw(F, [[mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if isinstance(other, Mat):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"{self.shape} @ {other.shape}")
        return Mat._raw(self.field, _matmul(self.field, self.rows, other.rows, other.ncols), other.ncols)

    def __pow__(self, e):
        if not self.is_square():
            raise ShapeError("power of a non-square matrix")
        result = Mat.identity(self.nrows, self.field)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def apply(self, v):
        """Matrix-vector product on a raw tuple."""
        if len(v) != self.ncols:
            raise ShapeError(f"{self.shape} applied to vector of length {len(v)}")
        return _matvec(self.field, self.rows, v)

    def polyval(self, f):
        """f(self) by Horner's rule."""
        if not self.is_square():
            raise ShapeError("polynomial of a non-square matrix")
        if f.field != self.field:
            raise FieldMismatchError(f"{f.field} vs {self.field}")
        F, n = self.field, self.nrows
        result = Mat.zeros(n, n, F)
        for c in reversed(f.coeffs):
            result = result @ self
            if c != F.zero:
                rows = [list(r) for r in result.rows]
                for i in range(n):
                    rows[i][i] = F.add(rows[i][i], c)
                result = Mat._raw(F, rows, n)
        return result

    def is_zero(self):
        z = self.field.zero
        return all(a == z for r in self.rows for a in r)

    def commutes_with(self, other):
        return self @ other == other @ self

    def vec(self):
        """Row-major flattening, used to treat matrices as vectors."""
        return tuple(a for r in self.rows for a in r)

    @classmethod
    def from_vec(cls, v, n, field):
        return cls._raw(field, [v[i * n : (i + 1) * n] for i in range(n)], n)

    def to_strings(self):
        fmt = self.field.format
        return [[fmt(a) for a in r] for r in self.rows]

    def __repr__(self):
        return f"Mat({self.to_strings()}, {self.field})"


# ---------------------------------------------------------------------------
# kernels


def _matmul(F, A, B, m):
    if not A:
        return []
    Bt = list(zip(*B)) if B else [()] * m
    if isinstance(F, PrimeField):
        p = F.p
        return [[sum(a * b for a, b in zip(row, col)) % p for col in Bt] for row in A]
    if isinstance(F, Rationals):
        return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]
    add, mul, z = F.add, F.mul, F.zero
    out = []
    for row in A:
        r = []
        for col in Bt:
            acc = z
            for a, b in zip(row, col):
                if a != z and b != z:
                    acc = add(acc, mul(a, b))
            r.append(acc)
        out.append(r)
    return out


def _matvec(F, A, v):
    if isinstance(F, PrimeField):
        p = F.p
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in A)
    if isinstance(F, Rationals):
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in A)
    add, mul, z = F.add, F.mul, F.zero
    out = []
    for row in A:
        acc = z
        for a, b in zip(row, v):
            if a != z and b != z:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def vec_add(F, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_sub(F, u, v):
    return tuple(F.sub(a, b) for a, b in zip(u, v))


def vec_scale(F, c, v):
    return tuple(F.mul(c, a) for a in v)


def vec_is_zero(F, v):
    z = F.zero
    return all(a == z for a in v)


def lin_comb(F, coeffs, vectors, length):
    """sum c_i v_i for raw coefficients and raw vectors."""
    out = [F.zero] * length
    z = F.zero
    for c, v in zip(coeffs, vectors):
        if c == z:
            continue
        for i, a in enumerate(v):
            if a != z:
                out[i] = F.add(out[i], F.mul(c, a))
    return tuple(out)


class Echelon:
    """Incrementally maintained reduced echelon basis of a subspace of F^n.

    ``insert`` returns whether the vector enlarged the span.  With
    ``track=True`` every stored row remembers its expression in terms of the
    inserted vectors, so ``express`` can write any member of the span as a
    combination of them.
    """

    def __init__(self, field, n, track=False):
        self.field = field
        self.n = n
        self.track = track
        self.rows = []  # list of (pivot, row list, combo list|None)
        self.count = 0  # number of vectors inserted successfully

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, v, combo=None):
        F = self.field
        z = F.zero
        v = list(v)
        for piv, row, rc in self.rows:
            c = v[piv]
            if c != z:
                for i in range(self.n):
                    if row[i] != z:
                        v[i] = F.sub(v[i], F.mul(c, row[i]))
                if combo is not None:
                    for i, a in enumerate(rc):
                        if a != z:
                            combo[i] = F.sub(combo[i], F.mul(c, a))
        return v

    def reduce(self, v):
        return tuple(self._reduce(v))

    def contains(self, v):
        z = self.field.zero
        return all(a == z for a in self._reduce(v))

    def insert(self, v):
        F = self.field
        z = F.zero
        combo = None
        if self.track:
            combo = [z] * (self.count + 1)
            for piv, row, rc in self.rows:
                rc.append(z)
            combo[self.count] = F.one
        r = self._reduce(v, combo)
        piv = next((i for i, a in enumerate(r) if a != z), None)
        if piv is None:
            if self.track:
                for _, _, rc in self.rows:
                    rc.pop()
            return False
        inv = F.inv(r[piv])
        r = [F.mul(inv, a) for a in r]
        if combo is not None:
            combo = [F.mul(inv, a) for a in combo]
        # keep fully reduced: clear the new pivot from existing rows
        for k, (p2, row, rc) in enumerate(self.rows):
            c = row[piv]
            if c != z:
                for i in range(self.n):
                    if r[i] != z:
                        row[i] = F.sub(row[i], F.mul(c, r[i]))
                if combo is not None:
                    for i, a in enumerate(combo):
                        if a != z:
                            rc[i] = F.sub(rc[i], F.mul(c, a))
        self.rows.append((piv, r, combo))
        self.count += 1
        return True

    def express(self, v):
        """Coefficients of v in terms of the inserted vectors, or None if v is outside the span."""
        if not self.track:
            raise ValueError("Echelon was built without tracking")
        F = self.field
        z = F.zero
        v = list(v)
        coeffs = [z] * self.count
        for piv, row, rc in self.rows:
            c = v[piv]
            if c != z:
                for i in range(self.n):
                    if row[i] != z:
                        v[i] = F.sub(v[i], F.mul(c, row[i]))
                for i, a in enumerate(rc):
                    if a != z:
                        coeffs[i] = F.add(coeffs[i], F.mul(c, a))
        if any(a != z for a in v):
            return None
        return coeffs

    def basis(self):
        return [tuple(row) for _, row, _ in sorted(self.rows, key=lambda t: t[0])]


def rref(M):
    """Reduced row echelon form and pivot columns."""
    F = M.field
    rows = [list(r) for r in M.rows]
    pivots = _rref_inplace(F, rows, M.ncols)
    return Mat._raw(F, rows, M.ncols), pivots


def _rref_inplace(F, rows, ncols):
    z = F.zero
    pivots = []
    r = 0
    nrows = len(rows)
    prime = F.p if isinstance(F, PrimeField) else None
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][col] != z), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if prime:
            inv = pow(rows[r][col], -1, prime)
            rows[r] = [(a * inv) % prime for a in rows[r]]
            pr = rows[r]
            for i in range(nrows):
                if i != r and rows[i][col]:
                    c = rows[i][col]
                    rows[i] = [(a - c * b) % prime for a, b in zip(rows[i], pr)]
        else:
            inv = F.inv(rows[r][col])
            rows[r] = [F.mul(inv, a) for a in rows[r]]
            pr = rows[r]
            for i in range(nrows):
                if i != r and rows[i][col] != z:
                    c = rows[i][col]
                    rows[i] = [F.sub(a, F.mul(c, b)) if b != z else a for a, b in zip(rows[i], pr)]
        pivots.append(col)
        r += 1
    return pivots


def rank(M):
    return len(rref(M)[1])


def kernel(M):
    """Basis of {v : M v = 0} as a list of raw tuples."""
    F = M.field
    R, pivots = rref(M)
    n = M.ncols
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * n
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.rows[i][f])
        basis.append(tuple(v))
    return basis


def solve(M, b):
    """One solution x of M x = b (raw tuples)."""
    F = M.field
    b = tuple(c.value if isinstance(c, FieldElement) else c for c in b)
    if len(b) != M.nrows:
        raise ShapeError(f"right-hand side has length {len(b)}, expected {M.nrows}")
    rows = [list(r) + [c] for r, c in zip(M.rows, b)]
    pivots = _rref_inplace(F, rows, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        raise InconsistentSystemError("the linear system has no solution")
    x = [F.zero] * M.ncols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][M.ncols]
    return tuple(x)


def inverse(M):
    if not M.is_square():
        raise ShapeError("inverse of a non-square matrix")
    F, n = M.field, M.nrows
    rows = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(M.rows)]
    pivots = _rref_inplace(F, rows, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Mat._raw(F, [r[n:] for r in rows], n)


def span_basis(vectors, field, n):
    E = Echelon(field, n)
    for v in vectors:
        E.insert(v)
    return E.basis()


def image(M):
    """Basis of the column space."""
    return span_basis(M.columns(), M.field, M.nrows)


def intersect(F, n, U, W):
    """Basis of span(U) ∩ span(W) (lists of raw vectors in F^n)."""
    if not U or not W:
        return []
    # solve sum a_i u_i = sum b_j w_j
    cols = list(U) + [tuple(F.neg(a) for a in w) for w in W]
    A = Mat.from_columns(cols, F)
    out = []
    for k in kernel(A):
        out.append(lin_comb(F, k[: len(U)], U, n))
    return span_basis(out, F, n)


# ---------------------------------------------------------------------------
# Krylov machinery


def companion(f):
    """Companion matrix of monic f: C e_i = e_{i+1}, last column -f_0..-f_{n-1}."""
    f = f.monic()
    F, n = f.field, f.degree
    M = [[F.zero] * n for _ in range(n)]
    for i in range(1, n):
        M[i][i - 1] = F.one
    for i in range(n):
        M[i][n - 1] = F.neg(f.coeffs[i])
    return Mat._raw(F, M, n)


def jordan_block(n, eigenvalue, field):
    lam = field(eigenvalue).value
    M = [[field.zero] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = lam
        if i + 1 < n:
            M[i][i + 1] = field.one
    return Mat._raw(field, M, n)


def min_poly_on_vector(M, v):
    """Monic generator of {g : g(M) v = 0}."""
    F = M.field
    n = M.nrows
    if not M.is_square():
        raise ShapeError("min_poly_on_vector needs a square matrix")
    v = tuple(v)
    if len(v) != n:
        raise ShapeError(f"vector of length {len(v)} for {n}x{n} matrix")
    E = Echelon(F, n, track=True)
    cur = v
    while E.insert(cur):
        cur = M.apply(cur)
    coeffs = E.express(cur)
    return Poly._raw(F, _dense.strip(F, [F.neg(c) for c in coeffs] + [F.one]))


def krylov_basis(M, v, d=None):
    """[v, Mv, ..., M^(d-1) v] (d defaults to the matrix size)."""
    d = M.nrows if d is None else d
    out = [tuple(v)]
    for _ in range(d - 1):
        out.append(M.apply(out[-1]))
    return out


def min_poly_matrix(M):
    """Monic minimal polynomial as the lcm of Krylov minimal polynomials of basis vectors."""
    if not M.is_square():
        raise ShapeError("minimal polynomial of a non-square matrix")
    F, n = M.field, M.nrows
    m = Poly.one(F)
    for i in range(n):
        e = [F.zero] * n
        e[i] = F.one
        # skip seeds already annihilated by the current lcm
        if m.degree > 0 and vec_is_zero(F, _poly_apply(M, m, tuple(e))):
            continue
        m = poly_lcm(m, min_poly_on_vector(M, e))
        if m.degree == n:
            break
    return m


def _poly_apply(M, f, v):
    """f(M) v by Horner on vectors."""
    F = M.field
    out = tuple([F.zero] * len(v))
    for c in reversed(f.coeffs):
        out = M.apply(out)
        if c != F.zero:
            out = tuple(F.add(a, F.mul(c, b)) for a, b in zip(out, v))
    return out


def cyclic_vector(M, rng=None, random_trials=64):
    """A vector whose Krylov space is everything, or None if none exists."""
    F, n = M.field, M.nrows
    if n == 0:
        return ()
    if min_poly_matrix(M).degree < n:
        return None

    def is_cyclic(v):
        return min_poly_on_vector(M, v).degree == n

    basis = []
    for i in range(n):
        e = [F.zero] * n
        e[i] = F.one
        basis.append(tuple(e))
    for e in basis:
        if is_cyclic(e):
            return e
    for a, b in itertools.combinations(basis, 2):
        v = vec_add(F, a, b)
        if is_cyclic(v):
            return v
    if rng is None:
        rng = random.Random(0)
    for _ in range(random_trials):
        v = tuple(F.random(rng) for _ in range(n))
        if is_cyclic(v):
            return v
    if F.is_finite and F.order**n <= 1 << 16:
        for v in itertools.product(list(F.elements()), repeat=n):
            if is_cyclic(v):
                return tuple(v)
    raise AssertionError("cyclic vector search failed although the minimal polynomial has full degree")


# ---------------------------------------------------------------------------
# Jordan-Chevalley decomposition


@dataclass(frozen=True)
class JCDecomposition:
    """M = s + n with s semisimple, n nilpotent, sn = ns and s = s_poly(M)."""

    s: Mat
    n: Mat
    s_poly: Poly


def jordan_chevalley(M):
    """Jordan-Chevalley decomposition by Newton iteration in F[X]/(min_poly).

    With g the squarefree part of the minimal polynomial m, iterate
    s <- s - g(s) / g'(s) on polynomials modulo m, starting from s = X.
    Each step doubles the order of vanishing of g(s), so ceil(log2 l) steps
    suffice, l the largest multiplicity.
    """
    if not M.is_square():
        raise ShapeError("Jordan-Chevalley decomposition of a non-square matrix")
    F = M.field
    if not F.perfect:
        raise ImperfectFieldError(
            f"{F} is imperfect: the Jordan-Chevalley decomposition need not exist or be unique"
        )
    n = M.nrows
    m = min_poly_matrix(M)
    if m.degree <= 0:
        return JCDecomposition(M, M, Poly.zero(F))
    g = squarefree_part(m)
    dg = g.derivative()
    s = Poly.x(F) % m
    steps = 0
    while True:
        gs = g.compose(s) % m
        if not gs:
            break
        h = poly_inverse_mod(dg.compose(s), m)
        s = (s - gs * h) % m
        steps += 1
        if steps > n + 1:
            raise AssertionError("Newton iteration did not converge")
    S = M.polyval(s)
    return JCDecomposition(S, M - S, s)


def is_nilpotent(M):
    m = min_poly_matrix(M)
    return m.degree <= 0 or all(c == M.field.zero for c in m.coeffs[:-1])


# ---------------------------------------------------------------------------
# companion basis


def to_companion_basis(u, others=(), v=None):
    """Change of basis to companion form of ``u`` and polynomial expressions of ``others``.

    Returns (P, expressions) with P^-1 u P = companion(min_poly(u)) and
    g = h(u) for each g in ``others``, h of degree < dim.  The coefficients of
    h are read off by solving g v = h(u) v in the Krylov basis of v.
    """
    F, n = u.field, u.nrows
    if v is None:
        v = cyclic_vector(u)
        if v is None:
            raise NotCyclicError("operator has no cyclic vector")
    kb = krylov_basis(u, v, n)
    P = Mat.from_columns(kb, F) if n else Mat.zeros(0, 0, F)
    if n and rank(P) < n:
        raise NotCyclicError("given vector is not cyclic")
    exprs = []
    for idx, g in enumerate(others):
        if g.field != F:
            raise FieldMismatchError(f"{g.field} vs {F}")
        if n == 0:
            exprs.append(Poly.zero(F))
            continue
        try:
            coeffs = solve(P, g.apply(v))
        except InconsistentSystemError:
            raise NotInAlgebraError(idx) from None
        h = Poly._raw(F, _dense.strip(F, coeffs))
        if u.polyval(h) != g:
            raise NotInAlgebraError(idx)
        exprs.append(h)
    return P, exprs


def conjugate(M, P, P_inv=None):
    """P^-1 M P."""
    if P_inv is None:
        P_inv = inverse(P)
    return P_inv @ M @ P


def random_invertible(n, field, rng):
    while True:
        M = Mat._raw(field, [[field.random(rng) for _ in range(n)] for _ in range(n)], n)
        if rank(M) == n:
            return M
