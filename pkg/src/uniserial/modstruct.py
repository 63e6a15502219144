"""Structure of a module V = F^n over a commutative algebra of matrices.

The algebra is given by commuting generators; its linear basis is found by
closing under multiplication.  Over a perfect field the socle of an invariant
subspace U is the common kernel of sf_g(g|U), sf_g the squarefree part of
g's minimal polynomial on U: it is the largest submodule on which every
generator acts semisimply, and commuting semisimple operators generate an
algebra acting semisimply.  Iterating the socle on quotients gives the socle
(Loewy) series, and V is uniserial exactly when every layer is irreducible.

Subspaces are lists of raw vectors in F^n.  Quotients are never formed
abstractly: a complement basis is chosen and the action is projected onto it.
"""

from dataclasses import dataclass, field as dc_field
import itertools
from typing import Optional

from . import _gfp
from .errors import (
    ImperfectFieldError,
    InvariantViolation,
    NonCommutingError,
    NotUniserialError,
    ShapeError,
)
from .fields import Rationals, nonzero_by_primitive_root
from .linalg import (
    Echelon,
    Mat,
    jordan_chevalley,
    kernel,
    lin_comb,
    min_poly_matrix,
)
from .poly import is_irreducible, is_squarefree, split_factor, squarefree_part


class CommAlgebra:
    """Unital commutative algebra F[generators] inside End(F^n).

    ``basis[i]`` equals the product of generators listed in ``words[i]``
    (a sorted tuple of generator indices, () for the identity), so an
    element written in this basis can be re-evaluated on any other module
    where the same generators act, e.g. a quotient.
    """

    def __init__(self, field, generators, basis, words, dim_V):
        self.field = field
        self.generators = list(generators)
        self.basis = list(basis)
        self.words = list(words)
        self.dim_V = dim_V
        self._echelon = Echelon(field, dim_V * dim_V, track=True)
        for b in self.basis:
            self._echelon.insert(b.vec())

    @property
    def dim(self):
        return len(self.basis)

    def express(self, M):
        """Coefficients of M in ``basis`` (raw values), or None if M is not in the algebra."""
        return self._echelon.express(M.vec())

    def contains(self, M):
        return self._echelon.contains(M.vec())

    def element(self, coeffs):
        n = self.dim_V
        return Mat.from_vec(lin_comb(self.field, coeffs, [b.vec() for b in self.basis], n * n), n, self.field)

    def __repr__(self):
        return f"CommAlgebra(dim={self.dim}, dim_V={self.dim_V}, field={self.field})"


def algebra_closure(gens, field=None, n=None):
    """Linear basis of the unital algebra generated by commuting square matrices."""
    gens = list(gens)
    if gens:
        F = gens[0].field
        n = gens[0].nrows
        for i, g in enumerate(gens):
            if g.field != F:
                raise ShapeError(f"generator {i} is over {g.field}, expected {F}")
            if not g.is_square() or g.nrows != n:
                raise ShapeError(f"generator {i} has shape {g.shape}, expected {(n, n)}")
    else:
        if field is None or n is None:
            raise ValueError("an empty generator list needs explicit field and size")
        F = field
    for i, j in itertools.combinations(range(len(gens)), 2):
        if not gens[i].commutes_with(gens[j]):
            raise NonCommutingError(i, j)
    E = Echelon(F, n * n)
    I = Mat.identity(n, F)
    basis, words = [I], [()]
    E.insert(I.vec())
    k = 0
    while k < len(basis):
        b, w = basis[k], words[k]
        for gi, g in enumerate(gens):
            prod = g @ b
            if E.insert(prod.vec()):
                basis.append(prod)
                words.append(tuple(sorted(w + (gi,))))
        k += 1
    return CommAlgebra(F, gens, basis, words, n)


def evaluate_word(word, gens, n, F):
    M = Mat.identity(n, F)
    for i in word:
        M = gens[i] @ M
    return M


def evaluate_terms(coeffs, words, gens, n, F):
    """sum c_i * word_i(gens)."""
    out = [F.zero] * (n * n)
    for c, w in zip(coeffs, words):
        if c != F.zero:
            v = evaluate_word(w, gens, n, F).vec()
            out = [F.add(a, F.mul(c, b)) for a, b in zip(out, v)]
    return Mat.from_vec(tuple(out), n, F)


# ---------------------------------------------------------------------------
# subspaces, restriction and quotients


def _standard_basis(F, n):
    out = []
    for i in range(n):
        e = [F.zero] * n
        e[i] = F.one
        out.append(tuple(e))
    return out


def is_invariant(mats, U, F, n):
    E = Echelon(F, n)
    for u in U:
        E.insert(u)
    return all(E.contains(g.apply(u)) for g in mats for u in U)


def restrict(M, U):
    """Matrix of M|U in the basis U (U must be M-invariant)."""
    F, n = M.field, M.nrows
    k = len(U)
    E = Echelon(F, n, track=True)
    for u in U:
        if not E.insert(u):
            raise ValueError("subspace basis is linearly dependent")
    cols = []
    for u in U:
        c = E.express(M.apply(u))
        if c is None:
            raise ValueError("subspace is not invariant")
        cols.append(tuple(c))
    return Mat.from_columns(cols, F, k) if k else Mat.zeros(0, 0, F)


def complement(inner, outer, F, n):
    """Vectors of ``outer`` extending the basis ``inner`` to a basis of span(outer)."""
    E = Echelon(F, n)
    for v in inner:
        E.insert(v)
    return [v for v in outer if E.insert(v)]


def induced_action(M, inner, comp):
    """Matrix of M on span(inner + comp) / span(inner) in the basis comp."""
    F, n = M.field, M.nrows
    E = Echelon(F, n, track=True)
    for v in list(inner) + list(comp):
        E.insert(v)
    k = len(inner)
    cols = []
    for w in comp:
        c = E.express(M.apply(w))
        if c is None:
            raise ValueError("subspace is not invariant")
        cols.append(tuple(c[k:]))
    r = len(comp)
    return Mat.from_columns(cols, F, r) if r else Mat.zeros(0, 0, F)


def _require_perfect(F):
    if not F.perfect:
        raise ImperfectFieldError(
            f"{F} is imperfect; socle and radical computations rely on unique "
            "Jordan-Chevalley decompositions and are refused"
        )


def _socle_coords(F, mats, k):
    """Socle of F^k under commuting matrices ``mats`` (coordinates in F^k)."""
    current = _standard_basis(F, k)
    for g in mats:
        if not current:
            break
        gU = restrict(g, current) if len(current) < k else g
        m = min_poly_matrix(gU)
        sf = squarefree_part(m)
        ker = kernel(gU.polyval(sf))
        current = [lin_comb(F, c, current, k) for c in ker]
    return current


def socle(A, U=None):
    """Soc(U) for an A-invariant subspace U (default: all of V)."""
    F, n = A.field, A.dim_V
    _require_perfect(F)
    if U is None:
        U = _standard_basis(F, n)
    U = [tuple(u) for u in U]
    if not U:
        return []
    if not is_invariant(A.generators, U, F, n):
        raise ValueError("subspace is not invariant under the algebra")
    mats = [restrict(g, U) for g in A.generators]
    coords = _socle_coords(F, mats, len(U))
    return [lin_comb(F, c, U, n) for c in coords]


@dataclass
class SocleChain:
    """Socle series 0 = W_0 < W_1 < ... < W_l = V (bases in F^n)."""

    chain: list
    layer_dims: list

    @property
    def length(self):
        return len(self.layer_dims)


def socle_chain(A):
    F, n = A.field, A.dim_V
    _require_perfect(F)
    full = _standard_basis(F, n)
    chain = [[]]
    dims = []
    current = []
    while len(current) < n:
        comp = complement(current, full, F, n)
        qmats = [induced_action(g, current, comp) for g in A.generators]
        soc = _socle_coords(F, qmats, len(comp))
        if not soc:
            raise InvariantViolation("empty socle of a nonzero module")
        lifted = [lin_comb(F, c, comp, n) for c in soc]
        current = current + lifted
        chain.append(list(current))
        dims.append(len(lifted))
    return SocleChain(chain, dims)


# ---------------------------------------------------------------------------
# field test and irreducibility


@dataclass
class FieldCertificate:
    """Outcome of :func:`is_field`.

    ``generator`` (when a field) has irreducible minimal polynomial of degree
    dim B; ``witness`` (when not) is an element whose minimal polynomial is
    reducible, i.e. a source of zero divisors.
    """

    is_field: bool
    generator: Optional[Mat] = None
    min_poly: object = None
    witness: Optional[Mat] = None
    method: str = ""


def _irreducible_min_poly(m):
    if m.degree == 1:
        return True
    if not is_squarefree(m):
        return False
    return is_irreducible(m)


def scalar_sweep(F, limit=None):
    """Nonzero scalars in sweep order.

    Finite fields: powers of a fixed primitive root.  QQ: 1, -1, 2, -2, ...
    up to ``limit`` in absolute value.
    """
    if F.is_finite:
        return nonzero_by_primitive_root(F)
    if isinstance(F, Rationals):
        limit = limit or 8
        out = []
        for h in range(1, limit + 1):
            out += [F.from_int(h), F.from_int(-h)]
        return out
    raise ValueError(f"no scalar sweep for {F}")


def _height_tuples(scalars, r, max_count):
    """Tuples over ``scalars`` ordered by height (max index), at most max_count."""
    count = 0
    for h in range(len(scalars)):
        for t in itertools.product(range(h + 1), repeat=r):
            if max(t) != h:
                continue
            yield tuple(scalars[i] for i in t)
            count += 1
            if count >= max_count:
                return


def is_field(B, max_sweep=4096):
    """Decide whether the commutative matrix algebra B is a field."""
    F = B.field
    d = B.dim
    n = B.dim_V
    if d == 1:
        z = B.generators[0] if B.generators else Mat.identity(n, F)
        return FieldCertificate(True, z, min_poly_matrix(z), method="scalar")

    def examine(z):
        m = min_poly_matrix(z)
        if not _irreducible_min_poly(m):
            return FieldCertificate(False, witness=z, min_poly=m, method="reducible-min-poly")
        if m.degree == d:
            return FieldCertificate(True, generator=z, min_poly=m, method="primitive")
        return None

    for z in list(B.generators) + B.basis[1:]:
        cert = examine(z)
        if cert is not None:
            return cert
    # linear combinations of the generators, all coefficients nonzero
    gens = B.generators
    if len(gens) > 1:
        scalars = scalar_sweep(F, limit=d + 2)
        for coeffs in _height_tuples(scalars, len(gens), max_sweep):
            z = _combine(F, coeffs, gens, n)
            cert = examine(z)
            if cert is not None:
                cert.method = "sweep"
                return cert
    if F.is_finite:
        return _is_field_finite(B, examine)
    # unreachable for reduced algebras in practice: a product of fields has a
    # generic element of full degree whose minimal polynomial is reducible
    raise InvariantViolation("field test undecided after the height sweep")


def _combine(F, coeffs, mats, n):
    return Mat.from_vec(lin_comb(F, coeffs, [m.vec() for m in mats], n * n), n, F)


def _is_field_finite(B, examine):
    """Finite fields: Berlekamp fixed space, then enumerate B for a generator.

    B is reduced at this point (every basis element has a squarefree minimal
    polynomial), so B is a product of r finite fields and r equals the
    dimension of {b : b^q = b}.
    """
    F = B.field
    n = B.dim_V
    q = F.order
    d = B.dim
    # Frobenius-minus-identity matrix on coordinates (columns = images of basis elements)
    cols = []
    for i, b in enumerate(B.basis):
        c = list(B.express(b**q))
        c[i] = F.sub(c[i], F.one)
        cols.append(tuple(c))
    fixed = kernel(Mat.from_columns(cols, F, d))
    if len(fixed) > 1:
        for v in fixed:
            z = B.element(v)
            m = min_poly_matrix(z)
            if m.degree > 1:
                return FieldCertificate(False, witness=z, min_poly=m, method="berlekamp")
        raise InvariantViolation("Berlekamp fixed space without a split element")
    for coeffs in itertools.product(list(F.elements()), repeat=d):
        z = B.element(coeffs)
        cert = examine(z)
        if cert is not None:
            cert.method = "exhaustive"
            return cert
    raise InvariantViolation("no generator found in a finite field")


@dataclass
class IrreducibilityCertificate:
    """Either a generator z of the image algebra (irreducible) or a proper invariant subspace."""

    irreducible: bool
    generator: Optional[Mat] = None
    min_poly: object = None
    subspace: Optional[list] = None


def is_irreducible_module(A, W=None, mats=None):
    """Is the invariant subspace W (default V) an irreducible A-module?

    ``mats`` may instead give the action directly on some F^k.
    """
    if mats is None:
        F, n = A.field, A.dim_V
        if W is None:
            W = _standard_basis(F, n)
        if not W:
            raise ValueError("the zero module is not irreducible")
        mats = [restrict(g, W) for g in A.generators]
    else:
        F = A.field if A is not None else mats[0].field
        W = None
    _require_perfect(F)
    k = mats[0].nrows if mats else (len(W) if W else 0)
    B = algebra_closure(mats, field=F, n=k)
    cert = None
    if B.dim == k:
        fc = is_field(B)
        if fc.is_field:
            return IrreducibilityCertificate(True, generator=fc.generator, min_poly=fc.min_poly)
        cert = fc
    sub = _proper_invariant_subspace(B, cert)
    if W is not None:
        sub = [lin_comb(F, c, W, len(W[0])) for c in sub]
    return IrreducibilityCertificate(False, subspace=sub)


def _proper_invariant_subspace(B, cert):
    F, k = B.field, B.dim_V
    for w in _standard_basis(F, k):
        E = Echelon(F, k)
        for b in B.basis:
            E.insert(b.apply(w))
        if 0 < E.dim < k:
            return E.basis()
    z = cert.witness if cert is not None else None
    if z is None:
        for z in B.basis[1:]:
            if split_factor(min_poly_matrix(z)) is not None:
                break
        else:
            raise InvariantViolation("reducible module without a zero divisor")
    f = split_factor(min_poly_matrix(z))
    return kernel(z.polyval(f))


# ---------------------------------------------------------------------------
# uniseriality


@dataclass
class UniserialCertificate:
    uniserial: bool
    chain: SocleChain
    layers: list = dc_field(default_factory=list)
    first_reducible_layer: Optional[int] = None

    def __bool__(self):
        return self.uniserial


def layer_action(A, chain, i):
    """Action of A's generators on W_{i+1}/W_i, in a complement basis."""
    F, n = A.field, A.dim_V
    inner, outer = chain.chain[i], chain.chain[i + 1]
    comp = complement(inner, outer, F, n)
    return [induced_action(g, inner, comp) for g in A.generators], comp


def is_uniserial(A):
    """Uniserial iff every layer of the socle series is irreducible."""
    if A.dim_V == 0:
        raise ValueError("the zero module is not uniserial")
    chain = socle_chain(A)
    layers = []
    for i in range(chain.length):
        mats, _ = layer_action(A, chain, i)
        if not mats:
            k = chain.layer_dims[i]
            mats = [Mat.identity(k, A.field)]
        cert = is_irreducible_module(A, mats=mats)
        layers.append(cert)
        if not cert.irreducible:
            return UniserialCertificate(False, chain, layers, i)
    return UniserialCertificate(True, chain, layers)


def nilradical(A):
    """Basis of the nilpotent elements of A via a -> nilpotent part of a."""
    F = A.field
    _require_perfect(F)
    n = A.dim_V
    E = Echelon(F, n * n)
    out = []
    for a in A.basis:
        nil = jordan_chevalley(a).n
        if E.insert(nil.vec()):
            out.append(nil)
    return out


def residue_degree(A, cert=None):
    """([R(A):F], N): dimension of A acting on the socle and its number of distinct prime factors."""
    if cert is None:
        cert = is_uniserial(A)
    if not cert.uniserial:
        raise NotUniserialError("residue degree needs a uniserial module")
    W = cert.chain.chain[1]
    mats = [restrict(g, W) for g in A.generators]
    B = algebra_closure(mats, field=A.field, n=len(W))
    deg = B.dim
    return deg, len(_gfp.prime_factors(deg)) if deg > 1 else 0
