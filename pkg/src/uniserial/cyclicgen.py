"""Single generators for commutative algebras acting uniserially.

If A acts faithfully and uniserially on V over a perfect field then A = F[u]
for one u whose minimal polynomial is p^l, p irreducible.  The search
follows the induction on the length l.  The socle W is irreducible, so for
l = 1 A is a field and a primitive element is the answer.  Otherwise a
generator x of the algebra induced on V/W is lifted to A.  Either x already
has minimal polynomial p^l on V, or l = 2 and x + y works for any nonzero
nilpotent y in A.

Quotient algebras are generated by the images of the same generators, so an
element found on V/W as a combination of products of generators is lifted
by evaluating the same combination on V.
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import (
    FieldTooSmallError,
    InvariantViolation,
    NotUniserialError,
    UniserialError,
)
from .linalg import Mat, min_poly_matrix, to_companion_basis
from .modstruct import (
    SocleChain,
    UniserialCertificate,
    _require_perfect,
    _socle_coords,
    _height_tuples,
    _standard_basis,
    algebra_closure,
    complement,
    evaluate_terms,
    induced_action,
    is_field,
    is_uniserial,
    nilradical,
    residue_degree,
    restrict,
    scalar_sweep,
)
from .poly import is_squarefree, prime_power_shape


@dataclass
class UniserialReport:
    uniserial: bool
    mode: str
    certificate: UniserialCertificate
    length: Optional[int] = None
    generator: Optional[Mat] = None
    min_poly: object = None
    shape: Optional[tuple] = None
    companion_basis: Optional[Mat] = None
    expressions: dict = dc_field(default_factory=dict)
    combination: Optional[list] = None
    combination_generator: Optional[Mat] = None
    residue_degree: Optional[int] = None
    N: Optional[int] = None
    notes: list = dc_field(default_factory=list)

    @property
    def socle_chain(self) -> SocleChain:
        return self.certificate.chain


def _min_degree(M):
    return min_poly_matrix(M).degree


def _quotient(gens, F, n):
    W = _socle_coords(F, gens, n)
    comp = complement(W, _standard_basis(F, n), F, n)
    return W, comp, [induced_action(g, W, comp) for g in gens]


def _single(gens, F, n):
    """(A, coefficients of u over A.basis, length) for the algebra generated by gens on F^n."""
    A = algebra_closure(gens, field=F, n=n)
    W, comp, qgens = _quotient(gens, F, n)
    if not comp:
        fc = is_field(A)
        if not fc.is_field or A.dim != n:
            raise NotUniserialError("socle layer is not irreducible")
        return A, A.express(fc.generator), 1
    Aq, cq, lq = _single(qgens, F, len(comp))
    x = evaluate_terms(cq, Aq.words, gens, n, F)
    ell = lq + 1
    if _min_degree(x) == n:
        return A, A.express(x), ell
    if ell != 2:
        raise InvariantViolation(
            f"lifted generator falls short on a module of length {ell} > 2"
        )
    nil = nilradical(A)
    if not nil:
        raise InvariantViolation("uniserial module of length 2 with a zero nilradical")
    u = x + nil[0]
    m = min_poly_matrix(u)
    shape = prime_power_shape(m) if m.degree == n else None
    if shape is None or shape[1] != 2:
        raise InvariantViolation(f"x + y has minimal polynomial {m.format()}, expected p^2")
    return A, A.express(u), 2


def _require_uniserial(A, certificate):
    _require_perfect(A.field)
    if certificate is None:
        certificate = is_uniserial(A)
    if not certificate.uniserial:
        raise NotUniserialError("the module is not uniserial")
    return certificate


def find_single_generator(A, certificate=None):
    """u in A with minimal polynomial p^l of degree dim V, and the shape (p, l)."""
    cert = _require_uniserial(A, certificate)
    F, n = A.field, A.dim_V
    _, coeffs, ell = _single(A.generators, F, n)
    if ell != cert.chain.length:
        raise InvariantViolation(f"recursion depth {ell} differs from the socle length {cert.chain.length}")
    u = A.element(coeffs)
    m = min_poly_matrix(u)
    shape = prime_power_shape(m) if m.degree == n else None
    if shape is None or shape[1] != ell:
        raise InvariantViolation(f"generator has minimal polynomial {m.format()}")
    return u, shape


def _combine(F, coeffs, gens, n):
    out = Mat.zeros(n, n, F)
    for c, g in zip(coeffs, gens):
        if c != F.zero:
            out = out + g.scale(c)
    return out


def _join(u, g, sweep):
    """Coefficient gamma (possibly zero) and the new u with F[u + gamma*g] = F[u, g], or None.

    Nonzero gamma is preferred; when none works the nested-subfield cases
    of the pair argument take u or g unchanged.
    """
    target = algebra_closure([u, g]).dim
    for alpha in sweep:
        z = u + g.scale(alpha)
        if _min_degree(z) == target:
            return "add", alpha, z
    if _min_degree(u) == target:
        return "keep", None, u
    if _min_degree(g) == target:
        return "replace", None, g
    return None


def _combination(gens, F, n):
    r = len(gens)
    W, comp, qgens = _quotient(gens, F, n)
    sweep = scalar_sweep(F, limit=2 * n + 4)
    if not comp:
        if r == 0:
            return [], 1
        coeffs = [F.one] + [F.zero] * (r - 1)
        u = gens[0]
        for i in range(1, r):
            step = _join(u, gens[i], sweep)
            if step is None:
                raise FieldTooSmallError(f"no alpha in {F} joins generator {i} on the socle")
            kind, alpha, u = step
            if kind == "add":
                coeffs[i] = alpha
            elif kind == "replace":
                coeffs = [F.zero] * r
                coeffs[i] = F.one
        return coeffs, 1
    beta, lq = _combination(qgens, F, len(comp))
    v = _combine(F, beta, gens, n)
    if _min_degree(v) == n:
        return beta, lq + 1
    candidates = [i for i, g in enumerate(gens) if not is_squarefree(min_poly_matrix(g))]
    if not candidates:
        raise InvariantViolation("every generator is semisimple but the algebra is not")
    dW = len(W)
    fallback = None
    for idx in candidates:
        for alpha in sweep:
            z = v + gens[idx].scale(alpha)
            if _min_degree(restrict(z, W)) == dW and _min_degree(z) == n:
                c = list(beta)
                c[idx] = F.add(c[idx], alpha)
                if all(a != F.zero for a in c):
                    return c, lq + 1
                if fallback is None:
                    fallback = c
    if fallback is not None:
        return fallback, lq + 1
    raise FieldTooSmallError(f"no alpha in {F} makes v + alpha*y generate the socle field")


def _tuple_search(gens, F, n, allow_zero=False, max_tuples=4096):
    """First coefficient tuple (height order) whose combination generates the algebra.

    Entries are nonzero unless ``allow_zero``; the all-zero tuple is skipped.
    """
    scalars = scalar_sweep(F, limit=2 * n + 4)
    if allow_zero:
        scalars = [F.zero] + scalars
    for coeffs in _height_tuples(scalars, len(gens), max_tuples):
        if all(c == F.zero for c in coeffs):
            continue
        if _min_degree(_combine(F, coeffs, gens, n)) == n:
            return list(coeffs)
    return None


def find_combination_generator(A, gens=None, certificate=None):
    """Coefficients c and u = sum c_i g_i with A = F[u].

    Follows the induction on the length.  When that yields a zero
    coefficient, all-nonzero tuples are searched in height order (over a
    finite field this is exhaustive for few generators) and the inductive
    answer is kept if none exists.  If the induction itself dead-ends,
    which can happen after an earlier step was forced to drop a generator,
    tuples with zero entries are searched too.  Guaranteed when |F| > N - 1
    (N the number of distinct primes of the residue degree); smaller fields
    may raise FieldTooSmallError.
    """
    _require_uniserial(A, certificate)
    F, n = A.field, A.dim_V
    gens = list(A.generators if gens is None else gens)
    try:
        coeffs, _ = _combination(gens, F, n)
    except FieldTooSmallError:
        coeffs = _tuple_search(gens, F, n) or _tuple_search(gens, F, n, allow_zero=True)
        if coeffs is None:
            raise
    if any(c == F.zero for c in coeffs):
        coeffs = _tuple_search(gens, F, n) or coeffs
    u = _combine(F, coeffs, gens, n)
    if _min_degree(u) != n:
        raise InvariantViolation("combination does not generate the algebra")
    return [F.element(c) for c in coeffs], u


def _staged(stage, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except UniserialError as e:
        e.stage = stage
        raise


def analyze(gens, mode="associative", field=None, n=None):
    """Full pipeline: closure, uniseriality, generator, combination, companion form.

    In ``lie`` mode the generators span an abelian Lie algebra g; the
    combination (when found) is an element x of g making V a uniserial
    F[x]-module.  Errors carry the failing pipeline stage in ``.stage``.
    """
    if mode not in ("associative", "lie"):
        raise ValueError(f"unknown mode {mode!r}")
    gens = list(gens)
    A = _staged("closure", algebra_closure, gens, field=field, n=n)
    cert = _staged("uniseriality", is_uniserial, A)
    report = UniserialReport(cert.uniserial, mode, cert)
    if not cert.uniserial:
        report.notes.append(f"layer {cert.first_reducible_layer} of the socle series is reducible")
        return report
    report.length = cert.chain.length
    report.residue_degree, report.N = _staged("residue", residue_degree, A, cert)
    u, shape = _staged("generator", find_single_generator, A, cert)
    report.generator, report.shape = u, shape
    report.min_poly = shape[0] ** shape[1]
    try:
        coeffs, z = _staged("combination", find_combination_generator, A, gens, cert)
        report.combination, report.combination_generator = coeffs, z
    except FieldTooSmallError as e:
        report.notes.append(f"no linear-combination generator: {e}")
    P, exprs = _staged("companion", to_companion_basis, u, gens)
    report.companion_basis = P
    report.expressions = dict(enumerate(exprs))
    return report
