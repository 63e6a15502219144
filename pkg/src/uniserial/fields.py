"""Coefficient fields: GF(p), GF(p)[X]/(m), Q and the rational function field F_q(t).

Each field object is an immutable *descriptor*.  It owns the arithmetic on
raw values (ints, int tuples, Fractions, pairs of polynomials) and hands out
:class:`FieldElement` wrappers for convenient operator syntax.  Descriptors
compare structurally, so two separately built copies of ``GF(2)[X]/(X^2+X+1)``
are interchangeable.
"""

from fractions import Fraction
import itertools
import random

import numpy as np

from . import _dense, _gfp
from .errors import FieldMismatchError, ImperfectFieldError, NotFiniteFieldError


class Field:
    """Abstract field descriptor.

    Subclasses implement the raw arithmetic (``add``, ``sub``, ``neg``,
    ``mul``, ``inv``, ``from_int``) on canonical raw values, so that ``==`` on
    raw values is field equality.
    """

    kind = None
    characteristic = 0
    perfect = True
    order = None  # None for infinite fields

    @property
    def is_finite(self):
        return self.order is not None

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.name

    def __call__(self, value):
        """Coerce an int, Fraction, raw value or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value.field} is not {self}")
            return value
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        if isinstance(value, int):
            return self.from_int(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def element(self, raw):
        return FieldElement(self, raw)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_zero(self, a):
        return a == self.zero

    def elements(self):
        raise NotFiniteFieldError(f"{self} is infinite")

    def random(self, rng):
        raise NotImplementedError

    def pth_root(self, a):
        raise ImperfectFieldError(f"p-th roots are not defined over {self}")

    def format(self, a):
        return str(a)


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if not _gfp.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.degree = 1
        self.zero = 0
        self.one = 1 % p
        self.name = f"GF({p})"

    def _key(self):
        return ("prime", self.p)

    def from_int(self, n):
        return n % self.p

    def coerce(self, value):
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return super().coerce(value)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"inverse of 0 in {self}")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def elements(self):
        return iter(range(self.p))

    def random(self, rng):
        return rng.randrange(self.p)

    def frobenius_raw(self, a):
        return a

    def pth_root(self, a):
        return a

    def index(self, a):
        return a


class ExtensionField(Field):
    """GF(p)[X]/(m) for a monic irreducible m of degree k >= 1.

    Raw values are trimmed little-endian tuples of ints mod p of length < k.
    """

    kind = "extension"

    def __init__(self, p, modulus, var="X"):
        if not _gfp.is_prime(p):
            raise ValueError(f"{p} is not prime")
        coeffs = _gfp.trim([int(c) % p for c in _modulus_coeffs(modulus)])
        if len(coeffs) < 2:
            raise ValueError("modulus must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("modulus must be monic")
        if not _gfp.is_irreducible(coeffs, p):
            raise ValueError(f"modulus {coeffs} is reducible over GF({p})")
        self.p = p
        self.modulus = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.characteristic = p
        self.order = p ** self.degree
        self.var = var
        self.zero = ()
        self.one = (1,)
        self._ctx = _gfp.Modulus(coeffs, p)
        self._frob_matrix = None
        self.name = f"GF({p})[{var}]/({_format_int_poly(coeffs, var)})"

    def _key(self):
        return ("extension", self.p, self.modulus)

    @property
    def prime_field(self):
        return PrimeField(self.p)

    @property
    def gen(self):
        """The class of X."""
        return self.element(self._reduce_list([0, 1]))

    def _reduce_list(self, a):
        a = _gfp.trim([c % self.p for c in a])
        if len(a) > self.degree:
            a = _gfp.rem(a, list(self.modulus), self.p)
        return tuple(a)

    def from_int(self, n):
        n %= self.p
        return (n,) if n else ()

    def coerce(self, value):
        if isinstance(value, (list, tuple)):
            return self._reduce_list(list(value))
        if isinstance(value, Fraction):
            return self.from_int(value.numerator * pow(value.denominator, -1, self.p))
        return super().coerce(value)

    def add(self, a, b):
        return tuple(_gfp.add(a, b, self.p))

    def sub(self, a, b):
        return tuple(_gfp.sub(a, b, self.p))

    def neg(self, a):
        return tuple(_gfp.neg(a, self.p))

    def mul(self, a, b):
        if not a or not b:
            return ()
        return tuple(self._ctx.mul(a, b))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"inverse of 0 in {self}")
        g, s, _ = _gfp.xgcd(list(a), list(self.modulus), self.p)
        return tuple(s)

    def pow(self, a, e):
        if not a:
            if e < 0:
                raise ZeroDivisionError(f"inverse of 0 in {self}")
            return self.one if e == 0 else ()
        if e < 0:
            a, e = self.inv(a), -e
        return tuple(self._ctx.pow(a, e % (self.order - 1)))

    def elements(self):
        p, k = self.p, self.degree
        for digits in itertools.product(range(p), repeat=k):
            yield tuple(_gfp.trim(list(reversed(digits))))

    def index(self, a):
        """Position of ``a`` in :meth:`elements` order."""
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def random(self, rng):
        return tuple(_gfp.trim([rng.randrange(self.p) for _ in range(self.degree)]))

    def frobenius_raw(self, a):
        """a^p."""
        if not a:
            return a
        k, p = self.degree, self.p
        if k >= 48 and _gfp.fits_int64(p, k):
            if self._frob_matrix is None:
                self._frob_matrix = self._build_frobenius_matrix()
            v = np.zeros(k, dtype=np.int64)
            v[: len(a)] = a
            return tuple(_gfp.trim(((self._frob_matrix @ v) % p).tolist()))
        return tuple(self._ctx.pow(a, p))

    def _build_frobenius_matrix(self):
        k, p = self.degree, self.p
        xp = self._ctx.pow([0, 1], p)
        cols = np.zeros((k, k), dtype=np.int64)
        cur = [1]
        for i in range(k):
            cols[: len(cur), i] = cur
            cur = self._ctx.mul(cur, xp)
        return cols

    def pth_root(self, a):
        # a^(p^(k-1)) inverts the Frobenius on GF(p^k)
        for _ in range(self.degree - 1):
            a = self.frobenius_raw(a)
        return a

    def format(self, a):
        return _format_int_poly(a, self.var)


class Rationals(Field):
    kind = "rationals"
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def _key(self):
        return ("rationals",)

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, value):
        if isinstance(value, (Fraction, int)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        return super().coerce(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / a

    def random(self, rng, height=5):
        return Fraction(rng.randint(-height, height), rng.randint(1, height))


class RationalFunctionField(Field):
    """F_q(t) over a finite base field.

    Raw values are pairs ``(num, den)`` of coefficient tuples over the base,
    coprime, with ``den`` monic.  This field is imperfect: ``t`` has no p-th
    root, which is exactly what the perfect-field refusals key on.
    """

    kind = "ratfunc"
    perfect = False

    def __init__(self, base, var="t"):
        if not isinstance(base, (PrimeField, ExtensionField)):
            raise ValueError("rational function fields need a finite base field")
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))
        self.name = f"{base.name}({var})"

    def _key(self):
        return ("ratfunc", self.base._key())

    @property
    def gen(self):
        B = self.base
        return self.element(((B.zero, B.one), (B.one,)))

    def _normalize(self, num, den):
        B = self.base
        if not den:
            raise ZeroDivisionError(f"zero denominator in {self}")
        if not num:
            return self.zero
        g = _dense.gcd(B, num, den)
        if len(g) > 1:
            num = _dense.divmod_(B, num, g)[0]
            den = _dense.divmod_(B, den, g)[0]
        lead = den[-1]
        if lead != B.one:
            c = B.inv(lead)
            num = _dense.scale(B, num, c)
            den = _dense.scale(B, den, c)
        return (num, den)

    def from_int(self, n):
        c = self.base.from_int(n)
        return ((c,), (self.base.one,)) if c != self.base.zero else self.zero

    def from_polys(self, num, den=None):
        B = self.base
        num = _dense.strip(B, [B.coerce(c) if not isinstance(c, FieldElement) else c.value for c in num])
        if den is None:
            den = (B.one,)
        else:
            den = _dense.strip(B, [B.coerce(c) if not isinstance(c, FieldElement) else c.value for c in den])
        return self._normalize(num, den)

    def coerce(self, value):
        if isinstance(value, FieldElement) and value.field == self.base:
            return self._normalize((value.value,) if value.value != self.base.zero else (), (self.base.one,))
        return super().coerce(value)

    def add(self, a, b):
        B = self.base
        (an, ad), (bn, bd) = a, b
        if ad == bd:
            return self._normalize(_dense.add(B, an, bn), ad)
        return self._normalize(
            _dense.add(B, _dense.mul(B, an, bd), _dense.mul(B, bn, ad)), _dense.mul(B, ad, bd)
        )

    def neg(self, a):
        return (_dense.neg(self.base, a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        B = self.base
        if not a[0] or not b[0]:
            return self.zero
        return self._normalize(_dense.mul(B, a[0], b[0]), _dense.mul(B, a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError(f"inverse of 0 in {self}")
        return self._normalize(a[1], a[0])

    def random(self, rng, degree=2):
        B = self.base
        num = _dense.strip(B, [B.random(rng) for _ in range(degree + 1)])
        den = _dense.strip(B, [B.random(rng) for _ in range(degree)] + [B.one])
        return self._normalize(num, den)

    def pth_root(self, a):
        num, den = a
        return self._normalize(self._poly_pth_root(num), self._poly_pth_root(den))

    def _poly_pth_root(self, f):
        B, p = self.base, self.characteristic
        out = []
        for i, c in enumerate(f):
            if i % p:
                if c != B.zero:
                    raise ImperfectFieldError(
                        f"{self.format((f, (B.one,)))} is not a p-th power in {self}"
                    )
            else:
                out.append(B.pth_root(c))
        return _dense.strip(B, out)

    def format(self, a):
        num, den = a
        n = _format_poly(self.base, num, self.var)
        if den == (self.base.one,):
            return n
        return f"({n})/({_format_poly(self.base, den, self.var)})"


class FieldElement:
    """A field value bundled with its descriptor, supporting operator syntax."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.value == self.field.zero

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.coerce(other)
            except (TypeError, ZeroDivisionError, ValueError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return self.field.format(self.value)


def _modulus_coeffs(modulus):
    if hasattr(modulus, "coeffs"):
        return [c if isinstance(c, int) else int(c) for c in modulus.coeffs]
    return list(modulus)


def _format_int_poly(coeffs, var):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def _format_poly(F, coeffs, var):
    """Human-readable polynomial over any field, highest degree first."""
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == F.zero:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = F.format(c)
        if mono and ("+" in cs or "-" in cs[1:]):
            cs = f"({cs})"
        if not mono:
            terms.append(cs)
        elif c == F.one:
            terms.append(mono)
        elif isinstance(F, Rationals) and c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    out = "+".join(terms)
    return out.replace("+-", "-")


# ---------------------------------------------------------------------------
# Galois-theoretic helpers on finite fields


def _require_finite(F):
    if not isinstance(F, (PrimeField, ExtensionField)):
        raise NotFiniteFieldError(f"{F} is not a finite field")


def frobenius(a, j=1):
    """Return a^(p^j) for an element of a finite field."""
    F = a.field
    _require_finite(F)
    if isinstance(F, PrimeField):
        return a
    j %= F.degree
    v = a.value
    for _ in range(j):
        v = F.frobenius_raw(v)
    return F.element(v)


def subfield_exponent(F, q):
    """Return s with q = p^s, checking GF(q) is a subfield of the finite field F."""
    _require_finite(F)
    p, s = _gfp.prime_power(q)
    if p != F.characteristic or F.degree % s:
        raise ValueError(f"GF({q}) is not a subfield of {F}")
    return s


def element_degree(a, q=None):
    """Degree of ``a`` over GF(q): the size of its orbit under x -> x^q.

    ``q`` defaults to the prime subfield.  The result divides [F : GF(q)].
    """
    F = a.field
    _require_finite(F)
    if q is None:
        q = F.characteristic
    s = subfield_exponent(F, q)
    if isinstance(F, PrimeField):
        return 1
    v = a.value
    cur = v
    for d in range(1, F.degree // s + 1):
        for _ in range(s):
            cur = F.frobenius_raw(cur)
        if cur == v:
            return d
    raise AssertionError("Frobenius orbit longer than the field degree")


def pth_root(c):
    """Return r with r^p == c; raises ImperfectFieldError when none exists."""
    F = c.field
    if F.characteristic == 0:
        raise ImperfectFieldError("p-th roots need positive characteristic")
    return F.element(F.pth_root(c.value))


def default_rng(seed=0):
    return random.Random(seed)


_PRIMROOT_CACHE = {}


def primitive_root(F):
    """First generator of the cyclic group F^x in the field's element order."""
    _require_finite(F)
    key = F._key()
    if key not in _PRIMROOT_CACHE:
        q = F.order
        ps = _gfp.prime_factors(q - 1)
        for a in F.elements():
            if a != F.zero and all(F.pow(a, (q - 1) // r) != F.one for r in ps):
                _PRIMROOT_CACHE[key] = a
                break
    return _PRIMROOT_CACHE[key]


def nonzero_by_primitive_root(F):
    """Raw values [1, g, g^2, ..., g^(q-2)] for g = primitive_root(F)."""
    g = primitive_root(F)
    out = [F.one]
    for _ in range(F.order - 2):
        out.append(F.mul(out[-1], g))
    return out
