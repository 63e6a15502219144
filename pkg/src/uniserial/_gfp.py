"""Dense polynomial kernels over GF(p) on plain integer lists.

A polynomial a_0 + a_1 X + ... + a_n X^n is the list [a_0, ..., a_n] of
integers in range(p), trimmed so the last entry is nonzero; [] is zero.
These routines back the extension-field element arithmetic and the fast
irreducibility test over prime fields, so they avoid per-coefficient
object overhead.  Large products switch to numpy convolution whenever the
intermediate sums provably fit in int64.
"""

import numpy as np

_NUMPY_MIN_LEN = 48
_INT64_BOUND = 1 << 62


def trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def fits_int64(p, n):
    """True if an n-term dot product of residues mod p fits in int64."""
    return n * (p - 1) ** 2 < _INT64_BOUND


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] = (r[i] + c) % p
    return trim(r)


def sub(a, b, p):
    n = max(len(a), len(b))
    r = [0] * n
    for i, c in enumerate(a):
        r[i] = c
    for i, c in enumerate(b):
        r[i] = (r[i] - c) % p
    return trim(r)


def neg(a, p):
    return [(-c) % p for c in a]


def scale(a, c, p):
    c %= p
    if not c:
        return []
    return trim([(c * x) % p for x in a])


def mul(a, b, p):
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if min(la, lb) >= _NUMPY_MIN_LEN and fits_int64(p, min(la, lb)):
        r = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % p
        return trim(r.tolist())
    r = [0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return trim([c % p for c in r])


def divmod_(a, b, p):
    """Quotient and remainder of a by nonzero b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = (c * inv_lead) % p
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return trim(q), trim([x % p for x in r[:db]])


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return []
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a, b, p):
    a, b = list(a), list(b)
    if min(len(a), len(b)) >= _NP_GCD_MIN and p < 1 << 20:
        return _gcd_np(a, b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


_NP_GCD_MIN = 64


def _np_trim(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _gcd_np(a, b, p):
    """Euclid on int64 arrays; each division step is one vectorized update."""
    a = _np_trim(np.array(a, dtype=np.int64) % p)
    b = _np_trim(np.array(b, dtype=np.int64) % p)
    while b.size:
        db = b.size - 1
        inv = pow(int(b[-1]), -1, p)
        a = a.copy()
        while a.size > db:
            c = (int(a[-1]) * inv) % p
            shift = a.size - 1 - db
            a[shift:] = (a[shift:] - c * b) % p
            a = _np_trim(a)
        a, b = b, a
    return monic([int(c) for c in a], p)


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def deriv(a, p):
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def evaluate(a, x, p):
    r = 0
    for c in reversed(a):
        r = (r * x + c) % p
    return r


class Modulus:
    """Reduction context for GF(p)[X]/(m) with m monic of degree k >= 1.

    Products of two reduced residues are reduced through a precomputed
    table of X^j mod m (j = k .. 2k-2), which turns reduction into one
    matrix-vector product for large k.
    """

    def __init__(self, m, p):
        self.p = p
        self.m = list(m)
        self.k = len(m) - 1
        k = self.k
        rows = []
        # X^k mod m
        cur = [(-c) % p for c in m[:k]]
        for _ in range(max(k - 1, 0)):
            rows.append(cur)
            # multiply by X
            top = cur[-1]
            nxt = [0] + cur[:-1]
            if top:
                nxt = [(nxt[i] - top * m[i]) % p for i in range(k)]
            cur = nxt
        self._table = rows
        self.use_numpy = k >= _NUMPY_MIN_LEN and fits_int64(p, 2 * k)
        if self.use_numpy:
            self._np_table = np.asarray(rows, dtype=np.int64).reshape(len(rows), k)

    def reduce(self, a):
        k, p = self.k, self.p
        if len(a) <= k:
            return list(a)
        if len(a) > 2 * k - 1:
            return rem(a, self.m, p)
        if self.use_numpy:
            low = np.zeros(k, dtype=np.int64)
            low[:] = a[:k]
            high = np.asarray(a[k:], dtype=np.int64)
            r = (low + high @ self._np_table[: len(high)]) % p
            return trim(r.tolist())
        r = list(a[:k])
        for j, c in enumerate(a[k:]):
            if c:
                row = self._table[j]
                for i in range(k):
                    r[i] += c * row[i]
        return trim([x % p for x in r])

    def mul(self, a, b):
        return self.reduce(mul(a, b, self.p))

    def pow(self, a, e):
        result = [1]
        base = list(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result


def is_irreducible(f, p):
    """Irreducibility of f in GF(p)[X], deg f >= 1.

    Distinct-degree test: f is irreducible iff gcd(f, X^(p^i) - X) = 1 for
    all i <= deg f / 2.  The factors X^(p^i) - X are multiplied together
    mod f and checked at doubling checkpoints, so a random reducible f
    (which almost always has a small factor) is rejected early.
    """
    n = len(f) - 1
    if n < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if n == 1:
        return True
    f = monic(f, p)
    if not f[0]:
        return False
    if n > 16 and p <= 7 and _has_root(f, p):
        return False
    ctx = Modulus(f, p)
    cur = [0, 1]
    acc = [1]
    checkpoint = 1
    half = n // 2
    for i in range(1, half + 1):
        cur = ctx.pow(cur, p)
        acc = ctx.mul(acc, sub(cur, [0, 1], p))
        if not acc:
            return False
        if i == checkpoint or i == half:
            if len(gcd(acc, f, p)) != 1:
                return False
            acc = [1]
            checkpoint *= 2
    return True


def _has_root(f, p):
    """Cheap prefilter: does f vanish at some element of GF(p)?"""
    c = np.array(f, dtype=np.int64)
    for a in range(1, p):
        powers = np.ones(len(f), dtype=np.int64)
        for i in range(1, len(f)):
            powers[i] = powers[i - 1] * a % p
        if int(c @ powers % p) == 0:
            return True
    return False


def prime_factors(n):
    """Distinct prime factors of a positive integer by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n):
    return n >= 2 and prime_factors(n) == [n]


def prime_power(q):
    """Return (p, e) with q = p^e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, e = ps[0], 0
    while q > 1:
        q //= p
        e += 1
    return p, e
