"""Dense univariate polynomial kernels over an arbitrary field.

Polynomials are tuples of raw field values, little-endian, trimmed so the
leading entry is nonzero; the zero polynomial is ().  Every routine takes
the field ``F`` first and only touches values through F's raw operations,
which lets the rational-function field reuse them for numerators and
denominators without importing the public Poly class.
"""


def strip(F, a):
    a = list(a)
    z = F.zero
    while a and a[-1] == z:
        a.pop()
    return tuple(a)


def add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] = F.add(r[i], c)
    return strip(F, r)


def sub(F, a, b):
    n = max(len(a), len(b))
    z = F.zero
    r = [z] * n
    r[: len(a)] = a
    for i, c in enumerate(b):
        r[i] = F.sub(r[i], c)
    return strip(F, r)


def neg(F, a):
    return tuple(F.neg(c) for c in a)


def scale(F, a, c):
    if c == F.zero:
        return ()
    return strip(F, [F.mul(c, x) for x in a])


def mul(F, a, b):
    if not a or not b:
        return ()
    z = F.zero
    r = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == z:
            continue
        for j, y in enumerate(b):
            r[i + j] = F.add(r[i + j], F.mul(x, y))
    return strip(F, r)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), tuple(a)
    r = list(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    q = [F.zero] * (len(a) - db)
    z = F.zero
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c == z:
            continue
        c = F.mul(c, inv_lead)
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]))
    return strip(F, q), strip(F, r[:db])


def rem(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if not a:
        return ()
    lead = a[-1]
    if lead == F.one:
        return tuple(a)
    return scale(F, a, F.inv(lead))


def gcd(F, a, b):
    while b:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def xgcd(F, a, b):
    """Return (g, s, t) with s*a + t*b = g and g monic (or all zero)."""
    r0, r1 = tuple(a), tuple(b)
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return (), (), ()
    inv = F.inv(r0[-1])
    return scale(F, r0, inv), scale(F, s0, inv), scale(F, t0, inv)


def deriv(F, a):
    return strip(F, [F.mul(F.from_int(i), c) for i, c in enumerate(a)][1:])


def evaluate(F, a, x):
    r = F.zero
    for c in reversed(a):
        r = F.add(F.mul(r, x), c)
    return r


def compose_mod(F, a, b, m):
    """a(b) mod m by Horner."""
    r = ()
    for c in reversed(a):
        r = rem(F, add(F, mul(F, r, b), (c,) if c != F.zero else ()), m)
    return r


def powmod(F, a, e, m):
    result = (F.one,)
    base = rem(F, a, m)
    while e:
        if e & 1:
            result = rem(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = rem(F, mul(F, base, base), m)
    return rem(F, result, m) if m else result


def power(F, a, e):
    result = (F.one,)
    base = tuple(a)
    while e:
        if e & 1:
            result = mul(F, result, base)
        e >>= 1
        if e:
            base = mul(F, base, base)
    return result
