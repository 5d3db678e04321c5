"""Dense univariate polynomial helpers.

Polynomials are plain lists of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Coefficients may be any
exact field element supporting ``+ - * /`` and truth testing: ``Fraction``,
number field elements, rational functions.
"""
from __future__ import annotations

from fractions import Fraction


def strip(p):
    while p and not p[-1]:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] = r[i] + c
    return strip(r)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if not c:
        return []
    return strip([a * c for a in p])


def mul(p, q):
    if not p or not q:
        return []
    r = [None] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            v = a * b
            k = i + j
            r[k] = v if r[k] is None else r[k] + v
    zero = p[0] - p[0]
    return strip([zero if c is None else c for c in r])


def divmod_(p, q):
    """Euclidean division over a field.  Raises ZeroDivisionError on q = 0."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    if len(r) <= dq:
        return [], r
    inv = 1 / q[-1]
    quot = [None] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k] * inv
        quot[k - dq] = c
        if c:
            for j in range(dq):
                r[k - dq + j] = r[k - dq + j] - c * q[j]
        r[k] = c - c  # exact zero of the right type
    zero = q[-1] - q[-1]
    return strip([zero if c is None else c for c in quot]), strip(r[:dq])


def rem(p, q):
    return divmod_(p, q)[1]


def exquo(p, q):
    quot, r = divmod_(p, q)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return quot


def monic(p):
    if not p:
        return []
    lc = p[-1]
    if lc == 1:
        return list(p)
    inv = 1 / lc
    return [c * inv for c in p]


def gcd(p, q):
    """Monic gcd; gcd(0, 0) = 0."""
    if p and q and _all_rational(p) and _all_rational(q):
        return gcd_rational(p, q)
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def _all_rational(p):
    return all(type(c) is Fraction or type(c) is int for c in p)


def gcd_rational(p, q):
    """Monic gcd of rational polynomials through integer arithmetic."""
    if not p or not q:
        return monic(dense_fractions(p or q))
    if len(p) == 1 or len(q) == 1:
        return [Fraction(1)]
    g = int_gcd(primitive_integer(p), primitive_integer(q))
    return monic([Fraction(c) for c in g])


def dense_fractions(p):
    return [Fraction(c) for c in p]


def _int_content(p):
    from math import gcd as igcd
    g = 0
    for c in p:
        g = igcd(g, c)
    return g


def _int_exquo(p, q):
    """p / q for integer polynomials, or None if the quotient is not an
    integer polynomial."""
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    if len(r) <= dq:
        return None if any(r) else []
    quot = [0] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c, m = divmod(r[k], lc)
        if m:
            return None
        quot[k - dq] = c
        if c:
            for j in range(dq):
                r[k - dq + j] -= c * q[j]
    if any(r[:dq]):
        return None
    return quot


def _int_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def int_gcd(a, b):
    """Primitive gcd (positive leading coefficient) of primitive integer
    polynomials: heuristic evaluation-interpolation, verified by exact
    division, with a primitive remainder sequence as fallback."""
    bound = 2 * min(max(abs(c) for c in a), max(abs(c) for c in b)) + 29
    x = bound
    for _ in range(6):
        h = _igcd_big(_int_eval(a, x), _int_eval(b, x))
        cand = []
        while h:
            d = h % x
            if d > x // 2:
                d -= x
            cand.append(d)
            h = (h - d) // x
        cand = strip(cand)
        if cand:
            c = _int_content(cand)
            cand = [v // c for v in cand]
            if cand[-1] < 0:
                cand = [-v for v in cand]
            if _int_exquo(a, cand) is not None and _int_exquo(b, cand) is not None:
                return cand
        x = x * 73794 // 27011 + 1
    return _int_prs_gcd(a, b)


def _igcd_big(u, v):
    from math import gcd as igcd
    return igcd(u, v)


def _int_prs_gcd(a, b):
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b, made primitive
        r = list(a)
        db = len(b) - 1
        lc = b[-1]
        while len(r) - 1 >= db and r:
            c = r[-1]
            shift = len(r) - 1 - db
            r = [v * lc for v in r]
            for j in range(db + 1):
                r[shift + j] -= c * b[j]
            r = strip(r)
        if r:
            g = _int_content(r)
            r = [v // g for v in r]
        a, b = b, r
    if a[-1] < 0:
        a = [-v for v in a]
    return a


def gcdex(p, q):
    """Return (s, t, g) with s*p + t*q = g = monic gcd(p, q)."""
    if not p and not q:
        return [], [], []
    one = (p or q)[-1] / (p or q)[-1]
    r0, r1 = list(p), list(q)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        quot, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quot, s1))
        t0, t1 = t1, sub(t0, mul(quot, t1))
    inv = 1 / r0[-1]
    return scale(s0, inv), scale(t0, inv), scale(r0, inv)


def derivative(p):
    return strip([p[i] * i for i in range(1, len(p))])


def evaluate(p, x):
    acc = None
    for c in reversed(p):
        acc = c if acc is None else acc * x + c
    return acc if acc is not None else 0


def squarefree_part(p):
    """Monic square-free part p / gcd(p, p')."""
    if len(p) <= 1:
        return monic(p)
    g = gcd(p, derivative(p))
    return monic(exquo(p, g))


def squarefree_decomposition(p):
    """Yun's algorithm: list of (factor, multiplicity), factors monic, coprime."""
    out = []
    if len(p) <= 1:
        return out
    dp = derivative(p)
    a = gcd(p, dp)
    b = exquo(p, a)
    c = exquo(dp, a)
    d = sub(c, derivative(b))
    i = 1
    while len(b) > 1:
        a = gcd(b, d)
        b = exquo(b, a)
        c = exquo(d, a)
        d = sub(c, derivative(b))
        if len(a) > 1:
            out.append((monic(a), i))
        i += 1
    return out


def compose_linear(p, a, b):
    """Return p(a*x + b)."""
    out = []
    lin = [b, a] if a else [b]
    for c in reversed(p):
        out = add(mul(out, lin), [c]) if out else ([c] if c else [])
    return strip(out)


def reverse(p):
    """x^deg p * p(1/x)."""
    return strip(list(reversed(p)))


def to_fractions(coeffs):
    return strip([Fraction(c) for c in coeffs])


def primitive_integer(p):
    """Scale a rational polynomial to a primitive integer polynomial with
    positive leading coefficient; returns a list of ints."""
    if not p:
        return []
    from math import gcd as igcd, lcm
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = igcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints
