"""Resultants (subresultant PRS), discriminants, gcds and square-free parts."""
from __future__ import annotations

from ..exactnum import dense
from .errors import BothConstant, DegreeTooLow
from .linalg import berkowitz
from .poly import Poly


def _split(p, var):
    """Coefficient list (lowest first) of p in var over the ring of the other
    generators, plus the data needed to rebuild polynomials."""
    i = p.index(var)
    rest = p.gens[:i] + p.gens[i + 1:]
    cmap = p.coefficients_in(var)
    deg = max(cmap, default=-1)
    zero = Poly.zero(rest, p.field)
    return [cmap.get(k, zero) for k in range(deg + 1)], rest


def _to_scalar_ring(coeffs, rest):
    # with no remaining generators, work directly with field elements
    if rest:
        return coeffs
    return [c.constant_coeff() for c in coeffs]


def _prem(A, B, zero):
    """Pseudo-remainder lc(B)^(deg A - deg B + 1) * A mod B (division-free)."""
    r = list(A)
    db = len(B) - 1
    lb = B[-1]
    e = len(A) - len(B) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - c * B[j]
        r.pop()
        while r and not r[-1]:
            r.pop()
        e -= 1
    if e > 0:
        f = lb ** e
        r = [x * f for x in r]
    return r


def _exquo(a, b):
    if isinstance(a, Poly):
        return a.exquo(b)
    return a / b


def subresultant_resultant(A, B, zero, one):
    """Resultant of two univariate coefficient lists over an integral domain
    (Collins' subresultant PRS)."""
    if not A or not B:
        return zero
    s = one
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -s
    g = one
    h = one
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B, zero)
        A = B
        if not R:
            return zero
        div = g * h ** delta
        B = [_exquo(c, div) for c in R]
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _exquo(g ** delta, h ** (delta - 1))
        if len(B) - 1 == 0:
            break
    da = len(A) - 1
    lb = B[-1]
    if da == 0:
        return s * h
    h = _exquo(lb ** da, h ** (da - 1)) if da > 1 else lb
    return s * h


def resultant(p, q, var):
    """Res_var(p, q) as a polynomial in the remaining generators (or a field
    element when p and q are univariate).

    Convention: Res(p, q) = lc(p)^deg(q) lc(q)^deg(p) prod (a_i - b_j) over the
    roots a_i of p and b_j of q.
    """
    p._check(q)
    A, rest = _split(p, var)
    B, _ = _split(q, var)
    if not A or not B:
        return _wrap(p.field.zero, rest, p.field)
    if len(A) == 1 and len(B) == 1:
        raise BothConstant(f"both polynomials are constant in {var}")
    A = _to_scalar_ring(A, rest)
    B = _to_scalar_ring(B, rest)
    if rest:
        zero, one = Poly.zero(rest, p.field), Poly.const(1, rest, p.field)
    else:
        zero, one = p.field.zero, p.field.one
    if len(A) == 1:
        return _wrap(A[0] ** (len(B) - 1), rest, p.field)
    if len(B) == 1:
        return _wrap(B[0] ** (len(A) - 1), rest, p.field)
    if not rest:
        return field_resultant(A, B)
    return subresultant_resultant(A, B, zero, one)


def _wrap(value, rest, field):
    if rest and not isinstance(value, Poly):
        return Poly.const(value, rest, field)
    return value


def field_resultant(A, B):
    """Resultant of dense univariate polynomials over a field (Euclid)."""
    if not A or not B:
        return 0
    one = A[-1] / A[-1]
    res = one
    while True:
        da, db = len(A) - 1, len(B) - 1
        if db == 0:
            return res * B[0] ** da
        _, R = dense.divmod_(A, B)
        if not R:
            return one - one
        dr = len(R) - 1
        if da % 2 and db % 2:
            res = -res
        res = res * B[-1] ** (da - dr)
        A, B = B, R


def sylvester_matrix(A, B, zero):
    """Sylvester matrix of coefficient lists (lowest first)."""
    m, n = len(A) - 1, len(B) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(A)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(B)):
            row[i + k] = c
        rows.append(row)
    return rows


def sylvester_resultant(p, q, var):
    """Res via the determinant of the Sylvester matrix (division-free), kept as
    an independent check on ``resultant``."""
    A, rest = _split(p, var)
    B, _ = _split(q, var)
    if rest:
        zero, one = Poly.zero(rest, p.field), Poly.const(1, rest, p.field)
    else:
        A = [c.constant_coeff() for c in A]
        B = [c.constant_coeff() for c in B]
        zero, one = p.field.zero, p.field.one
    rows = sylvester_matrix(A, B, zero)
    cp = berkowitz(rows, zero, one)
    det = cp[0] if len(rows) % 2 == 0 else -cp[0]
    return det


def discriminant(p, var=None):
    """Disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p)."""
    if var is None:
        var = p.gens[0]
    d = p.degree(var)
    if d < 2:
        raise DegreeTooLow("discriminant needs degree >= 2")
    r = resultant(p, p.derivative(var), var)
    A, rest = _split(p, var)
    lc = A[-1] if rest else A[-1].constant_coeff()
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    if isinstance(r, Poly):
        return r.exquo(lc).scale(sign) if isinstance(lc, Poly) else r.scale(sign / lc)
    return sign * r / lc


# -- univariate gcd helpers on Poly -----------------------------------------

def _uni(p):
    if p.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    return p.dense_coeffs()


def gcd_poly(p, q):
    """Monic gcd of univariate polynomials; for multivariate inputs, the gcd of
    the primitive parts with respect to the last generator is taken over the
    field of fractions of the others (see ``gcd_multivariate``)."""
    if p.nvars == 1:
        g = dense.gcd(_uni(p), _uni(q))
        return Poly.from_dense(g, p.gens[0], p.field)
    return gcd_multivariate(p, q)


def squarefree_part(p):
    if p.nvars != 1:
        raise NotImplementedError("square-free part is implemented for univariate input")
    return Poly.from_dense(dense.squarefree_part(_uni(p)), p.gens[0], p.field)


def squarefree_decomposition(p):
    return [(Poly.from_dense(f, p.gens[0], p.field), m)
            for f, m in dense.squarefree_decomposition(_uni(p))]


def gcd_multivariate(p, q):
    """Gcd of two polynomials, by recursion on the generators: content and
    primitive part with respect to the last generator, Euclid on primitive
    parts via pseudo-remainders.  Result normalised to be monic in degrevlex."""
    p._check(q)
    if not p:
        return q.monic() if q else q
    if not q:
        return p.monic()
    if p.nvars == 1:
        return gcd_poly(p, q)
    var = p.gens[-1]
    A, rest = _split(p, var)
    B, _ = _split(q, var)
    ca = _content(A)
    cb = _content(B)
    c = gcd_multivariate(ca, cb)
    A = [a.exquo(ca) for a in A]
    B = [b.exquo(cb) for b in B]
    if len(A) < len(B):
        A, B = B, A
    zero = Poly.zero(rest, p.field)
    while len(B) > 1:
        R = _prem(A, B, zero)
        if not R:
            A = B
            B = []
            break
        cr = _content(R)
        A, B = B, [r.exquo(cr) for r in R]
    if len(B) == 1:
        G = [Poly.const(1, rest, p.field)]
    else:
        cg = _content(A)
        G = [a.exquo(cg) for a in A]
    i = len(rest)
    gpoly = Poly.from_coefficients({k: v for k, v in enumerate(G) if v}, var, i, rest, p.field)
    cpoly = c.reorder(p.gens)
    return (gpoly * cpoly).monic()


def _content(coeffs):
    g = None
    for c in coeffs:
        if not c:
            continue
        g = c if g is None else gcd_multivariate(g, c)
        if g.is_constant():
            return Poly.const(1, c.gens, c.field)
    return g.monic()
