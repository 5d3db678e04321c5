"""Roots lying in a number field K of a univariate polynomial over K.

Candidates come from numerics: a root r of p in K is determined by its images
sigma_j(r) under the d embeddings of K, and those images are roots of the
conjugate polynomials p^sigma_j.  Each choice of one root per embedding (with
complex-conjugate embeddings paired) gives coordinates by a Vandermonde solve;
the coordinates are rationalized and the candidate is accepted only after the
exact check p(r) = 0.  Candidates whose coordinates need denominators beyond
``max_denominator`` are not found.
"""
from __future__ import annotations

import itertools
from math import gcd
from fractions import Fraction

import mpmath

from . import dense
from .factor import factor_rational
from .fields import QQ, NFElem, RationalFunctionField
from .roots import embed, isolate_complex_roots

WORK_BITS = 256


def _rational_coordinate_polys(p, K):
    d = K.degree
    cols = [[] for _ in range(d)]
    for c in p:
        coords = c.coords if isinstance(c, NFElem) else (Fraction(c),) + (Fraction(0),) * (d - 1)
        for i in range(d):
            cols[i].append(coords[i])
    return [dense.strip(col) for col in cols]


def _rational_roots(p, K):
    g = []
    for col in _rational_coordinate_polys(p, K):
        g = dense.gcd(g, col) if g else col
    if len(g) <= 1:
        return []
    return [-f[0] for f, _ in factor_rational(g)[1] if len(f) == 2]


def _to_mpc(ball):
    return mpmath.mpc(mpmath.mpf(ball.re.numerator) / ball.re.denominator,
                      mpmath.mpf(ball.im.numerator) / ball.im.denominator)


def _rationalize(x, max_denominator):
    num, den = mpmath.libmp.to_rational(x._mpf_)
    return Fraction(int(num), int(den)).limit_denominator(max_denominator)


def roots_in_field(p, K, max_denominator=10 ** 18):
    """Distinct roots of p (dense over K) that lie in K, each with its
    multiplicity, in a deterministic order."""
    p = dense.strip([K(c) for c in p])
    if len(p) < 2:
        return []
    if isinstance(K, RationalFunctionField):
        found = _ratfunc_roots(dense.squarefree_part(p), K)
    elif K == QQ:
        found = [-f[0] for f, _ in factor_rational(p)[1] if len(f) == 2]
    else:
        q = dense.squarefree_part(p)
        found = []
        for r in _rational_roots(q, K):
            found.append(K(r))
            q = dense.exquo(q, [K(-r), K.one])
        if len(q) > 2:
            found.extend(_irrational_roots(q, K, max_denominator))
        elif len(q) == 2:
            found.append(-q[0] / q[1])
    out = []
    for r in found:
        m, rest = 0, p
        lin = [-r, K.one]
        while True:
            quo, rem = dense.divmod_(rest, lin)
            if rem:
                break
            rest, m = quo, m + 1
        if m:
            out.append((r, m))
    out.sort(key=_root_key)
    return out


def _irrational_roots(q, K, max_denominator):
    d = K.degree
    alphas = isolate_complex_roots(list(K.minpoly), WORK_BITS)
    conj = {}
    for j, a in enumerate(alphas):
        for k, b in enumerate(alphas):
            if a.re == b.re and a.im == -b.im:
                conj[j] = k
    with mpmath.workprec(WORK_BITS):
        A = [_to_mpc(a) for a in alphas]
        V = mpmath.matrix([[A[j] ** i for i in range(d)] for j in range(d)])
        W = V ** -1
        per = []
        for j in range(d):
            coeffs = [_to_mpc(embed(c, j, WORK_BITS)) for c in reversed(q)]
            per.append(mpmath.polyroots(coeffs, maxsteps=200, extraprec=WORK_BITS))
        free = [j for j in range(d) if conj.get(j, j) >= j]
        found = []
        tol = mpmath.mpf(2) ** (-WORK_BITS // 3)
        for choice in itertools.product(*(range(len(per[j])) for j in free)):
            z = [None] * d
            for j, c in zip(free, choice):
                z[j] = per[j][c]
                if conj.get(j, j) != j:
                    z[conj[j]] = mpmath.conj(per[j][c])
            coords = []
            ok = True
            for i in range(d):
                v = mpmath.fsum(W[i, j] * z[j] for j in range(d))
                if abs(v.imag) > tol * (1 + abs(v.real)):
                    ok = False
                    break
                coords.append(_rationalize(v.real, max_denominator))
            if not ok:
                continue
            r = K.from_coords(coords)
            if r in found:
                continue
            if not dense.evaluate(q, r):
                found.append(r)
    return found


def _root_key(rm):
    r = rm[0]
    if isinstance(r, NFElem):
        return (tuple(r.coords),)
    if hasattr(r, "num"):
        return (len(r.num) + len(r.den), str(r))
    return (r,)


KRONECKER_POINTS = (2 ** 61 - 1, 2 ** 67 + 3, 2 ** 89 - 1)


def _ratfunc_roots(p, F):
    """Roots in Q(s) by Kronecker substitution.

    After clearing denominators p becomes P(s, x) in Z[s][x] with leading
    coefficient L(s).  A root A/B has B | L, so L(N) * root is the integer
    (L/B)(N) A(N); its balanced base-N digits give (L/B) A when the
    coefficients are below N/2 in size.  Every candidate is verified exactly.
    """
    if F.base != QQ:
        raise NotImplementedError("roots over K(s) are supported for K = Q only")
    den = [Fraction(1)]
    for c in p:
        if len(c.den) > 1:
            den = dense.exquo(dense.mul(den, c.den), dense.gcd(den, c.den))
    P = [dense.exquo(dense.mul(c.num, den), c.den) for c in p]
    scale = 1
    for c in P:
        for v in c:
            scale = scale * v.denominator // gcd(scale, v.denominator)
    L = [v * scale for v in P[-1]]
    found = []
    for N in KRONECKER_POINTS:
        spec = [dense.evaluate(c, Fraction(N)) for c in P]
        lead = dense.evaluate(L, Fraction(N))
        if not spec[-1]:
            continue
        for f, _ in factor_rational(dense.strip(spec))[1]:
            if len(f) != 2:
                continue
            w = -f[0] * lead
            if w.denominator != 1:
                continue
            W = _balanced_digits(w.numerator, N)
            cand = F.from_dense([Fraction(a) for a in W], list(L))
            if cand not in found and not dense.evaluate(p, cand):
                found.append(cand)
        if len(found) == len(p) - 1:
            break
    return found


def _balanced_digits(n, N):
    digits = []
    while n:
        d = n % N
        if d > N // 2:
            d -= N
        digits.append(d)
        n = (n - d) // N
    return digits or [0]
