"""Factorization of rational univariate polynomials.

Square-free decomposition first; each square-free part is then split by
recombining its certified complex roots.  A subset S of roots gives a factor
iff lc * prod_{r in S} (x - r) has integer coefficients (Gauss's lemma for the
primitive integer form), which is tested with ball arithmetic and then
confirmed by exact division.  Subsets are pruned with a certified trace test
and closure under complex conjugation.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import dense
from .balls import ComplexBall
from .roots import isolate_complex_roots


class _NeedPrecision(Exception):
    pass


def factor_rational(p):
    """Return (unit, [(monic irreducible factor, multiplicity), ...]).

    ``p`` is a dense list of rationals (lowest degree first).  Factors are
    sorted by degree and then coefficients, giving a canonical order.
    """
    p = dense.to_fractions(p)
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    unit = p[-1]
    out = []
    for part, mult in dense.squarefree_decomposition(p):
        for f in factor_squarefree(part):
            out.append((f, mult))
    out.sort(key=lambda fm: (len(fm[0]), list(reversed(fm[0])), fm[1]))
    return unit, out


def irreducible_factors(p):
    """Distinct monic irreducible factors of p, canonical order."""
    return [f for f, _ in factor_rational(p)[1]]


def is_irreducible(p):
    p = dense.to_fractions(p)
    if len(p) <= 1:
        return False
    _, facs = factor_rational(p)
    return len(facs) == 1 and facs[0][1] == 1


def factor_squarefree(p):
    """Monic irreducible factors of a square-free rational polynomial."""
    ints = tuple(dense.primitive_integer(dense.to_fractions(p)))
    return [dense.monic(dense.to_fractions(f)) for f in _factor_int(ints)]


@lru_cache(maxsize=512)
def _factor_int(G):
    n = len(G) - 1
    if n <= 1:
        return (G,) if n == 1 else ()
    if G[0] == 0:
        rest = _factor_int(G[1:])
        return ((0, 1),) + rest
    bits = 64
    for _ in range(8):
        roots = isolate_complex_roots(list(G), bits)
        try:
            return tuple(_recombine(list(G), roots))
        except _NeedPrecision:
            bits *= 2
    raise ArithmeticError("factorization did not converge")


def _conj_index(roots):
    idx = {}
    for i, r in enumerate(roots):
        for j, s in enumerate(roots):
            if s.re == r.re and s.im == -r.im:
                idx[i] = j
                break
    return idx


def _recombine(G, roots):
    factors = []
    remaining = list(range(len(roots)))
    conj = _conj_index(roots)
    P = list(G)
    k = 1
    while 2 * k <= len(remaining):
        found = None
        for subset in combinations(remaining, k):
            sset = set(subset)
            if conj and any(conj.get(i, i) not in sset for i in subset):
                continue
            cand = _candidate(P, roots, subset)
            if cand is not None:
                found = (subset, cand)
                break
        if found is None:
            k += 1
            continue
        subset, cand = found
        factors.append(tuple(cand))
        P = _int_exquo(P, cand)
        remaining = [i for i in remaining if i not in subset]
    if len(P) > 1:
        factors.append(tuple(_primitive(P)))
    return factors


def _candidate(P, roots, subset):
    L = P[-1]
    # certified trace test
    re = sum((roots[i].re for i in subset), Fraction(0)) * L
    im = sum((roots[i].im for i in subset), Fraction(0)) * L
    rad = sum((roots[i].rad for i in subset), Fraction(0)) * abs(L)
    if rad >= Fraction(1, 2):
        raise _NeedPrecision
    if not ComplexBall(re, im, rad).integers_inside_real():
        return None
    poly = [ComplexBall.exact(L)]
    for i in subset:
        r = roots[i]
        nxt = [ComplexBall.exact(0)] * (len(poly) + 1)
        for j, c in enumerate(poly):
            nxt[j + 1] = nxt[j + 1] + c
            nxt[j] = nxt[j] - c * r
        poly = nxt
    ints = []
    for c in poly:
        if c.rad >= Fraction(1, 2):
            raise _NeedPrecision
        inside = c.integers_inside_real()
        if not inside:
            return None
        ints.append(inside[0])
    cand = _primitive(ints)
    if _int_divides(cand, P):
        return cand
    return None


def _primitive(ints):
    from math import gcd
    g = 0
    for c in ints:
        g = gcd(g, c)
    out = [c // g for c in ints]
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def _int_divides(d, p):
    _, r = dense.divmod_(dense.to_fractions(p), dense.to_fractions(d))
    return not r


def _int_exquo(p, d):
    q = dense.exquo(dense.to_fractions(p), dense.to_fractions(d))
    den = 1
    for c in q:
        den = den * c.denominator // __import__("math").gcd(den, c.denominator)
    return [int(c * den) for c in q]
