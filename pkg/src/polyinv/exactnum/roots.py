"""Certified isolation of the complex roots of rational polynomials, and
complex embeddings of number field elements.

Approximations come from mpmath's Durand-Kerner/Aberth solver; they are never
trusted.  Each approximation z_i is certified by the Weierstrass inclusion
theorem: with W_i = q(z_i) / prod_{j != i} (z_i - z_j) for the monic
square-free q of degree n, every root lies in the union of the discs
D(z_i, n |W_i|), and a connected component made of m discs holds exactly m
roots.  Disjoint discs therefore isolate one root each.  All quantities in the
test are computed with exact rationals.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath

from . import dense
from .balls import ComplexBall, horner, round_dyadic, sqrt_upper
from .errors import PrecisionExhausted

REFERENCE_BITS = 64
MAX_ATTEMPTS = 7


def _as_dense(p):
    if hasattr(p, "dense_coeffs"):
        return dense.to_fractions(p.dense_coeffs())
    return dense.to_fractions(list(p))


def isolate_complex_roots(p, precision_bits=53):
    """Pairwise disjoint balls, one around each distinct complex root of p.

    Balls are ordered lexicographically by (real, imaginary) center computed at
    a fixed reference precision, so the order does not depend on
    ``precision_bits``.  Each radius is at most 2^-precision_bits.
    """
    coeffs = _as_dense(p)
    if not coeffs:
        raise ValueError("cannot isolate the roots of the zero polynomial")
    q = tuple(dense.squarefree_part(coeffs))
    if len(q) <= 1:
        return []
    ref = _isolate(q, REFERENCE_BITS)
    if precision_bits <= REFERENCE_BITS:
        return list(ref)
    fine = _isolate(q, precision_bits)
    ordered = []
    for r in ref:
        match = [b for b in fine if r.contains_point(b.re, b.im)]
        if len(match) != 1:
            raise PrecisionExhausted("refined roots do not match reference isolation")
        ordered.append(match[0])
    return ordered


@lru_cache(maxsize=256)
def _isolate(q, bits):
    n = len(q) - 1
    if n == 1:
        root = -q[0] / q[1]
        ball = ComplexBall(round_dyadic(root, bits + 2), Fraction(0), Fraction(0))
        err = abs(ball.re - root)
        return (ComplexBall(ball.re, ball.im, round_dyadic(err, bits + 4, up=True)),)
    real = True
    target = Fraction(1, 1 << bits)
    work = bits + 2 * n + 16
    maxsteps = 100
    for _ in range(MAX_ATTEMPTS):
        approx = _approximate(q, work, maxsteps)
        if approx is not None:
            pts = _symmetrize(approx, work, n) if real else None
            if pts is None:
                pts = [(round_dyadic(_to_fraction(z.real), work), round_dyadic(_to_fraction(z.imag), work))
                       for z in approx]
            radii = _weierstrass_radii(q, pts)
            if radii is not None and all(r <= target for r in radii) and _disjoint(pts, radii):
                balls = [ComplexBall(re, im, r) for (re, im), r in zip(pts, radii)]
                balls.sort(key=lambda b: (b.re, b.im))
                return tuple(balls)
        work *= 2
        maxsteps *= 2
    raise PrecisionExhausted(f"could not certify roots of degree-{n} polynomial at {bits} bits")


def _approximate(q, work, maxsteps):
    with mpmath.workprec(work + 32):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(q)]
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=maxsteps, extraprec=work)
        except mpmath.libmp.NoConvergence:
            return None
        return [mpmath.mpc(r) for r in roots]


def _to_fraction(x):
    num, den = mpmath.libmp.to_rational(x._mpf_)
    return Fraction(int(num), int(den))


def _symmetrize(approx, work, n):
    """Force exact conjugate symmetry on approximations of a real polynomial."""
    tol = mpmath.mpf(2) ** (-(work // 2))
    reals = [z.real for z in approx if abs(z.imag) <= tol]
    upper = [z for z in approx if z.imag > tol]
    if len(reals) + 2 * len(upper) != n:
        return None
    pts = [(round_dyadic(_to_fraction(x), work), Fraction(0)) for x in reals]
    for z in upper:
        re = round_dyadic(_to_fraction(z.real), work)
        im = round_dyadic(_to_fraction(z.imag), work)
        pts.append((re, im))
        pts.append((re, -im))
    return pts


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _weierstrass_radii(q, pts):
    n = len(q) - 1
    radii = []
    for i, z in enumerate(pts):
        val = (Fraction(0), Fraction(0))
        for c in reversed(q):
            val = _cmul(val, z)
            val = (val[0] + c, val[1])
        prod = (Fraction(1), Fraction(0))
        for j, w in enumerate(pts):
            if j != i:
                prod = _cmul(prod, (z[0] - w[0], z[1] - w[1]))
        den = prod[0] * prod[0] + prod[1] * prod[1]
        if not den:
            return None
        w2 = (val[0] * val[0] + val[1] * val[1]) / den
        radii.append(round_dyadic(n * sqrt_upper(w2), 4 * 64 + 8 * n, up=True) if w2 else Fraction(0))
    return radii


def _disjoint(pts, radii):
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dr = pts[i][0] - pts[j][0]
            di = pts[i][1] - pts[j][1]
            s = radii[i] + radii[j]
            if dr * dr + di * di <= s * s:
                return False
    return True


def embed(a, root_index, precision_bits=53):
    """Ball containing the image of ``a`` under the embedding that sends the
    field generator to the ``root_index``-th isolated root of its minimal
    polynomial.  Rationals (or elements of Q) embed to themselves.

    The returned radius is at most 2^-(precision_bits/2).
    """
    if precision_bits < 16:
        raise ValueError("precision_bits must be at least 16")
    target = Fraction(1, 1 << (precision_bits // 2))
    field = getattr(a, "field", None)
    if field is None or field.degree == 1:
        value = Fraction(a) if field is None else a.coords[0]
        re = round_dyadic(value, precision_bits + 2)
        return ComplexBall(re, Fraction(0), round_dyadic(abs(re - value), precision_bits + 8, up=True))
    if not 0 <= root_index < field.degree:
        raise IndexError(f"root index {root_index} out of range for degree {field.degree}")
    work = precision_bits + 16
    for _ in range(MAX_ATTEMPTS):
        z = isolate_complex_roots(list(field.minpoly), work)[root_index]
        val = horner(list(a.coords), z, bits=work + 8)
        if val.rad <= target:
            return val
        work *= 2
    raise PrecisionExhausted("embedding did not reach the requested precision")


def embed_generator_roots(field, precision_bits=53):
    return isolate_complex_roots(list(field.minpoly), precision_bits)
