"""Complex balls with dyadic centers and radii.

Every operation returns a ball guaranteed to contain the exact result of the
operation applied to any points of the operand balls.  No floating point is
involved: centers and radii are ``Fraction`` values with power-of-two
denominators.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

ZERO = Fraction(0)


def round_dyadic(q, bits, up=None):
    """Round q to a multiple of 2^-bits.  ``up=True`` rounds toward +inf,
    ``up=False`` toward -inf, ``None`` to nearest."""
    q = Fraction(q)
    scaled = q * (1 << bits)
    n, d = scaled.numerator, scaled.denominator
    if d == 1:
        return q
    if up is True:
        k = -((-n) // d)
    elif up is False:
        k = n // d
    else:
        k = (2 * n + d) // (2 * d)
    return Fraction(k, 1 << bits)


def sqrt_upper(q, bits=64):
    """A dyadic upper bound for sqrt(q), q >= 0, within about 2^-bits relative."""
    q = Fraction(q)
    if q <= 0:
        return ZERO
    # choose a scale so the integer square root has ~bits significant bits
    shift = max(0, bits - (q.numerator.bit_length() - q.denominator.bit_length()) // 2 + 2)
    scaled = q * (1 << (2 * shift))
    n = -((-scaled.numerator) // scaled.denominator)  # ceil
    r = isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, 1 << shift)


def sqrt_lower(q, bits=64):
    """A dyadic lower bound for sqrt(q), q >= 0."""
    q = Fraction(q)
    if q <= 0:
        return ZERO
    shift = max(0, bits - (q.numerator.bit_length() - q.denominator.bit_length()) // 2 + 2)
    scaled = q * (1 << (2 * shift))
    return Fraction(isqrt(scaled.numerator // scaled.denominator), 1 << shift)


@dataclass(frozen=True)
class ComplexBall:
    re: Fraction
    im: Fraction
    rad: Fraction = ZERO

    @classmethod
    def exact(cls, re, im=0):
        return cls(Fraction(re), Fraction(im), ZERO)

    @property
    def center(self):
        return (self.re, self.im)

    def abs_upper(self):
        return sqrt_upper(self.re * self.re + self.im * self.im) + self.rad

    def abs_lower(self):
        return max(sqrt_lower(self.re * self.re + self.im * self.im) - self.rad, ZERO)

    def __add__(self, other):
        other = _as_ball(other)
        return ComplexBall(self.re + other.re, self.im + other.im, self.rad + other.rad)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBall(-self.re, -self.im, self.rad)

    def __sub__(self, other):
        return self + (-_as_ball(other))

    def __rsub__(self, other):
        return _as_ball(other) - self

    def __mul__(self, other):
        other = _as_ball(other)
        re = self.re * other.re - self.im * other.im
        im = self.re * other.im + self.im * other.re
        rad = ZERO
        if self.rad or other.rad:
            rad = (self.abs_center_upper() * other.rad + other.abs_center_upper() * self.rad
                   + self.rad * other.rad)
        return ComplexBall(re, im, rad)

    __rmul__ = __mul__

    def abs_center_upper(self):
        return abs(self.re) + abs(self.im)

    def conjugate(self):
        return ComplexBall(self.re, -self.im, self.rad)

    def rounded(self, bits):
        """Round the center to 2^-bits, absorbing the error into the radius."""
        re = round_dyadic(self.re, bits)
        im = round_dyadic(self.im, bits)
        err = abs(re - self.re) + abs(im - self.im)
        return ComplexBall(re, im, round_dyadic(self.rad + err, bits, up=True))

    def contains_point(self, re, im=0):
        dr = Fraction(re) - self.re
        di = Fraction(im) - self.im
        return dr * dr + di * di <= self.rad * self.rad

    def contains(self, other):
        other = _as_ball(other)
        if other.rad > self.rad:
            return False
        dr = other.re - self.re
        di = other.im - self.im
        gap = self.rad - other.rad
        return dr * dr + di * di <= gap * gap

    def overlaps(self, other):
        other = _as_ball(other)
        dr = other.re - self.re
        di = other.im - self.im
        s = self.rad + other.rad
        return dr * dr + di * di <= s * s

    def contains_zero(self):
        return self.contains_point(0, 0)

    def integers_inside_real(self):
        """Integers n with n + 0i inside the ball."""
        if abs(self.im) > self.rad:
            return []
        lo = self.re - self.rad
        hi = self.re + self.rad
        out = []
        n = -((-lo.numerator) // lo.denominator)
        while n <= hi:
            if self.contains_point(n, 0):
                out.append(n)
            n += 1
        return out

    def intersects_unit_circle(self):
        lo = self.abs_lower()
        hi = self.abs_upper()
        return lo <= 1 <= hi

    def as_complex(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexBall({float(self.re):.12g}{float(self.im):+.12g}i, rad={float(self.rad):.3g})"


def _as_ball(x):
    if isinstance(x, ComplexBall):
        return x
    return ComplexBall(Fraction(x), ZERO, ZERO)


def horner(coeffs, z, bits=None):
    """Evaluate sum coeffs[k] z^k for rational coeffs over a ball z."""
    acc = ComplexBall.exact(0)
    for c in reversed(coeffs):
        acc = acc * z + ComplexBall.exact(c)
        if bits is not None:
            acc = acc.rounded(bits)
    return acc
