"""Invertible affine self-maps of the plane and their action on polynomials."""
from __future__ import annotations

from dataclasses import dataclass

from ..exactnum.fields import QQ
from .errors import SingularMap
from .poly import Poly


@dataclass(frozen=True)
class AffineAuto:
    """(x, y) -> (a*x + b*y + e, c*x + d*y + f)."""
    a: object
    b: object
    c: object
    d: object
    e: object = 0
    f: object = 0
    field: object = QQ

    def __post_init__(self):
        F = self.field
        for name in "abcdef":
            object.__setattr__(self, name, F(getattr(self, name)))
        if not self.det():
            raise SingularMap("affine map has zero determinant")

    @classmethod
    def identity(cls, field=QQ):
        return cls(1, 0, 0, 1, 0, 0, field)

    @classmethod
    def shear(cls, theta, field=QQ):
        """(x, y) -> (x + theta*y, y)."""
        return cls(1, theta, 0, 1, 0, 0, field)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __call__(self, x, y):
        return (self.a * x + self.b * y + self.e, self.c * x + self.d * y + self.f)

    def compose(self, other):
        """self o other: p -> self(other(p))."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        e = self.a * other.e + self.b * other.f + self.e
        f = self.c * other.e + self.d * other.f + self.f
        return AffineAuto(a, b, c, d, e, f, self.field)

    def inverse(self):
        D = self.det()
        a, b, c, d = self.d / D, -self.b / D, -self.c / D, self.a / D
        e = -(a * self.e + b * self.f)
        f = -(c * self.e + d * self.f)
        return AffineAuto(a, b, c, d, e, f, self.field)

    def map_coeffs(self, fn, field):
        return AffineAuto(*(fn(getattr(self, n)) for n in "abcdef"), field=field)

    def is_linear(self):
        return not self.e and not self.f

    def images(self, gens=("x", "y")):
        """The component polynomials as text, e.g. ('-x + y', 'y')."""
        return tuple(str(p) for p in self.component_polys(gens))

    def component_polys(self, gens=("x", "y")):
        F = self.field
        X = Poly.gen(gens[0], gens, F)
        Y = Poly.gen(gens[1], gens, F)
        return (X * self.a + Y * self.b + self.e, X * self.c + Y * self.d + self.f)

    def matrix(self):
        return ((self.a, self.b), (self.c, self.d)), (self.e, self.f)

    def __str__(self):
        u, v = self.images()
        return f"(x, y) -> ({u}, {v})"


def apply_affine(f, phi, xvar=None, yvar=None):
    """f o phi, expanded exactly.  Other generators (e.g. a parameter) are
    left untouched."""
    xvar = xvar or f.gens[0]
    yvar = yvar or f.gens[1]
    if phi.field != f.field:
        phi = phi.map_coeffs(f.field, f.field)
    F = f.field
    X = Poly.gen(xvar, f.gens, F)
    Y = Poly.gen(yvar, f.gens, F)
    return f.compose({xvar: X * phi.a + Y * phi.b + phi.e,
                      yvar: X * phi.c + Y * phi.d + phi.f})
