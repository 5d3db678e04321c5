"""Exact polynomial arithmetic, elimination and linear algebra."""
from .affine import AffineAuto, apply_affine
from .errors import (BothConstant, DegreeTooLow, NotZeroDimensional, SingularMap,
                     UnknownVariable, VariableMismatch)
from .groebner import GroebnerBasis, buchberger
from .linalg import SquareMatrix, berkowitz, charpoly, minpoly
from .poly import Poly
from .resultant import (discriminant, gcd_poly, resultant, squarefree_part,
                        sylvester_resultant)

__all__ = [
    "AffineAuto", "apply_affine",
    "BothConstant", "DegreeTooLow", "NotZeroDimensional", "SingularMap", "UnknownVariable",
    "VariableMismatch", "GroebnerBasis", "buchberger", "SquareMatrix", "berkowitz",
    "charpoly", "minpoly", "Poly", "discriminant", "gcd_poly", "resultant",
    "squarefree_part", "sylvester_resultant",
]
