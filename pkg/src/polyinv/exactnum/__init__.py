"""Exact scalars: rationals, number fields, rational function fields, complex
balls and certified root isolation."""
from .balls import ComplexBall
from .errors import (FieldMismatch, NoConjugationAutomorphism, NotSquareFree,
                     PrecisionExhausted)
from .factor import factor_rational, irreducible_factors, is_irreducible
from .fields import (QQ, NFElem, NumberField, RatFunc, RationalField,
                     RationalFunctionField)
from .roots import embed, isolate_complex_roots

QQi = NumberField([1, 0, 1], "i")

__all__ = [
    "ComplexBall", "FieldMismatch", "NoConjugationAutomorphism", "NotSquareFree",
    "PrecisionExhausted", "factor_rational", "irreducible_factors", "is_irreducible",
    "QQ", "QQi", "NFElem", "NumberField", "RatFunc", "RationalField",
    "RationalFunctionField", "embed", "isolate_complex_roots",
]
