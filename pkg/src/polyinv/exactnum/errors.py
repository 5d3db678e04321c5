"""Exceptions raised by the exact arithmetic layer."""


class ExactArithmeticError(ArithmeticError):
    pass


class FieldMismatch(ExactArithmeticError):
    pass


class NotSquareFree(ExactArithmeticError):
    pass


class PrecisionExhausted(ExactArithmeticError):
    pass


class NoConjugationAutomorphism(ExactArithmeticError):
    pass
