"""Exceptions raised by the polynomial layer."""


class PolynomialError(ArithmeticError):
    pass


class VariableMismatch(PolynomialError):
    pass


class UnknownVariable(PolynomialError):
    pass


class BothConstant(PolynomialError):
    pass


class DegreeTooLow(PolynomialError):
    pass


class NotZeroDimensional(PolynomialError):
    pass


class SingularMap(PolynomialError):
    pass
