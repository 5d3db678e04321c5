from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyinv.exactnum import QQ, QQi, NumberField
from polyinv.frontend import (NonIntegerExponent, ParseError, UndeclaredSymbol,
                              format_dense_poly, parse, parse_expression, parse_field,
                              print_canonical)
from polyinv.polyring import Poly

G = ("x", "y")


def test_default_header():
    spec = parse("poly: x^2 + y")
    assert spec.field is QQ
    assert spec.vars == G
    assert spec.param is None
    x, y = Poly.gen("x", G), Poly.gen("y", G)
    assert spec.poly == x * x + y


def test_family_with_parameter():
    spec = parse("vars: x y\nparam: s\npoly: x*y*(x - y)*(y - 1)*(x - s*y)\n")
    assert spec.param == "s"
    assert spec.gens == ("x", "y", "s")
    assert spec.poly.total_degree() == 6


def test_number_field_header():
    spec = parse("field: Q[k]/(k^2 - k + 1)\npoly: x - k*y")
    assert isinstance(spec.field, NumberField)
    k = spec.field.generator()
    assert spec.poly.terms[(0, 1)] == -k


def test_gaussian_header():
    spec = parse("field: Q(i)\npoly: x + i*y")
    assert spec.field is QQi


def test_rational_coefficients_and_comments():
    spec = parse("# a comment\npoly: x/2 + 3/4*y   # trailing\n")
    assert spec.poly.terms == {(1, 0): Fraction(1, 2), (0, 1): Fraction(3, 4)}


def test_continuation_lines():
    spec = parse("poly: x*y\n  + 1\n")
    assert spec.poly.terms == {(1, 1): 1, (0, 0): 1}


def test_reducible_minimal_polynomial_rejected():
    with pytest.raises(ParseError, match="reducible"):
        parse_field("Q[a]/(a^2 - 1)")


def test_unknown_field():
    with pytest.raises(ParseError):
        parse_field("R")


def test_error_position():
    with pytest.raises(ParseError) as err:
        parse("poly: x^2 + * y")
    assert err.value.line == 1
    assert err.value.column == 13


def test_error_position_second_line():
    with pytest.raises(ParseError) as err:
        parse("vars: x y\npoly: x + )")
    assert err.value.line == 2
    assert err.value.column == 11


def test_undeclared_symbol():
    with pytest.raises(UndeclaredSymbol) as err:
        parse("poly: x + z")
    assert err.value.column == 11


def test_non_integer_exponent():
    with pytest.raises(NonIntegerExponent):
        parse("poly: x^y")


def test_missing_poly():
    with pytest.raises(ParseError):
        parse("vars: x y\n")


def test_duplicate_declaration():
    with pytest.raises(ParseError, match="duplicate"):
        parse("poly: x\npoly: y")


def test_parameter_clash():
    with pytest.raises(ParseError):
        parse("vars: x y\nparam: x\npoly: x")


def test_canonical_order():
    x, y = Poly.gen("x", G), Poly.gen("y", G)
    f = y + x * x * y - 3 + x ** 3
    assert print_canonical(f) == "x^3 + x^2*y + y - 3"
    assert print_canonical(Poly.zero(G)) == "0"
    assert print_canonical(-x) == "-x"


def test_canonical_number_field_coefficients():
    spec = parse("field: Q[k]/(k^2 - k + 1)\npoly: (k - 1)*x*y + 2*k")
    text = print_canonical(spec.poly)
    again = parse(f"field: Q[k]/(k^2 - k + 1)\npoly: {text}")
    assert again.poly == spec.poly


def test_format_dense():
    assert format_dense_poly([0, -1, 2, -2, 1], "s") == "s^4 - 2*s^3 + 2*s^2 - s"


coef = st.fractions(min_value=-9, max_value=9, max_denominator=4)


@settings(max_examples=80)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coef, max_size=6))
def test_canonical_round_trip(terms):
    p = Poly({m: c for m, c in terms.items() if c}, G)
    assert parse_expression(print_canonical(p), G) == p
