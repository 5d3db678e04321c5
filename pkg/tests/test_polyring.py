from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from polyinv.exactnum import QQ, QQi, NumberField
from polyinv.polyring import (AffineAuto, BothConstant, DegreeTooLow, Poly, SingularMap,
                              SquareMatrix, UnknownVariable, VariableMismatch, apply_affine,
                              buchberger, charpoly, discriminant, gcd_poly, minpoly, resultant,
                              sylvester_resultant)

G = ("x", "y")
x = Poly.gen("x", G)
y = Poly.gen("y", G)

coef = st.integers(-5, 5).map(Fraction)


@st.composite
def bipolys(draw, max_degree=4):
    d = draw(st.integers(0, max_degree))
    terms = {}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            c = draw(coef)
            if c:
                terms[(i, j)] = c
    return Poly(terms, G)


@st.composite
def affine_maps(draw):
    while True:
        a, b, c, d = (draw(st.integers(-3, 3)) for _ in range(4))
        if a * d - b * c:
            return AffineAuto(a, b, c, d, draw(st.integers(-3, 3)), draw(st.integers(-3, 3)))


# --- Poly --------------------------------------------------------------------

def test_ring_identities():
    p = (x + y) ** 2
    assert p == x * x + 2 * x * y + y * y
    assert (p - p).is_zero()
    assert p.total_degree() == 2
    assert p.degree("x") == 2


def test_derivative_and_evaluate():
    f = x ** 3 - y ** 2
    assert f.derivative("x") == 3 * x * x
    assert f.evaluate({"x": Fraction(2), "y": Fraction(3)}) == -1


def test_exquo_and_divides():
    f = (x - y) * (x + 2 * y)
    assert f.exquo(x - y) == x + 2 * y
    assert (x - y).divides(f)


def test_variable_mismatch():
    z = Poly.gen("z", ("x", "z"))
    with pytest.raises(VariableMismatch):
        x + z


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        Poly.gen("w", G)


def test_coefficients_over_number_field():
    i = QQi.generator()
    xi = Poly.gen("x", G, QQi)
    f = xi * xi + Poly.const(1, G, QQi)
    assert f.map_coeffs(lambda c: c * i, QQi) == f.scale(i)


@given(bipolys(), bipolys(), bipolys())
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


# --- resultants --------------------------------------------------------------

def test_resultant_of_lines():
    t = Poly.gen("x", ("x",))
    assert resultant(x - y, x + y - 2, "y") == 2 - 2 * t


def test_resultant_both_constant():
    with pytest.raises(BothConstant):
        resultant(x, x + 1, "y")


def test_discriminant_quadratic():
    t = Poly.gen("t", ("t",))
    assert discriminant(t * t + 3 * t + 1) == 5
    with pytest.raises(DegreeTooLow):
        discriminant(t + 1)


@settings(max_examples=50, deadline=None)
@given(bipolys(), bipolys())
def test_resultant_matches_sylvester(p, q):
    if p.degree("y") < 1 or q.degree("y") < 1:
        return
    assert resultant(p, q, "y") == sylvester_resultant(p, q, "y")


def test_gcd_poly_univariate():
    t = Poly.gen("t", ("t",))
    assert gcd_poly((t - 1) * (t + 2), (t - 1) * (t - 3)) == t - 1


# --- Groebner bases ----------------------------------------------------------

def test_groebner_cusp_gradient():
    gb = buchberger([3 * x * x, -2 * y])
    assert gb.is_zero_dimensional()
    assert gb.dimension() == 2


def test_groebner_unit_ideal():
    gb = buchberger([x * y - 1, x])
    assert gb.is_unit_ideal()


def test_groebner_positive_dimensional():
    gb = buchberger([x * y, x * x])
    assert not gb.is_zero_dimensional()


def test_normal_form_membership():
    gb = buchberger([x * x - 1, y - x])
    assert gb.contains(y * y - 1)
    assert not gb.contains(y - 1)


def test_multiplication_matrix_eigenvalues():
    gb = buchberger([x * x - 1, y - 2 * x])
    M = gb.multiplication_matrix(x + y)
    t = Poly.gen("t", ("t",))
    assert Poly.from_dense(charpoly(M), "t") == (t - 3) * (t + 3)


# --- linear algebra ----------------------------------------------------------

def test_charpoly_and_minpoly():
    M = SquareMatrix([[2, 1], [0, 2]], QQ)
    assert charpoly(M) == [4, -4, 1]
    assert minpoly(M) == [4, -4, 1]
    D = SquareMatrix.diagonal([2, 2], QQ)
    assert minpoly(D) == [-2, 1]


def test_charpoly_over_number_field():
    K = NumberField([1, -1, 1], "k")
    k = K.generator()
    M = SquareMatrix([[k, K(0)], [K(1), 1 - k]], K)
    assert charpoly(M) == [K(1), K(-1), K(1)]


# --- affine maps -------------------------------------------------------------

def test_affine_inverse_and_compose():
    phi = AffineAuto(1, 2, 3, 4, 5, 6)
    ident = AffineAuto.identity()
    assert phi.compose(phi.inverse()) == ident
    assert phi.inverse().compose(phi) == ident


def test_affine_singular():
    with pytest.raises(SingularMap):
        AffineAuto(1, 2, 2, 4)


def test_affine_text():
    assert str(AffineAuto(-1, 1, 0, 1)) == "(x, y) -> (-x + y, y)"


def test_apply_affine_substitutes():
    phi = AffineAuto(-1, 1, 0, 1)
    assert apply_affine(x, phi) == y - x
    assert apply_affine(y - 1, phi) == y - 1


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.large_base_example])
@given(bipolys(3), affine_maps(), affine_maps())
def test_apply_affine_is_a_right_action(f, phi, psi):
    assert apply_affine(apply_affine(f, phi), psi) == apply_affine(f, phi.compose(psi))
