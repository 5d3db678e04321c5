from fractions import Fraction

import pytest

from polyinv.atinfinity import (binfinity_report, cross_check, fibre_euler_characteristic,
                                monic_shear, multiinteger)
from polyinv.critical import NonIsolatedSingularities
from polyinv.frontend import parse
from polyinv.polyring import AffineAuto, apply_affine


def P(text, field=None):
    head = f"field: {field}\n" if field else ""
    return parse(f"{head}poly: {text}").poly


@pytest.mark.parametrize("text, expected", [
    ("x + x^2*y", (0, 0, 1, 1, 1)),
    ("x^2*y^2 + x", (0, 0, 2, 1, 1)),
    ("x^3 - y^2", (2, 1, 0, 0, 1)),
    ("x^2 + y^2", (1, 1, 0, 0, 1)),
    ("x", (0, 0, 0, 0, 0)),
    ("x*(x*y - 1)", (0, 0, 1, 1, 1)),
])
def test_small_multiintegers(text, expected):
    assert multiinteger(P(text)).as_tuple() == expected


def test_broughton_value_at_infinity():
    inf = binfinity_report(P("x + x^2*y"))
    (piece, drop), = inf.atypical_values
    assert piece.dense_coeffs() == [0, 1]
    assert drop == 1


def test_family_a_at_two():
    assert multiinteger(P("x*y*(x - y)*(y - 1)*(x - 2*y)")).as_tuple() == (14, 3, 0, 0, 3)


def test_family_b_at_two():
    assert multiinteger(P("x*y*(y - 1)*(x + y - 1)*(x - 2*y)")).as_tuple() == (14, 4, 0, 0, 4)


def test_family_a_at_sixth_root_of_unity():
    f = P("x*y*(x - y)*(y - 1)*(x - k*y)", "Q[k]/(k^2 - k + 1)")
    assert multiinteger(f).as_tuple() == (14, 2, 0, 0, 2)


def test_non_isolated_raises():
    with pytest.raises(NonIsolatedSingularities):
        multiinteger(P("x*y*(x - y)*(y - 1)*x"))


def test_shear_starts_at_zero():
    phi, g, lead = monic_shear(P("y^2 + x"))
    assert phi == AffineAuto.identity() and lead == 1
    phi, g, lead = monic_shear(P("x*y + 1"))
    assert phi != AffineAuto.identity()


def test_euler_characteristic_of_fibres():
    g = P("y^2 - x")
    assert fibre_euler_characteristic(g, Fraction(0)) == 1
    g = P("y^2 - x^2")
    assert fibre_euler_characteristic(g, Fraction(1)) == 0
    assert fibre_euler_characteristic(g, Fraction(0)) == 1


def test_cross_check_broughton():
    chi_gen, rows = cross_check(P("x + x^2*y"))
    assert all(r.agrees for r in rows)
    assert [r.lam_drop for r in rows] == [1]


def test_cross_check_family_a():
    chi_gen, rows = cross_check(P("x*y*(x - y)*(y - 1)*(x - 2*y)"))
    assert chi_gen == -13
    assert all(r.agrees and r.lam_oracle == 0 for r in rows)


def test_invariant_under_affine_change():
    f = P("x^2*y^2 + x")
    g = apply_affine(f, AffineAuto(1, 2, 0, 1, 3, -1))
    assert multiinteger(g).as_tuple() == (0, 0, 2, 1, 1)
