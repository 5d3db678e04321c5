from fractions import Fraction

import pytest

from polyinv.critical import (INFINITE, NonIsolatedSingularities, NotACriticalValue,
                              critical_report, fiber_point_count, multiplicity_of_value)
from polyinv.exactnum import NumberField
from polyinv.frontend import parse


def P(text):
    return parse(f"poly: {text}").poly


def test_morse_point():
    r = critical_report(P("x^2 + y^2"))
    assert r.mu == 1
    assert r.n_baff == 1
    assert r.distinct_values.dense_coeffs() == [0, 1]


def test_cusp():
    r = critical_report(P("x^3 - y^2"))
    assert r.mu == 2
    assert r.n_baff == 1
    assert multiplicity_of_value(r, Fraction(0)) == 2
    assert fiber_point_count(P("x^3 - y^2"), Fraction(0), r) == (1, 2)


def test_no_critical_points():
    r = critical_report(P("x + x^2*y"))
    assert r.mu == 0
    assert r.n_baff == 0
    assert r.is_isolated


def test_two_morse_values():
    f = P("x^3 - 3*x + y^2")
    r = critical_report(f)
    assert r.mu == 2
    assert r.n_baff == 2
    assert sorted(tuple(p.dense_coeffs()) for p, _ in r.value_multiplicities) == [(-2, 1), (2, 1)]
    assert fiber_point_count(f, Fraction(2), r) == (1, 1)


def test_irrational_critical_values():
    f = P("x^3 - 6*x + y^2")
    r = critical_report(f)
    (piece, m), = r.value_multiplicities
    assert m == 1 and piece.degree() == 2
    assert fiber_point_count(f, piece, r) == (1, 1)


def test_non_isolated_reported():
    r = critical_report(P("x^2*y^2"))
    assert r.non_isolated
    assert r.mu == INFINITE
    with pytest.raises(NonIsolatedSingularities):
        fiber_point_count(P("x^2*y^2"), Fraction(0), r)


def test_not_a_critical_value():
    with pytest.raises(NotACriticalValue):
        fiber_point_count(P("x^2 + y^2"), Fraction(1))


def test_family_a_zero_fibre():
    f = P("x*y*(x - y)*(y - 1)*(x - 2*y)")
    r = critical_report(f)
    assert r.mu == 14
    assert multiplicity_of_value(r, Fraction(0)) == 12


def test_family_a_at_sixth_root_of_unity():
    spec = parse("field: Q[k]/(k^2 - k + 1)\npoly: x*y*(x - y)*(y - 1)*(x - k*y)")
    r = critical_report(spec.poly)
    assert r.mu == 14
    assert r.n_baff == 2
    nonzero = [(p, m) for p, m in r.value_multiplicities if p.dense_coeffs() != [0, 1]]
    assert len(nonzero) == 1 and nonzero[0][1] == 2
    assert fiber_point_count(spec.poly, nonzero[0][0], r) == (1, 2)


def test_points_counted_over_number_field():
    K = NumberField([1, -1, 1], "k")
    spec = parse("field: Q[k]/(k^2 - k + 1)\npoly: x^2 + k*y^2")
    assert spec.field == K
    r = critical_report(spec.poly)
    assert r.mu == 1
