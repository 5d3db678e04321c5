from fractions import Fraction

import pytest

from polyinv.atinfinity import multiinteger
from polyinv.exactnum import QQ, QQi, NoConjugationAutomorphism, NumberField, dense
from polyinv.frontend import parse
from polyinv.parametric import (AlgebraicValue, ParametricFamily, conj_coeffs, conjugate_index,
                                conjugate_pair, exceptional_set, generic_multiinteger,
                                reciprocal_root_structure, sturm_count)

FAMILY_A = "vars: x y\nparam: s\npoly: x*y*(x - y)*(y - 1)*(x - s*y)\n"
FAMILY_B = "vars: x y\nparam: s\npoly: x*y*(y - 1)*(x + y - 1)*(x - s*y)\n"
Q1 = [256, 736, 825, 736, 256]
Q2 = [256, 448, 789, 448, 256]


def family(text):
    return ParametricFamily.from_spec(parse(text))


@pytest.fixture(scope="module")
def A():
    return family(FAMILY_A)


@pytest.fixture(scope="module")
def B():
    return family(FAMILY_B)


@pytest.fixture(scope="module")
def CA(A):
    return exceptional_set(A)


@pytest.fixture(scope="module")
def CB(B):
    return exceptional_set(B)


def _factors(ex):
    return sorted(tuple(dense.primitive_integer(list(q))) for q in ex.factors)


def test_generic_members(A, B):
    assert generic_multiinteger(A).multiinteger.as_tuple() == (14, 3, 0, 0, 3)
    assert generic_multiinteger(B).multiinteger.as_tuple() == (14, 4, 0, 0, 4)


def test_exceptional_set_a(CA):
    assert [Fraction(c) for c in CA.polynomial] == [0, -1, 2, -2, 1]
    assert _factors(CA) == [(-1, 1), (0, 1), (1, -1, 1)]
    # s = 2 is a candidate that verification rejects
    assert (Fraction(-2), Fraction(1)) in [tuple(q) for q in CA.candidates]


def test_exceptional_verdicts_a(CA):
    labels = {tuple(v.factor): v.label() for v in CA.per_root if v.exceptional}
    assert labels[(Fraction(0), Fraction(1))] == "non-isolated singularities"
    assert labels[(Fraction(-1), Fraction(1))] == "non-isolated singularities"
    assert labels[(Fraction(1), Fraction(-1), Fraction(1))] == "(14, 2, 0, 0, 2)"


def test_exceptional_set_b(CB):
    assert _factors(CB) == sorted([(-1, 1), (0, 1), (1, 1), tuple(Q1), tuple(Q2)])
    mis = {tuple(dense.primitive_integer(list(v.factor))): v.label()
           for v in CB.per_root if v.exceptional}
    assert mis[(1, 1)] == "(12, 3, 0, 0, 3)"
    assert mis[tuple(Q2)] == "(14, 3, 0, 0, 3)"


def test_generic_values_off_the_exceptional_set(A, CA):
    for s0 in (Fraction(3), Fraction(-5, 2), Fraction(7, 3)):
        assert dense.evaluate(list(CA.polynomial), s0)
        assert multiinteger(A.specialize(s0)).as_tuple() == CA.generic.as_tuple()


def test_linear_family_has_empty_exceptional_set():
    fam = family("vars: x y\nparam: s\npoly: x + s*y\n")
    assert exceptional_set(fam).is_empty


def test_root_of_orders_roots():
    v = AlgebraicValue.root_of([1, -1, 1], 0)
    assert v.field.degree == 2
    assert v.element * v.element - v.element + 1 == v.field.zero
    w = AlgebraicValue.root_of([-2, 1], 0)
    assert w.field == QQ and w.element == 2


def test_root_of_reducible_input():
    # (s - 3)(s^2 + 1): roots ordered by real part put +-i first
    v = AlgebraicValue.root_of([-3, 1, -3, 1], 2)
    assert v.field == QQ and v.element == 3
    with pytest.raises(IndexError):
        AlgebraicValue.root_of([-3, 1, -3, 1], 3)


def test_specialize_at_algebraic_value(A):
    v = AlgebraicValue.root_of([1, -1, 1], 1)
    f = A.specialize(v)
    assert f.field == v.field
    assert multiinteger(f).as_tuple() == (14, 2, 0, 0, 2)


def test_conj_coeffs_gaussian():
    f = parse("field: Q(i)\npoly: x + i*y").poly
    g = parse("field: Q(i)\npoly: x - i*y").poly
    assert conj_coeffs(f) == g
    assert conj_coeffs(conj_coeffs(f)) == f


def test_conj_coeffs_rational_is_identity():
    f = parse("poly: x^2 + y").poly
    assert conj_coeffs(f) == f


def test_conj_coeffs_needs_a_normal_field():
    f = parse("field: Q[c]/(c^3 - 2)\npoly: x + c*y").poly
    from polyinv.exactnum import isolate_complex_roots
    idx = next(i for i, b in enumerate(isolate_complex_roots([-2, 0, 0, 1], 60)) if b.im != 0)
    with pytest.raises(NoConjugationAutomorphism):
        conj_coeffs(f, idx)


def test_conjugate_index():
    assert conjugate_index([1, -1, 1], 0) == 1
    j = conjugate_index(Q2, 0)
    assert j != 0 and conjugate_index(Q2, j) == 0


@pytest.mark.slow
def test_conjugate_pair_b(B):
    cp = conjugate_pair(B, Q2, 0)
    assert cp.field.degree == 8
    assert cp.conj(cp.k) == cp.kbar
    assert conj_coeffs(cp.f, automorphism=cp.conj) == cp.fbar


@pytest.mark.parametrize("q, pal, closed, unit", [
    (Q2, True, True, False),
    (Q1, True, True, True),
    ([1, 1, 1], True, True, True),
    ([1, -3, 1], True, True, False),
    ([-1, 0, 1], False, True, True),
    ([-2, 0, 1], False, False, False),
    ([3, 1, 2], False, False, False),
    ([1, 1, 1, 1, 1, 1, 1], True, True, True),
    ([1, 0, 0, 0, 1], True, True, True),
    ([2, -5, 2], True, True, False),
])
def test_reciprocal_structure(q, pal, closed, unit):
    rep = reciprocal_root_structure(q)
    assert (rep.is_palindromic, rep.closed_under_inversion, rep.unit_modulus_root_exists) == (
        pal, closed, unit)


def test_quartic_resolvent():
    rep = reciprocal_root_structure(Q2)
    assert rep.resolvent_discriminant == -82944
    assert rep.method == "quadratic resolvent"


def test_partial_unit_modulus_factor():
    # (s^2 + s + 1)(s - 2): not closed, but shares a unit-modulus factor with its reversal
    rep = reciprocal_root_structure(dense.mul([1, 1, 1], [-2, 1]))
    assert not rep.closed_under_inversion and rep.unit_modulus_root_exists


def test_sturm_count():
    assert sturm_count([-2, 0, 1], Fraction(-2), Fraction(2)) == 2
    assert sturm_count([-2, 0, 1], Fraction(0), Fraction(1)) == 0
    assert sturm_count([0, 1], Fraction(0), Fraction(1)) == 1


def test_family_needs_parameter():
    with pytest.raises(ValueError):
        family("poly: x*y\n")


def test_top_degree_dependence(A):
    assert A.top_degree_depends_on_param
    assert not family("vars: x y\nparam: s\npoly: x^2 + y^2 + s*x\n").top_degree_depends_on_param


@pytest.mark.parametrize("index", range(4))
def test_every_root_of_the_quartic_gives_the_same_invariant(B, index):
    v = AlgebraicValue.root_of(Q2, index)
    assert multiinteger(B.specialize(v)).as_tuple() == (14, 3, 0, 0, 3)


@pytest.mark.parametrize("index", range(2))
def test_sixth_root_choice_is_symmetric(A, index):
    v = AlgebraicValue.root_of([1, -1, 1], index)
    assert multiinteger(A.specialize(v)).as_tuple() == (14, 2, 0, 0, 2)
