from fractions import Fraction

import pytest

from polyinv.arrangement import (ArrangementMismatch, NonLinearFactor, equivalence_partners,
                                 find_equivalences, split_lines)
from polyinv.exactnum import NumberField
from polyinv.frontend import parse
from polyinv.parametric import AlgebraicValue, ParametricFamily
from polyinv.polyring import AffineAuto, apply_affine

FAMILY_A = "vars: x y\nparam: s\npoly: x*y*(x - y)*(y - 1)*(x - s*y)\n"
FAMILY_B = "vars: x y\nparam: s\npoly: x*y*(y - 1)*(x + y - 1)*(x - s*y)\n"


def P(text, field=None):
    head = f"field: {field}\n" if field else ""
    return parse(f"{head}poly: {text}").poly


@pytest.fixture(scope="module")
def A():
    return ParametricFamily.from_spec(parse(FAMILY_A))


@pytest.fixture(scope="module")
def B():
    return ParametricFamily.from_spec(parse(FAMILY_B))


def test_split_family_member():
    f = P("x*y*(x - y)*(y - 1)*(x - 2*y)")
    arr = split_lines(f)
    assert arr.degree == 5
    assert arr.multiplicities() == [1] * 5
    assert arr.expand() == f


def test_split_with_multiplicity_and_scalar():
    f = P("3*(x + y - 1)^2*(x - 2)")
    arr = split_lines(f)
    assert arr.multiplicities() == [1, 2]
    assert arr.expand() == f


def test_split_over_number_field():
    f = P("(x - k*y)*(x - (1 - k)*y)", "Q[k]/(k^2 - k + 1)")
    assert split_lines(f).degree == 2
    # over Q the same product is irreducible
    with pytest.raises(NonLinearFactor):
        split_lines(P("x^2 - x*y + y^2"))


def test_non_linear_factor_keeps_residual():
    with pytest.raises(NonLinearFactor) as err:
        split_lines(P("(x^2 + 1)*y"))
    assert err.value.residual.total_degree() == 2


def test_translation_and_reflection():
    f2, fm = P("x*y*(x - y)*(y - 1)*(x - 2*y)"), P("x*y*(x - y)*(y - 1)*(x + y)")
    eqs = find_equivalences(f2, fm)
    assert AffineAuto(-1, 1, 0, 1) in [e.phi for e in eqs]
    for e in eqs:
        assert apply_affine(fm, e.phi) == f2.scale(e.scalar)


def test_inequivalent_members():
    f2, f3 = P("x*y*(x - y)*(y - 1)*(x - 2*y)"), P("x*y*(x - y)*(y - 1)*(x - 3*y)")
    assert find_equivalences(f2, f3) == []


def test_identity_is_self_equivalence():
    f = P("x*y*(x - y)*(y - 1)*(x - 2*y)")
    maps = [e.phi for e in find_equivalences(f, f, scalars="one")]
    assert AffineAuto.identity() in maps


def test_inverse_map_solves_reverse_problem():
    f, g = P("x*y*(x - y)*(y - 1)*(x - 2*y)"), P("x*y*(x - y)*(y - 1)*(x + y)")
    for e in find_equivalences(f, g):
        back = [b.phi for b in find_equivalences(g, f)]
        assert e.phi.inverse() in back


def test_different_line_counts():
    with pytest.raises(ArrangementMismatch):
        find_equivalences(P("x*y*(x - 1)"), P("x*y"))


def test_unknown_policy():
    with pytest.raises(ValueError):
        find_equivalences(P("x*y"), P("x*y"), scalars="some")


def test_scalar_policies_family_a(A):
    assert set(equivalence_partners(A, Fraction(2)).values) == {2, -1}
    assert set(equivalence_partners(A, Fraction(2), "one").values) == {2, -1}
    assert set(equivalence_partners(A, Fraction(2), "any").values) == {2, -1, Fraction(1, 2)}


def test_half_needs_a_homothety(A):
    f2, fh = A.specialize(2), A.specialize(Fraction(1, 2))
    assert find_equivalences(f2, fh) == []
    eqs = find_equivalences(f2, fh, scalars="any")
    assert eqs and all(abs(e.scalar) == Fraction(1, 8) for e in eqs)


def test_family_b_inversion_partner(B):
    assert set(equivalence_partners(B, Fraction(2)).values) == {2}
    assert set(equivalence_partners(B, Fraction(2), "any").values) == {2, Fraction(1, 2)}


def test_sixth_root_partner(A):
    K = NumberField([1, -1, 1], "k")
    k = K.generator()
    eqs = find_equivalences(A.specialize(k), A.specialize(1 - k))
    assert eqs and all(e.scalar == -1 for e in eqs)
    assert find_equivalences(A.specialize(k), A.specialize(1 - k), scalars="one") == []


def test_partners_at_algebraic_value(A):
    v = AlgebraicValue.root_of([1, -1, 1], 0)
    P_ = equivalence_partners(A, v)
    k = v.element
    assert k in P_ and 1 - k in P_
