from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyinv.exactnum import (QQ, QQi, FieldMismatch, NoConjugationAutomorphism, NotSquareFree,
                              NumberField, RationalFunctionField, dense, embed,
                              factor_rational, is_irreducible, isolate_complex_roots)
from polyinv.exactnum.adjoin import adjoin_root, conjugation, join_fields
from polyinv.exactnum.balls import ComplexBall
from polyinv.exactnum.nfroots import roots_in_field

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(small, min_size=1, max_size=6).map(dense.strip)


def euclid_gcd(p, q):
    while q:
        p, q = q, dense.rem(p, q)
    return dense.monic(p)


# --- rationals and number fields ---------------------------------------------

def test_qq_coercion():
    assert QQ(3) == Fraction(3)
    assert QQ(Fraction(1, 2)) == Fraction(1, 2)
    assert QQ.describe() == "Q"


def test_gaussian_arithmetic():
    i = QQi.generator()
    assert i * i == QQi(-1)
    assert (1 + i) * (1 - i) == QQi(2)
    assert (1 + i).inverse() == (1 - i) / 2


def test_number_field_rejects_non_squarefree():
    with pytest.raises(NotSquareFree):
        NumberField([1, 2, 1], "a")


def test_field_mismatch():
    K = NumberField([-2, 0, 1], "r")
    with pytest.raises(FieldMismatch):
        K(QQi.generator())


def test_minimal_polynomial_of_element():
    K = NumberField([-2, 0, 1], "r")
    r = K.generator()
    assert dense.to_fractions((r + 1).minimal_polynomial()) == [-1, -2, 1]


def test_eisenstein_sixth_root_of_unity():
    K = NumberField([1, -1, 1], "k")
    k = K.generator()
    assert k ** 3 == K(-1)
    assert k ** 6 == K(1)
    assert k * (1 - k) == K(1)


@given(st.lists(small, min_size=2, max_size=2), st.lists(small, min_size=2, max_size=2))
def test_quadratic_field_inverse(a, b):
    K = NumberField([1, -1, 1], "k")
    x = K.from_coords(a)
    if x:
        assert x * x.inverse() == K.one


# --- rational functions ------------------------------------------------------

def test_ratfunc_normalizes():
    F = RationalFunctionField("s")
    s = F.param_gen()
    v = (s * s - 1) / (s - 1)
    assert v == s + 1
    assert v.den == [1]


def test_ratfunc_evaluate():
    F = RationalFunctionField("s")
    s = F.param_gen()
    assert ((s + 1) / (s - 2)).evaluate(Fraction(3)) == 4


# --- dense polynomials -------------------------------------------------------

@settings(max_examples=150)
@given(polys, polys, polys)
def test_gcd_matches_euclid(g, a, b):
    p, q = dense.mul(g, a), dense.mul(g, b)
    assert dense.gcd(p, q) == euclid_gcd(p, q)


@given(polys, polys)
def test_gcd_divides(a, b):
    g = dense.gcd(a, b)
    if g:
        assert not dense.rem(a, g) and not dense.rem(b, g)


@given(polys)
def test_squarefree_decomposition_reassembles(p):
    if len(p) < 2:
        return
    acc = [p[-1]]
    for f, m in dense.squarefree_decomposition(p):
        for _ in range(m):
            acc = dense.mul(acc, f)
    assert acc == p


# --- factorization -----------------------------------------------------------

def test_factor_family_b_quartics_irreducible():
    assert is_irreducible([256, 448, 789, 448, 256])
    assert is_irreducible([256, 736, 825, 736, 256])


def test_factor_product():
    p = dense.mul(dense.mul([0, 1], [-1, 1]), [1, -1, 1])
    unit, facs = factor_rational(dense.mul(p, [0, 1]))
    assert unit == 1
    assert facs == [([-1, 1], 1), ([0, 1], 2), ([1, -1, 1], 1)]


def test_factor_swinnerton_dyer_like_quartic():
    # x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
    assert is_irreducible([1, 0, -10, 0, 1])
    # (x^2 - 2)(x^2 - 3)
    assert [f for f, _ in factor_rational([6, 0, -5, 0, 1])[1]] == [[-3, 0, 1], [-2, 0, 1]]


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=3), min_size=1, max_size=3))
def test_factorization_reassembles(parts):
    p = [Fraction(1)]
    for q in parts:
        q = dense.to_fractions(q)
        if len(q) >= 2:
            p = dense.mul(p, q)
    if len(p) < 2:
        return
    unit, facs = factor_rational(p)
    acc = [unit]
    for f, m in facs:
        assert is_irreducible(f)
        for _ in range(m):
            acc = dense.mul(acc, f)
    assert acc == p


# --- balls and isolation -----------------------------------------------------

def test_ball_contains_half():
    b = embed(Fraction(1, 2), 0, 16)
    assert b.contains_point(Fraction(1, 2))
    assert b.rad <= Fraction(1, 256)


def test_isolate_roots_of_unity():
    balls = isolate_complex_roots([-1, 0, 0, 1], 60)
    assert len(balls) == 3
    assert balls[-1].contains_point(1)
    for i, a in enumerate(balls):
        for b in balls[i + 1:]:
            assert not a.overlaps(b)


def test_isolation_order_is_precision_independent():
    p = [256, 448, 789, 448, 256]
    lo = isolate_complex_roots(p, 53)
    hi = isolate_complex_roots(p, 200)
    assert all(a.overlaps(b) for a, b in zip(lo, hi))


def test_ball_multiplication_encloses():
    a = ComplexBall(Fraction(1), Fraction(1), Fraction(1, 100))
    b = ComplexBall(Fraction(2), Fraction(-1), Fraction(1, 100))
    c = a * b
    assert c.contains_point(3, 1)


# --- roots in fields, adjunction, conjugation -------------------------------

def test_roots_in_gaussian_field():
    roots = [r for r, _ in roots_in_field([QQi(1), QQi(0), QQi(1)], QQi)]
    i = QQi.generator()
    assert set(roots) == {i, -i}


def test_roots_in_eisenstein_field():
    K = NumberField([1, -1, 1], "k")
    k = K.generator()
    roots = [r for r, _ in roots_in_field([K(1), K(-1), K(1)], K)]
    assert set(roots) == {k, 1 - k}


def test_quartic_has_two_roots_over_its_own_field():
    K = NumberField([256, 448, 789, 448, 256], "k")
    k = K.generator()
    roots = [r for r, _ in roots_in_field([K(c) for c in (256, 448, 789, 448, 256)], K)]
    assert set(roots) == {k, 1 / k}


def test_roots_over_rational_functions():
    F = RationalFunctionField("s")
    s = F.param_gen()
    p = dense.mul([-s, F.one], [1 / (s + 1), F.one])
    roots = [r for r, _ in roots_in_field(p, F)]
    assert set(roots) == {s, -1 / (s + 1)}


def test_adjoin_sqrt2_to_gaussian():
    adj = adjoin_root(QQi, [QQi(-2), QQi(0), QQi(1)])
    L = adj.field
    assert adj.degree == 4
    assert adj.root * adj.root == L(2)
    i = adj.embed(QQi.generator())
    assert i * i == L(-1)


def test_join_conjugate_quartic_roots():
    q = [256, 448, 789, 448, 256]
    K = NumberField(q, "k")
    adj, into1, into2 = join_fields(K, K, 0, 1)
    L = adj.field
    assert L.degree == 8
    a, b = into1(K.generator()), into2(K.generator())
    assert a != b and dense.evaluate([L(c) for c in q], b) == L(0)
    conj = conjugation(L, adj.embedding_index, [a + b * adj.shift])
    assert conj.is_involution()
    assert conj(a) == b


def test_conjugation_on_eisenstein_field():
    K = NumberField([1, -1, 1], "k")
    k = K.generator()
    c = conjugation(K, 0)
    assert c(k) == 1 - k
    assert c(c(k)) == k


def test_no_conjugation_on_real_cubic_with_complex_embedding():
    K = NumberField([-2, 0, 0, 1], "c")
    # the complex roots of x^3 - 2 have conjugates outside Q(c)
    idx = next(i for i, b in enumerate(isolate_complex_roots([-2, 0, 0, 1], 60)) if b.im != 0)
    with pytest.raises(NoConjugationAutomorphism):
        conjugation(K, idx)
