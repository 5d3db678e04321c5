"""Adjoining roots to number fields, joining two fields, and field
automorphisms such as complex conjugation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import dense
from .balls import ComplexBall
from .errors import NoConjugationAutomorphism, NotSquareFree, PrecisionExhausted
from .factor import factor_rational
from .fields import QQ, NFElem, NumberField
from .roots import embed, isolate_complex_roots


@dataclass(frozen=True)
class Adjunction:
    """A number field L = base(beta) presented by a primitive element.

    ``base_image`` is the image of the base generator in L and ``root`` is
    beta.  ``embedding_index`` is the root index of L's minimal polynomial
    whose embedding restricts to the chosen embeddings of base and beta.
    """
    field: object
    base: object
    base_image: object
    root: object
    shift: int
    embedding_index: int

    def embed(self, a):
        """Map an element of the base field into L."""
        if self.base == QQ or not isinstance(a, NFElem):
            return self.field(a)
        acc = self.field.zero
        for c in reversed(a.coords):
            acc = acc * self.base_image + c
        return acc

    @property
    def degree(self):
        return self.field.degree


def _coeffs_over(base, q):
    if hasattr(q, "dense_coeffs"):
        q = q.dense_coeffs()
    return dense.strip([base(c) for c in q])


def _lift(c):
    """Power-basis coordinates of a base element as a rational dense list."""
    if isinstance(c, NFElem):
        return dense.strip(list(c.coords))
    return dense.strip([Fraction(c)])


def _ball_eval(coeff_balls, z):
    acc = ComplexBall.exact(0)
    for c in reversed(coeff_balls):
        acc = acc * z + c
    return acc


def _norm(m1, q, c):
    """Res_y(m1(y), q(y; x - c*y)) as a dense rational polynomial in x."""
    from ..polyring import Poly, resultant
    gens = ("x", "y")
    x = Poly.gen("x", gens)
    y = Poly.gen("y", gens)
    lin = x - y * c
    Q = Poly.zero(gens)
    for k, a in enumerate(q):
        coef = Poly.from_dense(_lift(a), "y").reorder(gens)
        Q = Q + coef * lin ** k
    M = Poly.from_dense(list(m1), "y").reorder(gens)
    R = resultant(M, Q, "y")
    return dense.to_fractions(R.dense_coeffs())


def adjoin_root(base, q, root_choice=0, base_root=0, gen="g", max_shift=64):
    """Adjoin the ``root_choice``-th root of q (a square-free polynomial over
    ``base``) to ``base``.

    Roots of q are ordered by (real, imaginary) after embedding base with its
    ``base_root``-th embedding.  The result is an absolute field generated by
    gamma = beta + c*alpha, with c the least nonnegative integer making the
    norm of q(x - c*alpha) square-free.
    """
    q = _coeffs_over(base, q)
    if len(q) < 2:
        raise ValueError("cannot adjoin a root of a constant")
    if len(dense.gcd(q, dense.derivative(q))) > 1:
        raise NotSquareFree("polynomial to adjoin is not square-free")
    if base == QQ:
        return _adjoin_over_q(q, root_choice, gen)
    m1 = list(base.minpoly)
    for c in range(max_shift + 1):
        N = _norm(m1, q, c)
        if len(dense.gcd(N, dense.derivative(N))) == 1:
            break
    else:
        raise NotSquareFree("no separating shift found")
    return _build(base, q, N, c, root_choice, base_root, gen)


def _adjoin_over_q(q, root_choice, gen):
    q = [Fraction(c.coords[0]) if isinstance(c, NFElem) else Fraction(c) for c in q]
    balls = isolate_complex_roots(q, 80)
    target = balls[root_choice]
    for f, _ in factor_rational(q)[1]:
        fb = isolate_complex_roots(f, 80)
        for idx, b in enumerate(fb):
            if b.overlaps(target):
                if len(f) == 2:
                    return Adjunction(QQ, QQ, None, -f[0], 0, 0)
                L = NumberField(f, gen)
                return Adjunction(L, QQ, None, L.generator(), 0, idx)
    raise PrecisionExhausted("could not locate the chosen root among the factors")


def _build(base, q, N, c, root_choice, base_root, gen):
    m1 = list(base.minpoly)
    bits = 80
    for _ in range(6):
        alpha = isolate_complex_roots(m1, bits)[base_root]
        qb = [embed(a, base_root, bits) for a in q]
        groots = isolate_complex_roots(N, bits)
        hits = []
        for j, g in enumerate(groots):
            beta = g - alpha * c
            if _ball_eval(qb, beta).contains_zero():
                hits.append((beta, g))
        if len(hits) == len(q) - 1:
            break
        bits *= 2
    else:
        raise PrecisionExhausted("could not separate the roots of the norm")
    hits.sort(key=lambda bg: (bg[0].re, bg[0].im))
    _, gamma_ball = hits[root_choice]
    for F, _ in factor_rational(N)[1]:
        fb = isolate_complex_roots(F, bits)
        idx = next((i for i, b in enumerate(fb) if b.overlaps(gamma_ball)), None)
        if idx is not None:
            break
    else:
        raise PrecisionExhausted("could not locate gamma among the norm factors")
    L = NumberField(F, gen)
    gamma = L.generator()
    # alpha = the common root of m1(y) and q(y; gamma - c*y) over L
    lin = [gamma, L(-c)]
    Q = []
    for k, a in enumerate(q):
        coef = [L(v) for v in _lift(a)]
        Q = dense.add(Q, dense.mul(coef, _dense_pow(lin, k, L)))
    g = dense.gcd([L(v) for v in m1], Q)
    if len(g) != 2:
        raise ArithmeticError("shift does not separate the conjugates")
    alpha_L = -g[0]
    beta_L = gamma - alpha_L * c
    adj = Adjunction(L, base, alpha_L, beta_L, c, idx)
    if dense.evaluate([adj.embed(a) for a in q], beta_L):
        raise ArithmeticError("adjoined element is not a root")
    return adj


def _dense_pow(p, k, K):
    out = [K.one]
    for _ in range(k):
        out = dense.mul(out, p)
    return out


def join_fields(K1, K2, index1=0, index2=0, gen="g"):
    """A field containing K1 and K2 with their ``index1``/``index2``-th
    embeddings made compatible.  Returns (adjunction, map K1 -> L,
    map K2 -> L)."""
    if K2 == QQ:
        return None, (lambda a: a), (lambda a: a)
    roots2 = isolate_complex_roots(list(K2.minpoly), 80)
    if K1 == QQ:
        adj = adjoin_root(QQ, list(K2.minpoly), index2, gen=gen)
    else:
        # order the roots of K2's minimal polynomial as roots over K1
        adj = None
        m2 = [K1(c) for c in K2.minpoly]
        target = roots2[index2]
        for choice in range(K2.degree):
            cand = adjoin_root(K1, m2, choice, index1, gen)
            if embed(cand.root, cand.embedding_index, 80).overlaps(target):
                adj = cand
                break
        if adj is None:
            raise PrecisionExhausted("could not match the requested embedding")

    def into_k2(a, adj=adj):
        if not isinstance(a, NFElem):
            return adj.field(a)
        acc = adj.field.zero
        for c in reversed(a.coords):
            acc = acc * adj.root + c
        return acc

    return adj, adj.embed, into_k2


@dataclass(frozen=True)
class FieldAutomorphism:
    """The automorphism of a number field sending the generator to ``image``."""
    field: object
    image: object

    def __call__(self, a):
        if not isinstance(a, NFElem):
            return a
        acc = self.field.zero
        for c in reversed(a.coords):
            acc = acc * self.image + c
        return acc

    def is_involution(self):
        return self(self.image) == self.field.generator()


def automorphism(field, image):
    """Check that generator -> image defines an automorphism."""
    if dense.evaluate([field(c) for c in field.minpoly], image):
        raise ValueError("image is not a root of the minimal polynomial")
    return FieldAutomorphism(field, image)


def conjugation(field, embedding_index=0, candidates=()):
    """Complex conjugation on ``field`` relative to one complex embedding.

    It is an automorphism of the field only if the conjugate of the generator
    lies in the field.  Candidates tried: the generator itself (real
    embedding), the other root of a quadratic, the field's recorded hint, and
    ``candidates``.
    """
    if field == QQ:
        return FieldAutomorphism(QQ, None)
    a = field.generator()
    tries = [a]
    if field.degree == 2:
        tries.append(field(-field.minpoly[1]) - a)
    hint = getattr(field, "conjugation", None)
    if hint is not None:
        tries.append(hint)
    tries.extend(candidates)
    roots = isolate_complex_roots(list(field.minpoly), 80)
    want = roots[embedding_index].conjugate()
    m = [field(c) for c in field.minpoly]
    for t in tries:
        if dense.evaluate(m, t):
            continue
        if embed(t, embedding_index, 80).overlaps(want):
            return FieldAutomorphism(field, t)
    raise NoConjugationAutomorphism(
        f"complex conjugation does not preserve {field.describe()}")
