"""One-parameter families f_s: generic invariants over Q(s), the exceptional
parameter set, specialization, coefficient conjugation and reciprocal root
structure.

The exceptional set is found by candidate-then-verify.  Candidates are the
parameter values where the generic computation can fail to specialize:

* poles of the characteristic polynomials of multiplication by x and by y on
  the generic Milnor algebra (a critical point escapes to infinity, so mu
  may drop; mu can never rise while critical points stay isolated);
* zeros of the content of Res_y(f_x, f_y) (non-isolated singularities, in
  particular non-reduced members);
* poles, leading coefficients and the discriminant of the square-free
  critical-value polynomial (critical values collide);
* the leading y-coefficient after the shear and the leading x-coefficient
  c(t) of Res_y(f - t, f_y) (the infinity computation changes shape).

Every irreducible candidate factor is then checked by exact specialization in
Q[sigma]/(factor) and kept only if the multi-integer differs from the generic
one or the member has non-isolated singularities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .atinfinity import (MultiInteger, _y_coefficients, binfinity_report, monic_shear,
                         multiinteger)
from .critical import NonIsolatedSingularities, critical_report
from .exactnum import dense
from .exactnum.adjoin import conjugation, join_fields
from .exactnum.roots import isolate_complex_roots
from .exactnum.factor import factor_rational
from .exactnum.fields import QQ, NFElem, NumberField, RatFunc, RationalFunctionField
from .polyring import Poly, apply_affine, berkowitz, charpoly
from .polyring.resultant import discriminant


class NonIsolatedGenerically(ArithmeticError):
    pass


@dataclass(frozen=True)
class AlgebraicValue:
    """A root of an irreducible rational polynomial, with the complex
    embedding (root index in (real, imaginary) order) used for numerics and
    conjugation."""
    field: object
    element: object
    embedding_index: int = 0

    @classmethod
    def root_of(cls, minpoly, index=0, gen="k"):
        """The ``index``-th complex root of a rational polynomial, roots
        ordered by real part then imaginary part.  A reducible input is
        replaced by the irreducible factor carrying that root."""
        coeffs = minpoly.dense_coeffs() if hasattr(minpoly, "dense_coeffs") else list(minpoly)
        coeffs = dense.squarefree_part(dense.to_fractions(coeffs))
        if len(coeffs) < 2:
            raise ValueError("root() needs a nonconstant polynomial")
        roots = isolate_complex_roots(coeffs, 80)
        if not 0 <= index < len(roots):
            raise IndexError(f"root index {index} out of range 0..{len(roots) - 1}")
        target = roots[index]
        for q, _ in factor_rational(coeffs)[1]:
            if len(q) == 2:
                r = -q[0] / q[1]
                if target.contains_point(r):
                    return cls(QQ, r, 0)
                continue
            sub = isolate_complex_roots(q, 80)
            hit = [j for j, b in enumerate(sub) if b.overlaps(target)]
            if hit:
                return cls(NumberField(q, gen), NumberField(q, gen).generator(), hit[0])
        raise ArithmeticError("could not locate the requested root")


class ParametricFamily:
    """f(x, y; s) with coefficients polynomial in the parameter s."""

    def __init__(self, poly, param="s", variables=None):
        variables = tuple(variables or [g for g in poly.gens if g != param][:2])
        if len(variables) != 2:
            raise ValueError("a family needs exactly two variables")
        self.param = param
        self.variables = variables
        self.poly = poly.reorder(variables + (param,))
        self.base = poly.field
        self._generic = None
        self._lines = None

    @classmethod
    def from_spec(cls, spec):
        if spec.param is None:
            raise ValueError("input declares no parameter")
        return cls(spec.poly, spec.param, spec.vars)

    @property
    def top_degree_depends_on_param(self):
        d = max(m[0] + m[1] for m in self.poly.terms)
        return any(m[2] for m in self.poly.terms if m[0] + m[1] == d)

    def generic(self):
        """The member over Q(s) (or K(s) for the base field K)."""
        if self._generic is None:
            F = RationalFunctionField(self.param, self.base)
            out = {}
            for m, c in self.poly.terms.items():
                key = m[:2]
                term = [self.base.zero] * m[2] + [c]
                out[key] = dense.add(out.get(key, []), term)
            terms = {k: F.from_dense(v) for k, v in out.items() if dense.strip(v)}
            self._generic = Poly(terms, self.variables, F)
        return self._generic

    def specialize(self, s0):
        """f_{s0}.  ``s0`` may be a rational, a number field element or an
        AlgebraicValue; the result lives over the field of s0."""
        if isinstance(s0, AlgebraicValue):
            s0 = s0.element
        if isinstance(s0, NFElem):
            L = s0.field
            f = self.poly if self.base == L else self.poly.change_field(L)
        else:
            L = self.base
            s0 = L(s0)
            f = self.poly
        return f.evaluate({self.param: s0})

    def generic_lines(self):
        from .arrangement import split_lines
        if self._lines is None:
            self._lines = split_lines(self.generic())
        return self._lines


# ---------------------------------------------------------------------------
# generic analysis

@dataclass(frozen=True)
class GenericResult:
    multiinteger: MultiInteger
    candidates: tuple
    sources: dict = field(default_factory=dict, compare=False)


def _num_den(v):
    if isinstance(v, RatFunc):
        return v.num, v.den
    return [v] if v else [], [QQ.one]


def _rf_poly_numerators(coeffs):
    """numerators of a list of rational functions, and their denominators"""
    nums, dens = [], []
    for c in coeffs:
        n, d = _num_den(c)
        if n:
            nums.append(n)
        if len(d) > 1:
            dens.append(d)
    return nums, dens


def _content(nums):
    g = []
    for n in nums:
        g = dense.gcd(g, n) if g else dense.monic(n)
        if len(g) == 1:
            break
    return g


def _mult_det(g, h):
    """Res_y(h, g_y) up to a nonzero constant factor, via the determinant of
    multiplication by h on K[x][y]/(g_y)."""
    K = g.field
    xg = (g.gens[0],)
    a = _y_coefficients(g)
    d = len(a) - 1
    gy = [a[k + 1] * (k + 1) for k in range(d)]
    n = d - 1
    zero, one = Poly.zero(xg, K), Poly.const(1, xg, K)
    inv_b = K.one / gy[-1].constant_coeff()
    hc = _y_coefficients(h) if h.degree(h.gens[1]) >= 0 and h.terms else [zero]

    def reduce(vec):
        vec = list(vec)
        for top in range(len(vec) - 1, n - 1, -1):
            c = vec[top]
            if not c:
                continue
            q = c * inv_b
            vec[top] = zero
            for k in range(n):
                if gy[k]:
                    vec[top - n + k] = vec[top - n + k] - q * gy[k]
        return vec[:n] + [zero] * (n - len(vec))

    cols = [reduce([zero] * j + list(hc)) for j in range(n)]
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    if n == 0:
        return one
    cp = berkowitz(rows, zero, one)
    return cp[0]


def generic_multiinteger(fam):
    """Multi-integer of the generic member and the degeneration candidates
    (dense rational polynomials in s)."""
    F = fam.generic()
    if F.is_constant():
        raise ValueError("family is constant")
    crit = critical_report(F)
    if crit.non_isolated:
        raise NonIsolatedGenerically("gcd(f_x, f_y) is nonconstant over Q(s)")
    inf = binfinity_report(F)
    mi = multiinteger(F, crit, inf)
    sources = {}

    def add(label, polys):
        for p in polys:
            p = dense.strip(list(p))
            if len(p) > 1:
                sources.setdefault(label, []).append(dense.monic(p))

    # critical points escaping to infinity
    if crit.basis is not None and crit.mu:
        gb = crit.basis
        for v in gb.gens:
            M = gb.multiplication_matrix(Poly.gen(v, gb.gens, gb.field))
            _, dens = _rf_poly_numerators(charpoly(M))
            add("pole of coordinate charpoly", dens)
    # collisions of critical values
    V = crit.distinct_values.dense_coeffs()
    nums, dens = _rf_poly_numerators(V)
    add("pole of critical-value polynomial", dens)
    Vall = dense.squarefree_part(dense.mul(V, inf.distinct_values.dense_coeffs()))
    _, dens = _rf_poly_numerators(Vall)
    add("pole of bifurcation polynomial", dens)
    if len(Vall) > 2:
        D = discriminant(Poly.from_dense(Vall, "t", F.field))
        add("discriminant of bifurcation polynomial", [D.num])
        add("discriminant of bifurcation polynomial", [D.den])
    # infinity data
    phi, g, lead = monic_shear(F)
    n, d = _num_den(lead)
    add("shear leading coefficient", [n, d])
    c = inf.leading_coefficient.dense_coeffs()
    nums, dens = _rf_poly_numerators(c)
    add("leading x-coefficient of Res_y(f - t, f_y)", [_content(nums)] + dens)
    if len(c) > 1:
        add("leading x-coefficient of Res_y(f - t, f_y)", [_num_den(c[-1])[0]])
    # non-isolated singularities / non-reduced members
    gx = g.derivative(g.gens[0])
    r = _mult_det(g, gx) if gx.terms else None
    if r is not None:
        nums, dens = _rf_poly_numerators([cf for cf in r.terms.values()])
        add("content of Res_y(f_x, f_y)", [_content(nums)] + dens)
    R0 = inf.resultant_profile.evaluate({"t": F.field.zero})
    if isinstance(R0, Poly):
        nums, dens = _rf_poly_numerators(list(R0.terms.values()))
        add("content of Res_y(f, f_y)", [_content(nums)] + dens)
    cands = []
    for label, polys in sources.items():
        for p in polys:
            for q, _ in factor_rational(p)[1]:
                if q not in cands:
                    cands.append(q)
    cands.sort(key=lambda q: (len(q), list(reversed(q))))
    return GenericResult(mi, tuple(tuple(q) for q in cands), sources)


@dataclass(frozen=True)
class RootVerdict:
    factor: tuple
    multiinteger: MultiInteger | None
    non_isolated: bool
    exceptional: bool

    def label(self):
        if self.non_isolated:
            return "non-isolated singularities"
        return str(self.multiinteger)


@dataclass(frozen=True)
class ExceptionalSet:
    polynomial: tuple
    factors: tuple
    generic: MultiInteger
    per_root: tuple
    candidates: tuple

    def poly(self, var="s"):
        return Poly.from_dense(list(self.polynomial), var)

    @property
    def is_empty(self):
        return len(self.polynomial) <= 1


def specialize_at_factor(fam, q, gen="sigma"):
    """f at a root of the irreducible rational polynomial q."""
    if len(q) == 2:
        return fam.specialize(-Fraction(q[0]) / Fraction(q[1]))
    K = NumberField(list(q), gen)
    return fam.specialize(K.generator())


def verify_candidate(fam, q, generic):
    f = specialize_at_factor(fam, q)
    crit = critical_report(f)
    if crit.non_isolated:
        return RootVerdict(tuple(q), None, True, True)
    mi = multiinteger(f, crit)
    return RootVerdict(tuple(q), mi, False, mi.as_tuple() != generic.as_tuple())


def exceptional_set(fam, generic=None):
    """Exact exceptional parameter set: candidates verified one irreducible
    factor at a time."""
    gr = generic or generic_multiinteger(fam)
    verdicts = [verify_candidate(fam, q, gr.multiinteger) for q in gr.candidates]
    kept = [v for v in verdicts if v.exceptional]
    poly = [QQ.one]
    for v in kept:
        poly = dense.mul(poly, list(v.factor))
    return ExceptionalSet(tuple(poly), tuple(v.factor for v in kept), gr.multiinteger,
                          tuple(verdicts), gr.candidates)


# ---------------------------------------------------------------------------
# conjugation and reciprocal structure

def conj_coeffs(f, embedding_index=0, automorphism=None):
    """Apply complex conjugation (relative to one embedding) to every
    coefficient.  Raises NoConjugationAutomorphism when conjugation does not
    preserve the coefficient field."""
    if f.field == QQ:
        return f
    aut = automorphism or conjugation(f.field, embedding_index)
    return f.map_coeffs(aut, f.field)


@dataclass(frozen=True)
class ConjugatePair:
    """f_k and f_kbar for a non-real root k of an irreducible q, both written
    over one field L containing k and kbar, with complex conjugation on L."""
    field: object
    k: object
    kbar: object
    f: object
    fbar: object
    conj: object
    index: int
    conj_index: int


def conjugate_index(q, index):
    roots = isolate_complex_roots(q, 80)
    want = roots[index].conjugate()
    hits = [j for j, b in enumerate(roots) if b.overlaps(want)]
    if len(hits) != 1:
        raise ArithmeticError("could not match the conjugate root")
    return hits[0]


def conjugate_pair(family, q, index=0, gen="g"):
    """Join Q(k) and Q(kbar), k the ``index``-th root of q (roots ordered by
    real then imaginary part), and return f_k, f_kbar over the joined field."""
    q = dense.to_fractions(q.dense_coeffs() if hasattr(q, "dense_coeffs") else q)
    j = conjugate_index(q, index)
    if j == index:
        raise ValueError("the chosen root is real")
    K = NumberField(q, "k")
    adj, into1, into2 = join_fields(K, K, index, j, gen)
    L = adj.field
    k, kbar = into1(K.generator()), into2(K.generator())
    conj = conjugation(L, adj.embedding_index, [kbar + k * adj.shift, k + kbar * adj.shift])
    f = family.specialize(K.generator()).map_coeffs(into1, L)
    fbar = family.specialize(K.generator()).map_coeffs(into2, L)
    return ConjugatePair(L, k, kbar, f, fbar, conj, index, j)


@dataclass(frozen=True)
class ReciprocalReport:
    is_palindromic: bool
    closed_under_inversion: bool
    unit_modulus_root_exists: bool
    resolvent: tuple | None
    method: str

    @property
    def resolvent_discriminant(self):
        """b^2 - 4ac of the resolvent, scaled to integer coefficients, when it
        is quadratic; negative means both resolvent roots are non-real."""
        if self.resolvent is None or len(self.resolvent) != 3:
            return None
        c, b, a = dense.primitive_integer(list(self.resolvent))
        return b * b - 4 * a * c


def _resolvent(q):
    """For palindromic q of even degree 2m: R(u) of degree m with
    q(s) = s^m R(s + 1/s)."""
    m = (len(q) - 1) // 2
    # s^k + s^-k = T_k(u) with T_0 = 2, T_1 = u, T_k = u T_(k-1) - T_(k-2)
    u = [Fraction(0), Fraction(1)]
    T = [[Fraction(2)], u]
    for k in range(2, m + 1):
        T.append(dense.sub(dense.mul(u, T[k - 1]), T[k - 2]))
    R = [Fraction(q[m])]
    for k in range(1, m + 1):
        R = dense.add(R, dense.scale(T[k], Fraction(q[m + k])))
    return dense.strip(R)


def sturm_count(p, lo, hi):
    """Number of distinct real roots of the rational polynomial p in the
    closed interval [lo, hi]."""
    p = dense.squarefree_part(dense.to_fractions(p))
    if len(p) <= 1:
        return 0
    seq = [p, dense.derivative(p)]
    while len(seq[-1]) > 1:
        r = dense.rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(dense.neg(r))

    def changes(x):
        signs = [v for v in (dense.evaluate(q, x) for q in seq) if v]
        return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))

    count = changes(lo) - changes(hi)
    return count + (1 if not dense.evaluate(p, lo) else 0)


def reciprocal_root_structure(q):
    """Palindromic symmetry, closure of the roots under r -> 1/r, and whether
    some root has modulus one.  Exact for every degree: unit-modulus roots of
    a real polynomial are common roots with its reversal, and on a palindromic
    polynomial they are the real roots of the resolvent in [-2, 2]."""
    q = dense.to_fractions(q.dense_coeffs() if hasattr(q, "dense_coeffs") else q)
    if len(q) < 2:
        raise ValueError("need a nonconstant polynomial")
    if not q[0]:
        raise ValueError("q(0) = 0: the root 0 has no inverse")
    rev = dense.reverse(q)
    pal = rev == q
    closed = dense.monic(rev) == dense.monic(q)
    g = q if closed else dense.gcd(q, rev)
    if len(g) < 2:
        return ReciprocalReport(pal, closed, False, None, "gcd with reversal")
    for r in (Fraction(1), Fraction(-1)):
        if not dense.evaluate(g, r):
            return ReciprocalReport(pal, closed, True, None, "root at +-1")
    # no root at +-1, so g is palindromic of even degree
    R = _resolvent(dense.monic(g))
    exists = sturm_count(R, Fraction(-2), Fraction(2)) > 0
    method = "quadratic resolvent" if len(R) <= 3 else "sturm count on resolvent"
    return ReciprocalReport(pal, closed, exists, tuple(R), method)
