"""Line arrangements: splitting into linear forms and affine equivalences.

Two polynomials f, g are treated as equivalent when g o Phi = kappa * f for an
invertible affine Phi and a constant kappa allowed by a scalar policy:

* ``"one"``: kappa = 1, the strict identity g o Phi = f;
* ``"sign"`` (default): kappa = +1 or -1;
* ``"any"``: any nonzero kappa (equivalence up to a homothety of the target).

The constant is reported with every solution.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .exactnum import dense
from .exactnum.fields import QQ, NFElem, RationalFunctionField
from .exactnum.nfroots import roots_in_field
from .polyring import AffineAuto, Poly, apply_affine
from .polyring.errors import SingularMap
from .polyring.linalg import nullspace, solve


class NonLinearFactor(ValueError):
    def __init__(self, message, residual=None, partial=None):
        super().__init__(message)
        self.residual = residual
        self.partial = partial


class ArrangementMismatch(ValueError):
    pass


class UnderdeterminedEquivalence(ArithmeticError):
    """The line data does not pin down Phi (too few independent lines)."""


class DegenerateSpecialization(ValueError):
    pass


@dataclass(frozen=True)
class Line:
    """a*x + b*y + c, scaled so the first nonzero of (a, b) is 1."""
    a: object
    b: object
    c: object

    @classmethod
    def normalized(cls, a, b, c):
        if not a and not b:
            raise ValueError("a line needs (a, b) != (0, 0)")
        lead = a if a else b
        inv = 1 / lead
        return cls(a * inv, b * inv, c * inv)

    def poly(self, gens, field):
        X = Poly.gen(gens[0], gens, field)
        Y = Poly.gen(gens[1], gens, field)
        return X * self.a + Y * self.b + self.c

    def direction(self):
        return (self.a, self.b)

    def is_parallel(self, other):
        return self.a == other.a and self.b == other.b

    def pullback(self, phi):
        """The line (self o phi), normalized."""
        a = self.a * phi.a + self.b * phi.c
        b = self.a * phi.b + self.b * phi.d
        c = self.a * phi.e + self.b * phi.f + self.c
        return Line.normalized(a, b, c)

    def map(self, fn):
        return Line.normalized(fn(self.a), fn(self.b), fn(self.c))

    def text(self, gens=("x", "y"), field=None):
        from .exactnum.fields import QQ
        return str(self.poly(gens, field or _field_of(self.a) or QQ))


def _field_of(v):
    return getattr(v, "field", None)


@dataclass(frozen=True)
class LineArrangement:
    lines: tuple
    scalar: object
    gens: tuple
    field: object

    @property
    def degree(self):
        return sum(m for _, m in self.lines)

    def multiplicities(self):
        return sorted(m for _, m in self.lines)

    def expand(self):
        acc = Poly.const(self.scalar, self.gens, self.field)
        for line, m in self.lines:
            acc = acc * line.poly(self.gens, self.field) ** m
        return acc

    def distinct_lines(self):
        return [l for l, _ in self.lines]

    def map(self, fn, field):
        return LineArrangement(tuple((l.map(fn), m) for l, m in self.lines), fn(self.scalar),
                               self.gens, field)


def _top_form(f):
    d = f.total_degree()
    return Poly({m: c for m, c in f.terms.items() if sum(m) == d}, f.gens, f.field), d


def _candidate_lines(f):
    K = f.field
    xg, yg = f.gens[0], f.gens[1]
    top, d = _top_form(f)
    # directions: top(x, 1) has roots r <-> factors x - r*y; missing degree <-> y
    px = top.evaluate({yg: K.one}).dense_coeffs() if top.terms else []
    dirs = [(K.one, -r) for r, _ in roots_in_field(px, K)]
    if len(px) - 1 < d:
        dirs.append((K.zero, K.one))
    out = []
    X = Poly.gen(xg, f.gens, K)
    Y = Poly.gen(yg, f.gens, K)
    for a, b in dirs:
        if a:
            # u = x + b*y: substitute x = u - b*y, u written in place of x
            g = f.compose({xg: X - Y * b})
            coeffs = g.coefficients_in(yg)
            lc = coeffs[max(coeffs)]
            roots = roots_in_field(lc.dense_coeffs(), K)
            out.extend(Line.normalized(K.one, b, -u) for u, _ in roots)
        else:
            coeffs = f.coefficients_in(xg)
            lc = coeffs[max(coeffs)]
            roots = roots_in_field(lc.dense_coeffs(), K)
            out.extend(Line.normalized(K.zero, K.one, -v) for v, _ in roots)
    return out


def split_lines(f):
    """Write f as scalar * product of lines; raises NonLinearFactor when a
    factor of degree >= 2 (over f's coefficient field) remains."""
    if not f.terms:
        raise ValueError("the zero polynomial is not an arrangement")
    K = f.field
    rest = f
    found = []
    for line in _candidate_lines(f):
        lp = line.poly(f.gens, K)
        m = 0
        while rest.total_degree() > 0:
            q, r = rest.divmod_lex(lp)
            if r.terms:
                break
            rest, m = q, m + 1
        if m:
            found.append((line, m))
    found.sort(key=lambda lm: _line_key(lm[0]))
    arr = LineArrangement(tuple(found), rest.constant_coeff() if rest.is_constant() else None,
                          f.gens, K)
    if not rest.is_constant():
        raise NonLinearFactor(f"non-linear factor {rest}", rest, arr)
    return arr


def _coeff_key(v):
    if isinstance(v, NFElem):
        return (1, tuple(v.coords))
    if hasattr(v, "num"):
        return (2, str(v))
    return (0, v)


def _line_key(line):
    return (_coeff_key(line.a) != (0, 0), [_coeff_key(v) for v in (line.a, line.b, line.c)])


@dataclass(frozen=True)
class Equivalence:
    """g o phi = scalar * f."""
    phi: AffineAuto
    scalar: object

    def __str__(self):
        return f"{self.phi}   [g o Phi = ({self.scalar}) * f]"


def _frame(lines):
    """Indices of three pairwise non-parallel, non-concurrent lines."""
    n = len(lines)
    for i, j, k in itertools.combinations(range(n), 3):
        a, b, c = lines[i], lines[j], lines[k]
        if a.is_parallel(b) or a.is_parallel(c) or b.is_parallel(c):
            continue
        det = (a.a * (b.b * c.c - b.c * c.b) - a.b * (b.a * c.c - b.c * c.a)
               + a.c * (b.a * c.b - b.b * c.a))
        if det:
            return (i, j, k)
    return None


def solve_frame(f_lines, g_lines, field):
    """Affine phi with g_lines[t] o phi proportional to f_lines[t] for each t,
    or None.  Unknowns: a, b, c, d, e, f and one scale per pair."""
    n = len(f_lines)
    cols = 6 + n
    rows, rhs = [], []
    Z, O = field.zero, field.one
    for t, (l, m) in enumerate(zip(f_lines, g_lines)):
        p, q, r = m.a, m.b, m.c
        for comp, coeffs in ((l.a, (p, Z, q, Z, Z, Z)), (l.b, (Z, p, Z, q, Z, Z)),
                             (l.c, (Z, Z, Z, Z, p, q))):
            row = list(coeffs) + [Z] * n
            row[6 + t] = -comp
            rows.append(row)
            rhs.append(-r if comp is l.c else Z)
    sol = solve(rows, rhs, field)
    if sol is None:
        return None, 0
    kernel = nullspace(rows, field, cols)
    kernel = [v for v in kernel if any(v[:6])]
    if kernel:
        return sol, len(kernel)
    try:
        return AffineAuto(*sol[:6], field=field), 0
    except SingularMap:
        return None, 0


def _lift_to_common(f, g):
    if f.field == g.field:
        return f, g
    from .exactnum.adjoin import join_fields
    adj, into1, into2 = join_fields(f.field, g.field)
    return f.map_coeffs(into1, adj.field), g.map_coeffs(into2, adj.field)


SCALAR_POLICIES = ("one", "sign", "any")


def _scalar_allowed(kappa, scalars):
    if scalars == "any":
        return True
    if scalars == "sign":
        return kappa == 1 or kappa == -1
    return kappa == 1


def _check_policy(scalars):
    if scalars not in SCALAR_POLICIES:
        raise ValueError(f"unknown scalar policy {scalars!r}; expected one of {SCALAR_POLICIES}")


def find_equivalences(f, g, f_lines=None, g_lines=None, scalars="sign"):
    """All affine Phi with g o Phi = kappa * f, kappa allowed by ``scalars``.

    Polynomials over different number fields are first embedded into a
    common field.  Pre-split arrangements may be passed to avoid re-splitting.
    """
    _check_policy(scalars)
    if f.field != g.field and QQ in (f.field, g.field):
        K = g.field if f.field == QQ else f.field
        f, g = f.change_field(K), g.change_field(K)
        f_lines = f_lines.map(K, K) if f_lines is not None and f_lines.field == QQ else f_lines
        g_lines = g_lines.map(K, K) if g_lines is not None and g_lines.field == QQ else g_lines
    if f.field != g.field and f_lines is None:
        fa, ga = split_lines(f), split_lines(g)
        from .exactnum.adjoin import join_fields
        adj, into1, into2 = join_fields(f.field, g.field)
        L = adj.field
        return find_equivalences(f.map_coeffs(into1, L), g.map_coeffs(into2, L),
                                 fa.map(into1, L), ga.map(into2, L), scalars)
    K = f.field
    fa = f_lines or split_lines(f)
    ga = g_lines or split_lines(g)
    if fa.degree != ga.degree or fa.multiplicities() != ga.multiplicities():
        raise ArrangementMismatch("different degrees or multiplicity patterns")
    fl = [l for l, _ in fa.lines]
    gl = [l for l, _ in ga.lines]
    fm = {l: m for l, m in fa.lines}
    gm = {l: m for l, m in ga.lines}
    frame = _frame(fl)
    results = []
    if frame is None:
        warnings.warn("fewer than three lines in general position: affine search may be incomplete")
        return _find_by_bijection(f, g, fa, ga, scalars)
    tri = [fl[i] for i in frame]
    for choice in itertools.permutations(range(len(gl)), 3):
        gtri = [gl[j] for j in choice]
        if any(fm[a] != gm[b] for a, b in zip(tri, gtri)):
            continue
        phi, free = solve_frame(tri, gtri, K)
        if phi is None:
            continue
        pulled = {}
        for m in gl:
            pulled[m.pullback(phi)] = gm[m]
        if pulled != fm:
            continue
        h = apply_affine(g, phi)
        kappa = _ratio(h, f)
        if (kappa is not None and _scalar_allowed(kappa, scalars)
                and Equivalence(phi, kappa) not in results):
            results.append(Equivalence(phi, kappa))
    results.sort(key=lambda e: [_coeff_key(getattr(e.phi, n)) for n in "abcdef"])
    return results


def _find_by_bijection(f, g, fa, ga, scalars):
    K = f.field
    fl = [l for l, _ in fa.lines]
    gl = [l for l, _ in ga.lines]
    fm = dict(fa.lines)
    gm = dict(ga.lines)
    results = []
    for perm in itertools.permutations(range(len(gl))):
        pairs = [(fl[i], gl[j]) for i, j in enumerate(perm)]
        if any(fm[a] != gm[b] for a, b in pairs):
            continue
        if any(pairs[i][0].is_parallel(pairs[j][0]) != pairs[i][1].is_parallel(pairs[j][1])
               for i in range(len(pairs)) for j in range(i)):
            continue
        phi, free = solve_frame([a for a, _ in pairs], [b for _, b in pairs], K)
        if free:
            raise UnderdeterminedEquivalence(
                f"a {free}-parameter family of maps matches the lines")
        if phi is None:
            continue
        kappa = _ratio(apply_affine(g, phi), f)
        if (kappa is not None and _scalar_allowed(kappa, scalars)
                and Equivalence(phi, kappa) not in results):
            results.append(Equivalence(phi, kappa))
    return results


def _ratio(h, f):
    """kappa with h = kappa * f, or None."""
    if not f.terms or set(h.terms) != set(f.terms):
        return None
    m = next(iter(f.terms))
    kappa = h.terms[m] / f.terms[m]
    if all(h.terms[k] == kappa * c for k, c in f.terms.items()):
        return kappa
    return None


# ---------------------------------------------------------------------------
# partners within a one-parameter family

@dataclass(frozen=True)
class PartnerSet:
    """{s' : f_s0 ~ f_s'} as explicit values in the field of s0, together
    with the monic polynomial having exactly those roots."""
    values: tuple
    condition: object
    witnesses: tuple

    def __contains__(self, v):
        return any(v == w for w in self.values)


def equivalence_partners(family, s0, scalars="sign"):
    """Parameters s' with f_s0 equivalent to f_s' (affine Phi, constant
    kappa allowed by ``scalars``).  The family's generic lines are matched against those of f_s0;
    every bijection consistent with a frame of three lines gives polynomial
    conditions on s', whose roots (and the finitely many parameters where the
    generic solution degenerates) are re-verified by find_equivalences."""
    _check_policy(scalars)
    f0 = family.specialize(s0)
    K = f0.field
    try:
        fa = split_lines(f0)
    except NonLinearFactor as exc:
        raise DegenerateSpecialization("specialization is not a line arrangement") from exc
    generic = family.generic_lines()
    if [m for _, m in generic.lines] and sorted(m for _, m in generic.lines) != fa.multiplicities():
        raise DegenerateSpecialization("specialization has a different line pattern")
    FK = RationalFunctionField(family.param, K)
    emb = _ratfunc_lift(FK)
    gl = [l.map(emb) for l, _ in generic.lines]
    gmult = [m for _, m in generic.lines]
    fl = [l.map(FK) for l, _ in fa.lines]
    fmult = dict(zip(fl, [m for _, m in fa.lines]))
    frame = _frame([l for l, _ in fa.lines])
    if frame is None:
        raise DegenerateSpecialization("no three lines in general position")
    tri = [fl[i] for i in frame]
    conditions = []
    special = []
    for choice in itertools.permutations(range(len(gl)), 3):
        if any(fmult[a] != gmult[j] for a, j in zip(tri, choice)):
            continue
        phi, free = solve_frame(tri, [gl[j] for j in choice], FK)
        if phi is None:
            continue
        for v in (phi.a, phi.b, phi.c, phi.d, phi.e, phi.f):
            special.append(v.den)
        special.append(phi.det().num)
        others = [j for j in range(len(gl)) if j not in choice]
        targets = [l for l in fl if l not in tri]
        for perm in itertools.permutations(others):
            if any(fmult[t] != gmult[j] for t, j in zip(targets, perm)):
                continue
            eqs = []
            for t, j in zip(targets, perm):
                m = gl[j]
                a = m.a * phi.a + m.b * phi.c
                b = m.a * phi.b + m.b * phi.d
                c = m.a * phi.e + m.b * phi.f + m.c
                eqs.extend([a * t.b - b * t.a, a * t.c - c * t.a, b * t.c - c * t.b])
            g = []
            for e in eqs:
                if e:
                    g = dense.gcd(g, e.num) if g else dense.monic(e.num)
            if not g and not any(eqs):
                raise UnderdeterminedEquivalence("every member matches: the family is constant")
            conditions.append(g)
    candidates = []
    for poly in conditions + special:
        if len(poly) > 1:
            for r, _ in roots_in_field(poly, K):
                if r not in candidates:
                    candidates.append(r)
    values, witnesses = [], []
    for r in candidates:
        try:
            f1 = family.specialize(r)
            eq = find_equivalences(f0, f1, fa, split_lines(f1), scalars)
        except (NonLinearFactor, ArrangementMismatch):
            continue
        if eq:
            values.append(r)
            witnesses.append(eq[0])
    order = sorted(range(len(values)), key=lambda i: _coeff_key(values[i]))
    values = tuple(values[i] for i in order)
    witnesses = tuple(witnesses[i] for i in order)
    cond = [K.one]
    for v in values:
        cond = dense.mul(cond, [-v, K.one])
    return PartnerSet(values, Poly.from_dense(cond, family.param, K), witnesses)


def _ratfunc_lift(FK):
    """Map an element of Q(s) into K(s)."""
    base = FK.base

    def lift(v):
        if hasattr(v, "num"):
            return FK.from_dense([base(c) for c in v.num], [base(c) for c in v.den])
        return FK(base(v))
    return lift
