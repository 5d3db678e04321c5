"""Critical values at infinity, the Milnor number at infinity, and the
multi-integer (mu, #B_aff, lambda, #B_inf, #B).

After a shear (x, y) -> (x + theta*y, y) making f monic in y up to a nonzero
constant, let R(x, t) = Res_y(f - t, f_y).  Its x-degree is constant for
generic t; a value c where the degree drops is a critical value at infinity
and the size of the drop is taken as lambda_c.  This degree-drop rule is the
working definition of lambda used throughout the package; ``cross_check``
compares it with Euler characteristics of fibres computed exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .critical import (NonIsolatedSingularities, critical_report, distinct_points,
                       multiplicity_of_value)
from .exactnum import dense
from .exactnum.factor import factor_rational
from .exactnum.fields import QQ, NumberField
from .polyring import AffineAuto, Poly, apply_affine, berkowitz, buchberger

MAX_SHEAR = 100


class ShearExhausted(ArithmeticError):
    pass


class CrossCheckMismatch(ArithmeticError):
    def __init__(self, message, rows):
        super().__init__(message)
        self.rows = rows


@dataclass(frozen=True)
class InfinityReport:
    shear: AffineAuto
    resultant_profile: Poly
    generic_x_degree: int
    leading_coefficient: Poly
    atypical_values: list = field(default_factory=list)
    notes: tuple = ()

    @property
    def lam(self):
        return sum(p.degree() * drop for p, drop in self.atypical_values)

    @property
    def n_binf(self):
        return sum(p.degree() for p, _ in self.atypical_values)

    @property
    def distinct_values(self):
        """Square-free polynomial in t whose roots are B_inf."""
        K = self.resultant_profile.field
        acc = [K.one]
        for p, _ in self.atypical_values:
            acc = dense.mul(acc, p.dense_coeffs())
        return Poly.from_dense(dense.monic(acc), "t", K)


@dataclass(frozen=True)
class MultiInteger:
    mu: int
    n_baff: int
    lam: int
    n_binf: int
    n_b: int
    critical: object = field(default=None, compare=False, repr=False)
    infinity: object = field(default=None, compare=False, repr=False)

    def as_tuple(self):
        return (self.mu, self.n_baff, self.lam, self.n_binf, self.n_b)

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.as_tuple()) + ")"


def monic_shear(f, start=0):
    """Smallest theta >= start with the y^deg coefficient of f(x + theta*y, y)
    a nonzero constant; returns (theta, sheared f, that coefficient)."""
    d = f.total_degree()
    x, y = f.gens[0], f.gens[1]
    for theta in range(start, start + MAX_SHEAR + 1):
        phi = AffineAuto.shear(theta, f.field)
        g = f if theta == 0 else apply_affine(f, phi, x, y)
        lead = g.coeff((0, d))
        if lead:
            return phi, g, lead
    raise ShearExhausted("no admissible shear found")


def _y_coefficients(g):
    """Dense list (in y) of polynomials in x."""
    coeffs = g.coefficients_in(g.gens[1])
    d = max(coeffs)
    zero = Poly.zero((g.gens[0],), g.field)
    return [coeffs.get(k, zero) for k in range(d + 1)]


def resultant_profile(g, lead):
    """R(x, t) = Res_y(g - t, g_y) for g of y-degree d with constant leading
    coefficient ``lead``, as b^d (-1)^(d-1) det(t - M) where M is
    multiplication by g on K[x][y]/(g_y) and b = d*lead."""
    K = g.field
    xg = (g.gens[0],)
    a = _y_coefficients(g)
    d = len(a) - 1
    b = lead * d
    zero = Poly.zero(xg, K)
    one = Poly.const(1, xg, K)
    gy = [a[k + 1] * (k + 1) for k in range(d)]
    inv_b = K.one / b
    n = d - 1

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

    cols = []
    for j in range(n):
        vec = [zero] * j + list(a)
        cols.append(reduce(vec))
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    cp = berkowitz(rows, zero, one) if n else [one]
    scale = b ** d * (-1 if (d - 1) % 2 else 1)
    gens = (g.gens[0], "t")
    R = {}
    for k, pk in enumerate(cp):
        for (e,), c in pk.terms.items():
            v = c * scale
            if v:
                R[(e, k)] = v
    return Poly(R, gens, K)


def binfinity_report(f, theta_start=0):
    """Critical values at infinity of f by the degree-drop rule."""
    if f.is_constant():
        raise ValueError("binfinity_report needs a nonconstant polynomial")
    phi, g, lead = monic_shear(f, theta_start)
    R = resultant_profile(g, lead)
    K = f.field
    xs = R.coefficients_in(R.gens[0])
    n = max(xs)
    rk = {k: p.dense_coeffs() for k, p in xs.items()}
    c = rk[n]
    h = dense.squarefree_part(c)
    pieces = []
    notes = []
    j = 1
    while len(h) > 1:
        nxt = rk.get(n - j, [])
        h_next = dense.gcd(h, nxt) if nxt else h
        if n - j < 0:
            notes.append("resultant vanishes identically on some fibre")
            h_next = [K.one]
        part = dense.exquo(h, h_next)
        if len(part) > 1:
            pieces.append((part, j))
        h = h_next
        j += 1
    atypical = []
    for part, drop in pieces:
        for q in _split(part, K):
            atypical.append((Poly.from_dense(q, "t", K), drop))
    atypical.sort(key=lambda pd: (pd[0].degree(), str(pd[0])))
    return InfinityReport(phi, R, n, Poly.from_dense(c, "t", K), atypical, tuple(notes))


def _split(p, K):
    if K == QQ:
        return [f for f, _ in factor_rational(p)[1]]
    return [dense.monic(p)]


def multiinteger(f, report=None, infinity=None):
    """The multi-integer (mu, #B_aff, lambda, #B_inf, #B) of f."""
    crit = report or critical_report(f)
    if crit.non_isolated:
        raise NonIsolatedSingularities("f has non-isolated singularities", crit)
    inf = infinity or binfinity_report(f)
    K = f.field
    prod = dense.mul(crit.distinct_values.dense_coeffs(), inf.distinct_values.dense_coeffs())
    nb = len(dense.squarefree_part(prod)) - 1
    return MultiInteger(crit.mu, crit.n_baff, inf.lam, inf.n_binf, nb, crit, inf)


# ---------------------------------------------------------------------------
# Euler characteristic oracle

def principal_subresultants(A, B, zero, one):
    """psc_0, ..., psc_n of dense A (degree m) and B (degree n <= m) over a
    commutative ring; psc_j is the leading minor of the j-th Sylvester-type
    matrix and vanishes exactly when deg gcd(A, B) > j (over a field)."""
    m, n = len(A) - 1, len(B) - 1
    out = []
    for j in range(n + 1):
        size = m + n - 2 * j
        if size == 0:
            out.append(one)
            continue
        width = m + n - j
        rows = []
        for k in range(n - j - 1, -1, -1):
            rows.append(_shifted_row(A, k, width, zero))
        for k in range(m - j - 1, -1, -1):
            rows.append(_shifted_row(B, k, width, zero))
        square = [r[:size] for r in rows]
        cp = berkowitz(square, zero, one)
        det = cp[0] if size % 2 == 0 else -cp[0]
        out.append(det)
    return out


def _shifted_row(P, shift, width, zero):
    """Coefficients of y^shift * P from y^(width-1) down to y^0."""
    row = [zero] * width
    for k, c in enumerate(P):
        row[width - 1 - (k + shift)] = c
    return row


def fibre_euler_characteristic(g, value):
    """chi(g = value) for g of y-degree d = total degree with constant leading
    coefficient in y.

    The projection to x is finite of degree d and unramified off the roots S
    of R(x) = Res_y(h, h_y), h = g - value.  Over a root x0 of S the fibre
    has d - j(x0) points, where j(x0) = deg gcd(h(x0, y), h_y(x0, y)) is the
    least j with psc_j(x0) != 0.  With T_1 = sqf(R) and T_(j+1) =
    gcd(T_j, psc_j), this gives chi = d - sum_j deg T_j.
    """
    L = value.field if hasattr(value, "field") else g.field
    gL = g if g.field == L else g.change_field(L)
    h = gL - value
    A = _y_coefficients(h)
    d = len(A) - 1
    B = [A[k + 1] * (k + 1) for k in range(d)]
    xg = (g.gens[0],)
    zero, one = Poly.zero(xg, L), Poly.const(1, xg, L)
    psc = principal_subresultants(A, B, zero, one)
    R = psc[0].dense_coeffs()
    if not R:
        raise NonIsolatedSingularities("the fibre is not reduced")
    T = dense.squarefree_part(R)
    chi = d
    j = 1
    while len(T) > 1:
        chi -= len(T) - 1
        T = dense.gcd(T, psc[j].dense_coeffs()) if psc[j] else T
        j += 1
    return chi


@dataclass(frozen=True)
class CrossCheckRow:
    value: Poly
    mu_c: int
    chi: int
    lam_oracle: int
    lam_drop: int

    @property
    def agrees(self):
        return self.lam_oracle == self.lam_drop


def cross_check(f, mi=None):
    """Compare lambda_c from the degree drop with chi(F_c) - chi(F_gen) - mu_c
    at every value of B_aff and B_inf.  Raises CrossCheckMismatch on any
    disagreement; returns (chi_generic, rows) otherwise."""
    if mi is None:
        mi = multiinteger(f)
    crit, inf = mi.critical, mi.infinity
    K = f.field
    g = apply_affine(f, inf.shear)
    V = dense.mul(crit.distinct_values.dense_coeffs(), inf.distinct_values.dense_coeffs())
    V = dense.squarefree_part(V)
    t0 = 0
    while not dense.evaluate(V, K(t0)) if len(V) > 1 else False:
        t0 += 1
    chi_gen = fibre_euler_characteristic(g, K(t0))
    rows = []
    for piece in _split(V, K) if len(V) > 1 else []:
        drop = _drop_for(piece, inf, K)
        for L, emb, c in _roots_of(piece, K):
            chi = fibre_euler_characteristic(g.map_coeffs(emb, L), c)
            cp = crit.char_poly.map_coeffs(emb, L)
            mu_c = _multiplicity(cp.dense_coeffs(), c)
            rows.append(CrossCheckRow(Poly.from_dense(piece, "t", K), mu_c, chi,
                                      chi - chi_gen - mu_c, drop))
    bad = [r for r in rows if not r.agrees]
    if bad:
        raise CrossCheckMismatch("degree drop disagrees with the Euler characteristic", rows)
    return chi_gen, rows


def _multiplicity(cp, c):
    m = 0
    lin = [-c, c.field.one if hasattr(c, "field") else 1]
    while cp:
        q, r = dense.divmod_(cp, lin)
        if r:
            break
        cp, m = q, m + 1
    return m


def _drop_for(piece, inf, K):
    for p, drop in inf.atypical_values:
        if len(dense.gcd(piece, p.dense_coeffs())) > 1:
            return drop
    return 0


def _roots_of(piece, K):
    """(field, embedding K -> field, root) for representative roots of the
    piece: one per irreducible factor over Q, every root otherwise."""
    if len(piece) == 2:
        return [(K, (lambda a: a), -piece[0] / piece[1])]
    if K == QQ:
        L = NumberField(piece, "c")
        return [(L, L, L.generator())]
    from .exactnum.adjoin import adjoin_root
    out = []
    for i in range(len(piece) - 1):
        adj = adjoin_root(K, piece, i)
        out.append((adj.field, adj.embed, adj.root))
    return out
