"""Affine critical data of f: C^2 -> C.

The Milnor number is the dimension of K[x,y]/(f_x, f_y).  Critical values and
their multiplicities come from the characteristic polynomial of
multiplication by f on that algebra (Stickelberger): its roots are the values
of f at the critical points, each repeated by the local Milnor number.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exactnum import dense
from .exactnum.factor import factor_rational
from .exactnum.fields import NumberField, QQ
from .polyring import Poly, buchberger, charpoly
from .polyring.linalg import SquareMatrix, minpoly, rank

INFINITE = math.inf


class NonIsolatedSingularities(ArithmeticError):
    """The gradient ideal is not zero-dimensional."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotACriticalValue(ValueError):
    pass


@dataclass(frozen=True)
class CriticalReport:
    mu: float
    char_poly: Poly | None
    distinct_values: Poly | None
    n_baff: int | None
    value_multiplicities: list = field(default_factory=list)
    non_isolated: bool = False
    basis: object = field(default=None, repr=False, compare=False)

    @property
    def is_isolated(self):
        return not self.non_isolated


def gradient(f, xvar=None, yvar=None):
    xvar = xvar or f.gens[0]
    yvar = yvar or f.gens[1]
    return f.derivative(xvar), f.derivative(yvar)


def gradient_basis(f, order="degrevlex"):
    fx, fy = gradient(f)
    gens = [g for g in (fx, fy) if g]
    if not gens:
        return None
    return buchberger(gens, order)


def critical_report(f, order="degrevlex"):
    """Milnor number, critical-value polynomial and multiplicities of f.

    Non-isolated singularities are reported in the result (``mu`` infinite),
    not raised.
    """
    if f.nvars != 2:
        raise ValueError("critical_report expects a bivariate polynomial")
    if f.is_constant():
        raise ValueError("critical_report needs a nonconstant polynomial")
    gb = gradient_basis(f, order)
    K = f.field
    if gb is not None and gb.is_unit_ideal():
        one = Poly.const(1, ("t",), K)
        return CriticalReport(0, one, one, 0, [], False, gb)
    if gb is None or not gb.is_zero_dimensional():
        return CriticalReport(INFINITE, None, None, None, [], True, gb)
    M = gb.multiplication_matrix(f)
    cp = charpoly(M)
    sqf = dense.squarefree_part(cp)
    mults = value_multiplicities(cp, K)
    return CriticalReport(
        mu=M.dimension,
        char_poly=Poly.from_dense(cp, "t", K),
        distinct_values=Poly.from_dense(sqf, "t", K),
        n_baff=len(sqf) - 1,
        value_multiplicities=mults,
        non_isolated=False,
        basis=gb,
    )


def value_multiplicities(cp, K):
    """(factor, multiplicity) pairs for the distinct critical values.

    Over Q the factors are irreducible; over other fields they are the coprime
    pieces of the square-free decomposition, with linear factors split off
    when the roots lie in the field.
    """
    out = []
    if K == QQ:
        _, facs = factor_rational(cp)
        for f, m in facs:
            out.append((Poly.from_dense(f, "t", K), m))
        return out
    for f, m in dense.squarefree_decomposition(cp):
        out.append((Poly.from_dense(f, "t", K), m))
    return out


def multiplicity_of_value(report, value):
    """Multiplicity of the critical value ``value`` (an element of the
    coefficient field) as an eigenvalue of multiplication by f."""
    cp = report.char_poly.dense_coeffs()
    lin = [-value, report.char_poly.field.one]
    m = 0
    while True:
        q, r = dense.divmod_(cp, lin)
        if r:
            return m
        cp = q
        m += 1


def _value_field(f, value):
    """(field L containing the coefficients and the value, embedding K -> L,
    value as an element of L)."""
    K = f.field
    if isinstance(value, (Poly, list, tuple)):
        coeffs = value.dense_coeffs() if isinstance(value, Poly) else [K(c) for c in value]
        coeffs = dense.strip(list(coeffs))
        if len(coeffs) == 2:
            return K, (lambda a: a), -coeffs[0] / coeffs[1]
        if len(coeffs) < 2:
            raise NotACriticalValue("constant minimal polynomial")
        if K == QQ:
            L = NumberField(coeffs, "c")
            return L, L, L.generator()
        from .exactnum.adjoin import adjoin_root
        adj = adjoin_root(K, coeffs, 0)
        return adj.field, adj.embed, adj.root
    return K, (lambda a: a), K(value)


def fiber_point_count(f, value, report=None):
    """(number of distinct critical points on f = value, dim of the local
    algebra K[x,y]/(f_x, f_y, f - value)).

    ``value`` is a field element, or the minimal polynomial of an algebraic
    critical value (dense coefficients or a univariate Poly).
    """
    if report is None:
        report = critical_report(f)
    if report.non_isolated:
        raise NonIsolatedSingularities("critical locus is not finite", report)
    L, emb, c = _value_field(f, value)
    V = [emb(v) for v in report.distinct_values.dense_coeffs()]
    if dense.evaluate(V, c):
        raise NotACriticalValue(f"{value} is not a critical value")
    fL = f.map_coeffs(emb, L)
    fx, fy = gradient(fL)
    gb = buchberger([fx, fy, fL - c])
    local_dim = len(gb.standard_monomials())
    return distinct_points(gb), local_dim


def _monomial_matrices(gb):
    x = Poly.gen(gb.gens[0], gb.gens, gb.field)
    y = Poly.gen(gb.gens[1], gb.gens, gb.field)
    return gb.multiplication_matrix(x), gb.multiplication_matrix(y)


def trace_form_rank(gb):
    """Number of distinct points of a zero-dimensional ideal: the rank of the
    trace form Tr(b_i b_j) on the quotient algebra (characteristic zero)."""
    std = gb.standard_monomials()
    n = len(std)
    if n == 0:
        return 0
    Mx, My = _monomial_matrices(gb)
    K = gb.field
    cache = {}

    def power(M, k):
        key = (id(M), k)
        if key not in cache:
            cache[key] = SquareMatrix.identity(n, K) if k == 0 else power(M, k - 1) * M
        return cache[key]

    mats = [power(Mx, a) * power(My, b) for a, b in std]
    T = [[_trace_product(mats[i], mats[j], K) for j in range(n)] for i in range(n)]
    return rank(T, K)


def _trace_product(A, B, K):
    acc = K.zero
    n = A.dimension
    for k in range(n):
        rowA = A.rows[k]
        for l in range(n):
            a = rowA[l]
            if a:
                b = B.rows[l][k]
                if b:
                    acc = acc + a * b
    return acc


def distinct_points(gb, max_shear=50):
    """Count distinct points via the square-free degree of the minimal
    polynomial of a separating linear form x + theta*y, theta = 0, 1, 2, ...;
    separation is certified against the trace-form rank."""
    target = trace_form_rank(gb)
    Mx, My = _monomial_matrices(gb)
    for theta in range(max_shear + 1):
        M = Mx if theta == 0 else Mx + My * theta
        d = len(dense.squarefree_part(minpoly(M))) - 1
        if d == target:
            return d
    raise ArithmeticError("no separating linear form found")
