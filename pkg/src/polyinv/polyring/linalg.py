"""Dense exact linear algebra: characteristic and minimal polynomials,
determinants, rank and kernels.
"""
from __future__ import annotations

from ..exactnum import dense


class SquareMatrix:
    """A dense square matrix over a field (or, for the division-free routines,
    over any commutative ring whose elements support + - *)."""

    def __init__(self, rows, field=None):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        self.rows = [list(r) for r in rows]
        self.field = field
        self.dimension = n

    @classmethod
    def identity(cls, n, field):
        return cls([[field.one if i == j else field.zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def diagonal(cls, values, field):
        n = len(values)
        return cls([[field(values[i]) if i == j else field.zero for j in range(n)]
                    for i in range(n)], field)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __mul__(self, other):
        n = self.dimension
        if isinstance(other, SquareMatrix):
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = self.field.zero
                    for a, b in zip(r, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return SquareMatrix(out, self.field)
        return SquareMatrix([[a * other for a in r] for r in self.rows], self.field)

    def __add__(self, other):
        return SquareMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                            self.field)

    def trace(self):
        acc = self.field.zero
        for i in range(self.dimension):
            acc = acc + self.rows[i][i]
        return acc

    def apply(self, vec):
        return [sum((a * b for a, b in zip(r, vec) if a and b), self.field.zero) for r in self.rows]

    def charpoly(self):
        return charpoly(self)

    def minpoly(self):
        return minpoly(self)

    def det(self):
        return determinant(self.rows, self.field)

    def rank(self):
        return rank(self.rows, self.field)

    def __repr__(self):
        return f"SquareMatrix({self.rows!r})"


def charpoly(M):
    """Characteristic polynomial det(tI - M), dense coefficients lowest first,
    via reduction to Hessenberg form (O(n^3) field operations)."""
    n = M.dimension
    F = M.field
    if n == 0:
        return [F.one]
    H = [list(r) for r in M.rows]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for r in H:
                r[piv], r[m] = r[m], r[piv]
        inv = 1 / H[m][m - 1]
        for i in range(m + 1, n):
            u = H[i][m - 1]
            if not u:
                continue
            u = u * inv
            Hi, Hm = H[i], H[m]
            for j in range(n):
                if Hm[j]:
                    Hi[j] = Hi[j] - u * Hm[j]
            for r in H:
                if r[i]:
                    r[m] = r[m] + u * r[i]
    p = [[F.one]]
    for m in range(1, n + 1):
        cur = dense.mul([-H[m - 1][m - 1], F.one], p[m - 1])
        t = F.one
        for i in range(1, m):
            t = t * H[m - i][m - i - 1]
            if not t:
                break
            coef = t * H[m - i - 1][m - 1]
            if coef:
                cur = dense.sub(cur, dense.scale(p[m - i - 1], coef))
        p.append(cur)
    return p[n]


def berkowitz(rows, zero, one):
    """Division-free characteristic polynomial det(tI - M) over a commutative
    ring; returns coefficients lowest degree first."""
    n = len(rows)
    if n == 0:
        return [one]
    C = [one, -rows[0][0]]
    for r in range(1, n):
        A = [row[:r] for row in rows[:r]]
        R = rows[r][:r]
        S = [rows[i][r] for i in range(r)]
        T = [one, -rows[r][r]]
        vec = S
        for _ in range(r):
            acc = zero
            for a, b in zip(R, vec):
                acc = acc + a * b
            T.append(-acc)
            vec = [sum_products(row, vec, zero) for row in A]
        new = []
        for i in range(r + 2):
            acc = zero
            for j in range(0, min(i, r) + 1):
                acc = acc + T[i - j] * C[j]
            new.append(acc)
        C = new
    # C is highest-degree first
    return list(reversed(C))


def sum_products(a, b, zero):
    acc = zero
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def minpoly(M):
    """Minimal polynomial by searching for the first linear dependency among
    I, M, M^2, ... (flattened)."""
    n = M.dimension
    F = M.field
    if n == 0:
        return [F.one]
    echelon = []  # list of (pivot index, vector, combination)
    power = SquareMatrix.identity(n, F)
    k = 0
    while True:
        vec = [x for r in power.rows for x in r]
        comb = [F.zero] * k + [F.one]
        for piv, evec, ecomb in echelon:
            c = vec[piv]
            if c:
                vec = [a - c * b for a, b in zip(vec, evec)]
                comb = [a - c * b for a, b in zip(comb, ecomb + [F.zero] * (len(comb) - len(ecomb)))]
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            return dense.monic(dense.strip(comb))
        inv = 1 / vec[piv]
        vec = [v * inv for v in vec]
        comb = [v * inv for v in comb]
        echelon.append((piv, vec, comb))
        power = power * M
        k += 1


def row_echelon(rows, field):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    A = [list(r) for r in rows]
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rank(rows, field):
    return len(row_echelon(rows, field)[1])


def nullspace(rows, field, ncols=None):
    """Basis of {v : rows * v = 0}."""
    if not rows:
        n = ncols or 0
        return [[field.one if i == j else field.zero for i in range(n)] for j in range(n)]
    n = len(rows[0])
    E, pivots = row_echelon(rows, field)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -E[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs, field):
    """One solution of rows * v = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    n = len(rows[0]) if rows else 0
    E, pivots = row_echelon(aug, field)
    if n in pivots:
        return None
    v = [field.zero] * n
    for i, p in enumerate(pivots):
        v[p] = E[i][n]
    return v


def determinant(rows, field):
    A = [list(r) for r in rows]
    n = len(A)
    det = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return det
