"""Small exact linear algebra over Q used by the number field layer."""
from __future__ import annotations

from fractions import Fraction


def solve(rows, rhs):
    """Solve rows * x = rhs exactly; return one solution or None if inconsistent.

    ``rows`` is a list of equal-length rational rows.  Free variables are set
    to zero.
    """
    n = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x


def first_dependency(vectors, target):
    """Coefficients c with sum c_i * vectors[i] == target, or None."""
    if not vectors:
        return [] if not any(target) else None
    dim = len(target)
    rows = [[vectors[j][i] for j in range(len(vectors))] for i in range(dim)]
    return solve(rows, list(target))
