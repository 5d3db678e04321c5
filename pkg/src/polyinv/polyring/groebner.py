"""Buchberger's algorithm and the quotient algebra of a zero-dimensional ideal."""
from __future__ import annotations

from .errors import NotZeroDimensional
from .linalg import SquareMatrix
from .poly import Poly, order_key


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Elem:
    __slots__ = ("lm", "terms", "rest")

    def __init__(self, terms, key):
        lm = max(terms, key=key)
        lc = terms[lm]
        if lc != 1:
            inv = 1 / lc
            terms = {m: c * inv for m, c in terms.items()}
        self.lm = lm
        self.terms = terms
        self.rest = [(m, c) for m, c in terms.items() if m != lm]


def _reduce(h, basis, key, zero, full=True):
    """Normal form of the term dict h modulo monic basis elements."""
    h = dict(h)
    r = {}
    while h:
        m = max(h, key=key)
        c = h.pop(m)
        for g in basis:
            if _divides(g.lm, m):
                t = _sub(m, g.lm)
                for mm, cc in g.rest:
                    k = tuple(a + b for a, b in zip(mm, t))
                    v = h.get(k, zero) - c * cc
                    if v:
                        h[k] = v
                    else:
                        h.pop(k, None)
                break
        else:
            if not full:
                r[m] = c
                r.update(h)
                return r
            r[m] = c
    return r


def _spoly(f, g):
    L = _lcm(f.lm, g.lm)
    tf = _sub(L, f.lm)
    tg = _sub(L, g.lm)
    out = {}
    for m, c in f.rest:
        out[tuple(a + b for a, b in zip(m, tf))] = c
    for m, c in g.rest:
        k = tuple(a + b for a, b in zip(m, tg))
        v = out.get(k)
        v = -c if v is None else v - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def buchberger(gens, order="degrevlex"):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Uses the normal selection strategy with Buchberger's product criterion and
    the Gebauer-Moeller pair update.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring_gens, field = gens[0].gens, gens[0].field
    for g in gens:
        gens[0]._check(g)
    key = order_key(order)
    zero = field.zero

    basis = []
    pairs = []

    def update(h):
        # Gebauer-Moeller criteria
        nonlocal pairs
        new = len(basis)
        cand = [(i, _lcm(g.lm, h.lm), g.lm) for i, g in enumerate(basis)]
        kept = []
        for idx, (i, L, lm) in enumerate(cand):
            if L == tuple(a + b for a, b in zip(lm, h.lm)):
                kept.append((i, L, True))
                continue
            if any(_divides(L2, L) for _, L2, _ in cand[idx + 1:]):
                continue
            if any(_divides(L2, L) for _, L2, _ in kept):
                continue
            kept.append((i, L, False))
        pairs = [(i, j, L) for i, j, L in pairs
                 if not (_divides(h.lm, L) and _lcm(basis[i].lm, h.lm) != L
                         and _lcm(basis[j].lm, h.lm) != L)]
        pairs.extend((i, new, L) for i, L, coprime in kept if not coprime)
        basis.append(h)

    for g in sorted(gens, key=lambda p: key(p.leading_term(order)[0])):
        r = _reduce(g.terms, basis, key, zero)
        if r:
            update(_Elem(r, key))

    while pairs:
        pairs.sort(key=lambda p: key(p[2]), reverse=True)
        i, j, _ = pairs.pop()
        s = _spoly(basis[i], basis[j])
        if not s:
            continue
        r = _reduce(s, basis, key, zero)
        if r:
            update(_Elem(r, key))

    live = basis
    # minimal basis, then interreduce
    minimal = []
    for b in sorted(live, key=lambda e: key(e.lm)):
        if not any(_divides(m.lm, b.lm) for m in minimal):
            minimal.append(b)
    reduced = []
    for b in minimal:
        others = [m for m in minimal if m is not b]
        tail = _reduce(dict(b.rest), others, key, zero)
        terms = dict(tail)
        terms[b.lm] = field.one
        reduced.append(_Elem(terms, key))
    reduced.sort(key=lambda e: key(e.lm), reverse=True)
    return GroebnerBasis([Poly(e.terms, ring_gens, field) for e in reduced], order, ring_gens, field)


class GroebnerBasis:
    """A reduced Groebner basis plus quotient-algebra helpers."""

    def __init__(self, polys, order, gens, field):
        self.polys = polys
        self.order = order
        self.gens = gens
        self.field = field
        self._key = order_key(order)
        self._elems = [_Elem(p.terms, self._key) for p in polys]
        self._std = None

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    @property
    def leading_monomials(self):
        return [e.lm for e in self._elems]

    def is_unit_ideal(self):
        return any(not any(e.lm) for e in self._elems)

    def is_zero_dimensional(self):
        n = len(self.gens)
        for i in range(n):
            if not any(e.lm[i] > 0 and all(e.lm[j] == 0 for j in range(n) if j != i)
                       for e in self._elems):
                return False
        return True

    def standard_monomials(self):
        """Monomials outside the leading-term ideal, ascending in the order."""
        if self._std is not None:
            return list(self._std)
        if self.is_unit_ideal():
            self._std = []
            return []
        if not self.is_zero_dimensional():
            raise NotZeroDimensional("ideal is not zero-dimensional")
        n = len(self.gens)
        lms = self.leading_monomials
        seen = {(0,) * n}
        frontier = [(0,) * n]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(n):
                    k = m[:i] + (m[i] + 1,) + m[i + 1:]
                    if k not in seen and not any(_divides(l, k) for l in lms):
                        seen.add(k)
                        nxt.append(k)
            frontier = nxt
        self._std = sorted(seen, key=self._key)
        return list(self._std)

    def dimension(self):
        return len(self.standard_monomials())

    def normal_form(self, p):
        r = _reduce(p.terms, self._elems, self._key, self.field.zero)
        return Poly(r, self.gens, self.field)

    def contains(self, p):
        return not self.normal_form(p)

    def coordinates(self, p):
        """Coordinates of NF(p) on the standard monomial basis."""
        std = self.standard_monomials()
        nf = self.normal_form(p)
        zero = self.field.zero
        return [nf.terms.get(m, zero) for m in std]

    def multiplication_matrix(self, p):
        """Matrix of multiplication by p on the quotient algebra; column j holds
        the coordinates of p * b_j."""
        std = self.standard_monomials()
        cols = []
        for b in std:
            cols.append(self.coordinates(p.mul_term(b, self.field.one)))
        n = len(std)
        rows = [[cols[j][i] for j in range(n)] for i in range(n)]
        return SquareMatrix(rows, self.field)
