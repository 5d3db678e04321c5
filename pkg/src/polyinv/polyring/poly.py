"""Sparse multivariate polynomials over the exact coefficient fields.

A ``Poly`` is an immutable map from exponent tuples to nonzero field elements,
together with the ordered generator names and the coefficient field.  The
univariate and bivariate cases used throughout the package are just one- and
two-generator instances.
"""
from __future__ import annotations

from fractions import Fraction

from ..exactnum import dense
from ..exactnum.errors import FieldMismatch
from ..exactnum.fields import QQ
from .errors import UnknownVariable, VariableMismatch


def degrevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def lex_key(exps):
    return exps


ORDERS = {"degrevlex": degrevlex_key, "grevlex": degrevlex_key, "lex": lex_key}


def order_key(order):
    if callable(order):
        return order
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


class Poly:
    __slots__ = ("terms", "gens", "field", "_hash")

    def __init__(self, terms, gens, field=QQ):
        self.terms = terms
        self.gens = tuple(gens)
        self.field = field
        self._hash = None

    # -- construction -------------------------------------------------------
    @classmethod
    def from_dict(cls, d, gens, field=QQ):
        out = {}
        n = len(gens)
        for e, c in d.items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match generators {gens}")
            c = field(c)
            if c:
                out[e] = out[e] + c if e in out else c
                if not out[e]:
                    del out[e]
        return cls(out, gens, field)

    @classmethod
    def zero(cls, gens, field=QQ):
        return cls({}, gens, field)

    @classmethod
    def const(cls, c, gens, field=QQ):
        c = field(c)
        return cls({(0,) * len(gens): c} if c else {}, gens, field)

    @classmethod
    def gen(cls, name, gens, field=QQ):
        gens = tuple(gens)
        if name not in gens:
            raise UnknownVariable(name)
        e = tuple(1 if g == name else 0 for g in gens)
        return cls({e: field.one}, gens, field)

    @classmethod
    def from_dense(cls, coeffs, var, field=QQ):
        out = {}
        for k, c in enumerate(coeffs):
            c = field(c)
            if c:
                out[(k,)] = c
        return cls(out, (var,), field)

    # -- basic queries ------------------------------------------------------
    @property
    def nvars(self):
        return len(self.gens)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self):
        return self.terms.get((0,) * len(self.gens), self.field.zero)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def index(self, var):
        try:
            return self.gens.index(var)
        except ValueError:
            raise UnknownVariable(var) from None

    def degree(self, var=None):
        if var is None:
            if len(self.gens) != 1:
                return self.total_degree()
            i = 0
        else:
            i = self.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def leading_term(self, order="degrevlex"):
        key = order_key(order)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def leading_coeff(self, order="degrevlex"):
        return self.leading_term(order)[1]

    def sorted_terms(self, order="degrevlex"):
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def monic(self, order="degrevlex"):
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        if lc == 1:
            return self
        inv = 1 / lc
        return Poly({m: c * inv for m, c in self.terms.items()}, self.gens, self.field)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if other.gens != self.gens:
            raise VariableMismatch(f"{self.gens} vs {other.gens}")
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def _scalar(self, c):
        if isinstance(c, Poly):
            return None
        try:
            return self.field(c)
        except (FieldMismatch, TypeError, ValueError):
            return None

    def __add__(self, other):
        if not isinstance(other, Poly):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            other = Poly.const(c, self.gens, self.field)
        self._check(other)
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for m, c in b.items():
            if m in out:
                v = out[m] + c
                if v:
                    out[m] = v
                else:
                    del out[m]
            else:
                out[m] = c
        return Poly(out, self.gens, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()}, self.gens, self.field)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            other = Poly.const(c, self.gens, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.field(c)
        if not c:
            return Poly({}, self.gens, self.field)
        return Poly({m: v * c for m, v in self.terms.items()}, self.gens, self.field)

    def mul_term(self, exps, c):
        out = {}
        for m, v in self.terms.items():
            out[tuple(a + b for a, b in zip(m, exps))] = v * c
        return Poly(out, self.gens, self.field)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        n = len(self.gens)
        if n == 1:
            for (i,), c in b.items():
                for (j,), d in a.items():
                    k = (i + j,)
                    v = c * d
                    if k in out:
                        out[k] = out[k] + v
                    else:
                        out[k] = v
        elif n == 2:
            for (i1, i2), c in b.items():
                for (j1, j2), d in a.items():
                    k = (i1 + j1, i2 + j2)
                    v = c * d
                    if k in out:
                        out[k] = out[k] + v
                    else:
                        out[k] = v
        else:
            for m1, c in b.items():
                for m2, d in a.items():
                    k = tuple(x + y for x, y in zip(m1, m2))
                    v = c * d
                    if k in out:
                        out[k] = out[k] + v
                    else:
                        out[k] = v
        return Poly({m: c for m, c in out.items() if c}, self.gens, self.field)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.gens, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return self.exquo(other)
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self.scale(1 / c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self.gens == other.gens and self.terms == other.terms
                    and (not self.terms or self.field == other.field))
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        if not c:
            return not self.terms
        return self.terms == {(0,) * len(self.gens): c}

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    # -- division -----------------------------------------------------------
    def divmod_lex(self, other):
        """Multivariate division by a single divisor with lex order.

        Returns (q, r) with self = q*other + r and no term of r divisible by
        the lex-leading monomial of other.
        """
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        lm, lc = other.leading_term("lex")
        inv = 1 / lc
        rest = [(m, c) for m, c in other.terms.items() if m != lm]
        h = dict(self.terms)
        q = {}
        r = {}
        while h:
            m = max(h)
            c = h.pop(m)
            if all(a >= b for a, b in zip(m, lm)):
                t = tuple(a - b for a, b in zip(m, lm))
                f = c * inv
                q[t] = f
                for mm, cc in rest:
                    k = tuple(a + b for a, b in zip(mm, t))
                    v = h.get(k, self.field.zero) - f * cc
                    if v:
                        h[k] = v
                    else:
                        h.pop(k, None)
            else:
                r[m] = c
        return Poly(q, self.gens, self.field), Poly(r, self.gens, self.field)

    def exquo(self, other):
        q, r = self.divmod_lex(other)
        if r.terms:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other):
        """True if self divides other exactly."""
        return not other.divmod_lex(self)[1].terms

    # -- calculus and substitution -----------------------------------------
    def derivative(self, var):
        i = self.index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                k = m[:i] + (m[i] - 1,) + m[i + 1:]
                out[k] = c * m[i]
        return Poly(out, self.gens, self.field)

    def compose(self, mapping):
        """Substitute generators by polynomials (same gens/field) or scalars.

        ``mapping`` maps generator names to replacements; unmapped generators
        are left alone.
        """
        images = []
        for g in self.gens:
            if g in mapping:
                v = mapping[g]
                if not isinstance(v, Poly):
                    v = Poly.const(v, self.gens, self.field)
                images.append(v)
            else:
                images.append(Poly.gen(g, self.gens, self.field))
        powers = [dict() for _ in self.gens]
        result = Poly.zero(self.gens, self.field)
        acc = {}
        for m, c in self.terms.items():
            term = Poly.const(c, self.gens, self.field)
            for i, e in enumerate(m):
                if e:
                    p = powers[i].get(e)
                    if p is None:
                        p = images[i] ** e
                        powers[i][e] = p
                    term = term * p
            for k, v in term.terms.items():
                acc[k] = acc[k] + v if k in acc else v
        result = Poly({k: v for k, v in acc.items() if v}, self.gens, self.field)
        return result

    def evaluate(self, values):
        """Substitute scalars for generators; returns a polynomial in the
        remaining generators (order preserved) or a scalar if none remain."""
        idx = [i for i, g in enumerate(self.gens) if g not in values]
        gens = tuple(self.gens[i] for i in idx)
        vals = [(i, values[g]) for i, g in enumerate(self.gens) if g in values]
        field = self.field
        sample = next((v for _, v in vals), None)
        if sample is not None and hasattr(sample, "field") and not isinstance(sample, Poly):
            field = sample.field
        out = {}
        pw_cache = {}
        for m, c in self.terms.items():
            v = field(c) if field is not self.field else c
            for i, x in vals:
                if m[i]:
                    key = (i, m[i])
                    p = pw_cache.get(key)
                    if p is None:
                        p = x ** m[i]
                        pw_cache[key] = p
                    v = v * p
            k = tuple(m[i] for i in idx)
            out[k] = out[k] + v if k in out else v
        if not gens:
            return out.get((), field.zero)
        return Poly({k: v for k, v in out.items() if v}, gens, field)

    def __call__(self, *args):
        return self.evaluate(dict(zip(self.gens, args)))

    # -- change of representation -------------------------------------------
    def map_coeffs(self, fn, field=None):
        field = self.field if field is None else field
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if v:
                out[m] = v
        return Poly(out, self.gens, field)

    def change_field(self, field):
        return self.map_coeffs(field, field)

    def reorder(self, gens):
        """Re-express in a new generator tuple (superset allowed)."""
        gens = tuple(gens)
        pos = []
        for g in self.gens:
            if g not in gens:
                if any(m[self.gens.index(g)] for m in self.terms):
                    raise VariableMismatch(f"generator {g} missing from {gens}")
                pos.append(None)
            else:
                pos.append(gens.index(g))
        out = {}
        for m, c in self.terms.items():
            k = [0] * len(gens)
            for e, p in zip(m, pos):
                if p is not None:
                    k[p] = e
            out[tuple(k)] = c
        return Poly(out, gens, self.field)

    def coefficients_in(self, var):
        """Return {k: Poly in the other generators} with self = sum c_k var^k."""
        i = self.index(var)
        rest = self.gens[:i] + self.gens[i + 1:]
        out = {}
        for m, c in self.terms.items():
            k = m[i]
            out.setdefault(k, {})[m[:i] + m[i + 1:]] = c
        return {k: Poly(d, rest, self.field) for k, d in out.items()}

    @classmethod
    def from_coefficients(cls, coeffs, var, position, gens_rest, field):
        """Inverse of ``coefficients_in``: var inserted at ``position``."""
        gens = tuple(gens_rest[:position]) + (var,) + tuple(gens_rest[position:])
        out = {}
        for k, p in coeffs.items():
            for m, c in p.terms.items():
                out[m[:position] + (k,) + m[position:]] = c
        return cls(out, gens, field)

    def dense_coeffs(self):
        if len(self.gens) != 1:
            raise VariableMismatch("dense_coeffs needs a univariate polynomial")
        if not self.terms:
            return []
        out = [self.field.zero] * (self.degree() + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    def __repr__(self):
        return f"Poly({self}, gens={self.gens}, field={self.field!r})"

    def __str__(self):
        from ..frontend import print_canonical
        return print_canonical(self)
