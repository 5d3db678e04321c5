"""Coefficient fields: the rationals, absolute number fields, and rational
function fields in one parameter.

Elements of every field here support ``+ - * / **``, unary minus, equality,
hashing and truth testing (``bool(a)`` is ``a != 0``), and mix freely with
``int`` and ``Fraction`` operands.
"""
from __future__ import annotations

from fractions import Fraction

from . import dense
from .errors import FieldMismatch, NotSquareFree

_RATIONAL_TYPES = (int, Fraction)


class RationalField:
    """The field Q.  Elements are ``fractions.Fraction``."""

    name = "QQ"
    degree = 1
    is_rational = True
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, NFElem) and value.is_rational():
            return value.coords[0]
        if isinstance(value, RatFunc) and value.is_constant():
            return RationalField.__call__(self, value.constant_value())
        return Fraction(value)

    def contains(self, value):
        return isinstance(value, _RATIONAL_TYPES)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def describe(self):
        return "Q"

    def format(self, a):
        return format_rational(a)


QQ = RationalField()


def format_rational(a):
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


class NumberField:
    """Q[gen]/(minpoly) for a monic square-free minimal polynomial.

    Irreducibility of ``minpoly`` is a precondition; only square-freeness is
    checked here (``polyinv.exactnum.factor.is_irreducible`` can probe it).
    """

    is_rational = False

    def __init__(self, minpoly, gen="a"):
        m = dense.to_fractions(minpoly)
        if len(m) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        m = dense.monic(m)
        if len(dense.gcd(m, dense.derivative(m))) > 1:
            raise NotSquareFree(f"minimal polynomial {m} is not square-free")
        self.minpoly = tuple(m)
        self.gen = gen
        self.degree = len(m) - 1
        self._zero_coords = (Fraction(0),) * self.degree
        self._reduction = self._power_table()
        self.zero = NFElem(self, self._zero_coords)
        self.one = self.from_rational(1)
        # optional complex conjugation automorphism, installed by callers that
        # know the field is stable under conjugation (see adjoin.join_fields)
        self.conjugation = None

    def _power_table(self):
        # rows: coordinates of gen^k for k = d .. 2d-2
        d = self.degree
        table = []
        cur = [-c for c in self.minpoly[:d]]
        for _ in range(max(d - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.minpoly[j]
        return table

    def from_rational(self, q):
        coords = list(self._zero_coords)
        coords[0] = Fraction(q)
        return NFElem(self, tuple(coords))

    def generator(self):
        if self.degree == 1:
            return self.from_rational(-self.minpoly[0])
        coords = list(self._zero_coords)
        coords[1] = Fraction(1)
        return NFElem(self, tuple(coords))

    def from_coords(self, coords):
        c = [Fraction(v) for v in coords]
        if len(c) > self.degree:
            c = dense.rem(dense.strip(c), list(self.minpoly))
        c = c + [Fraction(0)] * (self.degree - len(c))
        return NFElem(self, tuple(c))

    def __call__(self, value):
        if isinstance(value, NFElem):
            if value.field is self or value.field == self:
                return value
            if value.is_rational():
                return self.from_rational(value.coords[0])
            raise FieldMismatch(f"{value!r} is not in {self!r}")
        if isinstance(value, _RATIONAL_TYPES):
            return self.from_rational(value)
        if isinstance(value, RatFunc) and value.is_constant():
            return self(value.constant_value())
        raise FieldMismatch(f"cannot convert {value!r} into {self!r}")

    def contains(self, value):
        return isinstance(value, _RATIONAL_TYPES) or (
            isinstance(value, NFElem) and (value.field is self or value.field == self))

    def __eq__(self, other):
        return (isinstance(other, NumberField) and self.gen == other.gen
                and self.minpoly == other.minpoly)

    def __hash__(self):
        return hash((self.gen, self.minpoly))

    def __repr__(self):
        return f"NumberField({self.describe()})"

    def describe(self):
        return f"Q[{self.gen}]/({format_dense(list(self.minpoly), self.gen)})"

    def format(self, a):
        return format_dense(list(a.coords), self.gen)


def format_dense(p, var):
    """Canonical text for a dense rational polynomial (highest degree first)."""
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = Fraction(p[k])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = format_rational(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{format_rational(a)}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class NFElem:
    """An element of a NumberField in the power basis 1, a, ..., a^(d-1)."""

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.field is self.field or other.field == self.field:
                return other.coords
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if isinstance(other, _RATIONAL_TYPES):
            return (Fraction(other),) + self.field._zero_coords[1:]
        return None

    def is_rational(self):
        return not any(self.coords[1:])

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, NFElem) and not (other.field is self.field or other.field == self.field):
            return False
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self.coords == oc

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords[0]) if self.is_rational() else hash(self.coords)
        return self._hash

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coords, oc)))

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return NFElem(self.field, tuple(a - b for a, b in zip(self.coords, oc)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            q = Fraction(other)
            return NFElem(self.field, tuple(a * q for a in self.coords))
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        F = self.field
        d = F.degree
        a, b = self.coords, oc
        if not any(b[1:]):
            q = b[0]
            return NFElem(F, tuple(v * q for v in a))
        if not any(a[1:]):
            q = a[0]
            return NFElem(F, tuple(v * q for v in b))
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            ck = prod[k]
            if ck:
                row = F._reduction[k - d]
                for j in range(d):
                    out[j] += ck * row[j]
        return NFElem(F, tuple(Fraction(v) for v in out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in number field")
        if self.is_rational():
            return self.field.from_rational(1 / self.coords[0])
        s, _, g = dense.gcdex(dense.strip(list(self.coords)), list(self.field.minpoly))
        if len(g) != 1:
            raise ZeroDivisionError("element is a zero divisor (minimal polynomial reducible)")
        return self.field.from_coords(s)

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            if not other:
                raise ZeroDivisionError("division by zero")
            q = 1 / Fraction(other)
            return NFElem(self.field, tuple(a * q for a in self.coords))
        if isinstance(other, NFElem):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def minimal_polynomial(self):
        """Minimal polynomial over Q (dense, monic) via powers and linear dependence."""
        from .linalg_q import first_dependency
        vecs = [self.field.one.coords]
        cur = self.field.one
        while True:
            cur = cur * self
            dep = first_dependency(vecs, cur.coords)
            if dep is not None:
                return dense.strip([-c for c in dep] + [Fraction(1)])
            vecs.append(cur.coords)

    def __repr__(self):
        return f"NFElem({self.field.format(self)} in {self.field.describe()})"

    def __str__(self):
        return self.field.format(self)


# ---------------------------------------------------------------------------
# rational functions in one parameter

class RationalFunctionField:
    """K(param) for a base field K (QQ or a NumberField)."""

    is_rational = False

    def __init__(self, param="s", base=QQ):
        self.param = param
        self.base = base
        self.degree = None
        self.zero = RatFunc(self, [], [base.one])
        self.one = RatFunc(self, [base.one], [base.one])

    def __call__(self, value):
        if isinstance(value, RatFunc):
            if value.field is self or value.field == self:
                return value
            raise FieldMismatch(f"{value!r} not in {self!r}")
        v = self.base(value)
        return RatFunc(self, [v] if v else [], [self.base.one])

    def from_dense(self, num, den=None):
        num = dense.strip([self.base(c) for c in num])
        den = [self.base.one] if den is None else dense.strip([self.base(c) for c in den])
        return RatFunc.normalized(self, num, den)

    def param_gen(self):
        return RatFunc(self, [self.base.zero, self.base.one], [self.base.one])

    def contains(self, value):
        return isinstance(value, RatFunc) or self.base.contains(value)

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField) and self.param == other.param
                and self.base == other.base)

    def __hash__(self):
        return hash(("frac", self.param, self.base))

    def __repr__(self):
        return f"RationalFunctionField({self.describe()})"

    def describe(self):
        return f"{self.base.describe()}({self.param})"

    def format(self, a):
        return str(a)


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic (dense, low degree first)."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def normalized(cls, field, num, den):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return field.zero
        if len(den) > 1:
            g = dense.gcd(num, den)
            if len(g) > 1:
                num = dense.exquo(num, g)
                den = dense.exquo(den, g)
        lc = den[-1]
        if lc != 1:
            inv = 1 / lc
            num = [c * inv for c in num]
            den = [c * inv for c in den]
        return cls(field, num, den)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if self.field.base.contains(other):
            return self.field(other)
        return None

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        return self.num[0] if self.num else self.field.base.zero

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((tuple(self.num), tuple(self.den)))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            if len(self.den) == 1:
                num = dense.add(self.num, o.num)
                return RatFunc(self.field, num, self.den) if num else self.field.zero
            return RatFunc.normalized(self.field, dense.add(self.num, o.num), self.den)
        if len(self.den) == 1:
            num = dense.add(dense.mul(self.num, o.den), o.num)
            return RatFunc(self.field, num, o.den) if num else self.field.zero
        if len(o.den) == 1:
            num = dense.add(self.num, dense.mul(o.num, self.den))
            return RatFunc(self.field, num, self.den) if num else self.field.zero
        g = dense.gcd(self.den, o.den)
        if len(g) == 1:
            num = dense.add(dense.mul(self.num, o.den), dense.mul(o.num, self.den))
            return RatFunc.normalized(self.field, num, dense.mul(self.den, o.den))
        b1 = dense.exquo(self.den, g)
        d1 = dense.exquo(o.den, g)
        num = dense.add(dense.mul(self.num, d1), dense.mul(o.num, b1))
        return RatFunc.normalized(self.field, num, dense.mul(self.den, d1))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, dense.neg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return self.field.zero
        a, b, c, d = self.num, self.den, o.num, o.den
        if len(d) > 1 and len(a) > 1:
            g = dense.gcd(a, d)
            if len(g) > 1:
                a, d = dense.exquo(a, g), dense.exquo(d, g)
        if len(b) > 1 and len(c) > 1:
            g = dense.gcd(c, b)
            if len(g) > 1:
                c, b = dense.exquo(c, g), dense.exquo(b, g)
        return RatFunc(self.field, dense.mul(a, c), dense.mul(b, d))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        lc = self.num[-1]
        inv = 1 / lc
        return RatFunc(self.field, [c * inv for c in self.den], [c * inv for c in self.num])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.field, _dense_pow(self.num, n, self.field.base.one),
                       _dense_pow(self.den, n, self.field.base.one))

    def evaluate(self, value):
        """Value at param = value (an element of an extension of the base)."""
        d = dense.evaluate(self.den, value)
        if not d:
            raise ZeroDivisionError("denominator vanishes at specialization")
        return dense.evaluate(self.num, value) / d

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        var = self.field.param
        n = _format_generic_dense(self.num, var, self.field.base)
        if len(self.den) == 1:
            return n
        return f"({n})/({_format_generic_dense(self.den, var, self.field.base)})"


def _dense_pow(p, n, one):
    result = [one]
    base = p
    while n:
        if n & 1:
            result = dense.mul(result, base)
        base = dense.mul(base, base)
        n >>= 1
    return result


def _format_generic_dense(p, var, base):
    if base.is_rational:
        return format_dense(p, var)
    parts = []
    for k in range(len(p) - 1, -1, -1):
        if p[k]:
            mono = "" if k == 0 else (f"*{var}" if k == 1 else f"*{var}^{k}")
            parts.append(f"({base.format(p[k])}){mono}")
    return " + ".join(parts) or "0"
