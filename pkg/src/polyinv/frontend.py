"""Text format for problems and canonical printing of polynomials.

A problem file has one declaration per line::

    field: Q[k]/(k^2 - k + 1)      # or Q, Q(i)
    vars: x y
    param: s                       # optional
    poly: x*y*(x - y)*(y - 1)*(x - s*y)

Blank lines and ``#`` comments are ignored.  The ``poly:`` expression may
continue on following lines.  Multiplication is always explicit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exactnum.factor import is_irreducible
from .exactnum.fields import QQ, NFElem, NumberField, RatFunc
from .polyring.poly import Poly, order_key


class ParseError(SyntaxError):
    """A malformed input; carries 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.msg = message
        self.line = line
        self.column = column
        self.lineno = line
        self.offset = column

    def __str__(self):
        return f"{self.msg} (line {self.line}, column {self.column})"


class UndeclaredSymbol(ParseError):
    pass


class NonIntegerExponent(ParseError):
    pass


@dataclass(frozen=True)
class ProblemSpec:
    field: object
    vars: tuple
    param: str | None
    source: str
    poly: Poly

    @property
    def gens(self):
        return self.poly.gens


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text, line=1, col0=1):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = col0 + m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), line, col))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), line, col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            toks.append((ch, ch, line, col))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, tokens, symbols, end):
        self.toks = tokens
        self.i = 0
        self.symbols = symbols
        self.end = end

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None) + self.end

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, kind):
        t = self.take()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, found {_show(t)}", t[2], t[3])
        return t

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {_show(t)}", t[2], t[3])
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            if op[0] == "*":
                v = v * self.unary()
            else:
                t = self.take()
                if t[0] != "int":
                    raise ParseError("a denominator must be an integer literal", t[2], t[3])
                if t[1] == 0:
                    raise ParseError("division by zero", t[2], t[3])
                v = v * Fraction(1, t[1])
        return v

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        while self.peek()[0] == "^":
            self.take()
            t = self.take()
            if t[0] != "int":
                raise NonIntegerExponent("exponent must be a nonnegative integer literal", t[2], t[3])
            v = v ** t[1]
        return v

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return self.symbols["__const__"](t[1])
        if t[0] == "name":
            if t[1] not in self.symbols:
                raise UndeclaredSymbol(f"undeclared symbol {t[1]!r}", t[2], t[3])
            return self.symbols[t[1]]
        if t[0] == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected {_show(t)}", t[2], t[3])


def _show(tok):
    return "end of input" if tok[0] == "end" else repr(str(tok[1]))


def parse_expression(text, gens, field=QQ, line=1, column=1, extra=None):
    """Parse ``text`` as a polynomial in ``gens`` over ``field``.

    ``extra`` maps further symbol names (such as a number field generator) to
    field elements.
    """
    gens = tuple(gens)
    symbols = {g: Poly.gen(g, gens, field) for g in gens}
    symbols["__const__"] = lambda n: Poly.const(n, gens, field)
    if isinstance(field, NumberField) and field.gen not in symbols:
        symbols[field.gen] = Poly.const(field.generator(), gens, field)
    for name, value in (extra or {}).items():
        symbols[name] = Poly.const(value, gens, field)
    toks = _tokenize(text, line, column)
    end = (line, column + len(text))
    return _Parser(toks, symbols, end).parse()


_FIELD_NF = re.compile(r"^Q\[\s*([A-Za-z_][A-Za-z_0-9]*)\s*\]\s*/\s*\((.*)\)\s*$")


def parse_field(text, line=1, column=1):
    """Q, Q(i) or Q[gen]/(minimal polynomial)."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    if t.replace(" ", "") in ("Q(i)", "QQ(i)"):
        from .exactnum import QQi
        return QQi
    m = _FIELD_NF.match(t)
    if not m:
        raise ParseError(f"unknown field declaration {t!r}", line, column)
    gen, body = m.group(1), m.group(2)
    off = column + text.index(body)
    p = parse_expression(body, (gen,), QQ, line, off)
    coeffs = p.dense_coeffs()
    if len(coeffs) < 2:
        raise ParseError("minimal polynomial must have positive degree", line, off)
    if not is_irreducible(coeffs):
        raise ParseError("minimal polynomial is reducible over Q", line, off)
    return NumberField(coeffs, gen)


def parse(text):
    """Parse a problem description into a ProblemSpec."""
    decl = {}
    cont_key = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = re.match(r"^\s*([A-Za-z_]+)\s*:", line)
        if m and m.group(1) in ("field", "vars", "param", "poly"):
            key = m.group(1)
            if key in decl:
                raise ParseError(f"duplicate {key!r} declaration", lineno, m.start(1) + 1)
            decl[key] = [(line[m.end():], lineno, m.end() + 1)]
            cont_key = key
        elif m:
            raise ParseError(f"unknown declaration {m.group(1)!r}", lineno, m.start(1) + 1)
        elif cont_key == "poly":
            decl["poly"].append((line, lineno, 1))
        else:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected a declaration 'key: value'", lineno, col)
    if "poly" not in decl:
        raise ParseError("missing 'poly:' declaration", 1, 1)
    if "field" in decl:
        body, ln, col = decl["field"][0]
        field = parse_field(body, ln, col)
    else:
        field = QQ
    if "vars" in decl:
        body, ln, col = decl["vars"][0]
        names = tuple(body.split())
        if len(names) != 2:
            raise ParseError("exactly two variables are required", ln, col)
    else:
        names, ln, col = ("x", "y"), 1, 1
    for n in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", n):
            raise ParseError(f"bad variable name {n!r}", ln, col)
    if len(set(names)) != 2:
        raise ParseError("variable names must be distinct", ln, col)
    param = None
    if "param" in decl:
        body, pln, pcol = decl["param"][0]
        param = body.strip()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", param):
            raise ParseError(f"bad parameter name {param!r}", pln, pcol)
        if param in names:
            raise ParseError("parameter must differ from the variables", pln, pcol)
    gen = getattr(field, "gen", None)
    if gen is not None and (gen in names or gen == param):
        raise ParseError(f"generator {gen!r} clashes with a variable or parameter", ln, col)
    gens = names + ((param,) if param else ())
    pieces = decl["poly"]
    total = None
    source = " ".join(p[0].strip() for p in pieces)
    # parse the joined text but report positions in the original lines
    toks = []
    for body, ln, col in pieces:
        toks.extend(_tokenize(body, ln, col))
    symbols = {g: Poly.gen(g, gens, field) for g in gens}
    symbols["__const__"] = lambda n: Poly.const(n, gens, field)
    if gen is not None:
        symbols[gen] = Poly.const(field.generator(), gens, field)
    last = pieces[-1]
    total = _Parser(toks, symbols, (last[1], last[2] + len(last[0]))).parse()
    return ProblemSpec(field, names, param, source, total)


def parse_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# printing

def _monomial(exps, gens):
    parts = []
    for g, e in zip(gens, exps):
        if e == 1:
            parts.append(g)
        elif e:
            parts.append(f"{g}^{e}")
    return "*".join(parts)


def _coeff_text(c, field):
    """(sign, body, atomic) for a coefficient."""
    if isinstance(c, NFElem):
        s = field.format(c)
    elif isinstance(c, RatFunc):
        s = str(c)
    else:
        s = field.format(c) if hasattr(field, "format") else str(c)
    if s.startswith("-") and " " not in s:
        return "-", s[1:], True
    if " " not in s and not s.startswith("("):
        return "+", s, True
    return "+", s, False


def print_canonical(p):
    """Deterministic text for a Poly, terms in descending degrevlex order.

    The output parses back to the same polynomial.
    """
    if not p.terms:
        return "0"
    key = order_key("degrevlex")
    items = sorted(p.terms.items(), key=lambda mc: key(mc[0]), reverse=True)
    if len(items) == 1 and not any(items[0][0]):
        sign, body, _ = _coeff_text(items[0][1], p.field)
        return body if sign == "+" else "-" + body
    out = []
    for exps, c in items:
        sign, body, atomic = _coeff_text(c, p.field)
        mono = _monomial(exps, p.gens)
        if not atomic:
            body = f"({body})"
        if not mono:
            text = body
        elif body == "1":
            text = mono
        else:
            text = f"{body}*{mono}"
        out.append((sign, text))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, text in out[1:]:
        s += f" {sign} {text}"
    return s


def format_dense_poly(coeffs, var, field=QQ):
    """Canonical text for dense univariate coefficients (lowest first)."""
    return print_canonical(Poly.from_dense(list(coeffs), var, field))
