"""Command-line interface: analyze, family, equiv and verify.

Exit codes
  0  success (equiv: at least one equivalence found)
  1  equiv found no equivalence; verify had a FAIL; --cross-check
     disagreement
  2  non-isolated singularities
  3  input could not be parsed (including bad flags)
  4  the generic computation of a family degenerates
  5  a polynomial given to equiv is not a product of lines
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from .arrangement import (ArrangementMismatch, NonLinearFactor, SCALAR_POLICIES,
                          find_equivalences)
from .atinfinity import CrossCheckMismatch, cross_check, multiinteger
from .critical import NonIsolatedSingularities, critical_report
from .exactnum import dense
from .exactnum.adjoin import join_fields
from .exactnum.factor import factor_rational
from .exactnum.fields import QQ, NumberField
from .exactnum.roots import isolate_complex_roots
from .frontend import ParseError, format_dense_poly, parse_expression, parse_file, print_canonical
from .parametric import (AlgebraicValue, NonIsolatedGenerically, ParametricFamily,
                         exceptional_set, generic_multiinteger)
from .polyring import Poly, resultant

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_NON_ISOLATED = 2
EXIT_PARSE = 3
EXIT_GENERIC = 4
EXIT_NON_LINEAR = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


# ---------------------------------------------------------------------------
# --set NAME=VALUE | NAME=root(POLY[,INDEX])

_ROOT = re.compile(r"^root\((.*?)(?:,\s*(-?\d+))?\)$")


def parse_binding(text, field=QQ):
    """(name, value) from NAME=VALUE or NAME=root(POLY[,INDEX]).  VALUE is an
    element of ``field``; root(...) gives an AlgebraicValue."""
    if "=" not in text:
        raise UsageError(f"--set expects NAME=VALUE, got {text!r}")
    name, value = (part.strip() for part in text.split("=", 1))
    m = _ROOT.match(value.replace(" ", ""))
    if m:
        poly = parse_expression(m.group(1), (name,), QQ)
        index = int(m.group(2) or 0)
        try:
            return name, AlgebraicValue.root_of(poly, index)
        except (IndexError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
    p = parse_expression(value, (), field)
    return name, p.constant_coeff()


def load(path, binding=None):
    """Parse a .poly file and bind its parameter.  Returns (spec, f, value)."""
    spec = parse_file(path)
    if spec.param is None:
        if binding is not None:
            raise UsageError("input declares no parameter; --set is not applicable")
        return spec, spec.poly, None
    if binding is None:
        raise UsageError(f"parameter {spec.param!r} is unbound; use --set {spec.param}=VALUE")
    name, value = parse_binding(binding, spec.field)
    if name != spec.param:
        raise UsageError(f"--set names {name!r} but the parameter is {spec.param!r}")
    fam = ParametricFamily.from_spec(spec)
    if isinstance(value, AlgebraicValue) and value.field != QQ and spec.field != QQ:
        raise UsageError("algebraic parameter values need an input over Q")
    return spec, fam.specialize(value), value


def _value_text(value):
    if value is None:
        return None
    if isinstance(value, AlgebraicValue):
        if value.field == QQ:
            return str(value.element)
        mp = format_dense_poly(value.field.minpoly, value.field.gen)
        return f"root {value.embedding_index} of {mp}"
    return str(value)


# ---------------------------------------------------------------------------
# analyze

def over_q(piece, K):
    """Irreducible rational polynomials in t whose roots are those of
    ``piece`` (a Poly in t over K) and their conjugates."""
    coeffs = piece.dense_coeffs()
    if K == QQ:
        return [tuple(coeffs)]
    if not isinstance(K, NumberField):
        return []
    gens = ("t", K.gen)
    terms = {}
    for e, c in enumerate(coeffs):
        for j, v in enumerate(c.coords):
            if v:
                terms[(e, j)] = Fraction(v)
    P = Poly(terms, gens)
    M = Poly({(0, j): Fraction(v) for j, v in enumerate(K.minpoly) if v}, gens)
    N = resultant(P, M, K.gen)
    n = N.dense_coeffs() if isinstance(N, Poly) else [N]
    return [tuple(q) for q, _ in factor_rational(dense.squarefree_part(n))[1]]


def analysis_report(spec, f, value=None, check=False, stable=False):
    t0 = time.perf_counter()
    K = f.field
    report = {
        "input": print_canonical(spec.poly),
        "field": K.describe(),
        "parameter": None if spec.param is None else
        {"name": spec.param, "value": _value_text(value)},
        "specialized": print_canonical(f) if spec.param else None,
    }
    crit = critical_report(f)
    report["non_isolated"] = crit.non_isolated
    if crit.non_isolated:
        report.update(multi_integer=None, mu="infinite", critical_values=[],
                      atypical_at_infinity=[], shear=None, shear_used=False)
    else:
        mi = multiinteger(f, crit)
        inf = mi.infinity
        report["multi_integer"] = list(mi.as_tuple())
        report["mu"] = mi.mu
        report["critical_values"] = [
            {"poly": print_canonical(p), "multiplicity": m,
             "over_Q": [format_dense_poly(q, "t") for q in over_q(p, K)]}
            for p, m in crit.value_multiplicities]
        report["atypical_at_infinity"] = [
            {"poly": print_canonical(p), "drop": d,
             "over_Q": [format_dense_poly(q, "t") for q in over_q(p, K)]}
            for p, d in inf.atypical_values]
        phi = inf.shear
        report["shear"] = str(phi)
        report["shear_used"] = not (phi.b == 0 and phi.a == 1 and phi.d == 1 and phi.c == 0)
        if check:
            try:
                chi_gen, rows = cross_check(f, mi)
                agree = True
            except CrossCheckMismatch as exc:
                chi_gen, rows, agree = None, exc.rows, False
            report["cross_check"] = {
                "agrees": agree, "generic_euler_characteristic": chi_gen,
                "rows": [{"value": print_canonical(r.value), "mu_c": r.mu_c,
                          "euler_characteristic": r.chi, "lambda_from_euler": r.lam_oracle,
                          "lambda_from_drop": r.lam_drop} for r in rows]}
    if not stable:
        report["timing_seconds"] = round(time.perf_counter() - t0, 3)
    return report


def format_analysis(r):
    lines = [f"input: {r['input']}", f"field: {r['field']}"]
    if r["parameter"]:
        lines.append(f"parameter: {r['parameter']['name']} = {r['parameter']['value']}")
        lines.append(f"specialized: {r['specialized']}")
    if r["non_isolated"]:
        lines.append("non-isolated singularities: mu is infinite")
    else:
        lines.append("multi-integer (mu, #B_aff, lambda, #B_inf, #B): "
                     f"({', '.join(map(str, r['multi_integer']))})")
        lines.append("critical values (polynomial in t, multiplicity):")
        for cv in r["critical_values"] or []:
            lines.append(f"  {cv['poly']}   [{cv['multiplicity']}]")
            if cv["over_Q"] and cv["over_Q"] != [cv["poly"]]:
                lines.append(f"    over Q: {'; '.join(cv['over_Q'])}")
        if not r["critical_values"]:
            lines.append("  none")
        lines.append("critical values at infinity (polynomial in t, degree drop):")
        for av in r["atypical_at_infinity"]:
            lines.append(f"  {av['poly']}   [{av['drop']}]")
        if not r["atypical_at_infinity"]:
            lines.append("  none")
        lines.append(f"shear: {r['shear']}" + ("" if r["shear_used"] else " (identity)"))
        if "cross_check" in r:
            cc = r["cross_check"]
            lines.append(f"cross-check (Euler characteristic): "
                         f"{'agrees' if cc['agrees'] else 'MISMATCH'}, "
                         f"generic fibre chi = {cc['generic_euler_characteristic']}")
            for row in cc["rows"]:
                lines.append(f"  {row['value']}: mu_c = {row['mu_c']}, "
                             f"chi = {row['euler_characteristic']}, "
                             f"lambda = {row['lambda_from_euler']} (drop {row['lambda_from_drop']})")
    if "timing_seconds" in r:
        lines.append(f"time: {r['timing_seconds']} s")
    return "\n".join(lines)


def cmd_analyze(args):
    spec, f, value = load(args.file, args.set)
    r = analysis_report(spec, f, value, args.cross_check, args.stable)
    emit(r, format_analysis, args.json)
    if r["non_isolated"]:
        return EXIT_NON_ISOLATED
    if "cross_check" in r and not r["cross_check"]["agrees"]:
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# family

def family_report(spec, stable=False):
    t0 = time.perf_counter()
    fam = ParametricFamily.from_spec(spec)
    ex = exceptional_set(fam)
    s = fam.param
    r = {
        "input": print_canonical(spec.poly),
        "parameter": s,
        "generic_multi_integer": list(ex.generic.as_tuple()),
        "exceptional_polynomial": format_dense_poly(ex.polynomial, s),
        "exceptional_polynomial_integer": format_dense_poly(
            dense.primitive_integer(list(ex.polynomial)), s),
        "empty": ex.is_empty,
        "factors": [format_dense_poly(dense.primitive_integer(list(q)), s) for q in ex.factors],
        "candidates": [
            {"factor": format_dense_poly(dense.primitive_integer(list(v.factor)), s),
             "verdict": v.label(), "exceptional": v.exceptional}
            for v in ex.per_root],
    }
    if not stable:
        r["timing_seconds"] = round(time.perf_counter() - t0, 3)
    return r, ex


def format_family(r):
    lines = [f"input: {r['input']}", f"parameter: {r['parameter']}",
             "generic multi-integer: "
             f"({', '.join(map(str, r['generic_multi_integer']))})"]
    if r["empty"]:
        lines.append("exceptional set: empty")
    else:
        lines.append(f"exceptional polynomial: {r['exceptional_polynomial_integer']}")
        lines.append("irreducible factors:")
        lines.extend(f"  {q}" for q in r["factors"])
    lines.append("candidates checked by exact specialization:")
    for c in r["candidates"]:
        mark = "exceptional" if c["exceptional"] else "generic"
        lines.append(f"  {c['factor']}: {c['verdict']} ({mark})")
    if "timing_seconds" in r:
        lines.append(f"time: {r['timing_seconds']} s")
    return "\n".join(lines)


def parameter_plane_svg(ex, param="s", size=480):
    """SVG of the complex parameter plane with the exceptional roots marked."""
    pts = []
    for i, q in enumerate(ex.factors):
        for b in isolate_complex_roots(list(q), 30):
            pts.append((float(b.re), float(b.im), i))
    span = max([1.0] + [max(abs(x), abs(y)) for x, y, _ in pts]) * 1.2
    half = size / 2

    def X(x):
        return half + x / span * (half - 20)

    def Y(y):
        return half - y / span * (half - 20)

    colors = ["#c0392b", "#2471a3", "#229954", "#7d3c98", "#b9770e", "#17202a"]
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 20 * len(ex.factors) + 10}">',
           f'<rect width="100%" height="100%" fill="white"/>',
           f'<line x1="10" y1="{half:.1f}" x2="{size - 10}" y2="{half:.1f}" stroke="#999"/>',
           f'<line x1="{half:.1f}" y1="10" x2="{half:.1f}" y2="{size - 10}" stroke="#999"/>',
           f'<text x="{size - 30}" y="{half - 6:.1f}" font-size="12">Re {param}</text>',
           f'<text x="{half + 6:.1f}" y="20" font-size="12">Im {param}</text>',
           f'<circle cx="{half:.1f}" cy="{half:.1f}" r="{(half - 20) / span:.2f}" fill="none" '
           f'stroke="#ddd" stroke-dasharray="4 3"/>']
    for x, y, i in pts:
        out.append(f'<circle cx="{X(x):.2f}" cy="{Y(y):.2f}" r="4" fill="{colors[i % len(colors)]}"/>')
    for i, q in enumerate(ex.factors):
        label = format_dense_poly(dense.primitive_integer(list(q)), param)
        out.append(f'<text x="10" y="{size + 20 * i + 14}" font-size="12" '
                   f'fill="{colors[i % len(colors)]}">{_xml(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _xml(s):
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def cmd_family(args):
    spec = parse_file(args.file)
    if spec.param is None:
        raise UsageError("input declares no parameter")
    try:
        r, ex = family_report(spec, args.stable)
    except NonIsolatedGenerically as exc:
        print(f"generic member degenerates: {exc}", file=sys.stderr)
        return EXIT_GENERIC
    emit(r, format_family, args.json)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(parameter_plane_svg(ex, spec.param))
    return EXIT_OK


# ---------------------------------------------------------------------------
# equiv

def _common_field(f, vf, g, vg):
    """Write f and g over one field; two roots of the same or different
    minimal polynomials get a joined field with their embeddings matched."""
    Kf, Kg = f.field, g.field
    if isinstance(vf, AlgebraicValue) and isinstance(vg, AlgebraicValue) \
            and Kf != QQ and Kg != QQ:
        adj, into1, into2 = join_fields(Kf, Kg, vf.embedding_index, vg.embedding_index)
        L = adj.field
        return f.map_coeffs(into1, L), g.map_coeffs(into2, L)
    return f, g


def format_map(e):
    phi = e.phi
    K = phi.field

    def c(v):
        return K.format(v) if hasattr(K, "format") else str(v)
    return (f"[[{c(phi.a)}, {c(phi.b)}], [{c(phi.c)}, {c(phi.d)}]] * (x, y) + "
            f"({c(phi.e)}, {c(phi.f)})   i.e. {phi}   with g o Phi = ({c(e.scalar)}) * f")


def cmd_equiv(args):
    spec_f, f, vf = load(args.f, args.set_f or args.set)
    spec_g, g, vg = load(args.g, args.set_g or args.set)
    f, g = _common_field(f, vf, g, vg)
    try:
        eqs = find_equivalences(f, g, scalars=args.scalars)
    except ArrangementMismatch:
        eqs = []
    r = {"f": print_canonical(f), "g": print_canonical(g), "field": f.field.describe(),
         "scalars": args.scalars, "equivalent": bool(eqs),
         "maps": [format_map(e) for e in eqs]}

    def text(r):
        lines = [f"f: {r['f']}", f"g: {r['g']}", f"field: {r['field']}"]
        if not r["maps"]:
            lines.append("NOT EQUIVALENT (affine)")
        for i, m in enumerate(r["maps"], 1):
            lines.append(f"Phi {i}: {m}")
        return "\n".join(lines)
    emit(r, text, args.json)
    return EXIT_OK if eqs else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args):
    from .replay import format_results, run_all
    results = run_all(mutate=args.mutate, stable=args.stable)
    r = {"mutated": args.mutate, "results": results,
         "all_pass": all(x["status"] == "PASS" for x in results)}
    emit(r, lambda r: format_results(r["results"]), args.json)
    return EXIT_OK if r["all_pass"] else EXIT_FAIL


# ---------------------------------------------------------------------------

def emit(report, formatter, as_json):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(formatter(report))


def build_parser():
    p = _Parser(prog="polyinv", description="Exact invariants of complex plane polynomials.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--stable", action="store_true", help="omit timing fields")

    a = sub.add_parser("analyze", help="multi-integer of one polynomial")
    a.add_argument("file")
    a.add_argument("--set", metavar="NAME=VALUE", help="bind the parameter; VALUE may be root(POLY[,INDEX])")
    a.add_argument("--cross-check", action="store_true",
                   help="recompute lambda from fibre Euler characteristics")
    common(a)
    a.set_defaults(func=cmd_analyze)

    fm = sub.add_parser("family", help="exceptional parameter set of a family")
    fm.add_argument("file")
    fm.add_argument("--svg", metavar="PATH", help="write the parameter plane with exceptional roots")
    common(fm)
    fm.set_defaults(func=cmd_family)

    e = sub.add_parser("equiv", help="affine equivalences g o Phi = kappa * f")
    e.add_argument("f")
    e.add_argument("g")
    e.add_argument("--set", metavar="NAME=VALUE", help="parameter binding for both inputs")
    e.add_argument("--set-f", metavar="NAME=VALUE", help="parameter binding for f")
    e.add_argument("--set-g", metavar="NAME=VALUE", help="parameter binding for g")
    e.add_argument("--scalars", choices=SCALAR_POLICIES, default="sign",
                   help="allowed kappa: 1, +-1 (default) or any nonzero constant")
    common(e)
    e.set_defaults(func=cmd_equiv)

    v = sub.add_parser("verify", help="run the acceptance replay")
    v.add_argument("--mutate", action="store_true",
                   help="corrupt one coefficient of family B; some check must fail")
    common(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonLinearFactor as exc:
        print(f"not a product of lines: residual factor {print_canonical(exc.residual)}"
              if isinstance(exc.residual, Poly) else f"not a product of lines: {exc}",
              file=sys.stderr)
        return EXIT_NON_LINEAR
    except NonIsolatedSingularities as exc:
        print(f"non-isolated singularities: {exc}", file=sys.stderr)
        return EXIT_NON_ISOLATED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
