"""Replay of the acceptance suite: eleven exact checks on the two line
arrangement families

    A: f_s = x*y*(x - y)*(y - 1)*(x - s*y)
    B: f_s = x*y*(y - 1)*(x + y - 1)*(x - s*y)

Each check returns (passed, detail).  ``run_all`` shares expensive results
between checks and reports one row per criterion.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction

from .arrangement import equivalence_partners, find_equivalences
from .atinfinity import MultiInteger, multiinteger
from .critical import critical_report, fiber_point_count
from .exactnum import QQi, dense
from .exactnum.fields import NumberField
from .frontend import parse
from .parametric import (AlgebraicValue, ParametricFamily, conj_coeffs, conjugate_pair,
                         exceptional_set, reciprocal_root_structure)
from .polyring import AffineAuto, Poly, apply_affine, resultant, sylvester_resultant

FAMILY_A = "vars: x y\nparam: s\npoly: x*y*(x - y)*(y - 1)*(x - s*y)\n"
FAMILY_B = "vars: x y\nparam: s\npoly: x*y*(y - 1)*(x + y - 1)*(x - s*y)\n"
# family B with one corrupted coefficient: y in the factor x + y - 1 gets 2
FAMILY_B_MUTANT = "vars: x y\nparam: s\npoly: x*y*(y - 1)*(x + 2*y - 1)*(x - s*y)\n"

Q1 = [256, 736, 825, 736, 256]
Q2 = [256, 448, 789, 448, 256]
EXCEPTIONAL_A = [0, -1, 2, -2, 1]            # s^4 - 2s^3 + 2s^2 - s = s(s-1)(s^2-s+1)
SEED = 20240611


def family(text):
    return ParametricFamily.from_spec(parse(text))


class Context:
    """Lazily computed shared objects."""

    def __init__(self, mutate=False):
        self.A = family(FAMILY_A)
        self.B = family(FAMILY_B_MUTANT if mutate else FAMILY_B)
        self.K = NumberField([1, -1, 1], "k")
        self._cache = {}

    def get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def exceptional(self, name):
        fam = self.A if name == "A" else self.B
        return self.get(("C", name), lambda: exceptional_set(fam))

    def pair(self):
        return self.get("pair", lambda: conjugate_pair(self.B, Q2, 0))


def _mi(f):
    return multiinteger(f).as_tuple()


def check_1(ctx):
    m = _mi(ctx.A.specialize(2))
    return m == (14, 3, 0, 0, 3), f"m(f_2) = {m}"


def check_2(ctx):
    f = ctx.A.specialize(ctx.K.generator())
    crit = critical_report(f)
    m = multiinteger(f, crit).as_tuple()
    nonzero = [(p, k) for p, k in crit.value_multiplicities if p.dense_coeffs() != [0, 1]]
    ok = m == (14, 2, 0, 0, 2) and len(nonzero) == 1 and nonzero[0][0].degree() == 1
    detail = f"m(f_k) = {m}"
    if ok:
        piece, mult = nonzero[0]
        points, local = fiber_point_count(f, piece, crit)
        ok = mult == 2 and (points, local) == (1, 2)
        detail += f"; nonzero value multiplicity {mult}, fibre points {points}, local dim {local}"
    return ok, detail


def _same_roots(p, q):
    p, q = dense.squarefree_part(dense.to_fractions(p)), dense.squarefree_part(dense.to_fractions(q))
    g = dense.gcd(p, q)
    return len(g) == len(p) == len(q)


def check_3(ctx):
    ex = ctx.exceptional("A")
    ok = _same_roots(list(ex.polynomial), EXCEPTIONAL_A)
    return ok, f"C_A = {ex.poly()}"


def check_4(ctx):
    P = equivalence_partners(ctx.A, Fraction(2))
    f2, fm, f3 = ctx.A.specialize(2), ctx.A.specialize(-1), ctx.A.specialize(3)
    maps = [e.phi for e in find_equivalences(f2, fm)]
    target = AffineAuto(-1, 1, 0, 1)
    none = find_equivalences(f2, f3)
    ok = set(P.values) == {Fraction(2), Fraction(-1)} and target in maps and not none
    return ok, (f"partners of 2: {[str(v) for v in sorted(P.values)]}; (y - x, y) found: {target in maps}; "
                f"f_2 vs f_3: {len(none)} maps")


def check_5(ctx):
    k = ctx.K.generator()
    eqs = find_equivalences(ctx.A.specialize(k), ctx.A.specialize(1 - k))
    return bool(eqs), f"{len(eqs)} maps, e.g. {eqs[0].phi}" if eqs else "no maps"


def check_6(ctx):
    m = _mi(ctx.B.specialize(2))
    return m == (14, 4, 0, 0, 4), f"m(f_2) = {m}"


def check_7(ctx):
    ex = ctx.exceptional("B")
    ref = dense.mul(dense.mul([0, 1], [-1, 1]), [1, 1])
    ref = dense.mul(dense.mul(ref, dense.to_fractions(Q1)), dense.to_fractions(Q2))
    ok = _same_roots(list(ex.polynomial), ref)
    factors = ", ".join(str(Poly.from_dense(dense.primitive_integer(list(q)), "s"))
                        for q in ex.factors)
    return ok, f"factors of C_B: {factors}"


def check_8(ctx):
    v = AlgebraicValue.root_of(Q2, 0)
    m = _mi(ctx.B.specialize(v))
    return m == (14, 3, 0, 0, 3), f"m(f_k) = {m}"


def check_9(ctx):
    rep = reciprocal_root_structure(Q2)
    ok = (rep.is_palindromic and rep.closed_under_inversion
          and not rep.unit_modulus_root_exists and rep.resolvent_discriminant == -82944)
    detail = (f"palindromic {rep.is_palindromic}, closed {rep.closed_under_inversion}, "
              f"unit-modulus root {rep.unit_modulus_root_exists}, "
              f"resolvent discriminant {rep.resolvent_discriminant}")
    if not ok:
        return False, detail
    cp = ctx.pair()
    eqs = find_equivalences(cp.f, cp.fbar)
    conj_ok = conj_coeffs(cp.f, automorphism=cp.conj) == cp.fbar
    m1, m2 = _mi(cp.f), _mi(cp.fbar)
    ok = not eqs and conj_ok and m1 == m2
    detail += (f"; f_k vs f_kbar: {len(eqs)} maps; conj(f_k) = f_kbar: {conj_ok}; "
               f"m(f_k) = {m1}, m(f_kbar) = {m2}")
    return ok, detail


def check_10(ctx):
    flags = [critical_report(ctx.A.specialize(s)).non_isolated for s in (0, 1)]
    return all(flags), f"non-isolated at s = 0: {flags[0]}, s = 1: {flags[1]}"


# --- property suites ---------------------------------------------------------

AFFINE_INPUTS = ("x + x^2*y", "x^3 - 3*x + y^2", "x^2*y^2 + x")


def random_affine(rng):
    while True:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if a * d - b * c:
            return AffineAuto(a, b, c, d, rng.randint(-3, 3), rng.randint(-3, 3))


def random_poly(rng, gens, degree):
    terms = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if rng.random() < 0.6:
                terms[(i, j)] = Fraction(rng.randint(-5, 5))
    return Poly({m: c for m, c in terms.items() if c}, gens)


def affine_invariance(rng, maps=20):
    bad = []
    for src in AFFINE_INPUTS:
        f = parse(f"poly: {src}").poly
        m0 = _mi(f)
        for _ in range(maps):
            phi = random_affine(rng)
            if _mi(apply_affine(f, phi)) != m0:
                bad.append(f"{src} under {phi}")
    return bad


def sylvester_agreement(rng, pairs=50):
    bad = 0
    gens = ("x", "y")
    done = 0
    while done < pairs:
        p = random_poly(rng, gens, rng.randint(1, 4))
        q = random_poly(rng, gens, rng.randint(1, 4))
        if p.degree("y") < 1 or q.degree("y") < 1:
            continue
        done += 1
        if resultant(p, q, "y") != sylvester_resultant(p, q, "y"):
            bad += 1
    return bad


def specialization_consistency(rng, fam, ex, count=20):
    bad = []
    generic = ex.generic.as_tuple()
    done = 0
    while done < count:
        s0 = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        if not dense.evaluate(list(ex.polynomial), s0):
            continue
        done += 1
        if _mi(fam.specialize(s0)) != generic:
            bad.append(s0)
    return bad


def conjugation_invariance(ctx):
    k = ctx.K.generator()
    fk = ctx.A.specialize(k)
    gi = parse("field: Q(i)\npoly: x^3 + i*x*y + y^2 - i*x").poly
    bad = []
    for f in (fk, gi):
        if _mi(conj_coeffs(f)) != _mi(f):
            bad.append(str(f))
    return bad


def check_11(ctx):
    rng = random.Random(SEED)
    parts = {}
    parts["affine invariance (20 maps x 3 inputs)"] = affine_invariance(rng)
    parts["resultant vs Sylvester (50 pairs)"] = sylvester_agreement(rng)
    for name in ("A", "B"):
        fam = ctx.A if name == "A" else ctx.B
        parts[f"specialization family {name} (20 values)"] = specialization_consistency(
            rng, fam, ctx.exceptional(name))
    parts["conjugation invariance"] = conjugation_invariance(ctx)
    m = _mi(parse("poly: x + x^2*y").poly)
    parts["x + x^2*y"] = [] if m == (0, 0, 1, 1, 1) else [m]
    failed = [k for k, v in parts.items() if v]
    detail = "; ".join(f"{k}: {'ok' if not v else v}" for k, v in parts.items())
    return not failed, detail


CHECKS = [
    (1, "family A generic multi-integer at s = 2", check_1),
    (2, "family A at a root k of s^2 - s + 1: cusp fibre", check_2),
    (3, "family A exceptional set", check_3),
    (4, "family A equivalences at s = 2", check_4),
    (5, "family A: f_k and f_(1-k) equivalent", check_5),
    (6, "family B generic multi-integer at s = 2", check_6),
    (7, "family B exceptional set", check_7),
    (8, "family B at a root of 256s^4 + 448s^3 + 789s^2 + 448s + 256", check_8),
    (9, "quartic reciprocal structure and f_k, f_kbar", check_9),
    (10, "family A degenerate members s = 0, 1", check_10),
    (11, "property suites", check_11),
]


def run_check(number, ctx=None, stable=False):
    ctx = ctx or Context()
    _, name, fn = CHECKS[number - 1]
    t0 = time.perf_counter()
    try:
        ok, detail = fn(ctx)
    except Exception as exc:  # a crash is a failure of the criterion
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    row = {"id": number, "name": name, "status": "PASS" if ok else "FAIL", "detail": detail}
    if not stable:
        row["seconds"] = round(time.perf_counter() - t0, 2)
    return row


def run_all(mutate=False, stable=False, only=None):
    ctx = Context(mutate)
    return [run_check(n, ctx, stable) for n, _, _ in CHECKS if only is None or n in only]


def format_results(rows):
    lines = []
    for r in rows:
        t = f" ({r['seconds']} s)" if "seconds" in r else ""
        lines.append(f"{r['status']}  {r['id']:>2}. {r['name']}{t}")
        lines.append(f"       {r['detail']}")
    n = sum(r["status"] == "PASS" for r in rows)
    lines.append(f"{n}/{len(rows)} passed")
    return "\n".join(lines)
