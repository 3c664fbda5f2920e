"""Reference values with closed forms, checked against the implementation.

Functions are looked up through their modules at call time, so a patched
implementation is what gets checked.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, List, Tuple

from . import cell, cell2d, copositivity, gale, symcore, trace


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _remark_values() -> Tuple[bool, str]:
    F = Fraction
    a = cell.kappa_facet((2, 4), (F(1, 13), F(12, 13)), 5, 3, require_facet=False)
    b = cell.kappa_facet((3, 5), (F(27, 52), F(25, 52)), 5, 3, require_facet=False)
    pa = cell.polytope_point((2, 4), (F(1, 13), F(12, 13)), 3)
    pb = cell.polytope_point((3, 5), (F(27, 52), F(25, 52)), 3)
    x = symcore.CompressedPoint.from_entries([(0, 1), (F(3, 13), 2), (F(7, 26), 2)])
    y = symcore.CompressedPoint.from_entries([(F(5, 52), 2), (F(14, 52), 3)])
    ok = (
        a[0] == F(85, 338)
        and b[0] == F(319, 1352)
        and pa == pb == (F(7, 26), F(1, 13))
        and symcore.eval_power_sum(x, 2) == F(85, 338)
        and symcore.eval_power_sum(y, 2) == F(319, 1352)
        and symcore.eval_power_sum(x, 1) == symcore.eval_power_sum(y, 1) == 1
    )
    shown = "(" + ", ".join(str(v) for v in pa) + ")"
    return ok, f"p2 = {a[0]}, {b[0]}; common polytope point {shown}"


def _arc_endpoints() -> Tuple[bool, str]:
    F = Fraction
    bad = []
    for k in range(1, 51):
        arc = cell2d.Arc.lower(k)
        if cell2d.arc_eval(arc, F(1, k)) != (F(1, k), F(1, k * k)):
            bad.append(f"L{k} right")
        if cell2d.arc_eval(arc, F(1, k + 1)) != (F(1, k + 1), F(1, (k + 1) ** 2)):
            bad.append(f"L{k} left")
    for n in range(3, 51):
        up = cell2d.Arc.upper(n)
        if cell2d.arc_eval(up, F(0)) != (1, 1) or cell2d.arc_eval(up, F(1, n)) != (F(1, n), F(1, n * n)):
            bad.append(f"U for n={n}")
    return not bad, "all endpoints exact" if not bad else ", ".join(bad[:5])


def _arc_slopes() -> Tuple[bool, str]:
    F = Fraction
    bad = []
    for k in range(1, 51):
        arc = cell2d.Arc.lower(k)
        if cell2d.arc_slope(arc, F(1, k + 1)) != F(3, k + 1) or cell2d.arc_slope(arc, F(1, k)) != F(3, 2 * k):
            bad.append(k)
    for n in range(3, 21):
        for sp in cell2d.singular_points(n):
            k = sp.k
            if 1 < k < n and (sp.left_slope, sp.right_slope, sp.kind) != (F(3, 2 * k), F(3, k), cell2d.SingularKind.CORNER):
                bad.append((n, k))
            if k in (1, n) and sp.kind is not cell2d.SingularKind.CUSP:
                bad.append((n, k))
    return not bad, "slopes 3/(k+1), 3/(2k) exact; corners and cusps classified" if not bad else str(bad[:5])


def _area_values() -> Tuple[bool, str]:
    a3 = cell2d.area(cell2d.FiniteN(3))
    a4 = cell2d.area(cell2d.FiniteN(4))
    lim = cell2d.area(cell2d.LIMIT)
    ok = a3 == Fraction(1, 80) and a4 == Fraction(43, 2160) and abs(lim - 0.0442877) < 1e-6
    return ok, f"n=3: {a3}, n=4: {a4}, limit {lim:.7f}"


def _test_values() -> Tuple[bool, str]:
    bad = [k for k in range(1, 1001) if copositivity.power_sum_test_value(k) != Fraction((k - 1) * (k - 2), k**3)]
    neg = [k for k in range(1, 1001) if copositivity.power_sum_test_value(k) < 0]
    return not bad and not neg, "(k-1)(k-2)/k^3 reproduced and nonnegative for k <= 1000"


def _L_and_g() -> Tuple[bool, str]:
    F = Fraction
    bad = []
    for t in range(1, 201):
        x = F(t - 1, t)
        want = F((t - 1) * (t - 2), t * t)
        if trace.L_eval(x) != want or trace.g_convex(x) != want:
            bad.append(t)
        if trace.L_eval(F(t, t + 1)) != F(t * (t - 1), (t + 1) ** 2):
            bad.append(("next", t))
    if trace.L_eval(1) != 1:
        bad.append("L(1)")
    return not bad, "L((t-1)/t) = g((t-1)/t) = (t-1)(t-2)/t^2, L(1) = 1" if not bad else str(bad[:5])


def _vertex_formulas() -> Tuple[bool, str]:
    F = Fraction
    bad = []
    for n in range(1, 31):
        x = symcore.CompressedPoint.uniform(n)
        e = [symcore.eval_elementary(x, j) for j in range(2, 6)]
        if [F(comb(n, j), n**j) for j in range(2, 6)] != e:
            bad.append(("e", n))
        if n >= 1 and (2 * e[0], 6 * e[1]) != (F(n - 1, n), F((n - 1) * (n - 2), n * n)):
            bad.append(("C", n))
        if symcore.moment_vertex(n, 6, symcore.Basis.ELEMENTARY) != tuple(F(comb(n, j), n**j) for j in range(2, 7)):
            bad.append(("mv", n))
        if symcore.nu_star(x, 6) != symcore.moment_vertex(n, 6):
            bad.append(("p", n))
    return not bad, "uniform points map to (1/k, ..., 1/k^(d-1)) and (C(k,j)/k^j)" if not bad else str(bad[:5])


def _affine_relations() -> Tuple[bool, str]:
    F = Fraction
    pts = [
        symcore.CompressedPoint.from_coords([F(1, 2), F(1, 3), F(1, 6)]),
        symcore.CompressedPoint.from_coords([F(1, 7)] * 3 + [F(4, 7)]),
        symcore.CompressedPoint.from_coords([1]),
    ]
    ok = all(
        symcore.eval_elementary(x, 2) == F(1, 2) - symcore.eval_power_sum(x, 2) / 2
        and symcore.eval_elementary(x, 3)
        == F(1, 6) - symcore.eval_power_sum(x, 2) / 2 + symcore.eval_power_sum(x, 3) / 3
        for x in pts
    )
    return ok, "e2 = (1 - p2)/2 and e3 = 1/6 - p2/2 + p3/3 on the simplex"


def _gale_examples() -> Tuple[bool, str]:
    ok = (
        gale.is_gale((1, 3, 4), 5, 3)
        and gale.is_gale((1, 2), 5, 2)
        and not gale.is_gale((1, 3), 5, 2)
        and len(gale.enumerate_facets(5, 2)) == 5
        and len(cell.enumerate_patches(5, 3)) == 5
    )
    return ok, "evenness examples and arc count n = 5"


def _subsimplex_arc() -> Tuple[bool, str]:
    F = Fraction
    n = 4
    patches = cell.enumerate_patches(n, 3, cell.Source.SUBSIMPLEX)
    extra = [p for p in patches if p.vertices.elements == (n, gale.INF)]
    if len(patches) != 5 or len(extra) != 1:
        return False, f"{len(patches)} sub-simplex patches"
    ok = True
    for i in range(11):
        t = F(i, 10)
        point = cell.patch_point(extra[0], (t, 1 - t))
        ok &= point == (F(1, n) * t * t, F(1, n * n) * t**3)
    return ok, "extra lower arc (t^2/n, t^3/n^2) towards the origin"


def _quartic_counterexample() -> Tuple[bool, str]:
    r = copositivity.power_sum_testset_counterexample(max_k=50)
    ok = r.all_nonnegative and r.value == -24 and r.direct_value == -24 and (r.m, r.t) == (2, 4)
    return ok, f"g_{r.m}({r.t}) = {r.value}, direct {r.direct_value}"


CHECKS: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
    ("kappa-remark-values", _remark_values),
    ("arc-endpoints", _arc_endpoints),
    ("arc-slopes", _arc_slopes),
    ("area-values", _area_values),
    ("power-sum-test-values", _test_values),
    ("L-g-identities", _L_and_g),
    ("vertex-formulas", _vertex_formulas),
    ("affine-e-p-relations", _affine_relations),
    ("gale-examples", _gale_examples),
    ("subsimplex-extra-arc", _subsimplex_arc),
    ("quartic-counterexample", _quartic_counterexample),
]


def verify_paper() -> List[CheckResult]:
    results = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash counts as a failure of that item
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(passed), detail, time.perf_counter() - start))
    return results
