"""Acceptance gate: one test per criterion, reported as PASS/FAIL in the summary."""

import random
import time
from fractions import Fraction

import pytest

import oracles
from vandercell import cell, cell2d, copositivity, gale, halfdegree, polyalg, trace
from vandercell.symcore import Basis, CompressedPoint, SymmetricPolynomial, nu_star

F = Fraction


def report(name, ok):
    print(f"{'PASS' if ok else 'FAIL'}  {name}")
    assert ok


@pytest.mark.criterion("1 kappa values of the non-well-defined example")
def test_kappa_remark(criterion):
    start = time.perf_counter()
    a = cell.kappa_facet((2, 4), (F(1, 13), F(12, 13)), 5, 3, require_facet=False)
    b = cell.kappa_facet((3, 5), (F(27, 52), F(25, 52)), 5, 3, require_facet=False)
    pa = cell.polytope_point((2, 4), (F(1, 13), F(12, 13)), 3)
    pb = cell.polytope_point((3, 5), (F(27, 52), F(25, 52)), 3)
    elapsed = time.perf_counter() - start
    report(criterion, a[0] == F(85, 338) and b[0] == F(319, 1352) and pa == pb and a != b and elapsed < 1.0)


@pytest.mark.criterion("2 boundary arc endpoints and slopes")
def test_arcs(criterion):
    ok = True
    for k in range(1, 51):
        arc = cell2d.Arc.lower(k)
        ok &= cell2d.arc_eval(arc, F(1, k)) == (F(1, k), F(1, k * k))
        ok &= cell2d.arc_eval(arc, F(1, k + 1)) == (F(1, k + 1), F(1, (k + 1) ** 2))
        ok &= cell2d.arc_slope(arc, F(1, k + 1)) == F(3, k + 1)
        ok &= cell2d.arc_slope(arc, F(1, k)) == F(3, 2 * k)
    for n in range(3, 51):
        up = cell2d.Arc.upper(n)
        ok &= cell2d.arc_eval(up, F(0)) == (1, 1)
        ok &= cell2d.arc_eval(up, F(1, n)) == (F(1, n), F(1, n * n))
    report(criterion, ok)


@pytest.mark.criterion("3 area by Green's theorem and closed form")
def test_area(criterion):
    ok = cell2d.area(cell2d.FiniteN(3)) == F(1, 80)
    for n in range(3, 21):
        exact = cell2d.area(cell2d.FiniteN(n))
        green = cell2d.area(cell2d.FiniteN(n), cell2d.AreaMode.GREEN)
        ok &= abs(green - float(exact)) < 1e-8
    lim_green = cell2d.area(cell2d.LIMIT, cell2d.AreaMode.GREEN)
    lim_closed = cell2d.area(cell2d.LIMIT)
    ok &= abs(lim_green - 0.0442877) < 1e-6 and abs(lim_closed - 0.0442877) < 1e-6
    report(criterion, ok)


@pytest.mark.criterion("4 Gale bijection and patch count")
def test_gale_bijection(criterion):
    ok = True
    for d in range(3, 7):
        for n in range(d, 11):
            vectors = gale.multiplicity_vectors(n, d - 1)
            image = [gale.multiplicity_to_gale(mv).elements for mv in vectors]
            expected = oracles.facets_by_separation(n, d - 1)
            ok &= len(set(image)) == len(image) and sorted(image) == sorted(expected)
            for mv, S in zip(vectors, image):
                ok &= gale.gale_to_multiplicity(S, n, d) == mv
    for n in range(3, 21):
        ok &= len(cell.enumerate_patches(n, 3)) == n
    report(criterion, ok)


def _hook_instance(rng):
    d = rng.randint(3, 5)
    n = rng.randint(d, 6)
    coeffs = {j: rng.randint(-6, 6) for j in [0] + list(range(2, d + 1))}
    if not any(coeffs.values()):
        coeffs[0] = 1
    return n, copositivity.HookPolynomial(d, coeffs)


@pytest.mark.criterion("5 hook copositivity against a simplex oracle")
def test_hook(criterion):
    rng = random.Random(5)
    agree = decided = 0
    while decided < 200:
        n, f = _hook_instance(rng)
        m = oracles.simplex_min(oracles.hook_values(f.coeffs, f.d), n, refine=0)
        if m > -1e-6:
            m = oracles.simplex_min(oracles.hook_values(f.coeffs, f.d), n, refine=2)
        if abs(m) < 1e-6:
            continue
        decided += 1
        agree += copositivity.hook_copositive(f, n).holds == (m > 0)
    f = copositivity.HookPolynomial.from_list([1, 0, -4], 3)
    # at n = 2: e1^3 - 4 e1 e2 = (x + y)(x - y)^2
    x, y = F(2, 7), F(5, 7)
    factored = f.to_symmetric().at_vector((x, y)) == (x + y) * (x - y) ** 2
    at2 = all(copositivity.hook_test_value(f, k) >= 0 for k in (1, 2))
    at3 = copositivity.hook_copositive(f, 3)
    ok = agree == 200 and factored and at2 and not at3.holds and at3.k == 3
    report(criterion, ok)


@pytest.mark.criterion("6 even sextic test set")
def test_sextic(criterion):
    ok = copositivity.clr_sextic(copositivity.SexticCoeffs(1, -2, 1)).holds
    d = copositivity.clr_sextic(copositivity.SexticCoeffs(0, -1, 1), copositivity.FiniteN(3))
    ok &= (not d.holds) and d.k == 2 and d.value == F(-1, 4)
    rng = random.Random(6)
    decided = 0
    while decided < 100:
        a, b, c = (rng.randint(-5, 5) for _ in range(3))
        if not (a or b or c):
            continue
        n = rng.randint(3, 6)
        m = oracles.simplex_min(oracles.sextic_on_squares(a, b, c), n, refine=0)
        if m > -1e-6:
            m = oracles.simplex_min(oracles.sextic_on_squares(a, b, c), n, refine=2)
        if abs(m) < 1e-6:
            continue
        decided += 1
        ok &= copositivity.clr_sextic(copositivity.SexticCoeffs(a, b, c), copositivity.FiniteN(n)).holds == (m > 0)
    report(criterion, ok)


@pytest.mark.criterion("7 power-sum quartic beats its test set")
def test_power_sum_quartic(criterion):
    r = copositivity.power_sum_testset_counterexample(max_k=1000)
    xs = (4, 1, 1)
    p = lambda a: oracles.power_sum_bruteforce(xs, a)
    direct = 2 * p(4) - 3 * p(3) * p(1) + p(2) * p(1) ** 2
    ok = r.all_nonnegative and len(r.test_values) == 1000
    ok &= copositivity.g_m(2, 4) == -24 == direct == r.direct_value
    report(criterion, ok)


def _random_p(rng, k):
    p = {}
    for _ in range(rng.randint(1, 4)):
        deg = rng.randint(0, 3)
        mono = tuple(sorted(f"Y{rng.randint(1, k)}" for _ in range(deg)))
        p[mono] = p.get(mono, F(0)) + rng.choice([-3, -2, -1, 1, 2, 3])
    p = {m: c for m, c in p.items() if c}
    return p or {("Y1",): F(1)}


@pytest.mark.criterion("8 tau grounding identity and L above g")
def test_tau_and_L(criterion):
    rng = random.Random(8)
    ok = True
    for trial in range(6):
        k = 1 if trial < 4 else 2
        p = _random_p(rng, k)
        q, _ = trace.aux_polynomial(p, k)
        encoded = trace.tau_encode(p, k)
        sizes = [(n,) for n in range(1, 21)] if k == 1 else [(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(8)]
        for ns in sizes:
            values = {}
            for i, n in enumerate(ns, start=1):
                values[f"Y{i}"] = F(n - 1, n)
                values[f"Z{i}"] = F((n - 1) * (n - 2), n * n)
            got = encoded.evaluate([trace.uniform_spectrum(n) for n in ns])
            ok &= got == polyalg.evaluate(q, values)
    N = 10**4
    touch = {F(t - 1, t) for t in range(1, N + 1) if N % t == 0} | {F(1)}
    for i in range(N + 1):
        x = F(i, N)
        diff = trace.L_eval(x) - trace.g_convex(x)
        ok &= diff >= 0 and ((diff == 0) == (x in touch))
    report(criterion, ok)


def _random_symmetric(rng, degree):
    parts = {4: [(1, 3), (2, 2), (1, 1, 2), (4,), (1, 1, 1, 1)], 6: [(1, 5), (2, 4), (3, 3), (2, 2, 2), (1, 2, 3), (6,)]}[degree]
    terms = {m: F(rng.randint(-3, 3)) for m in rng.sample(parts, 3)}
    terms = {m: c for m, c in terms.items() if c} or {parts[0]: F(1)}
    return SymmetricPolynomial(Basis.POWER, terms)


@pytest.mark.criterion("9 half-degree counterexample and Phi consistency")
def test_halfdegree(criterion):
    f = SymmetricPolynomial(Basis.POWER, {(1, 3): F(1), (2, 2): F(-1)})
    v = halfdegree.check_power_mean_all_n(f)
    ok = isinstance(v, halfdegree.Counterexample) and v.realized_n == (2,) and v.value == -1
    if ok:
        xs = v.realized_point[0]
        p = lambda a: oracles.power_sum_bruteforce(xs, a) / len(xs)
        ok &= set(xs) == {1, -1} and p(1) * p(3) - p(2) ** 2 == -1
    rng = random.Random(9)
    for degree in (4, 6):
        for _ in range(3):
            g = _random_symmetric(rng, degree)
            phi = halfdegree.build_phi(g)
            kappa = phi.d
            tgrid = [F(i, 2) for i in range(-4, 5)]
            for n in range(1, 9):
                phi_min = red_min = None
                for prob in halfdegree.reduce_fixed_n(g, n, power_mean=True):
                    j = len(prob.multiplicities)
                    s = [F(a, n) for a in prob.multiplicities] + [F(0)] * (kappa - j)
                    for _ in range(4):
                        t = [rng.choice(tgrid) for _ in range(kappa)]
                        a_val = phi.evaluate(s, t)
                        b_val = prob.evaluate(t[:j])
                        ok &= abs(float(a_val - b_val)) < 1e-6
                        phi_min = a_val if phi_min is None else min(phi_min, a_val)
                        red_min = b_val if red_min is None else min(red_min, b_val)
                ok &= abs(float(phi_min - red_min)) < 1e-6
    report(criterion, ok)


@pytest.mark.criterion("10 cell images inside and flow invariance")
def test_membership_and_flow(criterion):
    rng = random.Random(10)
    ok = True
    for _ in range(10**4):
        n = rng.randint(3, 8)
        w = [rng.randint(0, 20) for _ in range(n)]
        if not any(w):
            w[0] = 1
        x = CompressedPoint.from_coords([F(v, sum(w)) for v in w])
        u = nu_star(x, 3)
        ok &= cell2d.membership(u, cell2d.FiniteN(n)) is not cell2d.Membership.OUTSIDE
        t = F(rng.randint(1, 50), 50)
        ok &= cell2d.membership(cell.scale_flow(u, t), cell2d.LIMIT) is not cell2d.Membership.OUTSIDE
    report(criterion, ok)
