import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import oracles
from vandercell import halfdegree as hd
from vandercell.expr import parse_symmetric
from vandercell.symcore import Basis, SymmetricPolynomial

FAST = dict(budget=16)


def test_half_degree_bound():
    assert [hd.half_degree_bound(d) for d in (1, 2, 3, 4, 6, 7)] == [2, 2, 2, 2, 3, 3]


def test_positive_compositions():
    assert list(hd.positive_compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(hd.positive_compositions(2, 3)) == []


def test_reduced_problem_matches_direct_evaluation():
    f = parse_symmetric("p1*p3 - p2^2 + e2")
    for prob in hd.reduce_fixed_n(f, 4):
        xs = [F(i + 2, 3) * (-1) ** i for i in range(len(prob.multiplicities))]
        assert prob.evaluate(xs) == f.at_vector(prob.expanded_point(xs))
    with pytest.raises(ValueError):
        hd.reduce_fixed_n(f, 0)


def test_phi_rejects_odd_degree():
    with pytest.raises(ValueError):
        hd.build_phi(parse_symmetric("p1*p2"))


def test_phi_blocks():
    assert hd.build_phi(parse_symmetric("p1^2 - p2")).d == 2
    assert hd.build_phi(parse_symmetric("p2*p4 - p3^2")).d == 3
    phi = hd.build_phi_groups({((0, 1), (0, 1), (1, 4)): F(1)}, 2)
    assert phi.blocks == (2, 4) and phi.homogeneous


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_equals_power_mean_polynomial_exhaustively(n):
    """Lemma identity: Phi at s = alpha/n is f_n at the point with multiplicities alpha."""
    f = parse_symmetric("2*p1*p3 - p2^2 + p4 - 3*p1^2*p2")
    phi = hd.build_phi(f)
    kappa = phi.d
    values = [F(-2), F(1, 2), F(3)]
    for j in range(1, min(kappa, n) + 1):
        for alpha in hd.positive_compositions(n, j):
            for t in itertools.product(values, repeat=j):
                s = [F(a, n) for a in alpha] + [F(0)] * (kappa - j)
                tt = list(t) + [F(7)] * (kappa - j)
                point = [v for v, a in zip(t, alpha) for _ in range(a)]
                pm = lambda k: oracles.power_sum_bruteforce(point, k) / n
                direct = 2 * pm(1) * pm(3) - pm(2) ** 2 + pm(4) - 3 * pm(1) ** 2 * pm(2)
                assert phi.evaluate(s, tt) == direct


@given(st.lists(st.floats(-5, 5), min_size=1, max_size=8))
def test_project_simplex(v):
    p = hd.project_simplex(v)
    assert abs(sum(p) - 1) < 1e-9 and min(p) >= 0
    # idempotent
    assert max(abs(a - b) for a, b in zip(hd.project_simplex(p), p)) < 1e-9


@given(st.lists(st.floats(0, 1), min_size=1, max_size=5), st.integers(1, 50))
def test_apportion(s, n):
    alpha = hd._apportion(s, n)
    assert sum(alpha) == n and min(alpha) >= 0


def test_counterexample_is_exact():
    v = hd.check_power_mean_all_n(parse_symmetric("p1*p3 - p2^2"), **FAST)
    assert isinstance(v, hd.Counterexample)
    assert v.realized_n == (2,) and v.realized_point == ((1, -1),) and v.value == -1
    xs = v.realized_point[0]
    pm = lambda k: oracles.power_sum_bruteforce(xs, k) / len(xs)
    assert pm(1) * pm(3) - pm(2) ** 2 == v.value


def test_nonhomogeneous_counterexample():
    v = hd.check_power_mean_all_n(parse_symmetric("p1^2 - p2"), **FAST)
    assert isinstance(v, hd.Counterexample) and v.value < 0


def test_nonnegative_examples():
    v = hd.check_power_mean_all_n(parse_symmetric("p2"), **FAST)
    assert isinstance(v, hd.NumericallyNonnegative) and abs(v.min_found) < 1e-9
    v = hd.check_power_mean_all_n(parse_symmetric("p2*p4 - p3^2"), **FAST)
    assert isinstance(v, hd.NumericallyNonnegative) and v.box_radius == 10.0


def test_threads_do_not_change_the_verdict():
    f = parse_symmetric("p1^4 - p4")
    assert hd.check_power_mean_all_n(f, budget=16, threads=1) == hd.check_power_mean_all_n(f, budget=16, threads=4)


def test_seed_is_deterministic():
    f = parse_symmetric("p2*p4 - p3^2")
    a = hd.check_power_mean_all_n(f, budget=8, seed=3)
    b = hd.check_power_mean_all_n(f, budget=8, seed=3)
    assert a == b
