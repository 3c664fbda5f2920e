from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, strategies as st

from vandercell import cell, cell2d
from vandercell.gale import INF, enumerate_facets
from vandercell.symcore import eval_power_sum, nu_star


def labels(patches):
    return [p.label() for p in patches]


def test_planar_patch_counts():
    for n in range(3, 12):
        patches = cell.enumerate_patches(n, 3)
        assert len(patches) == n
        assert sorted(p.vertices.elements for p in patches) == sorted(f.elements for f in enumerate_facets(n, 2))


def test_subsimplex_and_limit_patches():
    sub = cell.enumerate_patches(4, 3, cell.Source.SUBSIMPLEX)
    assert len(sub) == 5 and sum(p.vertices.has_inf for p in sub) == 2
    assert labels(cell.enumerate_patches(3, 3, cell.Source.LIMIT)) == ["{1,2}", "{1,inf}", "{2,3}"]
    lim = cell.enumerate_patches(5, 3, cell.Source.LIMIT, k_max=6)
    assert labels(lim) == ["{1,2}", "{1,inf}", "{2,3}", "{3,4}", "{4,5}", "{5,6}"]


def test_patch_dimensions():
    for p in cell.enumerate_patches(7, 5):
        assert p.dimension == 3 and p.vertices.size == 4 and p.n == 7


def test_kbar_combination_orders_values():
    x = cell.kbar_combination((1, 3), (F(1, 2), F(1, 2)), 4)
    assert x.zero_count == 1 and x.entries == ((F(1, 6), 2), (F(2, 3), 1))
    assert x.in_simplex()
    with pytest.raises(ValueError):
        cell.kbar_combination((1, 2), (F(1, 2), F(1, 3)), 3)
    with pytest.raises(ValueError):
        cell.kbar_combination((1, 5), (F(1, 2), F(1, 2)), 4)


def test_kappa_examples():
    assert cell.kappa_facet((1, 2), (F(1, 2), F(1, 2)), 3, 3) == (F(5, 8), F(7, 16))
    with pytest.raises(ValueError):
        cell.kappa_facet((2, 4), (F(1, 2), F(1, 2)), 5, 3)


def test_scale_flow_domain():
    assert cell.scale_flow((F(1, 2), F(1, 4)), F(1, 2)) == (F(1, 8), F(1, 32))
    for t in (F(-1, 10), F(11, 10)):
        with pytest.raises(ValueError):
            cell.scale_flow((F(1, 2), F(1, 4)), t)


def test_compositions_count():
    for total in range(5):
        for parts in range(1, 5):
            comps = list(cell.compositions(total, parts))
            assert len(comps) == comb(total + parts - 1, parts - 1)
            assert all(sum(c) == total for c in comps)


@pytest.mark.parametrize("n", [3, 4, 6])
def test_planar_patch_samples_lie_on_the_boundary(n):
    for patch in cell.enumerate_patches(n, 3):
        for sample in cell.patch_sample(patch, 6):
            assert cell2d.membership(sample.point, cell2d.FiniteN(n)) is cell2d.Membership.BOUNDARY


def test_limit_patch_samples_lie_on_the_limit_boundary():
    for patch in cell.enumerate_patches(6, 3, cell.Source.LIMIT):
        for sample in cell.patch_sample(patch, 5):
            if any(sample.point):
                assert cell2d.membership(sample.point, cell2d.LIMIT) is cell2d.Membership.BOUNDARY


def test_subsimplex_samples_are_subprobability_images():
    for patch in cell.enumerate_patches(5, 4, cell.Source.SUBSIMPLEX):
        for sample in cell.patch_sample(patch, 3):
            finite = [(k, w) for k, w in zip(patch.vertices.elements, sample.weights) if k != INF]
            s = sum(w for _, w in finite)
            if s == 0:
                assert sample.point == (0, 0, 0)
                continue
            x = cell.kbar_combination([k for k, _ in finite], [w / s for _, w in finite], 5).scaled(s)
            assert x.in_subsimplex()
            assert sample.point == nu_star(x, 4)


weights2 = st.fractions(min_value=0, max_value=1, max_denominator=30).map(lambda w: (w, 1 - w))


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(enumerate_facets(n, 2)))), weights2)
def test_kappa_agrees_with_patch_points(nf, w):
    n, facet = nf
    patch = next(p for p in cell.enumerate_patches(n, 3) if p.vertices == facet)
    assert cell.kappa_facet(facet, w, n, 3) == cell.patch_point(patch, w)
    assert eval_power_sum(cell.kbar_combination(facet.elements, w, n), 1) == 1


@given(
    st.lists(st.fractions(min_value=0, max_value=1, max_denominator=20), min_size=2, max_size=2),
    st.fractions(min_value=0, max_value=1, max_denominator=20),
)
def test_flow_keeps_limit_cell(u_weights, t):
    """Images from any n stay in the limit cell under the flow."""
    x = cell.kbar_combination((1, 2, 4), (u_weights[0] / 2, u_weights[1] / 2, 1 - sum(u_weights) / 2), 6)
    u = nu_star(x, 3)
    flowed = cell.scale_flow(u, t)
    if t:
        assert cell2d.membership(flowed, cell2d.LIMIT) is not cell2d.Membership.OUTSIDE
