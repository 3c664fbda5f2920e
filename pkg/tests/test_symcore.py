from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import oracles
from vandercell.expr import parse_symmetric
from vandercell.symcore import (
    Basis,
    CompressedPoint,
    SymmetricPolynomial,
    eval_elementary,
    eval_power_sum,
    format_rational,
    moment_vertex,
    newton_convert,
    nu_eval,
    nu_star,
    parse_rational,
)

rationals = st.fractions(min_value=0, max_value=5, max_denominator=12)
coords = st.lists(rationals, min_size=1, max_size=7)


def test_rational_roundtrip():
    for q in (F(0), F(-3), F(85, 338), F(7, 26)):
        assert parse_rational(format_rational(q)) == q
    assert format_rational(F(4, 2)) == "2"
    assert format_rational(F(-1, 3)) == "-1/3"


def test_compressed_point_merges_and_counts_zeros():
    x = CompressedPoint.from_entries([(F(1, 4), 1), (0, 2), (F(1, 4), 1), (F(1, 2), 1)])
    assert x.zero_count == 2 and x.entries == ((F(1, 4), 2), (F(1, 2), 1))
    assert x.n == 5 and x.in_simplex()
    assert sorted(x.expand()) == [0, 0, F(1, 4), F(1, 4), F(1, 2)]


def test_compressed_point_rejects_bad_input():
    with pytest.raises(ValueError):
        CompressedPoint.from_coords([F(-1, 2), 1])
    with pytest.raises(ValueError):
        CompressedPoint(0, ((F(1, 2), 1), (F(1, 3), 1)))
    with pytest.raises(ValueError):
        CompressedPoint.uniform(4, 3)


def test_uniform_point_images():
    x = CompressedPoint.uniform(3, 5)
    assert nu_star(x, 4) == (F(1, 3), F(1, 9), F(1, 27))
    assert moment_vertex(3, 4) == (F(1, 3), F(1, 9), F(1, 27))
    assert moment_vertex(3, 4, Basis.ELEMENTARY) == (F(1, 3), F(1, 27), F(0))


def test_nu_eval_requires_increasing_exponents():
    x = CompressedPoint.uniform(2)
    assert nu_eval(x, (2, 4)) == (F(1, 2), F(1, 8))
    with pytest.raises(ValueError):
        nu_eval(x, (3, 2))


@given(coords)
def test_power_sums_match_bruteforce(xs):
    x = CompressedPoint.from_coords(xs)
    for a in range(1, 6):
        assert eval_power_sum(x, a) == oracles.power_sum_bruteforce(xs, a)


@given(coords)
def test_elementary_match_bruteforce(xs):
    x = CompressedPoint.from_coords(xs)
    for k in range(0, 5):
        assert eval_elementary(x, k) == oracles.elementary_bruteforce(xs, k)


@given(coords, st.integers(1, 6))
def test_newton_identities_roundtrip(xs, k):
    """Each basis symbol written in the other basis evaluates consistently."""
    x = CompressedPoint.from_coords(xs)
    p = SymmetricPolynomial.symbol(k, Basis.POWER)
    e = SymmetricPolynomial.symbol(k, Basis.ELEMENTARY)
    assert newton_convert(p, Basis.ELEMENTARY).at_point(x) == eval_power_sum(x, k)
    assert newton_convert(e, Basis.POWER).at_point(x) == eval_elementary(x, k)
    assert newton_convert(newton_convert(p, Basis.ELEMENTARY), Basis.POWER) == p


def test_newton_low_degrees():
    assert newton_convert(SymmetricPolynomial.symbol(2, Basis.ELEMENTARY), Basis.POWER) == parse_symmetric(
        "1/2*p1^2 - 1/2*p2"
    )
    assert newton_convert(SymmetricPolynomial.symbol(3), Basis.ELEMENTARY) == parse_symmetric(
        "e1^3 - 3*e1*e2 + 3*e3"
    )


@given(coords, st.fractions(min_value=0, max_value=3, max_denominator=6))
def test_scaling_is_weighted_homogeneous(xs, c):
    x = CompressedPoint.from_coords(xs)
    f = parse_symmetric("p1*p3 - 2*p2^2 + p4")
    assert f.at_point(x.scaled(c)) == c**4 * f.at_point(x)


def test_polynomial_algebra_and_printing():
    f = parse_symmetric("e1^3 - 4*e1*e2")
    assert f.basis is Basis.ELEMENTARY and f.degree == 3 and f.is_homogeneous()
    assert f.pretty() == "e1^3 - 4*e1*e2"
    g = f * f - f**2
    assert g == SymmetricPolynomial.constant(0, Basis.ELEMENTARY)
    assert (f + 1).is_homogeneous() is False
    with pytest.raises(ValueError):
        f + SymmetricPolynomial.symbol(1, Basis.POWER)


def test_at_vector_accepts_negative_coordinates():
    f = parse_symmetric("p1*p3 - p2^2")
    assert f.at_vector((1, -1)) == -4
