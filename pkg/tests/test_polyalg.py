from fractions import Fraction as F

from hypothesis import given, strategies as st

from vandercell import polyalg as pa

coef = st.fractions(-5, 5, max_denominator=4)
polys = st.dictionaries(st.lists(st.sampled_from("xyz"), max_size=3).map(lambda m: tuple(sorted(m))), coef, max_size=4).map(
    lambda d: {m: c for m, c in d.items() if c}
)
points = st.fixed_dictionaries({s: coef for s in "xyz"})


@given(polys, polys, points)
def test_ring_operations_commute_with_evaluation(a, b, v):
    ev = lambda p: pa.evaluate(p, v)
    assert ev(pa.add(a, b)) == ev(a) + ev(b)
    assert ev(pa.add(a, b, -1)) == ev(a) - ev(b)
    assert ev(pa.mul(a, b)) == ev(a) * ev(b)
    assert ev(pa.power(a, 3)) == ev(a) ** 3


@given(polys, polys, points)
def test_substitution(a, b, v):
    images = {"x": b}
    w = dict(v, x=pa.evaluate(b, v))
    assert pa.evaluate(pa.substitute(a, images), v) == pa.evaluate(a, w)


def test_degree_and_symbols():
    p = pa.add(pa.mul(pa.sym("x"), pa.sym("y")), pa.const(3))
    assert pa.degree(p) == 2 and pa.degree({}) == -1
    assert pa.degree(p, weight=lambda s: 2 if s == "x" else 1) == 3
    assert pa.symbols(p) == {"x", "y"}
    assert pa.exponents(("x", "x", "y")) == {"x": 2, "y": 1}
    assert pa.scale(p, 0) == {} and pa.const(0) == {}
    assert pa.add(p, p, -1) == {}
    assert pa.evaluate(p, {"x": 0.5, "y": 2.0}, zero=0.0) == 4.0
    assert pa.power(p, 0) == {(): F(1)}
