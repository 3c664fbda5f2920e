import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

import oracles
from vandercell.gale import (
    INF,
    GaleSubset,
    MultiplicityType,
    MultiplicityVector,
    enumerate_facets,
    enumerate_facets_bruteforce,
    gale_to_multiplicity,
    is_gale,
    is_gale_separation,
    multiplicity_to_gale,
    multiplicity_vectors,
    satisfies_evenness,
)


def facet_count(n, d):
    """Number of facets of a cyclic polytope (upper bound theorem)."""
    m = d // 2
    if d % 2 == 0:
        return n * comb(n - m - 1, m - 1) // m
    return 2 * comb(n - m - 1, m)


def test_small_examples():
    assert is_gale((1, 3, 4), 5, 3)
    assert is_gale((1, 2), 5, 2) and is_gale((1, 5), 5, 2)
    assert not is_gale((1, 3), 5, 2)
    assert not is_gale((2, 4, 5), 6, 3)
    with pytest.raises(ValueError):
        is_gale((1, 2, 3), 5, 2)


@pytest.mark.parametrize("n,d", [(n, d) for d in range(2, 7) for n in range(d + 1, 12)])
def test_enumeration_matches_bruteforce_and_count(n, d):
    fast = [f.elements for f in enumerate_facets(n, d)]
    assert fast == [f.elements for f in enumerate_facets_bruteforce(n, d)]
    assert len(fast) == facet_count(n, d)


@pytest.mark.parametrize("n,d", [(6, 2), (7, 3), (7, 4), (8, 5)])
def test_evenness_matches_geometric_facets(n, d):
    assert [f.elements for f in enumerate_facets(n, d)] == sorted(oracles.facets_by_separation(n, d))


@given(st.integers(3, 11).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1))), st.randoms())
def test_run_form_equals_separation_form(nd, rnd):
    n, d = nd
    S = tuple(sorted(rnd.sample(range(1, n + 1), d)))
    assert is_gale(S, n, d) == is_gale_separation(S, n, d)


@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1))))
def test_counts_do_not_depend_on_ground_values(nd):
    """Evenness only sees the order of the ground set."""
    n, d = nd
    ground = [k * k + 0.5 for k in range(1, n + 1)]
    count = sum(
        satisfies_evenness(S, ground) for S in itertools.combinations(ground, d)
    )
    assert count == len(enumerate_facets(n, d))


def test_classification():
    assert MultiplicityVector(2, (1, 3)).classification is MultiplicityType.TYPE1
    assert MultiplicityVector(0, (3, 1)).classification is MultiplicityType.TYPE2
    assert MultiplicityVector(1, (2, 2)).classification is MultiplicityType.NEITHER
    # (0; 1, 1) is both; type (1) wins
    assert MultiplicityVector(0, (1, 1, 1)).classification is MultiplicityType.TYPE1
    with pytest.raises(ValueError):
        multiplicity_to_gale(MultiplicityVector(1, (2, 2)))


def test_bijection_example():
    # (m0; m1, m2) = (1; 1, 3) on n = 5: vertices 4 and 3
    assert multiplicity_to_gale(MultiplicityVector(1, (1, 3))).elements == (3, 4)
    assert gale_to_multiplicity((3, 4), 5, 3) == MultiplicityVector(1, (1, 3))
    assert multiplicity_to_gale(MultiplicityVector(0, (4, 1))).elements == (1, 5)


@given(st.integers(3, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1))))
def test_bijection_roundtrip(nd):
    n, length = nd
    d = length + 1
    vectors = multiplicity_vectors(n, length)
    images = [multiplicity_to_gale(mv) for mv in vectors]
    assert sorted(f.elements for f in images) == [f.elements for f in enumerate_facets(n, length)]
    for mv, S in zip(vectors, images):
        assert gale_to_multiplicity(S, n, d) == mv


def test_inverse_rejects_non_facets():
    with pytest.raises(ValueError):
        gale_to_multiplicity((1, 3), 5, 3)


def test_subset_serialisation():
    S = GaleSubset(4, (INF, 2, 1))
    assert S.elements == (1, 2, INF) and S.has_inf
    assert S.to_json() == [1, 2, "inf"]
    with pytest.raises(ValueError):
        GaleSubset(3, (1, 4))
