from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from dressian.errors import AxiomViolation, EmptyBasisSet, InvalidSizes, MalformedSubset, UnknownName
from dressian.matroid import (
    Matroid,
    catalog,
    connected_components,
    direct_sum,
    exchange_violation,
    is_isomorphic,
    p2f3,
    parallel_extension,
    partial_plane,
    uniform,
)

from oracles import exchange_ok

CATALOG = ["fano", "non-fano", "cube", "pappus", "non-pappus", "star", "desargues", "vamos",
           "non-vamos", "twisted-vamos", "p2f3", "partial-plane"]


@pytest.mark.parametrize("name,bases", [
    ("uniform(2,4)", 6), ("fano", 28), ("non-fano", 29), ("star", 110), ("vamos", 65),
    ("p2f3", 234), ("partial-plane", 238), ("pappus", 75), ("non-pappus", 76), ("desargues", 110),
])
def test_basis_counts(name, bases):
    assert len(catalog(name).bases) == bases


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_matroids_satisfy_exchange(name):
    m = catalog(name)
    assert exchange_violation(m.bases) is None
    if len(m.bases) <= 120:
        assert exchange_ok(m.bases)


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_matroids_connected(name):
    assert connected_components(catalog(name)) == [tuple(range(catalog(name).n))]


def test_p2f3_lines_have_four_points():
    m = p2f3()
    nb = set(m.nonbases)
    assert len(nb) == 13 * 4  # thirteen lines, C(4,3) collinear triples each
    assert len(m.bases) == 286 - 52


def test_partial_plane_adds_line_triples():
    assert set(partial_plane().bases) - set(p2f3().bases) == {(0, 3, 6), (0, 3, 9), (0, 6, 9), (3, 6, 9)}


def test_exchange_violation_witness():
    with pytest.raises(AxiomViolation) as info:
        Matroid.from_bases(4, 2, [(0, 1), (2, 3)])
    b1, b2, e = info.value.witness
    bases = {(0, 1), (2, 3)}
    # e in B' - B, and no f in B - B' makes B - f + e a basis
    assert e in b2 and e not in b1
    assert all(tuple(sorted(set(b1) - {f} | {e})) not in bases for f in set(b1) - set(b2))


@pytest.mark.parametrize("args,err", [
    ((3, 2, [(0, 3)]), MalformedSubset),
    ((3, 2, [(0, 0)]), MalformedSubset),
    ((3, 2, [(0,)]), MalformedSubset),
    ((3, 2, []), EmptyBasisSet),
])
def test_bad_bases(args, err):
    with pytest.raises(err):
        Matroid.from_bases(*args)


def test_unknown_and_bad_sizes():
    with pytest.raises(UnknownName):
        catalog("nope")
    with pytest.raises(InvalidSizes):
        parallel_extension(3, 2, [1, 1, 1])


def test_parallel_extension_counts():
    m = parallel_extension(2, 3, [1, 2, 2])
    # pairs from distinct classes
    assert len(m.bases) == 1 * 2 + 1 * 2 + 2 * 2
    assert exchange_ok(m.bases)


def test_direct_sum_components():
    m = direct_sum(uniform(1, 2), uniform(2, 3))
    assert connected_components(m) == [(0, 1), (2, 3, 4)]
    assert len(m.bases) == 6 and exchange_ok(m.bases)


def test_isomorphism():
    fano = catalog("fano")
    perm = [3, 5, 0, 6, 1, 2, 4]
    relabeled = Matroid.from_bases(7, 3, [tuple(sorted(perm[x] for x in b)) for b in fano.bases])
    assert is_isomorphic(fano, relabeled)
    assert not is_isomorphic(fano, catalog("non-fano"))


@st.composite
def random_matroid(draw):
    """Truncations of partition matroids are matroids; drop to a random uniform-like family."""
    n = draw(st.integers(3, 7))
    d = draw(st.integers(1, n - 1))
    sizes = []
    left = n
    while left:
        s = draw(st.integers(1, left))
        sizes.append(s)
        left -= s
    if len(sizes) < d:
        sizes = [1] * n
    return parallel_extension(d, len(sizes), sizes)


@settings(max_examples=40, deadline=None)
@given(random_matroid())
def test_generated_matroids_pass_both_checks(m):
    assert exchange_violation(m.bases) is None
    assert exchange_ok(m.bases)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n - 1).flatmap(lambda d: st.tuples(
        st.just(d), st.sets(st.sampled_from(list(combinations(range(n), d))), min_size=1))))))
def test_exchange_check_agrees_with_oracle(data):
    n, (d, bases) = data
    assert (exchange_violation(sorted(bases)) is None) == exchange_ok(bases)
