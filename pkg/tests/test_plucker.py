import pytest
from hypothesis import given, settings, strategies as st

from dressian.errors import MonomialRelation
from dressian.matroid import Matroid, catalog, uniform
from dressian.plucker import basis_names, generate_relations, raw_relation_count
from dressian.polynomial import TropicalPolynomial, monomial

from oracles import naive_normalize, plucker_supports


def supports(m):
    out = []
    for p in generate_relations(m):
        out.append(frozenset(frozenset(m.bases[v] for v, _ in mono) for _, mono in p.terms))
    return out


@pytest.mark.parametrize("name,raw,nonzero", [
    ("uniform(2,4)", 1, 1), ("star", 1260, None), ("vamos", 420, None), ("partial-plane", 6435, 6003),
])
def test_counts(name, raw, nonzero):
    m = catalog(name)
    assert raw_relation_count(m) == raw
    if nonzero is not None:
        assert len(generate_relations(m)) == nonzero


@pytest.mark.parametrize("name", ["uniform(2,5)", "uniform(3,6)", "fano", "non-fano", "cube", "vamos", "pappus"])
def test_supports_match_definition(name):
    m = catalog(name)
    assert supports(m) == plucker_supports(m.n, m.rank, m.bases)


def test_u24_relation_and_signs():
    (p,) = generate_relations(uniform(2, 4))
    assert sorted(c for c, _ in p.terms) == [-1, 1, 1]
    assert "p_{0,2}*p_{1,3}" in p.to_text(basis_names(uniform(2, 4)))


def test_monomial_relation_raises():
    bad = Matroid.from_bases(4, 2, [(0, 1), (2, 3), (0, 2)], validate=False)
    with pytest.raises(MonomialRelation):
        generate_relations(bad)


def test_rank_below_two():
    assert generate_relations(uniform(1, 4)) == [] and raw_relation_count(uniform(1, 4)) == 0


def test_tropical_satisfaction():
    (p,) = generate_relations(uniform(2, 4))
    assert p.is_tropically_satisfied([0] * 6)
    assert p.is_tropically_satisfied([1, 0, 0, 0, 0, -1])
    assert not p.is_tropically_satisfied([-1, 0, 0, 0, 0, 0])


term = st.tuples(
    st.integers(-4, 4).filter(bool),
    st.dictionaries(st.integers(0, 4), st.integers(-2, 3), max_size=4),
)


@settings(max_examples=300, deadline=None)
@given(st.lists(term, min_size=1, max_size=5))
def test_normalized_matches_naive(terms):
    p = TropicalPolynomial.from_terms([(c, monomial(d)) for c, d in terms])
    expected = naive_normalize(terms)
    got = p.normalized()
    assert tuple((c, m) for c, m in got.terms) == expected
