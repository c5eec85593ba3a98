from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from dressian.matroid import catalog, uniform
from dressian.plucker import generate_relations
from dressian.polynomial import TropicalPolynomial, monomial
from dressian.prevariety import dressian, membership
from dressian.reduction import (
    Substitution,
    eligible_variables,
    lift_matrix,
    lift_point,
    reduce,
    substitute,
)
from dressian.tutte import hom_dim

X, Y, Z, W, U = range(5)


def poly(*terms):
    return TropicalPolynomial.from_terms([(c, monomial(d)) for c, d in terms])


def test_cancelling_pair_drops_everything():
    p1 = poly((1, {X: 1, Y: 1}), (-1, {Z: 1, W: 1}))
    p2 = poly((1, {X: 1, Y: 1}), (1, {Z: 1, W: 1}))
    red = reduce([p1, p2], 4)
    assert red.polynomials == [] and red.inequalities == []
    assert [s.eliminated for s in red.chain] == [X]
    assert red.surviving == [Y, Z, W]
    y, z, w = Fraction(2), Fraction(-1), Fraction(5)
    assert lift_point([y, z, w], red.chain, red.surviving, 4) == [z + w - y, y, z, w]


def test_substitute_examples():
    sub = Substitution(X, Fraction(1), monomial({Z: 1, W: 1, Y: -1}), 0)
    got = substitute(poly((1, {X: 1, Y: 1}), (1, {Z: 1, W: 1})), sub)
    assert got.terms == ((1, ()),)  # 2zw, normalized by its own monomial and content
    p = poly((3, {Y: 2}), (1, {Z: 1}))
    assert substitute(p, sub) == p
    sq = substitute(poly((1, {X: 2, Y: 1}), (1, {U: 3})), Substitution(X, Fraction(1), monomial({W: 1}), 0))
    assert sq == poly((1, {W: 2, Y: 1}), (1, {U: 3}))


def test_pair_collapse_records_inequality():
    # x = y turns xz + yz + wu into {yz, yz, wu}
    red = reduce([poly((1, {X: 1}), (-1, {Y: 1})), poly((1, {X: 1, Z: 1}), (1, {Y: 1, Z: 1}), (-1, {W: 1, U: 1}))], 5)
    assert red.polynomials == []
    (q,) = red.inequalities
    assert dict(q.lesser) == {Y: 1, Z: 1} and dict(q.greater) == {W: 1, U: 1}


def test_eligibility():
    assert eligible_variables(poly((1, {X: 1, Y: 1}), (1, {Z: 2}))) == [X, Y]
    assert eligible_variables(poly((1, {X: 2, Y: 1}), (1, {X: 1, Z: 2}))) == [X, Y]
    assert eligible_variables(poly((1, {X: 2}), (1, {Z: 2}))) == []
    assert eligible_variables(poly((1, {X: 1}), (1, {Y: 1}), (1, {Z: 1}))) == []


def test_uniform_has_nothing_to_reduce():
    rels = generate_relations(uniform(2, 5))
    red = reduce(rels, 10)
    assert red.chain == [] and len(red.polynomials) == len(rels) and red.surviving == list(range(10))


@pytest.mark.parametrize("name", ["fano", "non-fano", "cube", "pappus", "vamos", "star", "desargues", "non-pappus"])
def test_invariants_after_reduction(name):
    m = catalog(name)
    red = reduce(generate_relations(m), len(m.bases))
    alive = set(red.surviving)
    for p in red.polynomials:
        assert p.variables <= alive
        assert not eligible_variables(p)
    for q in red.inequalities:
        assert {v for v, _ in q.lesser + q.greater} <= alive and q.lesser != q.greater
    eliminated = [s.eliminated for s in red.chain]
    assert len(set(eliminated)) == len(eliminated)
    assert len(alive) + len(eliminated) == len(m.bases)
    for i, s in enumerate(red.chain):
        later = {t.eliminated for t in red.chain[:i + 1]}
        assert not later & {v for v, _ in s.exponents}


@pytest.mark.parametrize("name", ["fano", "non-fano", "cube", "pappus", "vamos"])
def test_surviving_matches_tutte_dimension(name):
    m = catalog(name)
    assert len(reduce(generate_relations(m), len(m.bases)).surviving) == hom_dim(m)


def test_lift_matrix_agrees_with_lift_point():
    m = catalog("cube")
    red = reduce(generate_relations(m), len(m.bases))
    L = lift_matrix(red.chain, red.surviving, len(m.bases))
    rng = random.Random(4)
    for _ in range(20):
        w = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in red.surviving]
        assert lift_point(w, red.chain, red.surviving, len(m.bases)) == [sum(a * b for a, b in zip(r, w)) for r in L]


def _satisfies(red, v):
    return (all(p.is_tropically_satisfied(v) for p in red.polynomials)
            and all(q.holds(v) for q in red.inequalities))


@pytest.mark.parametrize("name", ["non-fano", "cube", "uniform(2,4)"])
def test_projection_soundness(name):
    """Points of the unreduced Dressian restrict to points of the reduced system and lift back."""
    m = catalog(name)
    full, _ = dressian(m, reduce_first=False)
    red = reduce(generate_relations(m), len(m.bases))
    rng = random.Random(7)
    for cell in full.cells:
        for _ in range(5):
            v = [0] * len(m.bases)
            for i in cell.rays:
                k = rng.randint(1, 5)
                v = [a + k * b for a, b in zip(v, full.rays[i])]
            for b in full.lineality.basis:
                k = rng.randint(-3, 3)
                v = [a + k * x for a, x in zip(v, b)]
            assert membership(m, v)
            assert _satisfies(red, v)
            assert lift_point({s: v[s] for s in red.surviving}, red.chain, red.surviving, len(m.bases)) == v


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["non-fano", "cube", "pappus"]), st.integers(0, 10**6))
def test_order_does_not_change_surviving_count(name, seed):
    m = catalog(name)
    rels = generate_relations(m)
    assert len(reduce(rels, len(m.bases), order=f"random:{seed}").surviving) == len(reduce(rels, len(m.bases)).surviving)


def test_unknown_order():
    with pytest.raises(ValueError):
        reduce([], 1, order="sideways")
