import random
from fractions import Fraction

import pytest

from dressian.cones import dim
from dressian.errors import MissingCoordinate, Overflow, VacuousInput
from dressian.matroid import catalog, uniform
from dressian.plucker import generate_relations
from dressian.polynomial import TropicalPolynomial, monomial
from dressian.prevariety import dressian, hypersurface_cones, intersect_prevariety, membership
from dressian.reduction import lift_point
from dressian.subdivision import is_matroid_subdivision
from dressian.tutte import phi_rank

SMALL = ["uniform(2,4)", "uniform(2,5)", "non-fano", "cube"]


def _cx(name, reduce_first=True):
    return dressian(catalog(name), reduce_first=reduce_first)[0]


def test_hypersurface_of_u24_trinomial():
    (p,) = generate_relations(uniform(2, 4))
    cones = hypersurface_cones(p, 6)
    assert len(cones) == 3 and all(dim(c) == 5 for c in cones)


def test_hypersurface_of_binomial_and_multiset():
    p = TropicalPolynomial.from_terms([(1, monomial({0: 1})), (-1, monomial({1: 1}))])
    (c,) = hypersurface_cones(p, 2)
    assert c.equalities and not c.inequalities and dim(c) == 1
    # A, A, B: the minimum is attained twice exactly when A <= B
    (h,) = hypersurface_cones([(1, 0), (1, 0), (0, 1)])
    assert dim(h) == 2 and h.contains_point((0, 1)) and not h.contains_point((1, 0))
    with pytest.raises(VacuousInput):
        hypersurface_cones([(1, 0)])


def test_membership_examples():
    m = uniform(2, 4)
    assert membership(m, [0] * 6)
    assert membership(m, [1, 0, 0, 0, 0, 1])
    assert membership(m, [1, 0, 0, 0, 0, -1])
    assert not membership(m, [-1, 0, 0, 0, 0, 0])
    assert membership(m, {"0,1": 1, "0,2": 0, "0,3": 0, "1,2": 0, "1,3": 0, "2,3": 1})
    with pytest.raises(MissingCoordinate):
        membership(m, {"0,1": 1})
    with pytest.raises(MissingCoordinate):
        membership(m, [0, 0])


def test_u24_complex():
    cx = _cx("uniform(2,4)")
    assert cx.lineality_dim == 4 and cx.f_vector_spherical == [3]
    assert all(c.dim == 5 and c.maximal for c in cx.cells)


def test_non_fano_and_fano():
    cx = _cx("non-fano")
    assert (cx.dim, cx.lineality_dim, cx.f_vector_spherical) == (8, 7, [1])
    fano = _cx("fano")
    assert fano.cells == [] and fano.lineality_dim == 7


@pytest.mark.parametrize("name", SMALL)
def test_reduced_equals_unreduced(name):
    assert _cx(name, True).cell_keys() == _cx(name, False).cell_keys()
    assert _cx(name, True).lineality.intersect(_cx(name, False).lineality).dim == _cx(name, False).lineality_dim


@pytest.mark.parametrize("name", SMALL + ["fano", "pappus", "vamos"])
def test_soundness_of_cells(name):
    m = catalog(name)
    cx = _cx(name)
    big = len(cx.cells) > 300
    cells = random.Random(1).sample(cx.cells, 300) if big else cx.cells
    shift = [-sum(col) for col in zip(*cx.lineality.basis)] or [0] * cx.ambient_dim
    for cell in cells:
        w = cx.relative_interior_point(cell)
        moved = [a + b for a, b in zip(w, shift)]
        assert membership(m, w) and membership(m, moved)
        if big:
            # whole-support lookup converts every maximal cone; check the cell's own cone
            cone = cx.cell_cone(cell)
            assert cone.contains_point(w) and cone.contains_point(moved)
        else:
            assert cx.contains_point(w) and cx.contains_point(moved)
    for b in cx.lineality.basis:
        assert membership(m, b)


@pytest.mark.parametrize("name", SMALL)
def test_sampled_completeness(name):
    """Grid points, plus random ray combinations shifted along the lineality space.

    Grid points almost never meet a fan of positive codimension; mixing rays
    of different cells yields both members and non-members.
    """
    m = catalog(name)
    cx = _cx(name)
    rng = random.Random(2024)
    gens = list(cx.lineality.basis)
    hits = 0
    for i in range(10_000):
        if i % 2 or not cx.rays:
            w = [rng.randint(-2, 2) for _ in m.bases]
        else:
            w = [0] * cx.ambient_dim
            for r in rng.sample(cx.rays, min(len(cx.rays), rng.randint(1, 3))):
                k = rng.randint(1, 3)
                w = [a + k * b for a, b in zip(w, r)]
            for g in gens:
                k = rng.randint(-2, 2)
                w = [a + k * b for a, b in zip(w, g)]
        member = membership(m, w)
        assert member == cx.contains_point(w)
        hits += member
    assert hits > 50


@pytest.mark.parametrize("name", SMALL + ["pappus"])
def test_face_closure(name):
    cx = _cx(name)
    keys = {c.rays for c in cx.cells}
    assert len(keys) == len(cx.cells)
    assert all(frozenset([i]) in keys for i in range(len(cx.rays)))
    for a in cx.cells:
        for b in cx.cells:
            common = a.rays & b.rays
            assert not common or common in keys


@pytest.mark.parametrize("name", SMALL + ["fano", "pappus", "non-pappus", "star"])
def test_lineality_is_phi_image(name):
    m = catalog(name)
    cx = _cx(name)
    assert cx.lineality_dim == phi_rank(m) == m.n
    for i in range(m.n):
        assert cx.lineality.contains([int(i in b) for b in m.bases])


def test_lift_of_reduced_rays_satisfies_original():
    m = catalog("non-fano")
    cx, red = dressian(m)
    (ray,) = cx.rays
    assert membership(m, ray)
    w = lift_point({v: ray[v] for v in red.surviving}, red.chain, red.surviving, len(m.bases))
    assert all(p.is_tropically_satisfied(w) for p in generate_relations(m))


def test_processing_order_irrelevant():
    m = catalog("cube")
    rels = generate_relations(m)
    base = intersect_prevariety(rels, variables=range(len(m.bases))).cell_keys()
    rng = random.Random(3)
    for _ in range(2):
        shuffled = rels[:]
        rng.shuffle(shuffled)
        assert intersect_prevariety(shuffled, variables=range(len(m.bases)), order="input").cell_keys() == base


def test_overflow_cap():
    with pytest.raises(Overflow):
        dressian(uniform(2, 5), max_cells=3)


def test_u25_is_petersen():
    cx = _cx("uniform(2,5)")
    assert cx.f_vector_spherical == [10, 15]
    degree = [0] * 10
    for c in cx.cells:
        if len(c.rays) == 2:
            for i in c.rays:
                degree[i] += 1
    assert degree == [3] * 10


def test_agrees_with_subdivision_check():
    m = catalog("cube")
    rng = random.Random(11)
    for _ in range(40):
        w = [Fraction(rng.randint(-2, 2)) for _ in m.bases]
        assert membership(m, w) == is_matroid_subdivision(m, w)
