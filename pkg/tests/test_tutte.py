import pytest

from dressian.matroid import catalog, uniform
from dressian.tutte import (
    RIGID,
    UNKNOWN,
    hom_dim,
    phi_matrix,
    phi_rank,
    relation_invariant_factors,
    rigidity_certificate,
    tutte_relations,
)

CATALOG = ["fano", "non-fano", "cube", "pappus", "non-pappus", "star", "desargues", "vamos",
           "non-vamos", "twisted-vamos", "p2f3", "partial-plane", "uniform(2,4)", "uniform(3,6)"]


def test_uniform_has_no_relations():
    sys = tutte_relations(uniform(2, 4))
    assert sys.rows == () and hom_dim(sys) == 6
    assert phi_rank(uniform(2, 4)) == 4
    assert rigidity_certificate(uniform(2, 4)) == UNKNOWN


@pytest.mark.parametrize("name,expected", [("fano", 7), ("non-fano", 8), ("p2f3", 13)])
def test_hom_dim(name, expected):
    assert hom_dim(catalog(name)) == expected


@pytest.mark.parametrize("name", ["fano", "p2f3"])
def test_projective_planes_rigid(name):
    assert rigidity_certificate(catalog(name)) == RIGID


@pytest.mark.parametrize("name", CATALOG)
def test_rows_and_bounds(name):
    m = catalog(name)
    sys = tutte_relations(m)
    assert all(len(r) == 4 and sorted(c for _, c in r) == [-1, -1, 1, 1] for r in sys.rows)
    assert len(set(sys.rows)) == len(sys.rows)
    assert hom_dim(m) >= phi_rank(m)
    assert all(sum(row) == m.rank for row in phi_matrix(m))


def _decompose(m, row):
    """Split a relation into S, {b1, b2}, {c1, c2} with S+b1+c1, S+b2+c2 positive."""
    plus = [set(m.bases[j]) for j, c in row if c == 1]
    minus = [set(m.bases[j]) for j, c in row if c == -1]
    S = plus[0] & plus[1]
    assert S == minus[0] & minus[1] and len(S) == m.rank - 2
    (b1,) = (plus[0] - S) & (minus[0] - S)
    (c1,) = plus[0] - S - {b1}
    (c2,) = minus[0] - S - {b1}
    (b2,) = plus[1] - S - {c2}
    assert minus[1] - S == {b2, c1}
    return S, (b1, b2), (c1, c2)


@pytest.mark.parametrize("name", ["fano", "non-fano", "cube", "vamos", "pappus"])
def test_square_faces(name):
    """Each relation is a square of bases whose diagonal pair through S is degenerate."""
    m = catalog(name)
    for row in tutte_relations(m).rows:
        S, bs, cs = _decompose(m, row)
        assert not m.is_basis(sorted(S | set(bs))) or not m.is_basis(sorted(S | set(cs)))


def test_cube_rows_come_from_planes():
    m = catalog("cube")
    nb = {frozenset(b) for b in m.nonbases}
    assert len(nb) == 12
    touched = set()
    for row in tutte_relations(m).rows:
        S, bs, cs = _decompose(m, row)
        for pair in (bs, cs):
            if not m.is_basis(sorted(S | set(pair))):
                touched.add(frozenset(S | set(pair)))
    assert touched == nb


def test_invariant_factors_optional():
    pytest.importorskip("sympy")
    assert relation_invariant_factors(uniform(2, 4)) == []
    for name in ("fano", "non-fano"):
        factors = relation_invariant_factors(catalog(name))
        assert all(isinstance(f, int) and f > 1 for f in factors)
