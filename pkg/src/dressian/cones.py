"""Exact rational polyhedral cones.

``Cone`` is the H-representation used at API boundaries: equalities ``a.w = 0``
and inequalities ``a.w >= 0``.  Its questions (emptiness, dimension,
containment, irredundant form) are answered with the exact simplex in
:mod:`dressian.lp`.

``GenCone`` is a double-description pair kept in sync with the constraints:
a lineality basis plus extreme rays modulo that lineality, each ray tagged
with the set of constraints it makes tight.  The prevariety engine intersects
thousands of cones and uses this form because adding one constraint is a
cheap combinatorial update.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimMismatch
from .linalg import dot, integer_rref, nullspace, primitive, rank, reduce_modulo
from .lp import OPTIMAL, linprog


def _vec(v):
    return primitive([Fraction(x) for x in v])


@dataclass(frozen=True)
class LinearSubspace:
    ambient_dim: int
    basis: tuple = ()  # integer RREF rows
    pivots: tuple = ()

    @classmethod
    def from_vectors(cls, vectors, ambient_dim) -> "LinearSubspace":
        rows = [v for v in vectors if any(v)]
        if not rows:
            return cls(ambient_dim)
        b, p = integer_rref(rows, ambient_dim)
        return cls(ambient_dim, tuple(b), tuple(p))

    @classmethod
    def from_equations(cls, rows, ambient_dim) -> "LinearSubspace":
        rows = [r for r in rows if any(r)]
        if not rows:
            return cls.full(ambient_dim)
        return cls.from_vectors(nullspace(rows, ambient_dim), ambient_dim)

    @classmethod
    def full(cls, ambient_dim) -> "LinearSubspace":
        return cls.from_vectors([tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim)], ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def equations(self) -> list:
        if not self.basis:
            return [tuple(int(i == j) for j in range(self.ambient_dim)) for i in range(self.ambient_dim)]
        return nullspace(self.basis, self.ambient_dim)

    def contains(self, v) -> bool:
        return not any(reduce_modulo(v, self.basis, self.pivots))

    def intersect(self, other: "LinearSubspace") -> "LinearSubspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")
        return LinearSubspace.from_equations(self.equations() + other.equations(), self.ambient_dim)

    def reduce(self, v):
        """Canonical primitive representative of ``v`` modulo this subspace."""
        return reduce_modulo(v, self.basis, self.pivots)


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    equalities: tuple = ()
    inequalities: tuple = ()
    strict: frozenset = field(default_factory=frozenset)  # inequality indices required strict

    def __post_init__(self):
        for row in self.equalities + self.inequalities:
            if len(row) != self.ambient_dim:
                raise DimMismatch(f"covector of length {len(row)} in ambient dimension {self.ambient_dim}")

    @classmethod
    def full(cls, ambient_dim) -> "Cone":
        return cls(ambient_dim)

    @classmethod
    def of(cls, ambient_dim, equalities=(), inequalities=(), strict=()) -> "Cone":
        return cls(ambient_dim, tuple(map(tuple, equalities)), tuple(map(tuple, inequalities)), frozenset(strict))

    def contains_point(self, w) -> bool:
        if any(dot(a, w) != 0 for a in self.equalities):
            return False
        return all(dot(a, w) > 0 if i in self.strict else dot(a, w) >= 0 for i, a in enumerate(self.inequalities))


def _analyze(c: Cone):
    """LP with one slack per inequality: returns (implicit inequality indices, point).

    maximize sum s_i  s.t.  g_i.u >= s_i,  0 <= s_i <= 1,  E u = 0.
    At the optimum s_i = 1 exactly for the inequalities that can be strict,
    and ``u`` is strict on all of them simultaneously.
    """
    n, m = c.ambient_dim, len(c.inequalities)
    if m == 0:
        return frozenset(), (0,) * n
    A_ub, b_ub = [], []
    for i, g in enumerate(c.inequalities):
        row = [-x for x in g] + [0] * m
        row[n + i] = 1
        A_ub.append(row)
        b_ub.append(0)
        row = [0] * (n + m)
        row[n + i] = 1
        A_ub.append(row)
        b_ub.append(1)
    A_eq = [list(a) + [0] * m for a in c.equalities]
    res = linprog([0] * n + [1] * m, A_ub, b_ub, A_eq, [0] * len(A_eq), nonneg=range(n, n + m))
    assert res.status == OPTIMAL
    implicit = frozenset(i for i in range(m) if res.x[n + i] == 0)
    return implicit, tuple(res.x[:n])


def _infeasible(c: Cone, extra_ub):
    """Is ``{u in c : a.u <= -1 for a in extra_ub}`` empty?"""
    n = c.ambient_dim
    A_ub = [[-x for x in g] for g in c.inequalities] + [list(a) for a in extra_ub]
    b_ub = [0] * len(c.inequalities) + [-1] * len(extra_ub)
    res = linprog([0] * n, A_ub, b_ub, [list(a) for a in c.equalities], [0] * len(c.equalities))
    return res.status != OPTIMAL


def intersect(c1: Cone, c2: Cone) -> Cone:
    if c1.ambient_dim != c2.ambient_dim:
        raise DimMismatch(f"ambient dimensions {c1.ambient_dim} and {c2.ambient_dim}")
    k = len(c1.inequalities)
    strict = c1.strict | {k + i for i in c2.strict}
    return canonical(Cone(c1.ambient_dim, c1.equalities + c2.equalities, c1.inequalities + c2.inequalities, frozenset(strict)))


def is_empty(c: Cone) -> bool:
    """True iff the inequalities marked strict cannot hold strictly together.

    A cone without strict markers always contains 0 and is never empty.
    """
    if not c.strict:
        return False
    implicit, _ = _analyze(c)
    return bool(implicit & c.strict)


def implicit_equalities(c: Cone) -> list:
    implicit, _ = _analyze(c)
    return [c.inequalities[i] for i in sorted(implicit)]


def dim(c: Cone) -> int:
    implicit, _ = _analyze(c)
    rows = list(c.equalities) + [c.inequalities[i] for i in implicit]
    return c.ambient_dim - rank(rows)


def relative_interior_point(c: Cone) -> tuple:
    """Primitive integer point strict on every non-implied inequality."""
    _, point = _analyze(c)
    if not any(point):
        return tuple(0 for _ in point)
    return primitive(point)


def lineality_space(c: Cone) -> LinearSubspace:
    return LinearSubspace.from_equations(list(c.equalities) + list(c.inequalities), c.ambient_dim)


def lineality(cones) -> LinearSubspace:
    cones = list(cones)
    if not cones:
        raise ValueError("lineality of an empty list of cones")
    n = cones[0].ambient_dim
    rows = []
    for c in cones:
        if c.ambient_dim != n:
            raise DimMismatch("cones of different ambient dimension")
        rows.extend(c.equalities)
        rows.extend(c.inequalities)
    return LinearSubspace.from_equations(rows, n)


def canonical(c: Cone) -> Cone:
    """Echelon equality basis plus a sorted irredundant set of primitive inequalities.

    Implicit equalities are moved into the equality part and each inequality
    is reduced modulo the equality row space, so equal cones get equal forms.
    Strictness markers are dropped.
    """
    implicit, _ = _analyze(c)
    eq_rows = [r for r in list(c.equalities) + [c.inequalities[i] for i in sorted(implicit)] if any(r)]
    eq, piv = integer_rref(eq_rows, c.ambient_dim) if eq_rows else ([], [])
    ineqs = set()
    for i, g in enumerate(c.inequalities):
        if i in implicit:
            continue
        h = reduce_modulo(g, eq, piv)
        if any(h):
            ineqs.add(h)
    ineqs = sorted(ineqs)
    keep = list(ineqs)
    for g in ineqs:
        others = [h for h in keep if h != g]
        if _infeasible(Cone(c.ambient_dim, tuple(eq), tuple(others)), [g]):
            keep = others
    return Cone(c.ambient_dim, tuple(tuple(r) for r in eq), tuple(keep))


def contains(outer: Cone, inner: Cone) -> bool:
    """Is ``inner`` a subset of ``outer`` (closures, strict markers ignored)?"""
    plain = Cone(inner.ambient_dim, inner.equalities, inner.inequalities)
    for a in outer.equalities:
        if not _infeasible(plain, [a]) or not _infeasible(plain, [tuple(-x for x in a)]):
            return False
    return all(_infeasible(plain, [g]) for g in outer.inequalities)


class GenCone:
    """Double-description cone: ``span(lin) + cone(rays)`` equal to ``{cons >= 0}``.

    ``lin`` is an integer RREF basis of the lineality space, rays are
    primitive and reduced modulo ``lin``, and ``zeros[i]`` is the bitmask of
    inequality constraints tight on ``rays[i]``.  Equalities are absorbed
    directly and not stored.
    """

    __slots__ = ("n", "lin", "piv", "rays", "zeros", "cons")

    def __init__(self, n, lin, piv, rays, zeros, cons):
        self.n = n
        self.lin = lin
        self.piv = piv
        self.rays = rays
        self.zeros = zeros
        self.cons = cons

    @classmethod
    def full(cls, n) -> "GenCone":
        lin = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        return cls(n, lin, list(range(n)), [], [], [])

    def copy(self) -> "GenCone":
        return GenCone(self.n, self.lin, self.piv, list(self.rays), list(self.zeros), list(self.cons))

    def _absorb_lineality(self, h):
        """If ``h`` is nonzero on the lineality, split off one lineality vector.

        Returns the removed vector oriented so that ``h`` is positive on it,
        or ``None``.  Remaining lineality and rays are projected into ``h = 0``.
        """
        vals = [dot(h, l) for l in self.lin]
        j = next((i for i, v in enumerate(vals) if v), None)
        if j is None:
            return None
        l0, h0 = self.lin[j], vals[j]
        if h0 < 0:
            l0, h0 = tuple(-x for x in l0), -h0
        rest = []
        for i, l in enumerate(self.lin):
            if i != j:
                rest.append(tuple(h0 * a - vals[i] * b for a, b in zip(l, l0)) if vals[i] else l)
        if rest:
            lin, piv = integer_rref(rest, self.n)
        else:
            lin, piv = [], []
        self.lin, self.piv = lin, piv
        rays = []
        for r in self.rays:
            v = dot(h, r)
            if v:
                r = tuple(h0 * a - v * b for a, b in zip(r, l0))
            rays.append(reduce_modulo(r, lin, piv))
        self.rays = rays
        return l0

    def _combine(self, vals, newbit):
        """Rays of the cone cut by ``h >= 0`` (``newbit`` set) or ``h = 0`` (``newbit`` 0)."""
        rays, zeros = [], []
        for r, z, v in zip(self.rays, self.zeros, vals):
            if v == 0:
                rays.append(r)
                zeros.append(z | newbit)
            elif v > 0 and newbit:
                rays.append(r)
                zeros.append(z)
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        for p in pos:
            zp = self.zeros[p]
            for q in neg:
                common = zp & self.zeros[q]
                if not self._adjacent(p, q, common):
                    continue
                a, b = vals[p], -vals[q]
                rays.append(primitive([a * x + b * y for x, y in zip(self.rays[q], self.rays[p])]))
                zeros.append(common | newbit)
        self.rays, self.zeros = rays, zeros

    def _adjacent(self, p, q, common):
        for k, z in enumerate(self.zeros):
            if k != p and k != q and common & z == common:
                return False
        return True

    def add_inequality(self, h):
        h = tuple(h)
        bit = 1 << len(self.cons)
        l0 = self._absorb_lineality(h)
        if l0 is not None:
            old_all = bit - 1
            self.zeros = [z | bit for z in self.zeros]
            self.rays.append(reduce_modulo(l0, self.lin, self.piv))
            self.zeros.append(old_all)
        else:
            vals = [dot(h, r) for r in self.rays]
            if any(v < 0 for v in vals):
                self._combine(vals, bit)
            else:
                self.zeros = [z | bit if v == 0 else z for z, v in zip(self.zeros, vals)]
        self.cons.append(h)

    def add_equality(self, h):
        h = tuple(h)
        l0 = self._absorb_lineality(h)
        if l0 is not None:
            return
        vals = [dot(h, r) for r in self.rays]
        if not any(vals):
            return
        self._combine(vals, 0)

    def satisfies(self, h, equality=False) -> bool:
        """Does every point of the cone satisfy ``h >= 0`` (or ``h == 0``)?"""
        if any(dot(h, l) for l in self.lin):
            return False
        for r in self.rays:
            v = dot(h, r)
            if v < 0 or (equality and v):
                return False
        return True

    @property
    def dim(self) -> int:
        return len(self.lin) + (rank(self.rays) if self.rays else 0)

    def relative_interior_point(self):
        s = [0] * self.n
        for r in self.rays:
            s = [a + b for a, b in zip(s, r)]
        return tuple(s)

    def to_cone(self) -> Cone:
        gens = list(self.lin) + list(self.rays)
        eqs = nullspace(gens, self.n) if gens else [tuple(int(i == j) for j in range(self.n)) for i in range(self.n)]
        return Cone(self.n, tuple(eqs), tuple(self.cons))
