"""Tropical prevarieties as polyhedral complexes.

The engine works modulo the common lineality ``L0`` of all the term
differences: with ``D`` the RREF basis of their row space, ``u = D w`` is a
coordinate system on ``R^N / L0`` in which every covector is read off on the
pivot columns.  Cones are intersected one polynomial at a time in generator
form (:class:`dressian.cones.GenCone`); only inclusion-maximal cones are kept
and faces are recovered at the end from the tight-constraint sets of rays.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .cones import Cone, GenCone, LinearSubspace, canonical, contains
from .errors import DimMismatch, MissingCoordinate, Overflow, VacuousInput
from .linalg import dot, nullspace, rank, rref
from .plucker import generate_relations
from .polynomial import TropicalPolynomial

log = logging.getLogger(__name__)

DEFAULT_MAX_CELLS = 10**6


def _exponent_vectors(p, col, ndim):
    vecs = []
    for _, mono in p.terms:
        v = [0] * ndim
        for var, e in mono:
            if var not in col:
                raise DimMismatch(f"variable {var} is not a coordinate of this system")
            v[col[var]] += e
        vecs.append(tuple(v))
    return vecs


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _pair_constraints(exps):
    """For a multiset of exponent vectors: list of (equalities, inequalities) per argmin cone.

    One cone per unordered pair of distinct vectors (both minimal), and one per
    vector of multiplicity at least two (minimal on its own).  Cones contained
    in another one of the list are discarded by the caller.
    """
    distinct = list(dict.fromkeys(exps))
    mult = {e: exps.count(e) for e in distinct}
    out = []
    for s, t in combinations(distinct, 2):
        eq = [_sub(s, t)]
        ineq = [_sub(u, s) for u in distinct if u != s and u != t]
        out.append(((s, t), eq, ineq))
    for s in distinct:
        if mult[s] >= 2:
            out.append(((s,), [], [_sub(u, s) for u in distinct if u != s]))
    return out


def hypersurface_cones(p, ambient_dim=None) -> list:
    """Maximal cones of the tropical hypersurface of ``p`` (trivial valuation).

    ``p`` is a :class:`TropicalPolynomial` or a list of exponent vectors,
    which may repeat (a repeated vector counts twice towards the minimum).
    """
    if isinstance(p, TropicalPolynomial):
        variables = sorted(p.variables)
        n = ambient_dim if ambient_dim is not None else (max(variables) + 1 if variables else 0)
        exps = _exponent_vectors(p, {v: v for v in range(n)}, n)
    else:
        exps = [tuple(e) for e in p]
        n = len(exps[0]) if exps else (ambient_dim or 0)
    if len(set(exps)) < 2 and len(exps) < 2:
        raise VacuousInput("a tropical hypersurface needs at least two terms")
    if len(set(exps)) < 2:
        return [Cone.full(n)]
    cones = []
    for _, eq, ineq in _pair_constraints(exps):
        cones.append(canonical(Cone.of(n, eq, ineq)))
    cones = list(dict.fromkeys(cones))
    return [c for c in cones if not any(d != c and contains(d, c) for d in cones)]


@dataclass(frozen=True)
class ArgminType:
    """Per polynomial the indices of minimal terms; per inequality whether it is tight."""

    polynomials: tuple
    inequalities: tuple


@dataclass
class Cell:
    rays: frozenset  # indices into PrevarietyComplex.rays
    dim: int
    maximal: bool = False


@dataclass
class PrevarietyComplex:
    ambient_dim: int
    lineality: LinearSubspace
    rays: list  # primitive integer vectors, reduced modulo the lineality
    cells: list  # Cell, sorted by (dim, ray indices)
    polynomials: list = field(default_factory=list, repr=False)
    inequalities: list = field(default_factory=list, repr=False)
    variables: list = field(default_factory=list, repr=False)

    @property
    def lineality_dim(self) -> int:
        return self.lineality.dim

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.cells), default=self.lineality_dim)

    @property
    def f_vector_spherical(self) -> list:
        top = max((c.dim for c in self.cells), default=self.lineality_dim)
        f = [0] * (top - self.lineality_dim)
        for c in self.cells:
            f[c.dim - self.lineality_dim - 1] += 1
        return f

    @property
    def maximal_cells(self) -> list:
        return [c for c in self.cells if c.maximal]

    def cell_keys(self) -> set:
        """Cells as frozensets of ray vectors, independent of ray numbering."""
        return {frozenset(self.rays[i] for i in c.rays) for c in self.cells}

    def relative_interior_point(self, cell) -> tuple:
        s = [0] * self.ambient_dim
        for i in sorted(cell.rays):
            s = [a + b for a, b in zip(s, self.rays[i])]
        return tuple(s)

    @cached_property
    def _max_cones(self):
        out = []
        for c in self.maximal_cells:
            out.append(self.cell_cone(c))
        return out

    def cell_cone(self, cell) -> Cone:
        """H-representation of ``cell`` (its rays plus the lineality space)."""
        lin = list(self.lineality.basis)
        gens = lin + [tuple(-x for x in v) for v in lin] + [self.rays[i] for i in sorted(cell.rays)]
        return _cone_from_generators(gens, self.ambient_dim)

    def contains_point(self, w) -> bool:
        w = tuple(Fraction(x) for x in w)
        if not self.cells:
            return self.lineality.contains(w)
        return any(c.contains_point(w) for c in self._max_cones)

    def argmin_type(self, cell) -> ArgminType:
        w = self.relative_interior_point(cell)
        col = {v: j for j, v in enumerate(self.variables)}
        polys = []
        for p in self.polynomials:
            vals = [sum(e * w[col[v]] for v, e in m) for _, m in p.terms]
            low = min(vals)
            polys.append(tuple(i for i, x in enumerate(vals) if x == low))
        ineqs = tuple(
            sum(e * w[col[v]] for v, e in q.lesser) == sum(e * w[col[v]] for v, e in q.greater)
            for q in self.inequalities
        )
        return ArgminType(tuple(polys), ineqs)

    def lift(self, matrix) -> "PrevarietyComplex":
        """Image under an injective linear map given by integer rows (``out[i] = row_i . w``)."""
        n = len(matrix)

        def apply(v):
            return tuple(dot(row, v) for row in matrix)

        lin = LinearSubspace.from_vectors([apply(b) for b in self.lineality.basis], n)
        rays = [lin.reduce(apply(r)) for r in self.rays]
        return PrevarietyComplex(n, lin, rays, list(self.cells))


def _cone_from_generators(gens, n) -> Cone:
    """H-representation of ``cone(gens)`` via double description on the polar."""
    gens = [g for g in gens if any(g)]
    eqs = nullspace(gens, n) if gens else [tuple(int(i == j) for j in range(n)) for i in range(n)]
    # facets: extreme rays of the polar {a : a.g >= 0}, restricted to the span
    polar = GenCone.full(n)
    for e in eqs:
        polar.add_equality(e)
    for g in gens:
        polar.add_inequality(g)
    ineqs = [tuple(r) for r in polar.rays]
    # polar lineality is the orthogonal complement of the span; already captured by eqs
    return Cone(n, tuple(tuple(e) for e in eqs), tuple(ineqs))


class _RayRegistry:
    def __init__(self):
        self.ids = {}

    def __call__(self, r):
        i = self.ids.get(r)
        if i is None:
            i = self.ids[r] = len(self.ids)
        return i


def _prune(cones, registry):
    """Keep inclusion-maximal cones; all share one lineality space and lie in one fan."""
    keyed = []
    seen = set()
    for c in cones:
        key = frozenset(registry(r) for r in c.rays)
        if key not in seen:
            seen.add(key)
            keyed.append((key, c))
    keyed.sort(key=lambda kc: -len(kc[0]))
    kept = []
    by_ray: dict = {}
    for key, c in keyed:
        if not key:
            if kept:
                continue
        else:
            r0 = min(key, key=lambda r: len(by_ray.get(r, ())))
            if any(key <= kept[j][0] for j in by_ray.get(r0, ())):
                continue
        j = len(kept)
        kept.append((key, c))
        for r in key:
            by_ray.setdefault(r, []).append(j)
    return [c for _, c in kept]


def _faces(cone: GenCone):
    """All faces of a cone as bitmasks over its rays (the full set included, the empty face too)."""
    nr = len(cone.rays)
    full = (1 << nr) - 1
    tight = []
    for i in range(len(cone.cons)):
        bit = 1 << i
        m = 0
        for k, z in enumerate(cone.zeros):
            if z & bit:
                m |= 1 << k
        tight.append(m)
    tight = list(dict.fromkeys(tight))
    seen = {full}
    stack = [full]
    while stack:
        f = stack.pop()
        for t in tight:
            g = f & t
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return seen


def intersect_prevariety(polys, ineqs=(), variables=None, max_cells=DEFAULT_MAX_CELLS, threads=1, order=None):
    """Prevariety of ``polys`` cut by the inequalities ``lesser <= greater``.

    ``variables`` lists the variable ids used as coordinates (default: all
    ids up to the largest one present).  ``threads`` is accepted for
    interface compatibility; the work runs in one thread.
    """
    polys = [p for p in polys if len(p.terms) >= 2]
    ineqs = list(ineqs)
    if variables is None:
        top = max((v for p in polys for v in p.variables), default=-1)
        for q in ineqs:
            top = max([top] + [v for v, _ in q.lesser + q.greater])
        variables = list(range(top + 1))
    variables = list(variables)
    N = len(variables)
    col = {v: j for j, v in enumerate(variables)}

    # tropical dedupe: only the exponent set matters
    systems = []
    seen = set()
    for p in polys:
        exps = _exponent_vectors(p, col, N)
        low = min(exps)
        key = tuple(sorted(_sub(e, low) for e in exps))
        if key in seen:
            continue
        seen.add(key)
        systems.append(exps)
    ineq_vecs = []
    for q in ineqs:
        a = [0] * N
        for v, e in q.greater:
            a[col[v]] += e
        for v, e in q.lesser:
            a[col[v]] -= e
        ineq_vecs.append(tuple(a))

    diffs = [_sub(e, exps[0]) for exps in systems for e in exps[1:]] + ineq_vecs
    diffs = [d for d in diffs if any(d)]
    # u = Dq w with Dq the RREF of the differences; a covector in their row
    # space reads off as its pivot entries, and w[P] = u, w[rest] = 0 lifts u
    _, P = rref(diffs, N) if diffs else ([], [])
    k = len(P)

    def quot(v):
        return tuple(v[p] for p in P)

    cone = GenCone.full(k)
    for a in ineq_vecs:
        cone.add_inequality(quot(a))
    stages = []
    for exps in systems:
        pcs = _pair_constraints(exps)
        stages.append([(tuple(quot(e) for e in eq), tuple(quot(h) for h in ineq)) for _, eq, ineq in pcs])
    if order is None:
        stages.sort(key=len)
    candidates = [cone]
    for step, pairs in enumerate(stages):
        new = []
        for c in candidates:
            if any(all(c.satisfies(e, True) for e in eq) and all(c.satisfies(h) for h in ineq) for eq, ineq in pairs):
                new.append(c)
                continue
            for eq, ineq in pairs:
                d = c.copy()
                for e in eq:
                    d.add_equality(e)
                for h in ineq:
                    d.add_inequality(h)
                new.append(d)
        candidates = _prune(new, _RayRegistry())
        if len(candidates) > max_cells:
            raise Overflow(f"{len(candidates)} candidate cones after {step + 1} polynomials exceeds the cap {max_cells}")
        log.debug("polynomial %d/%d: %d cones", step + 1, len(stages), len(candidates))

    # assemble in quotient coordinates, then lift w = Dq^T-free lift: w[P] = u
    lin_q = candidates[0].lin if candidates else []
    registry = _RayRegistry()
    cell_set = {}
    for c in candidates:
        gids = [registry(r) for r in c.rays]
        for f in _faces(c):
            key = frozenset(gids[i] for i in range(len(gids)) if f >> i & 1)
            cell_set.setdefault(key, False)
        cell_set[frozenset(gids)] = True
        if len(cell_set) > max_cells:
            raise Overflow(f"more than {max_cells} cells")
    ray_q = [None] * len(registry.ids)
    for r, i in registry.ids.items():
        ray_q[i] = r

    def lift_u(u):
        w = [0] * N
        for p, x in zip(P, u):
            w[p] = x
        return tuple(w)

    L0 = LinearSubspace.from_equations(diffs, N) if diffs else LinearSubspace.full(N)
    lin_vecs = list(L0.basis) + [lift_u(l) for l in lin_q]
    lineality = LinearSubspace.from_vectors(lin_vecs, N)
    rays_w = [lineality.reduce(lift_u(r)) for r in ray_q]

    ldim = lineality.dim
    cells = []
    for key, maximal in cell_set.items():
        if not key:
            continue
        d = ldim + rank([ray_q[i] for i in key])
        cells.append((d, tuple(sorted(key)), maximal))
    # maximal flags: a face that coincides with nothing larger
    cells.sort()
    # renumber rays canonically by vector
    order_idx = sorted(range(len(rays_w)), key=lambda i: rays_w[i])
    new_id = {old: new for new, old in enumerate(order_idx)}
    rays_sorted = [rays_w[i] for i in order_idx]
    out_cells = []
    for d, key, maximal in cells:
        out_cells.append(Cell(frozenset(new_id[i] for i in key), d, maximal))
    out_cells.sort(key=lambda c: (c.dim, sorted(c.rays)))
    return PrevarietyComplex(N, lineality, rays_sorted, out_cells, list(polys), ineqs, variables)


def dressian(m, reduce_first=True, max_cells=DEFAULT_MAX_CELLS, threads=1, order="first"):
    """Dressian of ``m`` in basis coordinates, optionally via the reduced system.

    Returns ``(complex, reduced_system_or_None)``.
    """
    from .reduction import lift_matrix, reduce

    rels = generate_relations(m)
    if not reduce_first:
        return intersect_prevariety(rels, (), list(range(len(m.bases))), max_cells, threads), None
    red = reduce(rels, len(m.bases), order=order)
    cx = intersect_prevariety(red.polynomials, red.inequalities, red.surviving, max_cells, threads)
    full = cx.lift(lift_matrix(red.chain, red.surviving, len(m.bases)))
    full.polynomials = rels
    full.variables = list(range(len(m.bases)))
    return full, red


def membership(m, w) -> bool:
    """Is ``w`` (sequence aligned with the bases, or mapping basis -> value) a valuation of ``m``?"""
    if isinstance(w, dict):
        vals = []
        for b in m.bases:
            key = b if b in w else ",".join(map(str, b))
            if key not in w:
                raise MissingCoordinate(f"no weight for basis {b}")
            vals.append(Fraction(w[key]))
    else:
        vals = [Fraction(x) for x in w]
        if len(vals) != len(m.bases):
            raise MissingCoordinate(f"expected {len(m.bases)} weights, got {len(vals)}")
    return all(p.is_tropically_satisfied(vals) for p in generate_relations(m))
