"""Regular subdivisions of matroid polytopes.

The lower faces of ``conv{(e_s, w_s)}`` are dual to the faces of
``Q = {(c, c0) : c . e_s + c0 <= w_s for every basis s}``: a maximal cell is
the set of bases tight at a vertex of ``Q`` (taken modulo the lineality of
``Q``), and the vertex itself is the witnessing affine functional.  Vertices
are enumerated by walking the edges of ``Q``; edge directions at a vertex are
the extreme rays of its tangent cone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .cones import GenCone, LinearSubspace
from .errors import AxiomViolation, MissingCoordinate, NotAMatroid
from .linalg import dot, nullspace, rank
from .lp import OPTIMAL, linprog
from .matroid import Matroid, exchange_violation


@dataclass(frozen=True)
class SubdivisionCell:
    bases: tuple  # sorted basis tuples
    witness: tuple  # (c, c0): c . e_s + c0 == w_s on the cell, < w_s elsewhere
    matroid: Matroid | None  # None when the vertex set violates basis exchange

    @property
    def vertex_count(self) -> int:
        return len(self.bases)

    @property
    def is_matroid(self) -> bool:
        return self.matroid is not None


def weight_vector(m: Matroid, w) -> list:
    """Weights aligned with ``m.bases`` from a sequence or a mapping keyed by basis."""
    if isinstance(w, dict):
        out = []
        for b in m.bases:
            for key in (b, ",".join(map(str, b))):
                if key in w:
                    out.append(Fraction(w[key]))
                    break
            else:
                raise MissingCoordinate(f"no weight for basis {','.join(map(str, b))}")
        return out
    out = [Fraction(x) for x in w]
    if len(out) != len(m.bases):
        raise MissingCoordinate(f"expected {len(m.bases)} weights, got {len(out)}")
    return out


def phi_shift(m: Matroid, c) -> list:
    """The weight ``s -> sum_{i in s} c_i`` pulled back from the ground set."""
    return [sum((Fraction(c[i]) for i in b), Fraction(0)) for b in m.bases]


def _points(m: Matroid):
    pts = []
    for b in m.bases:
        v = [0] * (m.n + 1)
        for i in b:
            v[i] = 1
        v[m.n] = 1
        pts.append(tuple(v))
    return pts


def _cell_matroid(m: Matroid, bases):
    if exchange_violation(bases) is not None:
        return None
    return Matroid.from_bases(m.n, m.rank, bases, validate=False)


def _tight(pts, w, y):
    return frozenset(i for i, (a, x) in enumerate(zip(pts, w)) if dot(a, y) == x)


def _step(pts, w, y, tight, d):
    """Largest move along ``d`` staying in Q; ``None`` if unbounded."""
    best = None
    for i, (a, x) in enumerate(zip(pts, w)):
        if i in tight:
            continue
        s = dot(a, d)
        if s > 0:
            t = (x - dot(a, y)) / s
            if best is None or t < best:
                best = t
    return best


def _first_vertex(pts, w, lin: LinearSubspace):
    dim = len(pts[0])
    y = tuple([Fraction(0)] * (dim - 1) + [min(w)])
    tight = _tight(pts, w, y)
    while True:
        d = None
        for v in nullspace([pts[i] for i in tight], dim):
            r = lin.reduce(v)
            if any(r):
                d = r
                break
        if d is None:
            return y, tight
        t = _step(pts, w, y, tight, d)
        if t is None:
            d = tuple(-x for x in d)
            t = _step(pts, w, y, tight, d)
        y = tuple(a + t * b for a, b in zip(y, d))
        tight = _tight(pts, w, y)


def regular_subdivision(m: Matroid, w, stop_at_non_matroid=False) -> list:
    """Maximal cells of the subdivision of the matroid polytope induced by ``w``.

    Cells are sorted by their basis sets.  With ``stop_at_non_matroid`` the
    walk ends at the first cell violating basis exchange (the list is then
    partial and ends with that cell).
    """
    w = weight_vector(m, w)
    pts = _points(m)
    dim = m.n + 1
    lin = LinearSubspace.from_equations(pts, dim)
    y0, t0 = _first_vertex(pts, w, lin)
    seen = {t0: y0}
    queue = deque([t0])
    if stop_at_non_matroid and exchange_violation([m.bases[i] for i in sorted(t0)]) is not None:
        queue.clear()
    while queue:
        tight = queue.popleft()
        y = seen[tight]
        cone = GenCone.full(dim)
        for a in dict.fromkeys(tuple(-x for x in pts[i]) for i in sorted(tight)):
            cone.add_inequality(a)
        for d in cone.rays:
            t = _step(pts, w, y, tight, d)
            if t is None:
                continue
            y2 = tuple(a + t * b for a, b in zip(y, d))
            t2 = _tight(pts, w, y2)
            if t2 not in seen:
                seen[t2] = y2
                queue.append(t2)
                if stop_at_non_matroid and exchange_violation([m.bases[i] for i in sorted(t2)]) is not None:
                    queue.clear()
                    break
    cells = []
    for tight, y in seen.items():
        bases = tuple(m.bases[i] for i in sorted(tight))
        cells.append(SubdivisionCell(bases, (tuple(y[:-1]), y[-1]), _cell_matroid(m, bases)))
    cells.sort(key=lambda c: c.bases)
    return cells


def initial_matroid(m: Matroid, w) -> Matroid:
    """The matroid on the bases of minimal weight."""
    w = weight_vector(m, w)
    low = min(w)
    bases = [b for b, x in zip(m.bases, w) if x == low]
    try:
        return Matroid.from_bases(m.n, m.rank, bases)
    except AxiomViolation as exc:
        raise NotAMatroid(f"minimal-weight bases violate basis exchange: {exc}", exc.witness) from exc


def is_matroid_subdivision(m: Matroid, w, check_edges=False) -> bool:
    """Every maximal cell satisfies basis exchange.

    With ``check_edges`` the answer is recomputed from the edges of each cell
    (all parallel to some ``e_i - e_j``) and the two answers must agree.
    """
    cells = regular_subdivision(m, w, stop_at_non_matroid=not check_edges)
    answer = all(c.is_matroid for c in cells)
    if check_edges:
        by_edges = all(not non_exchange_edges(c.bases) for c in cells)
        if by_edges != answer:
            raise AssertionError("edge criterion disagrees with basis exchange")
    return answer


def _is_edge(vs, i, j):
    """Is the segment between vertices ``i`` and ``j`` an edge of ``conv(vs)``?

    Checks whether the midpoint is a convex combination that uses some third vertex.
    """
    others = [k for k in range(len(vs)) if k != i and k != j]
    nv = len(vs)
    n = len(vs[0])
    mid = [Fraction(a + b, 2) for a, b in zip(vs[i], vs[j])]
    A_eq = [[vs[k][r] for k in range(nv)] for r in range(n)] + [[1] * nv]
    b_eq = mid + [1]
    c = [0] * nv
    for k in others:
        c[k] = 1
    res = linprog(c, (), (), A_eq, b_eq, nonneg=range(nv))
    return res.status == OPTIMAL and res.value == 0


def non_exchange_edges(bases) -> list:
    """Edges of the polytope of ``bases`` that are not parallel to any ``e_i - e_j``."""
    bases = [tuple(b) for b in bases]
    n = 1 + max(x for b in bases for x in b)
    vs = [tuple(int(x in b) for x in range(n)) for b in bases]
    out = []
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            if len(set(bases[i]) ^ set(bases[j])) > 2 and _is_edge(vs, i, j):
                out.append((bases[i], bases[j]))
    return out


def is_face(face, cell) -> bool:
    """Is ``conv(face)`` a face of ``conv(cell)`` (both given as basis lists, face within cell)?

    Decided by an LP for an affine functional vanishing on ``face`` and at
    least 1 on the other vertices of ``cell``.
    """
    face = {tuple(b) for b in face}
    cell = [tuple(b) for b in cell]
    if not face <= set(cell):
        return False
    rest = [b for b in cell if b not in face]
    if not rest:
        return True
    n = 1 + max(x for b in cell for x in b)

    def row(b):
        return [int(x in b) for x in range(n)] + [1]

    A_eq = [row(b) for b in face]
    A_ub = [[-x for x in row(b)] for b in rest]
    res = linprog([0] * (n + 1), A_ub, [-1] * len(rest), A_eq, [0] * len(A_eq))
    return res.status == OPTIMAL


def polytope_dim(m: Matroid) -> int:
    pts = _points(m)
    return rank(pts) - 1


def cells_of_dressian_cell(m: Matroid, complex_, cell) -> list:
    """Subdivision induced by the canonical interior point of a Dressian cell.

    ``complex_`` is in basis coordinates (as returned by ``dressian``).
    """
    w = complex_.relative_interior_point(cell) if cell is not None else [0] * len(m.bases)
    return regular_subdivision(m, w)
