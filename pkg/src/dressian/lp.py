"""Dense two-phase simplex over exact rationals with Bland's rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass
class LPResult:
    status: str
    x: list | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r, c):
        row = self.rows[r]
        inv = 1 / row[c]
        if inv != 1:
            row = [x * inv if x else x for x in row]
            self.rows[r] = row
            self.rhs[r] *= inv
        nz = [j for j, x in enumerate(row) if x]
        b = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[c]
                if f:
                    for j in nz:
                        other[j] -= f * row[j]
                    self.rhs[i] -= f * b
        self.basis[r] = c

    def optimize(self, cost, allowed):
        """Maximize ``cost . x`` over the current basis; ``allowed`` restricts entering columns."""
        while True:
            # reduced costs: cost_j - sum_i cost_{basis_i} * rows[i][j]
            cb = [cost[b] for b in self.basis]
            enter = None
            for j in allowed:
                if j in self._basic_set:
                    continue
                rc = cost[j]
                for i, row in enumerate(self.rows):
                    if cb[i] and row[j]:
                        rc -= cb[i] * row[j]
                if rc > 0:
                    enter = j
                    break
            if enter is None:
                return OPTIMAL
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                return UNBOUNDED
            self._basic_set.discard(self.basis[leave])
            self.pivot(leave, enter)
            self._basic_set.add(enter)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), nonneg=None) -> LPResult:
    """Maximize ``c . x`` subject to ``A_ub x <= b_ub`` and ``A_eq x = b_eq``.

    Variables are free unless listed in ``nonneg``.  All data are converted to
    ``Fraction``; the answer is exact.
    """
    n = len(c)
    nonneg = set(nonneg or ())
    # column layout: for each original variable a + column, free ones also a - column
    cols = []
    for j in range(n):
        cols.append((j, 1))
        if j not in nonneg:
            cols.append((j, -1))
    nstruct = len(cols)
    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    ncols = nstruct + m_ub + m
    rows, rhs = [], []
    for i in range(m):
        if i < m_ub:
            a, b = A_ub[i], Fraction(b_ub[i])
        else:
            a, b = A_eq[i - m_ub], Fraction(b_eq[i - m_ub])
        row = [Fraction(0)] * ncols
        for k, (j, s) in enumerate(cols):
            if a[j]:
                row[k] = Fraction(a[j]) * s
        if i < m_ub:
            row[nstruct + i] = Fraction(1)
        if b < 0:
            row = [-x for x in row]
            b = -b
        row[nstruct + m_ub + i] = Fraction(1)
        rows.append(row)
        rhs.append(b)
    art = list(range(nstruct + m_ub, ncols))
    tab = _Tableau(rows, rhs, list(art))
    tab._basic_set = set(art)
    phase1 = [Fraction(0)] * ncols
    for j in art:
        phase1[j] = Fraction(-1)
    tab.optimize(phase1, range(ncols))
    if sum(tab.rhs[i] for i, b in enumerate(tab.basis) if b in set(art)) != 0:
        return LPResult(INFEASIBLE)
    # drive artificials out of the basis where possible; drop redundant rows
    artset = set(art)
    keep = []
    for i in range(len(tab.rows)):
        if tab.basis[i] in artset:
            j = next((j for j in range(nstruct + m_ub) if tab.rows[i][j] and j not in tab._basic_set), None)
            if j is None:
                continue
            tab._basic_set.discard(tab.basis[i])
            tab.pivot(i, j)
            tab._basic_set.add(j)
        keep.append(i)
    tab.rows = [tab.rows[i] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]
    cost = [Fraction(0)] * ncols
    for k, (j, s) in enumerate(cols):
        cost[k] = Fraction(c[j]) * s
    status = tab.optimize(cost, range(nstruct + m_ub))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    vals = [Fraction(0)] * ncols
    for i, b in enumerate(tab.basis):
        vals[b] = tab.rhs[i]
    x = [Fraction(0)] * n
    for k, (j, s) in enumerate(cols):
        x[j] += s * vals[k]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, x, value)
