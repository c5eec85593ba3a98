"""Slow, independent reference implementations used only by the tests.

None of these import the package's linear algebra, LP, or cone code.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import sympy


def exchange_ok(bases) -> bool:
    """Basis exchange axiom, checked literally on sets."""
    bs = {frozenset(b) for b in bases}
    for b1 in bs:
        for b2 in bs:
            for e in b1 - b2:
                if not any((b1 - {e}) | {f} in bs for f in b2 - b1):
                    return False
    return True


def plucker_supports(n, d, bases):
    """Sorted term supports of each restricted three-term relation, by definition."""
    bs = {frozenset(b) for b in bases}
    out = []
    for s in combinations(range(n), d - 2):
        rest = [x for x in range(n) if x not in s]
        for i, j, k, l in combinations(rest, 4):
            terms = []
            for (a, b), (c, e) in (((i, j), (k, l)), ((i, k), (j, l)), ((i, l), (j, k))):
                p, q = frozenset(s) | {a, b}, frozenset(s) | {c, e}
                if p in bs and q in bs:
                    terms.append(frozenset((tuple(sorted(p)), tuple(sorted(q)))))
            if terms:
                out.append(frozenset(terms))
    return out


def naive_normalize(terms):
    """``terms``: list of (coefficient, {var: exponent}).  Divide by the gcd monomial
    and coefficient content, leading coefficient positive (terms sorted descending)."""
    acc = {}
    for c, mono in terms:
        key = tuple(sorted((v, e) for v, e in mono.items() if e))
        acc[key] = acc.get(key, 0) + Fraction(c)
    acc = {k: c for k, c in acc.items() if c}
    if not acc:
        return ()
    variables = {v for k in acc for v, _ in k}
    low = {v: min(dict(k).get(v, 0) for k in acc) for v in variables}
    shifted = {}
    for k, c in acc.items():
        d = dict(k)
        key = tuple(sorted((v, d.get(v, 0) - low[v]) for v in variables if d.get(v, 0) - low[v]))
        shifted[key] = c
    den = 1
    for c in shifted.values():
        den = sympy.ilcm(den, c.denominator)
    ints = {k: int(c * den) for k, c in shifted.items()}
    g = 0
    for c in ints.values():
        g = sympy.igcd(g, c)
    items = sorted(((c // g, k) for k, c in ints.items()), key=lambda t: t[1], reverse=True)
    if items[0][0] < 0:
        items = [(-c, k) for c, k in items]
    return tuple(items)


# Fourier-Motzkin with strictness flags.  A constraint is (vector, strict) meaning
# a . w > 0 (strict) or a . w >= 0.

def _fm_feasible(constraints, n):
    cons = [(tuple(Fraction(x) for x in a), s) for a, s in constraints]
    for j in range(n):
        pos = [(a, s) for a, s in cons if a[j] > 0]
        neg = [(a, s) for a, s in cons if a[j] < 0]
        keep = [(a, s) for a, s in cons if a[j] == 0]
        for a, s in pos:
            for b, t in neg:
                combo = tuple(-b[j] * x + a[j] * y for x, y in zip(a, b))
                keep.append((combo, s or t))
        # drop duplicates to keep the blowup in check
        cons = list(dict.fromkeys(keep))
    return not any(s for a, s in cons)  # all remaining vectors are zero


def fm_dim(equalities, inequalities, n) -> int:
    """Dimension of {E w = 0, A w >= 0} via Fourier-Motzkin.

    An inequality is an implicit equality iff adding its strict version makes
    the system infeasible.
    """
    base = []
    for e in equalities:
        base.append((tuple(e), False))
        base.append((tuple(-x for x in e), False))
    base += [(tuple(a), False) for a in inequalities]
    tight = [a for a in inequalities if not _fm_feasible(base + [(tuple(a), True)], n)]
    rows = [list(map(Fraction, r)) for r in list(equalities) + tight]
    if not rows:
        return n
    return n - sympy.Matrix(rows).rank()


def lower_hull_cells(points, heights):
    """Maximal cells of the regular subdivision of ``points`` lifted by ``heights``.

    Every full-dimensional affinely independent subset determines an affine
    function; when it stays below all other lifted points, its tight set is a
    maximal cell.
    """
    pts = [list(map(Fraction, p)) for p in points]
    hs = [Fraction(h) for h in heights]
    aff = sympy.Matrix([p + [1] for p in pts])
    r = aff.rank()
    cells = set()
    for sub in combinations(range(len(pts)), r):
        m = sympy.Matrix([pts[i] + [1] for i in sub])
        if m.rank() < r:
            continue
        rhs = sympy.Matrix([hs[i] for i in sub])
        sol, params = m.gauss_jordan_solve(rhs)
        sol = sol.subs({p: 0 for p in params})
        vals = [sum(Fraction(str(sol[k])) * x for k, x in enumerate(p + [1])) for p in pts]
        if all(v <= h for v, h in zip(vals, hs)):
            cells.add(frozenset(i for i, (v, h) in enumerate(zip(vals, hs)) if v == h))
    return cells
