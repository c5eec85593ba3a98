"""Exact linear algebra over the rationals.

Vectors are plain tuples of ``int`` or ``Fraction``.  Everything here is
exact; nothing ever touches a float.
"""

from fractions import Fraction
from math import gcd


def dot(a, b):
    return sum(x * y for x, y in zip(a, b) if x and y)


def primitive(vec):
    """Scale ``vec`` by a positive rational to a coprime integer vector."""
    den = 1
    for x in vec:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def rref(rows, ncols=None):
    """Reduced row echelon form over Q.

    Returns ``(basis, pivots)`` where ``basis`` is a list of Fraction tuples
    with a 1 in each pivot column and zeros elsewhere in that column.
    """
    mat = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        row = [x * inv for x in mat[r]]
        mat[r] = row
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                other = mat[i]
                for j in nz:
                    other[j] -= f * row[j]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(mat[i]) for i in range(r)], pivots


def rank(rows):
    """Rank over Q by sparse elimination; suited to tall sparse matrices."""
    pivot_rows = {}
    for row in rows:
        vec = {j: Fraction(x) for j, x in enumerate(row) if x}
        while vec:
            col = min(vec)
            prow = pivot_rows.get(col)
            if prow is None:
                inv = 1 / vec[col]
                pivot_rows[col] = {j: x * inv for j, x in vec.items()}
                break
            f = vec[col]
            for j, x in prow.items():
                v = vec.get(j, 0) - f * x
                if v:
                    vec[j] = v
                else:
                    vec.pop(j, None)
    return len(pivot_rows)


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for every row}`` as primitive integer vectors."""
    basis, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(basis, pivots):
            vec[p] = -row[f]
        out.append(primitive(vec))
    return out


def integer_rref(rows, ncols=None):
    """RREF with every row scaled to a primitive integer vector.

    The pivot entries stay positive, and each pivot column is zero outside its
    row, so the result is a canonical basis of the row space.
    """
    basis, pivots = rref(rows, ncols)
    return [primitive(r) for r in basis], pivots


def reduce_modulo(vec, basis, pivots):
    """Canonical representative of ``vec`` modulo the span of an integer RREF basis.

    The result vanishes on every pivot column and differs from ``vec`` by an
    element of the span, up to a positive scalar.
    """
    v = list(vec)
    for row, p in zip(basis, pivots):
        if v[p]:
            a, b = row[p], v[p]
            v = [a * x - b * y for x, y in zip(v, row)]
    return primitive(v)


def solve_in_span(vec, basis, pivots):
    """Coefficients of ``vec`` in an RREF basis, or ``None`` if outside the span."""
    coeffs = [Fraction(vec[p], 1) / basis[i][p] for i, p in enumerate(pivots)]
    n = len(vec)
    for j in range(n):
        s = sum(c * row[j] for c, row in zip(coeffs, basis))
        if s != vec[j]:
            return None
    return coeffs
