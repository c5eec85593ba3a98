"""Real shadow of the Tutte group of a matroid.

Maps from the Tutte group to R are solutions of the linear system with one
row ``x(Sb1c1) + x(Sb2c2) - x(Sb1c2) - x(Sb2c1) = 0`` for every degenerate
quadruple (``Sb1b2`` a nonbasis, the four mixed sets bases).  The sign
element is torsion and disappears over R.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .linalg import rank
from .matroid import Matroid

RIGID, UNKNOWN = "Rigid", "Unknown"


@dataclass(frozen=True)
class TutteRelationSystem:
    n_variables: int
    rows: tuple  # sparse rows: tuple of (variable id, +-1)

    def dense(self):
        out = []
        for r in self.rows:
            v = [0] * self.n_variables
            for j, c in r:
                v[j] = c
            out.append(v)
        return out


def tutte_relations(m: Matroid) -> TutteRelationSystem:
    idx = m.mask_index
    rows = {}
    if m.rank >= 2:
        for s in combinations(range(m.n), m.rank - 2):
            smask = sum(1 << x for x in s)
            rest = [x for x in range(m.n) if not smask >> x & 1]
            for b1, b2 in combinations(rest, 2):
                if smask | 1 << b1 | 1 << b2 in idx:
                    continue
                others = [x for x in rest if x != b1 and x != b2]
                for c1, c2 in combinations(others, 2):
                    ids = [idx.get(smask | 1 << b | 1 << c) for b, c in ((b1, c1), (b2, c2), (b1, c2), (b2, c1))]
                    if None in ids:
                        continue
                    row = {}
                    for j, sign in zip(ids, (1, 1, -1, -1)):
                        row[j] = row.get(j, 0) + sign
                    row = tuple(sorted((j, c) for j, c in row.items() if c))
                    if not row:
                        continue
                    if row[0][1] < 0:
                        row = tuple((j, -c) for j, c in row)
                    rows.setdefault(row, None)
    return TutteRelationSystem(len(m.bases), tuple(rows))


def hom_dim(sys_or_matroid) -> int:
    """Dimension of the real solution space of the Tutte relations."""
    sys = sys_or_matroid if isinstance(sys_or_matroid, TutteRelationSystem) else tutte_relations(sys_or_matroid)
    return sys.n_variables - rank(sys.dense())


def phi_matrix(m: Matroid) -> list:
    return [[int(i in b) for i in range(m.n)] for b in m.bases]


def phi_rank(m: Matroid) -> int:
    return rank(phi_matrix(m))


def rigidity_certificate(m: Matroid) -> str:
    """``Rigid`` when every real map on the Tutte group comes from the ground set."""
    return RIGID if hom_dim(m) == phi_rank(m) else UNKNOWN


def relation_invariant_factors(m: Matroid) -> list:
    """Invariant factors of the integer relation matrix (optional, needs sympy).

    Factors other than 1 expose torsion in the quotient of the free abelian
    group on the bases by the relations; zero rank deficiency is not listed.
    """
    from sympy import Matrix
    from sympy.matrices.normalforms import invariant_factors

    rows = tutte_relations(m).dense()
    if not rows:
        return []
    return [int(f) for f in invariant_factors(Matrix(rows)) if f not in (0, 1)]
