"""Three-term Plücker relations restricted to the bases of a matroid."""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import MonomialRelation
from .matroid import Matroid
from .polynomial import TropicalPolynomial, dedupe  # noqa: F401  (re-export)


def raw_relation_count(m: Matroid) -> int:
    """Number of (S, {i,j,k,l}) choices before any term is deleted."""
    if m.rank < 2:
        return 0
    return comb(m.n, m.rank - 2) * comb(m.n - m.rank + 2, 4)


def generate_relations(m: Matroid) -> list[TropicalPolynomial]:
    """Restricted relations p_Sij p_Skl - p_Sik p_Sjl + p_Sil p_Sjk.

    Products touching a nonbasis are deleted; relations that vanish entirely
    are dropped.  Order is lexicographic in (S, i, j, k, l).
    """
    idx = m.mask_index
    out = []
    if m.rank < 2:
        return out
    for s in combinations(range(m.n), m.rank - 2):
        smask = 0
        for x in s:
            smask |= 1 << x
        rest = [x for x in range(m.n) if not smask >> x & 1]
        for i, j, k, l in combinations(rest, 4):
            terms = []
            for sign, (a, b), (c, d) in ((1, (i, j), (k, l)), (-1, (i, k), (j, l)), (1, (i, l), (j, k))):
                u = idx.get(smask | 1 << a | 1 << b)
                v = idx.get(smask | 1 << c | 1 << d)
                if u is not None and v is not None:
                    terms.append((sign, ((u, 1), (v, 1)) if u < v else ((v, 1), (u, 1))))
            if len(terms) == 1:
                raise MonomialRelation(
                    f"relation for S={s}, ijkl={(i, j, k, l)} has a single term; "
                    "the basis set violates the exchange axiom"
                )
            if terms:
                out.append(TropicalPolynomial.from_terms(terms))
    return out


def basis_names(m: Matroid) -> list[str]:
    return [",".join(str(x) for x in b) for b in m.bases]
