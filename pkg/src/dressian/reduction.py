"""Variable elimination driven by binomials with a degree-one variable.

A binomial ``c1*x*M1 + c2*M2`` (common factors divided out) forces
``x = -(c2/c1) * M2 / M1`` on the torus.  Substituting it everywhere projects
the prevariety onto the remaining coordinates; tropically the dropped
coordinate is recovered as the linear form ``val(c) + trop(M2) - trop(M1)``
with a trivial valuation, so the constant vanishes.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalCycle
from .polynomial import TropicalPolynomial, dedupe, monomial

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Substitution:
    eliminated: int
    coefficient: Fraction
    exponents: tuple  # Laurent monomial in variables alive at this step
    order_index: int


@dataclass(frozen=True)
class TropicalInequality:
    """``lesser(w) <= greater(w)``; both are integer linear forms as monomials."""

    lesser: tuple
    greater: tuple

    def holds(self, w) -> bool:
        return sum(e * w[v] for v, e in self.lesser) <= sum(e * w[v] for v, e in self.greater)

    def covector(self, nvars):
        """``a`` with ``a . w >= 0`` equivalent to the inequality."""
        a = [0] * nvars
        for v, e in self.greater:
            a[v] += e
        for v, e in self.lesser:
            a[v] -= e
        return tuple(a)


@dataclass
class ReducedSystem:
    polynomials: list
    inequalities: list
    chain: list
    surviving: list
    n_variables: int
    dropped: list = field(default_factory=list)  # (reason, original polynomial) audit trail

    @property
    def active(self) -> list:
        """Surviving variables that occur in some polynomial or inequality."""
        seen = set()
        for p in self.polynomials:
            seen |= p.variables
        for q in self.inequalities:
            seen.update(v for v, _ in q.lesser + q.greater)
        return sorted(seen)

    def lift_point(self, w_surviving):
        return lift_point(w_surviving, self.chain, self.surviving, self.n_variables)


def _apply(mono, sub: Substitution):
    """Exponent map and coefficient factor after substituting into ``mono``."""
    d = dict(mono)
    e = d.pop(sub.eliminated, 0)
    if not e:
        return mono, Fraction(1)
    for v, k in sub.exponents:
        d[v] = d.get(v, 0) + e * k
    return monomial(d), sub.coefficient ** e


def substitute(p: TropicalPolynomial, sub: Substitution) -> TropicalPolynomial:
    """Substitute and clear denominators; common monomial factors are divided out."""
    if sub.eliminated not in p.variables:
        return p
    terms = []
    for c, mono in p.terms:
        m2, f = _apply(mono, sub)
        terms.append((c * f, m2))
    poly = TropicalPolynomial.from_terms(terms)
    return poly.normalized() if poly.terms else poly


def _substitute_linear(form, sub: Substitution):
    d = dict(form)
    e = d.pop(sub.eliminated, 0)
    if e:
        for v, k in sub.exponents:
            d[v] = d.get(v, 0) + e * k
    return monomial(d)


def _strip_common(a, b):
    da, db = dict(a), dict(b)
    for v in set(da) | set(db):
        m = min(da.get(v, 0), db.get(v, 0))
        if m:
            da[v] = da.get(v, 0) - m
            db[v] = db.get(v, 0) - m
    return monomial(da), monomial(db)


def eligible_variables(p: TropicalPolynomial) -> list:
    """Variables that occur with exponent +-1 in exactly one term of a binomial."""
    if len(p.terms) != 2:
        return []
    (_, a), (_, b) = p.terms
    a, b = _strip_common(a, b)
    return sorted(v for v, e in a + b if abs(e) == 1)


def _make_substitution(p, x, order_index):
    (c1, a), (c2, b) = p.terms
    a, b = _strip_common(a, b)
    da = dict(a)
    if x not in da:
        c1, a, c2, b = c2, b, c1, a
        da = dict(a)
    ex = da.pop(x)
    # c1 * x^ex * A' + c2 * B = 0 with ex = +-1
    ratio = Fraction(-c2, c1)
    rest = {v: -k for v, k in da.items()}
    for v, k in b:
        rest[v] = rest.get(v, 0) + k
    if ex == -1:
        ratio = 1 / ratio
        rest = {v: -k for v, k in rest.items()}
    return Substitution(x, ratio, monomial(rest), order_index)


def _classify(g: TropicalPolynomial, sub: Substitution):
    """Return ("keep", poly) | ("ineq", TropicalInequality) | ("drop", None)."""
    groups: dict = {}
    order = []
    for c, mono in g.terms:
        m2, f = _apply(mono, sub)
        if m2 not in groups:
            groups[m2] = []
            order.append(m2)
        groups[m2].append(c * f)
    sizes = [len(groups[m]) for m in order]
    if all(s == 1 for s in sizes):
        poly = TropicalPolynomial.from_terms([(groups[m][0], m) for m in order])
        return "keep", poly.normalized()
    if len(order) == 1:
        return "drop", None
    if len(g.terms) == 3 and sorted(sizes) == [1, 2]:
        pair = order[sizes.index(2)]
        single = order[sizes.index(1)]
        lesser, greater = _strip_common(pair, single)
        return "ineq", TropicalInequality(lesser, greater)
    # larger polynomials never arise from three-term relations
    raise InternalCycle(f"unexpected term collapse in {g}")


def reduce(relations, n_variables=None, order="first", trace=None) -> ReducedSystem:
    """Eliminate variables until no binomial has a degree-one variable.

    ``order`` is ``"first"`` (earliest eligible binomial, smallest variable id)
    or ``"random:<seed>"``, which shuffles the polynomials and the variable
    preference with the seed before applying the same rule.
    """
    polys = dedupe([p.normalized() for p in relations])
    if n_variables is None:
        n_variables = 1 + max((v for p in polys for v in p.variables), default=-1)
    priority = list(range(n_variables))
    if isinstance(order, str) and order.startswith("random:"):
        rng = random.Random(int(order.split(":", 1)[1]))
        rng.shuffle(polys)
        rng.shuffle(priority)
    elif order != "first":
        raise ValueError(f"unknown elimination order {order!r}")
    rank_of = {v: i for i, v in enumerate(priority)}

    alive = set(range(n_variables))
    ineqs: list = []
    chain: list = []
    dropped: list = []
    cache: dict = {}

    def eligible(p):
        vs = cache.get(p)
        if vs is None:
            vs = cache[p] = sorted(eligible_variables(p), key=rank_of.__getitem__)
        return vs

    while True:
        pick = None
        for p in polys:
            vs = eligible(p)
            if vs:
                pick = (p, vs[0])
                break
        if pick is None:
            break
        f, x = pick
        if x not in alive:
            raise InternalCycle(f"variable {x} eliminated twice")
        sub = _make_substitution(f, x, len(chain))
        if x in dict(sub.exponents):
            raise InternalCycle(f"substitution for {x} refers to itself")
        chain.append(sub)
        alive.discard(x)
        new_polys = []
        for g in polys:
            if x not in g.variables:
                new_polys.append(g)
                continue
            kind, obj = _classify(g, sub)
            if kind == "keep":
                new_polys.append(obj)
            elif kind == "ineq":
                ineqs.append(obj)
                dropped.append(("inequality", g))
            else:
                dropped.append(("vacuous", g))
        polys = dedupe(new_polys)
        updated = []
        for q in ineqs:
            lesser = _substitute_linear(q.lesser, sub)
            greater = _substitute_linear(q.greater, sub)
            lesser, greater = _strip_common(lesser, greater)
            if lesser != greater:
                updated.append(TropicalInequality(lesser, greater))
        ineqs = list(dict.fromkeys(updated))
        if trace is not None:
            trace(sub, len(polys), len(ineqs))
    log.debug("reduction: %d eliminated, %d kept", len(chain), len(alive))
    return ReducedSystem(polys, ineqs, chain, sorted(alive), n_variables, dropped)


def lift_point(w, chain, surviving, n_variables):
    """Extend a point on the surviving coordinates to all coordinates.

    ``w`` is either a mapping variable id -> value or a sequence aligned with
    ``surviving``.  Each eliminated coordinate is the tropicalization of its
    replacement monomial (trivial valuation, so the coefficient contributes 0).
    """
    full = [None] * n_variables
    if isinstance(w, dict):
        for v, x in w.items():
            full[v] = Fraction(x)
    else:
        for v, x in zip(surviving, w):
            full[v] = Fraction(x)
    for sub in reversed(chain):
        full[sub.eliminated] = sum((k * full[v] for v, k in sub.exponents), Fraction(0))
    return full


def lift_matrix(chain, surviving, n_variables):
    """The linear lifting map as integer rows: full[i] = sum_j L[i][j] * w[j]."""
    col = {v: j for j, v in enumerate(surviving)}
    rows = [None] * n_variables
    for v in surviving:
        r = [0] * len(surviving)
        r[col[v]] = 1
        rows[v] = r
    for sub in reversed(chain):
        r = [0] * len(surviving)
        for v, k in sub.exponents:
            for j, x in enumerate(rows[v]):
                if x:
                    r[j] += k * x
        rows[sub.eliminated] = r
    return [tuple(r) for r in rows]
