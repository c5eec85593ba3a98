"""Sparse Laurent polynomials with integer coefficients.

Only the exponent vectors matter tropically; coefficients are carried so the
reduction step can detect exact cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from math import gcd
from typing import Mapping

Monomial = tuple  # sorted tuple of (variable id, nonzero exponent)


def monomial(exps: Mapping[int, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def mono_eval(mono: Monomial, w) -> Fraction:
    return sum((e * w[v] for v, e in mono), Fraction(0))


@dataclass(frozen=True)
class TropicalPolynomial:
    """``terms`` is a tuple of ``(coefficient, monomial)`` pairs.

    Terms are combined (distinct monomials), coefficients are nonzero and
    stored in descending monomial order.
    """

    terms: tuple

    @classmethod
    def from_terms(cls, terms) -> "TropicalPolynomial":
        acc: dict = {}
        for c, mono in terms:
            mono = monomial(dict(mono)) if not isinstance(mono, tuple) else mono
            acc[mono] = acc.get(mono, 0) + c
        return cls(tuple(sorted(((c, m) for m, c in acc.items() if c),
                                key=lambda t: t[1], reverse=True)))

    def __len__(self):
        return len(self.terms)

    @property
    def monomials(self) -> list:
        return [m for _, m in self.terms]

    @cached_property
    def variables(self) -> frozenset:
        return frozenset(v for _, m in self.terms for v, _ in m)

    def normalized(self) -> "TropicalPolynomial":
        """Divide out the common monomial factor and make coefficients coprime
        integers with a positive leading coefficient."""
        if not self.terms:
            return self
        monos = [dict(m) for _, m in self.terms]
        mins = dict(monos[0])
        for d in monos[1:]:
            for v, low in mins.items():
                e = d.get(v, 0)
                if e < low:
                    mins[v] = e
            for v, e in d.items():
                if e < 0 and v not in monos[0] and mins.get(v, 0) > e:
                    mins[v] = e
        mins = {v: e for v, e in mins.items() if e}
        coeffs = [c for c, _ in self.terms]
        if not all(isinstance(c, int) for c in coeffs):
            den = 1
            for c in coeffs:
                c = Fraction(c)
                den = den * c.denominator // gcd(den, c.denominator)
            coeffs = [int(Fraction(c) * den) for c in coeffs]
        g = 0
        for c in coeffs:
            g = gcd(g, c)
        if not mins and g == 1 and coeffs[0] > 0 and coeffs == [c for c, _ in self.terms]:
            return self
        out = []
        for c, d in zip(coeffs, monos):
            for v, low in mins.items():
                d[v] = d.get(v, 0) - low
            out.append((c // g, monomial(d)))
        poly = TropicalPolynomial.from_terms(out)
        if poly.terms[0][0] < 0:
            poly = TropicalPolynomial(tuple((-c, m) for c, m in poly.terms))
        return poly

    def key(self):
        """Identity up to sign, used for deduplication."""
        if self.terms and self.terms[0][0] < 0:
            return tuple((-c, m) for c, m in self.terms)
        return self.terms

    def tropical_values(self, w) -> list:
        return [mono_eval(m, w) for _, m in self.terms]

    def is_tropically_satisfied(self, w) -> bool:
        """Minimum over the terms attained at least twice."""
        vals = self.tropical_values(w)
        low = min(vals)
        return sum(1 for v in vals if v == low) >= 2

    def to_text(self, names=None) -> str:
        def var(v):
            return f"p_{{{names[v]}}}" if names is not None else f"x{v}"

        parts = []
        for c, mono in self.terms:
            sign = "-" if c < 0 else "+"
            factors = [var(v) if e == 1 else f"{var(v)}^{e}" for v, e in mono]
            if abs(c) != 1:
                factors.insert(0, str(abs(c)))
            parts.append(f"{sign} {'*'.join(factors) or '1'}")
        return " ".join(parts)


def dedupe(polys) -> list:
    """Drop exact duplicates and negations, keeping first occurrences."""
    seen = set()
    out = []
    for p in polys:
        k = p.key()
        if k not in seen:
            seen.add(k)
            out.append(p)
    return out
