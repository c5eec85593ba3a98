"""Matroids given by their bases, plus the named matroids used throughout."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import (
    AxiomViolation,
    EmptyBasisSet,
    InvalidSizes,
    MalformedSubset,
    UnknownName,
)


def _mask(subset: Iterable[int]) -> int:
    m = 0
    for i in subset:
        m |= 1 << i
    return m


def _elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_subsets(n, d, subsets):
    out = []
    for s in subsets:
        t = tuple(sorted(int(x) for x in s))
        if len(t) != d or len(set(t)) != d or (t and (t[0] < 0 or t[-1] >= n)):
            raise MalformedSubset(f"{list(s)} is not a {d}-subset of 0..{n - 1}")
        out.append(t)
    if len(set(out)) != len(out):
        raise MalformedSubset("a subset is listed twice")
    return out


def exchange_violation(bases: Sequence[tuple[int, ...]]):
    """Return a witness ``(B, B', e)`` against the exchange axiom, or None."""
    masks = [_mask(b) for b in bases]
    present = set(masks)
    for b1 in masks:
        for b2 in masks:
            diff = b2 & ~b1
            while diff:
                e = diff & -diff
                diff ^= e
                f_bits = b1 & ~b2
                ok = False
                while f_bits:
                    f = f_bits & -f_bits
                    f_bits ^= f
                    if (b1 ^ f) | e in present:
                        ok = True
                        break
                if not ok:
                    return _elements(b1), _elements(b2), e.bit_length() - 1
    return None


@dataclass(frozen=True)
class Matroid:
    """A matroid of rank ``rank`` on ``{0, ..., n-1}``.

    ``bases`` is kept in lexicographic order of sorted tuples; that order is
    the variable order for every polynomial system built from the matroid.
    """

    n: int
    rank: int
    bases: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @classmethod
    def from_bases(cls, n, d, bases, name="", validate=True) -> "Matroid":
        bs = _check_subsets(n, d, bases)
        if not bs:
            raise EmptyBasisSet("a matroid needs at least one basis")
        bs.sort()
        if validate:
            bad = exchange_violation(bs)
            if bad is not None:
                b1, b2, e = bad
                raise AxiomViolation(
                    f"exchange fails for B={b1}, B'={b2}, e={e}", witness=bad
                )
        return cls(n, d, tuple(bs), name)

    @classmethod
    def from_nonbases(cls, n, d, nonbases, name="", validate=True) -> "Matroid":
        nb = set(_check_subsets(n, d, nonbases))
        bases = [s for s in combinations(range(n), d) if s not in nb]
        return cls.from_bases(n, d, bases, name=name, validate=validate)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(_mask(b) for b in self.bases)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        """Variable id of each basis."""
        return {b: i for i, b in enumerate(self.bases)}

    @cached_property
    def mask_index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.masks)}

    @property
    def nonbases(self) -> list[tuple[int, ...]]:
        bs = set(self.bases)
        return [s for s in combinations(range(self.n), self.rank) if s not in bs]

    def is_basis(self, subset) -> bool:
        return _mask(subset) in self.mask_index

    def __len__(self):
        return len(self.bases)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Matroid({label}n={self.n}, rank={self.rank}, {len(self.bases)} bases)"


def connected_components(m: Matroid) -> list[tuple[int, ...]]:
    """Blocks of the ground set under the relation "share a circuit".

    Two elements e, f share a circuit exactly when some basis B holds e but not
    f and B - e + f is again a basis.
    """
    parent = list(range(m.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    present = m.mask_index
    full = (1 << m.n) - 1
    for b in m.masks:
        inside = _elements(b)
        outside = _elements(full & ~b)
        for e in inside:
            for f in outside:
                if (b ^ (1 << e) ^ (1 << f)) in present:
                    ra, rb = find(e), find(f)
                    if ra != rb:
                        parent[ra] = rb
    blocks: dict[int, list[int]] = {}
    for i in range(m.n):
        blocks.setdefault(find(i), []).append(i)
    return sorted(tuple(b) for b in blocks.values())


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    shift = m1.n
    bases = [b1 + tuple(x + shift for x in b2) for b1 in m1.bases for b2 in m2.bases]
    name = f"{m1.name}+{m2.name}" if m1.name and m2.name else ""
    return Matroid.from_bases(m1.n + m2.n, m1.rank + m2.rank, bases, name, validate=False)


def parallel_extension_of_classes(r: int, classes, name="") -> Matroid:
    """Parallel extension of U(r, k) whose k parallel classes are given explicitly."""
    classes = [tuple(sorted(c)) for c in classes]
    if any(not c for c in classes):
        raise InvalidSizes("parallel classes must be nonempty")
    elems = sorted(x for c in classes for x in c)
    n = len(elems)
    if elems != list(range(n)):
        raise InvalidSizes("parallel classes must partition 0..n-1")
    if not 0 <= r <= len(classes):
        raise InvalidSizes(f"rank {r} impossible with {len(classes)} classes")
    bases = []
    for chosen in combinations(classes, r):
        for pick in product(*chosen):
            bases.append(tuple(sorted(pick)))
    return Matroid.from_bases(n, r, bases, name, validate=False)


def parallel_extension(r: int, k: int, class_sizes: Sequence[int], name="") -> Matroid:
    """Parallel extension of U(r, k) with consecutive classes of the given sizes."""
    if len(class_sizes) != k or any(int(s) < 1 for s in class_sizes):
        raise InvalidSizes(f"need {k} class sizes, each at least 1; got {list(class_sizes)}")
    classes, start = [], 0
    for s in class_sizes:
        classes.append(range(start, start + s))
        start += s
    return parallel_extension_of_classes(r, classes, name)


def uniform(d: int, n: int) -> Matroid:
    return Matroid.from_bases(n, d, combinations(range(n), d), f"U({d},{n})", validate=False)


# Matroids from the examples, as nonbasis lists written digit by digit.
NONBASES = {
    "non-fano": (7, 3, "014 025 036 126 234 456"),
    "fano": (7, 3, "014 025 036 126 234 456 135"),
    # points 0-2 and 3-5 on two lines, 6-8 the pairwise intersection points
    "pappus": (9, 3, "012 345 048 138 057 237 156 246 678"),
    "non-pappus": (9, 3, "012 345 048 138 057 237 156 246"),
    "vamos": (8, 4, "0134 0125 2345 3467 2567"),
    "non-vamos": (8, 4, "0134 0125 2345 3467 2567 0167"),
    "cube": (8, 4, "0134 0125 3467 2567 0246 0356 1247 1357 0237 0457 1236 1456"),
    "twisted-vamos": (8, 4, "0123 0145 2345 2567 3467"),
    "star": (10, 3, "026 039 058 137 145 169 248 257 368 479"),
    "desargues": (10, 3, "027 036 058 135 149 168 234 259 467 789"),
}

P2F3_POINTS = (
    (1, 0, 0), (1, 0, 1), (1, 0, 2), (1, 1, 0), (1, 1, 1), (1, 1, 2), (1, 2, 0),
    (1, 2, 1), (1, 2, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 0, 1),
)


def _det3(a, b, c):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def p2f3() -> Matroid:
    """The projective plane over F_3 from its 13 coordinate vectors."""
    pts = P2F3_POINTS
    bases = [
        s for s in combinations(range(13), 3)
        if _det3(pts[s[0]], pts[s[1]], pts[s[2]]) % 3
    ]
    return Matroid.from_bases(13, 3, bases, "p2f3", validate=False)


def p2f3_lines() -> list[tuple[int, ...]]:
    """The 13 four-point lines of P^2(F_3) in the labelling above."""
    m = p2f3()
    dep = set(m.nonbases)
    lines = set()
    for a, b in combinations(range(13), 2):
        line = [a, b] + [c for c in range(13) if c not in (a, b)
                         and tuple(sorted((a, b, c))) in dep]
        lines.add(tuple(sorted(line)))
    return sorted(lines)


SPECIAL_LINE = (0, 3, 6, 9)


def partial_plane() -> Matroid:
    extra = [(3, 6, 9), (0, 6, 9), (0, 3, 9), (0, 3, 6)]
    return Matroid.from_bases(13, 3, list(p2f3().bases) + extra, "partial-plane")


def _parse_digits(words):
    return [tuple(int(ch) for ch in word) for word in words.split()]


def catalog_names() -> list[str]:
    return sorted(NONBASES) + ["p2f3", "partial-plane", "uniform(d,n)", "parallel-ext(r,k;sizes)"]


def catalog(name: str) -> Matroid:
    """Look up a named matroid."""
    key = name.strip().lower()
    if key in NONBASES:
        n, d, words = NONBASES[key]
        return Matroid.from_nonbases(n, d, _parse_digits(words), name=key)
    if key == "p2f3":
        return p2f3()
    if key == "partial-plane":
        return partial_plane()
    m = re.fullmatch(r"u(?:niform)?\(\s*(\d+)\s*,\s*(\d+)\s*\)", key)
    if m:
        d, n = int(m.group(1)), int(m.group(2))
        if d > n:
            raise UnknownName(f"uniform matroid needs d <= n, got {name!r}")
        return uniform(d, n)
    m = re.fullmatch(r"parallel-ext\(\s*(\d+)\s*,\s*(\d+)\s*;([\d,\s]+)\)", key)
    if m:
        sizes = [int(x) for x in m.group(3).split(",") if x.strip()]
        return parallel_extension(int(m.group(1)), int(m.group(2)), sizes, name=key)
    raise UnknownName(f"no catalog matroid named {name!r}; known: {', '.join(catalog_names())}")


def is_isomorphic(m1: Matroid, m2: Matroid) -> bool:
    """Brute-force isomorphism test with degree pruning; meant for n <= 10."""
    if (m1.n, m1.rank, len(m1.bases)) != (m2.n, m2.rank, len(m2.bases)):
        return False
    deg1 = [sum(1 for b in m1.bases if i in b) for i in range(m1.n)]
    deg2 = [sum(1 for b in m2.bases if i in b) for i in range(m2.n)]
    if sorted(deg1) != sorted(deg2):
        return False
    target = set(m2.masks)
    candidates = [[j for j in range(m2.n) if deg2[j] == deg1[i]] for i in range(m1.n)]
    perm = [None] * m1.n
    used = set()

    def extend(i):
        if i == m1.n:
            return all(_mask(perm[x] for x in b) in target for b in m1.bases)
        for j in candidates[i]:
            if j not in used:
                perm[i] = j
                used.add(j)
                if extend(i + 1):
                    return True
                used.discard(j)
        return False

    return extend(0)


def remove_bases(m: Matroid, drop, name="") -> Matroid:
    """The matroid whose bases are those of ``m`` minus ``drop`` (validated)."""
    drop = {tuple(sorted(b)) for b in drop}
    return Matroid.from_bases(m.n, m.rank, [b for b in m.bases if b not in drop], name)


def plane_minus_point(i: int) -> Matroid:
    """P2(F3) with ``i`` taken off the line 0369; only the other three stay collinear."""
    if i not in SPECIAL_LINE:
        raise InvalidSizes(f"{i} is not on the line {SPECIAL_LINE}")
    extra = [t for t in combinations(SPECIAL_LINE, 3) if i in t]
    return Matroid.from_bases(13, 3, list(p2f3().bases) + extra, f"N{i}")


def line_extension(points) -> Matroid:
    """Parallel extension of U(3, k+1) with singleton classes ``points`` and one class for the rest."""
    points = tuple(sorted(points))
    rest = tuple(x for x in range(13) if x not in points)
    label = "M(" + ",".join(map(str, points)) + ")"
    return parallel_extension_of_classes(3, [(p,) for p in points] + [rest], name=label)
