"""Reproduction battery for the published examples, grouped in tiers.

Each check returns :class:`Check` records; the command line prints them and
the test suite asserts on the same computations independently.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .cones import LinearSubspace
from .matroid import (
    SPECIAL_LINE,
    catalog,
    line_extension,
    p2f3,
    p2f3_lines,
    partial_plane,
    plane_minus_point,
    remove_bases,
    uniform,
)
from .plucker import generate_relations
from .prevariety import dressian, membership
from .reduction import reduce
from .subdivision import (
    cells_of_dressian_cell,
    initial_matroid,
    is_face,
    is_matroid_subdivision,
    phi_shift,
    regular_subdivision,
)
from .tutte import RIGID, phi_rank, rigidity_certificate

TIERS = ("small", "medium", "extended")

U24_LINEALITY = [(1, 1, 1, 0, 0, 0), (1, 0, 0, 1, 1, 0), (0, 1, 0, 1, 0, 1), (0, 0, 1, 0, 1, 1)]
U24_RAYS = [(1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0)]
REDUCED_VARIABLES = {"star": 17, "non-pappus": 29, "vamos": 33, "desargues": 24, "partial-plane": 21}
INVARIANCE_SET = ("star", "vamos", "desargues", "partial-plane")
F_VECTORS = {
    "U(2,4)": [3],
    "U(2,5)": [10, 15],
    "non-fano": [1],
    "cube": [2, 1],
    "partial-plane": [5, 4],
    "pappus": [18, 30, 1],
    "non-pappus": [19, 48, 31, 1],
    "star": [30, 65, 20],
    "desargues": [70, 370, 510, 150],
    "vamos": [201, 2014, 6810, 9581, 5425, 896, 72, 18, 2],
    "non-vamos": [200, 1814, 4996, 4585, 840, 56, 16, 2],
    "twisted-vamos": [120, 1196, 3377, 2985, 397, 8],
}
STAR_TIERS = [
    (33, 33, 33, 41, 41, 49, 57, 67, 77),
    (33, 41, 43, 61, 68, 81),
    (33, 33, 53, 53, 96),
]
VAMOS_TOP_CENSUS = (17,) * 9 + (56,)


@dataclass
class Check:
    criterion: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.criterion} {self.name}: {self.detail}"


_CACHE: dict = {}


def complex_of(name, reduce_first=True):
    key = (name, reduce_first)
    if key not in _CACHE:
        _CACHE[key] = dressian(catalog(name), reduce_first=reduce_first)[0]
    return _CACHE[key]


def table_row_names():
    """Labeled matroids of the partial-plane table, keyed by their basis sets."""
    names = {frozenset(p2f3().bases): "P2(F3)", frozenset(line_extension(SPECIAL_LINE).bases): "M(0,3,6,9)"}
    for i in SPECIAL_LINE:
        names[frozenset(plane_minus_point(i).bases)] = f"N{i}"
    big = line_extension(SPECIAL_LINE)
    for t in combinations(SPECIAL_LINE, 3):
        names[frozenset(line_extension(t).bases)] = "M(" + ",".join(map(str, t)) + ")"
        names[frozenset(remove_bases(big, [t]).bases)] = "M(0,3,6,9)-" + "".join(map(str, t))
    return names


def expected_table():
    """Rows of the partial-plane table as sets of labels."""
    rows = [{"N9", "M(0,3,6)"}, {"N6", "M(0,3,9)"}, {"P2(F3)", "M(0,3,6,9)"}, {"N3", "M(0,6,9)"}, {"N0", "M(3,6,9)"}]
    for t in [(0, 3, 6), (0, 3, 9), (0, 6, 9), (3, 6, 9)]:
        s = "".join(map(str, t))
        rows.append({"P2(F3)", "M(" + ",".join(s) + ")", "M(0,3,6,9)-" + s})
    return rows


def second_level_matroids():
    """M' of the table and two readings of M'' inside it.

    The literal reading removes the single basis 036.  The second removes
    the bases {0, 3, x} with x in the big parallel class, which makes 0, 3 and
    that class collinear and cuts the octahedron that the rigid plane keeps
    whole.
    """
    big = line_extension(SPECIAL_LINE)
    rest = [x for x in range(13) if x not in SPECIAL_LINE]
    literal = remove_bases(big, [(0, 3, 6)], "M''(literal)")
    split = remove_bases(big, [tuple(sorted((0, 3, x))) for x in rest], "M''(0,3,rest)")
    return big, literal, split


def split_weight(m, subset, k):
    """``s -> max(0, |s & subset| - k)``: the hypersimplex split weight."""
    subset = set(subset)
    return [max(0, len(subset & set(b)) - k) for b in m.bases]


def is_initial(m, target, w):
    """Witness that ``target`` is an initial matroid of ``m`` via a cell of the subdivision by ``w``."""
    for cell in regular_subdivision(m, w):
        if set(cell.bases) == set(target.bases):
            c, c0 = cell.witness
            shifted = [x - s - c0 for x, s in zip(w, phi_shift(m, c))]
            return set(initial_matroid(m, shifted).bases) == set(target.bases)
    return False


def sample_points(cx, rng, count, scale=3):
    """Pseudorandom integer points of the complex (cell interiors plus lineality)."""
    out = []
    cells = cx.cells
    for _ in range(count):
        w = [0] * cx.ambient_dim
        for b in cx.lineality.basis:
            t = rng.randint(-scale, scale)
            w = [x + t * y for x, y in zip(w, b)]
        if cells:
            cell = rng.choice(cells)
            for i in sorted(cell.rays):
                t = rng.randint(1, scale)
                w = [x + t * y for x, y in zip(w, cx.rays[i])]
        out.append(w)
    return out


def petersen_like(edges, vertices) -> bool:
    """3-regular on 10 vertices with girth 5, which characterizes the Petersen graph."""
    vertices = set(vertices)
    if len(vertices) != 10 or len(edges) != 15:
        return False
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    if any(len(s) != 3 for s in adj.values()):
        return False
    for v in vertices:
        # no triangles or 4-cycles through v
        for a, b in combinations(adj[v], 2):
            if b in adj[a] or (adj[a] & adj[b]) - {v}:
                return False
    return True


# ---- small tier -------------------------------------------------------------


def check_u24():
    cx = complex_of("U(2,4)")
    span = LinearSubspace.from_vectors(U24_LINEALITY, 6)
    rays = {cx.lineality.reduce(r) for r in U24_RAYS}
    yield Check("1", "U(2,4) lineality", cx.lineality == span and cx.lineality_dim == 4, f"dim {cx.lineality_dim}")
    yield Check("1", "U(2,4) f-vector", cx.f_vector_spherical == [3], str(cx.f_vector_spherical))
    yield Check("1", "U(2,4) rays", set(cx.rays) == rays, f"{len(cx.rays)} rays")


def check_fano():
    cx = complex_of("non-fano")
    ok = cx.dim == 8 and cx.lineality_dim == 7 and cx.f_vector_spherical == [1]
    yield Check("2", "non-Fano Dressian", ok, f"dim {cx.dim}, lineality {cx.lineality_dim}, f {cx.f_vector_spherical}")
    fano = catalog("fano")
    fx = complex_of("fano")
    cert = rigidity_certificate(fano)
    yield Check("2", "Fano rigid", cert == RIGID and not fx.cells and fx.lineality_dim == 7, f"{cert}, {len(fx.cells)} cells")


def check_cube():
    m = catalog("cube")
    cx = complex_of("cube")
    yield Check("3", "cube f-vector", cx.f_vector_spherical == [2, 1], str(cx.f_vector_spherical))
    tets = [(0, 1, 6, 7), (2, 3, 4, 5)]
    collapsed = []
    ok = True
    for cell in cx.cells:
        subs = cells_of_dressian_cell(m, cx, cell)
        big = max(subs, key=lambda c: c.vertex_count)
        missing = set(m.bases) - set(big.bases)
        if len(cell.rays) == 1:
            ok &= len(subs) == 2 and len(missing) == 1 and missing.pop() in tets
            collapsed.append(frozenset(set(m.bases) - set(big.bases)))
        else:
            ok &= len(subs) == 3 and missing == set(tets)
    ok &= len(set(collapsed)) == 2
    yield Check("3", "cube subdivisions", ok, "vertices collapse one great tetrahedron each, edge collapses both")


def check_u25():
    cx = complex_of("U(2,5)")
    deg = Counter(r for c in cx.cells if len(c.rays) == 2 for r in c.rays)
    ok = cx.f_vector_spherical == [10, 15] and set(deg.values()) == {3}
    edges = [tuple(c.rays) for c in cx.cells if len(c.rays) == 2]
    ok &= petersen_like(edges, range(len(cx.rays)))
    yield Check("4", "U(2,5) Petersen graph", ok, f"f {cx.f_vector_spherical}")


def check_reduction_counts(seeds=5):
    for name, want in REDUCED_VARIABLES.items():
        m = catalog(name)
        red = reduce(generate_relations(m), len(m.bases))
        got = len(red.surviving)
        yield Check("5", f"{name} surviving variables", got == want,
                    f"got {got} (in polynomials {len(red.active)}, polynomials {len(red.polynomials)}, "
                    f"inequalities {len(red.inequalities)}), expected {want}")
    for name in INVARIANCE_SET:
        m = catalog(name)
        rels = generate_relations(m)
        counts = [len(reduce(rels, len(m.bases), order=f"random:{s}").surviving) for s in range(seeds)]
        first = len(reduce(rels, len(m.bases)).surviving)
        yield Check("5", f"{name} order invariance", len(set(counts + [first])) == 1, f"default {first}, random {counts}")


def check_oracles(samples=200, seed=0):
    for name in ("U(2,4)", "non-fano", "cube"):
        a, b = complex_of(name, True), complex_of(name, False)
        ok = a.lineality == b.lineality and a.cell_keys() == b.cell_keys()
        yield Check("6", f"{name} reduced equals unreduced", ok, f"{len(a.cells)} vs {len(b.cells)} cells")
    rng = random.Random(seed)
    for name in ("U(2,4)", "U(2,5)", "fano", "non-fano", "cube"):
        m = catalog(name)
        cx = complex_of(name)
        pts = [[rng.randint(0, 2) for _ in m.bases] for _ in range(samples // 2)]
        pts += sample_points(cx, rng, samples - len(pts))
        agree = sum(membership(m, w) == is_matroid_subdivision(m, w) for w in pts)
        yield Check("6", f"{name} membership vs subdivision", agree == len(pts), f"{agree}/{len(pts)} agree")
        zero = membership(m, [0] * len(m.bases))
        yield Check("6", f"{name} zero vector", zero, "member" if zero else "not a member")
        unreduced = complex_of(name, False) if name in ("U(2,4)", "non-fano", "cube") else cx
        pr = phi_rank(m)
        yield Check("6", f"{name} phi rank equals lineality", pr == unreduced.lineality_dim, f"{pr} vs {unreduced.lineality_dim}")


# ---- medium tier ------------------------------------------------------------


def check_partial_plane():
    m = partial_plane()
    cx = complex_of("partial-plane")
    yield Check("7", "partial plane f-vector", cx.f_vector_spherical == [5, 4], str(cx.f_vector_spherical))
    names = table_row_names()
    rows = []
    for cell in cx.cells:
        rows.append({names.get(frozenset(c.bases), f"unnamed[{c.vertex_count}]") for c in cells_of_dressian_cell(m, cx, cell)})
    want = expected_table()
    ok = sorted(map(sorted, rows)) == sorted(map(sorted, want))
    yield Check("7", "partial plane table", ok, "; ".join(", ".join(sorted(r)) for r in rows))


def check_nontransitive():
    m = partial_plane()
    cx = complex_of("partial-plane")
    big, literal, split = second_level_matroids()
    subs = [cells_of_dressian_cell(m, cx, c) for c in cx.cells]
    hits = [cell for cell, s in zip(cx.cells, subs) if any(set(c.bases) == set(big.bases) for c in s)]
    init = bool(hits) and is_initial(m, big, list(cx.relative_interior_point(hits[0])))
    yield Check("8", "M' is initial in the partial plane", init, f"cell of {len(hits)} Dressian subdivisions")
    for label, target, subset in (("literal M''", literal, (0, 3, 6)), ("M'' with 0,3 and the big class collinear", split, None)):
        if subset is None:
            subset = (0, 3) + tuple(x for x in range(13) if x not in SPECIAL_LINE)
        w = split_weight(big, subset, 2)
        init = is_initial(big, target, w)
        faces = [c for s in subs for c in s if set(target.bases) <= set(c.bases) and is_face(target.bases, c.bases)]
        yield Check("8", f"{label} initial in M' and absent from the partial plane", init and not faces,
                    f"initial {init}, occurs as a face in {len(faces)} subdivision cells")


def check_hypersimplex():
    u = uniform(3, 13)
    plane = set(p2f3().bases)
    cells = regular_subdivision(u, [0 if b in plane else 1 for b in u.bases])
    want = {frozenset(plane)} | {frozenset(line_extension(line).bases) for line in p2f3_lines()}
    got = {frozenset(c.bases) for c in cells}
    yield Check("9", "Delta(3,13) subdivision", len(cells) == 14 and got == want, f"{len(cells)} maximal cells")


def check_pappus():
    np_, p = complex_of("non-pappus"), complex_of("pappus")
    f, g = np_.f_vector_spherical, p.f_vector_spherical
    yield Check("10", "non-Pappus f-vector", f == F_VECTORS["non-pappus"], str(f))
    proj = [1 + g[0]] + [g[i] + g[i + 1] for i in range(len(g) - 1)] + [g[-1]]
    yield Check("10", "Pappus projection identity", g == F_VECTORS["pappus"] and proj == f, f"Pappus {g}")


def check_star():
    m = catalog("star")
    cx = complex_of("star")
    yield Check("11", "star f-vector", cx.f_vector_spherical == F_VECTORS["star"], str(cx.f_vector_spherical))
    census = Counter()
    for cell in cx.cells:
        if len(cell.rays) == 1:
            census[tuple(sorted(c.vertex_count for c in cells_of_dressian_cell(m, cx, cell)))] += 1
    ok = census == Counter({t: 10 for t in STAR_TIERS})
    yield Check("11", "star ray subdivisions", ok, "; ".join(f"{k}x{v}" for k, v in sorted(census.items())))


# ---- extended tier ----------------------------------------------------------


def check_desargues():
    cx = complex_of("desargues")
    yield Check("12", "Desargues f-vector", cx.f_vector_spherical == F_VECTORS["desargues"], str(cx.f_vector_spherical))
    top = [c for c in cx.cells if c.dim - cx.lineality_dim == 4]
    shapes = Counter(len(c.rays) for c in top)
    ok = shapes == Counter({8: 5, 5: 30, 4: 115})
    yield Check("12", "Desargues 3-cells", ok, f"rays per cell {dict(sorted(shapes.items()))}")
    squares = {c.rays for c in cx.cells if c.dim - cx.lineality_dim == 3 and len(c.rays) == 4}
    by_base = {}
    for c in top:
        if len(c.rays) == 5:
            base = [s for s in squares if s <= c.rays]
            if len(base) == 1:
                (apex,) = c.rays - base[0]
                by_base.setdefault(base[0], []).append(apex)
    edges = [tuple(v) for v in by_base.values() if len(v) == 2]
    apexes = {a for e in edges for a in e}
    yield Check("12", "Desargues pyramid graph", petersen_like(edges, apexes), f"{len(apexes)} apexes, {len(edges)} shared bases")


def check_vamos():
    m = catalog("vamos")
    cx = complex_of("vamos")
    f = cx.f_vector_spherical
    yield Check("13", "Vamos f-vector", f == F_VECTORS["vamos"], str(f))
    top = [c for c in cx.cells if c.dim == cx.dim]
    census = [tuple(sorted(c.vertex_count for c in cells_of_dressian_cell(m, cx, cell))) for cell in top]
    yield Check("13", "Vamos top-cell subdivisions", len(top) == 2 and all(c == VAMOS_TOP_CENSUS for c in census), str(census))
    g = complex_of("non-vamos").f_vector_spherical
    proj = [1 + g[0]] + [g[i] + g[i + 1] for i in range(len(g) - 1)] + [g[-1]]
    yield Check("13", "non-Vamos f-vector and projection identity", g == F_VECTORS["non-vamos"] and proj == f, str(g))
    t = complex_of("twisted-vamos").f_vector_spherical
    yield Check("13", "twisted Vamos f-vector", t == F_VECTORS["twisted-vamos"], str(t))


BATTERY = {
    "small": [check_u24, check_fano, check_cube, check_u25, check_reduction_counts, check_oracles],
    "medium": [check_partial_plane, check_nontransitive, check_hypersimplex, check_pappus, check_star],
    "extended": [check_desargues, check_vamos],
}


def run(tier="small", report=None):
    """Run every check up to and including ``tier``; ``report`` sees each check as it finishes."""
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}")
    out = []
    for t in TIERS[: TIERS.index(tier) + 1]:
        for fn in BATTERY[t]:
            start = time.perf_counter()
            for check in fn():
                check.detail += f" [{time.perf_counter() - start:.1f}s]"
                out.append(check)
                if report:
                    report(check)
                start = time.perf_counter()
    return out
