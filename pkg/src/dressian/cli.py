"""Command line interface: ``dressian <command> ...``."""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time

from . import __version__
from .errors import DressianError, InputError
from .io import complex_to_json, matroid_from_json, matroid_to_json, rational, weights_from_json
from .matroid import catalog, catalog_names, is_isomorphic
from .plucker import basis_names, generate_relations, raw_relation_count
from .prevariety import DEFAULT_MAX_CELLS, dressian
from .reduction import reduce
from .subdivision import initial_matroid, regular_subdivision
from .tutte import hom_dim, phi_rank, rigidity_certificate

log = logging.getLogger("dressian")


def _matroid_id(m):
    digest = hashlib.sha256(json.dumps([m.n, m.rank, [list(b) for b in m.bases]]).encode()).hexdigest()
    return {"name": m.name, "n": m.n, "rank": m.rank, "bases": len(m.bases), "sha256": digest[:16]}


def _load(source):
    """A JSON file path, or a catalog name such as ``fano`` or ``uniform(2,4)``."""
    if os.path.exists(source) or source.endswith(".json"):
        return matroid_from_json(source)
    return catalog(source)


def _catalog_tag(m):
    """Name of an isomorphic catalog matroid, tried only for small ground sets."""
    if m.n > 10:
        return None
    for name in catalog_names():
        try:
            c = catalog(name)
        except InputError:
            continue
        if c.n == m.n and c.rank == m.rank and is_isomorphic(m, c):
            return name
    return None


def cmd_catalog(args):
    if not args.name:
        return {"names": catalog_names()}
    m = catalog(args.name)
    out = matroid_to_json(m)
    out["bases"] = len(m.bases)
    return out


def cmd_relations(args):
    m = _load(args.matroid)
    rels = generate_relations(m)
    raw = raw_relation_count(m)
    out = {"matroid": _matroid_id(m), "raw": raw, "nonzero": len(rels), "discarded": raw - len(rels),
           "binomials": sum(1 for p in rels if len(p.terms) == 2), "variables": len(m.bases)}
    if args.list:
        names = basis_names(m)
        out["polynomials"] = [p.to_text(names) for p in rels]
    return out


def cmd_reduce(args):
    m = _load(args.matroid)
    rels = generate_relations(m)
    red = reduce(rels, len(m.bases), order=args.order)
    names = basis_names(m)
    hd = hom_dim(m)
    if hd != len(red.surviving):
        log.warning("surviving count %d differs from the Tutte solution dimension %d", len(red.surviving), hd)
    out = {
        "matroid": _matroid_id(m),
        "order": args.order,
        "surviving": [names[v] for v in red.surviving],
        "surviving_count": len(red.surviving),
        "active_count": len(red.active),
        "polynomials": len(red.polynomials),
        "inequalities": len(red.inequalities),
        "chain_length": len(red.chain),
        "hom_dim": hd,
    }
    if args.trace:
        steps = []
        for sub in red.chain:
            steps.append({
                "eliminated": names[sub.eliminated],
                "coefficient": rational(sub.coefficient),
                "monomial": {names[v]: e for v, e in sub.exponents},
            })
        out["chain"] = steps
        out["reduced_polynomials"] = [p.to_text(names) for p in red.polynomials]
        out["reduced_inequalities"] = [
            {"lesser": {names[v]: e for v, e in q.lesser}, "greater": {names[v]: e for v, e in q.greater}}
            for q in red.inequalities
        ]
    return out


def cmd_compute(args):
    m = _load(args.matroid)
    start = time.perf_counter()
    cx, red = dressian(m, reduce_first=not args.no_reduce, max_cells=args.max_cells, threads=args.threads, order=args.order)
    out = {"matroid": _matroid_id(m), "relations": raw_relation_count(m)}
    if red is not None:
        out["reduced"] = {"surviving": len(red.surviving), "polynomials": len(red.polynomials),
                          "inequalities": len(red.inequalities), "order": args.order}
    out["lineality_dim"] = cx.lineality_dim
    out.update(complex_to_json(cx))
    if args.timings:
        out["seconds"] = round(time.perf_counter() - start, 3)
    return out


def _cells_report(m, cells):
    out = []
    for c in cells:
        entry = {"vertices": c.vertex_count, "bases": [",".join(map(str, b)) for b in c.bases],
                 "witness": {"c": [rational(x) for x in c.witness[0]], "c0": rational(c.witness[1])},
                 "matroid": c.is_matroid}
        if c.is_matroid:
            tag = _catalog_tag(c.matroid)
            if tag:
                entry["isomorphic_to"] = tag
        out.append(entry)
    return out


def cmd_subdivide(args):
    m = _load(args.matroid)
    w = weights_from_json(args.weights, m)
    cells = regular_subdivision(m, w)
    return {"matroid": _matroid_id(m), "cells": len(cells), "vertex_counts": sorted(c.vertex_count for c in cells),
            "matroid_subdivision": all(c.is_matroid for c in cells), "maximal_cells": _cells_report(m, cells)}


def cmd_initial(args):
    m = _load(args.matroid)
    w = weights_from_json(args.weights, m)
    im = initial_matroid(m, w)
    out = matroid_to_json(im)
    out["bases"] = [",".join(map(str, b)) for b in im.bases]
    return out


def cmd_rigidity(args):
    m = _load(args.matroid)
    return {"hom_dim": hom_dim(m), "phi_rank": phi_rank(m), "certificate": rigidity_certificate(m)}


def cmd_paper_suite(args):
    from . import suite

    def show(check):
        if args.format == "text" and not args.out:
            print(check.line(), flush=True)

    checks = suite.run(args.tier, report=show)
    failed = [c for c in checks if not c.passed]
    out = {"tier": args.tier, "passed": len(checks) - len(failed), "failed": len(failed),
           "checks": [{"criterion": c.criterion, "name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]}
    return out, (3 if failed else 0)


def _is_scalar(v):
    return not isinstance(v, (dict, list))


def _inline(v):
    if isinstance(v, list) and all(_is_scalar(x) for x in v):
        return "[" + ", ".join(map(str, v)) + "]"
    return str(v)


def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    items = obj.items() if isinstance(obj, dict) else (("-", v) for v in obj)
    for k, v in items:
        label = f"{pad}{k}" if k == "-" else f"{pad}{k}:"
        if _is_scalar(v) or (isinstance(v, list) and all(_is_scalar(x) for x in v)):
            lines.append(f"{label} {_inline(v)}")
        elif not v:
            lines.append(f"{label} {'{}' if isinstance(v, dict) else '[]'}")
        else:
            lines.append(label)
            lines.append(_text(v, indent + 1))
    return "\n".join(lines)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker cap (work currently runs in one thread)")
    common.add_argument("--max-cells", type=int, default=argparse.SUPPRESS, help="cap on candidate cones and cells")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report to this file")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="dressian", description="Dressians of matroids as tropical prevarieties.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.add_argument("--out")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("catalog", parents=[common], help="list or show catalog matroids")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("relations", parents=[common], help="restricted three-term relations")
    s.add_argument("matroid")
    s.add_argument("--list", action="store_true", help="print every polynomial")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("reduce", parents=[common], help="eliminate variables with degree-one binomials")
    s.add_argument("matroid")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--order", default="first", help="'first' or 'random:<seed>'")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("compute", parents=[common], help="compute the Dressian fan")
    s.add_argument("matroid")
    s.add_argument("--no-reduce", action="store_true")
    s.add_argument("--order", default="first")
    s.add_argument("--timings", action="store_true")
    s.set_defaults(func=cmd_compute)

    for name, fn, text in (("subdivide", cmd_subdivide, "regular subdivision of the matroid polytope"),
                           ("initial", cmd_initial, "initial matroid of a weight vector")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("matroid")
        s.add_argument("--weights", required=True)
        s.set_defaults(func=fn)

    s = sub.add_parser("rigidity", parents=[common], help="Tutte-group rigidity certificate")
    s.add_argument("matroid")
    s.set_defaults(func=cmd_rigidity)

    s = sub.add_parser("paper-suite", parents=[common], help="reproduce the published examples")
    s.add_argument("--tier", choices=["small", "medium", "extended"], default="small")
    s.set_defaults(func=cmd_paper_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        result = args.func(args)
    except DressianError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    code = 0
    if isinstance(result, tuple):
        result, code = result
    result = {"version": __version__, "command": args.command, **result}
    text = json.dumps(result, indent=2) if args.format == "json" else _text(result)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    elif not (args.command == "paper-suite" and args.format == "text"):
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
