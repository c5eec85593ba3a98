"""JSON formats for matroids, weight vectors and fans."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import AxiomViolation, EmptyBasisSet, InputError, MalformedSubset, MissingCoordinate
from .matroid import Matroid


def rational(x) -> str:
    return str(Fraction(x))


def parse_rational(x, where="value") -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"{where}: expected an integer or a 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: cannot parse {x!r} as a rational") from exc


def _read(source):
    if isinstance(source, dict):
        return source
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _int_field(data, key):
    if key not in data:
        raise InputError(f"missing field '{key}'")
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise InputError(f"field '{key}': expected a nonnegative integer, got {v!r}")
    return v


def matroid_from_json(source) -> Matroid:
    data = _read(source)
    if not isinstance(data, dict):
        raise InputError("matroid file must contain a JSON object")
    n = _int_field(data, "n")
    d = _int_field(data, "rank")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise InputError(f"field 'name': expected a string, got {name!r}")
    has_nb, has_b = "nonbases" in data, "bases" in data
    if has_nb == has_b:
        raise InputError("exactly one of the fields 'nonbases' and 'bases' is required")
    key = "nonbases" if has_nb else "bases"
    subsets = data[key]
    if not isinstance(subsets, list):
        raise InputError(f"field '{key}': expected a list of subsets")
    parsed = []
    for i, s in enumerate(subsets):
        if not isinstance(s, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in s):
            raise MalformedSubset(f"field '{key}'[{i}]: expected a list of integers, got {s!r}")
        parsed.append(tuple(s))
    if has_b and not parsed:
        raise EmptyBasisSet("field 'bases': the basis family is empty")
    try:
        if has_nb:
            return Matroid.from_nonbases(n, d, parsed, name)
        return Matroid.from_bases(n, d, parsed, name)
    except AxiomViolation as exc:
        raise type(exc)(f"field '{key}': {exc}", exc.witness) from exc
    except InputError as exc:
        raise type(exc)(f"field '{key}': {exc}") from exc


def matroid_to_json(m: Matroid) -> dict:
    return {"name": m.name, "n": m.n, "rank": m.rank, "nonbases": [list(b) for b in m.nonbases]}


def weights_from_json(source, m: Matroid) -> list:
    """Weights aligned with ``m.bases``; keys are comma-separated sorted bases."""
    data = _read(source)
    if not isinstance(data, dict) or not isinstance(data.get("weights"), dict):
        raise InputError("weight file needs an object field 'weights'")
    raw = data["weights"]
    table = {}
    for k, v in raw.items():
        try:
            key = tuple(sorted(int(x) for x in str(k).split(",")))
        except ValueError as exc:
            raise InputError(f"field 'weights': bad basis key {k!r}") from exc
        table[key] = parse_rational(v, f"field 'weights'[{k!r}]")
    out = []
    for b in m.bases:
        if b not in table:
            raise MissingCoordinate(f"field 'weights': no entry for basis {','.join(map(str, b))}")
        out.append(table[b])
    return out


def weights_to_json(m: Matroid, w) -> dict:
    return {"weights": {",".join(map(str, b)): rational(x) for b, x in zip(m.bases, w)}}


def complex_to_json(cx) -> dict:
    return {
        "ambient_dim": cx.ambient_dim,
        "lineality_basis": [[rational(x) for x in v] for v in cx.lineality.basis],
        "rays": [[rational(x) for x in r] for r in cx.rays],
        "cells": [{"dim": c.dim, "rays": sorted(c.rays), "maximal": c.maximal} for c in cx.cells],
        "f_vector_spherical": cx.f_vector_spherical,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
