"""Bundled scenarios: small CM data with known combinatorial invariants.

Each scenario names a datum fixture, a CM-type and optionally ``(n, k)`` for
the constituents of ``H^n(A^k)``.  :func:`run` recomputes a summary and
compares it key by key against the stored expectations.
"""

from __future__ import annotations

import json

from .cmfield import (
    closure_index_over_real_closure,
    cm_type_classes,
    enumerate_cm_types,
    galois_orbits_of_cm_types,
    make_cm_type,
)
from .hodge import chi
from .serialize import fixture_datum, fixture_path
from .spectrum import dominate
from .torus import combined_hodge_dimension, hodge_dimension, is_nondegenerate, mt_dimension


def load_scenarios() -> dict:
    return json.loads(fixture_path("scenarios.json").read_text())


def names() -> list[str]:
    return sorted(load_scenarios())


def _parse_type(datum, text):
    return make_cm_type(datum, [int(x) for x in text.split(",")])


def summarize(entry: dict) -> dict:
    datum = fixture_datum(entry["datum"])
    out: dict = {"degree": datum.degree}
    if datum.factors:
        types = [_parse_type(f, part) for f, part in zip(datum.factors, entry["cm_type"].split(";"))]
        dims = [hodge_dimension(t.datum, chi(t)) for t in types]
        out["hodge_dim"] = combined_hodge_dimension(datum, types)
        out["factor_hodge_dims"] = dims
        out["factorizes"] = out["hodge_dim"] == sum(dims)
        return out
    t = _parse_type(datum, entry["cm_type"])
    orbits = galois_orbits_of_cm_types(datum)
    out.update(
        cm_types=len(enumerate_cm_types(datum)),
        galois_orbits=len(orbits),
        transitive=len(orbits) == 1,
        classes=len(cm_type_classes(datum)),
        closure_index_over_real_closure=closure_index_over_real_closure(datum),
        mt_dim=mt_dimension(datum, chi(t)),
        hodge_dim=hodge_dimension(datum, chi(t)),
        nondegenerate=is_nondegenerate(datum, t),
    )
    if "n" in entry:
        certs = dominate(datum, t, entry["n"], entry["k"])
        out["constituents"] = len(certs)
        out["certificates_verified"] = sum(c.verified for c in certs)
        out["twists"] = [c.twist for c in certs]
        out["lifted_layers"] = [[list(layer) for layer in c.lifted_layers] for c in certs]
    return out


def run(name: str) -> dict:
    entry = load_scenarios()[name]
    summary = summarize(entry)
    expected = entry["expected"]
    mismatches = {k: {"expected": v, "got": summary.get(k)} for k, v in expected.items() if summary.get(k) != v}
    return {
        "name": name,
        "summary": summary,
        "expected": expected,
        "mismatches": mismatches,
        "matches_expected": not mismatches,
    }
