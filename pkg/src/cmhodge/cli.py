"""Command-line front end.

JSON results go to stdout, a short human-readable summary to stderr.  Exit
status is 0 on success, 1 on a domain error (invalid datum, non-effective
structure, failed verification, ...) and 2 on a usage error.

``--datum`` takes a path or the name of a bundled fixture (``c4.json``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import scenarios
from .cmfield import (
    CMError,
    cm_type_classes,
    enumerate_cm_types,
    galois_orbits_of_cm_types,
    is_transitive_on_cm_types,
    make_cm_type,
)
from .construct import ConstructionError, decompose
from .groups import GroupError
from .hodge import (
    HodgeError,
    chi,
    hodge_numbers,
    is_effective,
    max_effective_twist,
    validate_phi,
)
from .serialize import (
    certificate_from_json,
    certificate_to_json,
    constituent_to_json,
    datum_from_json,
    dumps,
    fixture_path,
    recipe_to_json,
)
from .spectrum import DEFAULT_BUDGET, BudgetExceeded, dominate, enumerate_constituents, verify_certificate
from .torus import combined_hodge_dimension, hodge_dimension, is_nondegenerate, mt_dimension

DOMAIN_ERRORS = (GroupError, CMError, HodgeError, ConstructionError, BudgetExceeded, ValueError, IndexError)


class UsageError(Exception):
    pass


def _load_json(path_or_name: str):
    p = Path(path_or_name)
    if not p.exists():
        p = fixture_path(path_or_name)
        if not p.exists():
            raise UsageError(f"--datum: no such file or fixture: {path_or_name}")
    return json.loads(p.read_text())


def _ints(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _datum(args):
    return datum_from_json(_load_json(args.datum))


def _phi(args, datum):
    if args.phi is None or args.weight is None:
        raise UsageError("--phi and --weight are both required")
    return validate_phi(datum, args.weight, _ints(args.phi, "--phi"))


def cmd_validate(args):
    datum = _datum(args)
    out = {
        "order": datum.group.order,
        "degree": datum.degree,
        "rho": datum.rho,
        "fixing": list(datum.fixing.members),
        "conj": list(datum.conj),
        "valid": True,
    }
    if args.phi is not None or args.weight is not None:
        phi = _phi(args, datum)
        out["phi"] = {
            "weight": phi.weight,
            "values": list(phi.values),
            "hodge_numbers": [[p, q, h] for (p, q), h in hodge_numbers(phi).items()],
            "effective": is_effective(phi),
            "max_effective_twist": max_effective_twist(phi),
        }
    return out, f"valid datum of degree {datum.degree}"


def cmd_cmtypes(args):
    datum = _datum(args)
    types = enumerate_cm_types(datum)
    orbits = galois_orbits_of_cm_types(datum)
    out = {
        "cm_types": [list(t.members) for t in types],
        "galois_orbits": [[list(t.members) for t in o] for o in orbits],
        "transitive": len(orbits) == 1,
    }
    return out, f"{len(types)} CM-types in {len(orbits)} Galois orbit(s)"


def cmd_classes(args):
    datum = _datum(args)
    classes = cm_type_classes(datum)
    out = {"classes": [[list(t.members) for t in c] for c in classes]}
    return out, f"{len(classes)} class(es) of CM-types"


def cmd_decompose(args):
    datum = _datum(args)
    recipe = decompose(_phi(args, datum))
    return recipe_to_json(recipe), f"{len(recipe.layers)} layer(s)"


def _cm_types_arg(args, datum):
    if args.cmtype is None:
        raise UsageError("--cmtype is required")
    if datum.factors:
        parts = args.cmtype.split(";")
        if len(parts) != len(datum.factors):
            raise UsageError(f"--cmtype: need {len(datum.factors)} ';'-separated CM-types")
        return [make_cm_type(f, _ints(p, "--cmtype")) for f, p in zip(datum.factors, parts)]
    return [make_cm_type(datum, _ints(args.cmtype, "--cmtype"))]


def cmd_rank(args):
    datum = _datum(args)
    if datum.factors:
        types = _cm_types_arg(args, datum)
        dims = [hodge_dimension(t.datum, chi(t)) for t in types]
        combined = combined_hodge_dimension(datum, types)
        out = {"hodge_dim": combined, "factor_hodge_dims": dims, "factorizes": combined == sum(dims)}
        return out, f"hodge_dim {combined} vs factors {dims}"
    if args.cmtype is not None:
        (t,) = _cm_types_arg(args, datum)
        phi = chi(t)
        out = {
            "mt_dim": mt_dimension(datum, phi),
            "hodge_dim": hodge_dimension(datum, phi),
            "nondegenerate": is_nondegenerate(datum, t),
        }
    else:
        phi = _phi(args, datum)
        out = {"mt_dim": mt_dimension(datum, phi), "hodge_dim": hodge_dimension(datum, phi)}
    return out, f"mt_dim {out['mt_dim']}, hodge_dim {out['hodge_dim']}"


def _spectrum_args(args):
    datum = _datum(args)
    (t,) = _cm_types_arg(args, datum)
    if args.n is None or args.k is None:
        raise UsageError("-n and -k are required")
    return datum, t


def cmd_spectrum(args):
    datum, t = _spectrum_args(args)
    cons = enumerate_constituents(datum, t, args.n, args.k, budget=args.budget)
    out = {"constituents": [constituent_to_json(c) for c in cons]}
    return out, f"{len(cons)} constituent(s) of H^{args.n}(A^{args.k})"


def cmd_dominate(args):
    datum, t = _spectrum_args(args)
    certs = dominate(datum, t, args.n, args.k, budget=args.budget)
    out = {"certificates": [certificate_to_json(c) for c in certs]}
    return out, f"{len(certs)} verified certificate(s)"


def cmd_verify(args):
    datum = _datum(args)
    if args.certificates is None:
        raise UsageError("--certificates is required")
    data = json.loads(Path(args.certificates).read_text())
    items = data["certificates"] if isinstance(data, dict) else data
    results = []
    for obj in items:
        report = verify_certificate(certificate_from_json(datum, obj))
        results.append({"ok": report.ok, "failures": report.failures})
    ok = all(r["ok"] for r in results)
    out = {"results": results, "all_verified": ok}
    return out, f"{sum(r['ok'] for r in results)}/{len(results)} certificate(s) verified"


def cmd_scenario(args):
    if args.list or args.name is None:
        return {"scenarios": scenarios.names()}, "available scenarios"
    if args.name not in scenarios.names():
        raise UsageError(f"scenario: unknown name {args.name!r}")
    report = scenarios.run(args.name)
    return report, f"scenario {args.name}: {'ok' if report['matches_expected'] else 'MISMATCH'}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cmhodge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *, datum=True, phi=False, cmtype=False, spectrum=False):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        if datum:
            p.add_argument("--datum", required=True)
        if phi:
            p.add_argument("--phi")
            p.add_argument("--weight", type=int)
        if cmtype:
            p.add_argument("--cmtype")
        if spectrum:
            p.add_argument("-n", type=int)
            p.add_argument("-k", type=int)
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        return p

    add("validate", cmd_validate, phi=True)
    add("cmtypes", cmd_cmtypes)
    add("classes", cmd_classes)
    add("decompose", cmd_decompose, phi=True)
    add("rank", cmd_rank, phi=True, cmtype=True)
    add("spectrum", cmd_spectrum, cmtype=True, spectrum=True)
    add("dominate", cmd_dominate, cmtype=True, spectrum=True)
    p = add("verify", cmd_verify)
    p.add_argument("--certificates")
    p = add("scenario", cmd_scenario, datum=False)
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, summary = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"cmhodge: error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"cmhodge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(dumps(out))
    print(summary, file=sys.stderr)
    if args.command == "verify" and not out["all_verified"]:
        return 1
    if args.command == "scenario" and out.get("matches_expected") is False:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
