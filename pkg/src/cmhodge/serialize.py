"""JSON encodings for groups, data, type-functions, recipes and certificates.

Every encoder returns plain ``dict``/``list`` values with canonical ordering;
:func:`dumps` fixes the textual form so equal values give identical bytes.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .cmfield import CMGaloisDatum, CMType, make_cm_type, product_datum, validate_datum
from .construct import ConstructionRecipe
from .groups import FiniteGroup, Subgroup, group_from_permutations, make_group
from .hodge import HodgeTypeFn, validate_phi
from .spectrum import (
    Constituent,
    DominationCertificate,
    ExponentClass,
    TateMarker,
    _hodge_generators,
    _signature,
)

__all__ = [
    "dumps",
    "group_to_json",
    "group_from_json",
    "datum_to_json",
    "datum_from_json",
    "load_datum",
    "fixture_path",
    "fixture_datum",
    "phi_to_json",
    "phi_from_json",
    "cm_type_to_json",
    "recipe_to_json",
    "recipe_from_json",
    "constituent_to_json",
    "certificate_to_json",
    "certificate_from_json",
]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def group_to_json(G: FiniteGroup) -> dict:
    return {"order": G.order, "table": [list(row) for row in G.table]}


def group_from_json(obj: dict) -> FiniteGroup:
    if "table" in obj:
        G = make_group(obj["table"])
        if "order" in obj and obj["order"] != G.order:
            raise ValueError(f"order {obj['order']} does not match the table")
        return G
    if "perm_gens" in obj:
        return group_from_permutations(int(obj["degree"]), obj["perm_gens"])
    raise ValueError("group JSON needs 'table' or 'degree' and 'perm_gens'")


def datum_to_json(d: CMGaloisDatum) -> dict:
    if d.factors:
        return {"product": [datum_to_json(f) for f in d.factors]}
    return {"group": group_to_json(d.group), "fixing": list(d.fixing.members), "rho": d.rho}


def datum_from_json(obj: dict) -> CMGaloisDatum:
    """Accepts a plain datum or ``{"product": [datum, ...]}``."""
    if "product" in obj:
        return product_datum([datum_from_json(f) for f in obj["product"]])
    G = group_from_json(obj["group"])
    return validate_datum(G, [int(x) for x in obj["fixing"]], int(obj["rho"]))


def load_datum(path: str | Path) -> CMGaloisDatum:
    return datum_from_json(json.loads(Path(path).read_text()))


def fixture_path(name: str) -> Path:
    """Path of a datum bundled in ``cmhodge/data``."""
    return Path(str(resources.files("cmhodge") / "data" / name))


def fixture_datum(name: str) -> CMGaloisDatum:
    return load_datum(fixture_path(name))


def phi_to_json(phi: HodgeTypeFn) -> dict:
    return {"weight": phi.weight, "values": list(phi.values)}


def phi_from_json(datum: CMGaloisDatum, obj: dict) -> HodgeTypeFn:
    return validate_phi(datum, int(obj["weight"]), obj["values"])


def cm_type_to_json(t: CMType) -> list[int]:
    return list(t.members)


def recipe_to_json(recipe: ConstructionRecipe) -> dict:
    return {
        "target": phi_to_json(recipe.target),
        "layers": [list(layer) for layer in recipe.layers],
        "kunneth": recipe.kunneth,
    }


def recipe_from_json(datum: CMGaloisDatum, obj: dict) -> ConstructionRecipe:
    target = phi_from_json(datum, obj["target"])
    return ConstructionRecipe(target, tuple(tuple(int(s) for s in layer) for layer in obj["layers"]))


def constituent_to_json(con: Constituent) -> dict:
    out = {
        "orbit": [list(c.representative) for c in con.classes],
        "field_fixing": list(con.field_fixing.members),
        "weight": con.weight,
        "multiplicity": con.multiplicity,
    }
    if isinstance(con.phi, TateMarker):
        out["phiF"] = None
        out["tate_p"] = con.phi.p
    else:
        out["phiF"] = list(con.phi.values)
    return out


def certificate_to_json(cert: DominationCertificate) -> dict:
    con = cert.constituent
    return {
        "constituent": constituent_to_json(con),
        "cm_type": list(con.cm_type.members),
        "twist": cert.twist,
        "recipe": recipe_to_json(cert.recipe) if cert.recipe is not None else None,
        "lifted_layers": [list(layer) for layer in cert.lifted_layers],
        "anchors": list(cert.anchors),
        "lift_fixing": list(cert.lift_fixing.members),
        "verified": cert.verified,
    }


def certificate_from_json(datum: CMGaloisDatum, obj: dict) -> DominationCertificate:
    """Rebuild a certificate for :func:`~cmhodge.spectrum.verify_certificate`.

    Only the representative class of the orbit is needed for verification;
    the signature is recomputed from it, never trusted.  The returned
    certificate has ``verified`` set to ``False``.
    """
    G = datum.group
    c = obj["constituent"]
    cm_type = make_cm_type(datum, obj["cm_type"])
    gens = _hodge_generators(cm_type)
    classes = tuple(
        ExponentClass(datum, cm_type, tuple(m), (tuple(m),), _signature(gens, m), int(c.get("multiplicity", 0)))
        for m in c["orbit"]
    )
    field_fixing = Subgroup(G, tuple(sorted(int(x) for x in c["field_fixing"])))
    n = int(c["weight"])
    if c["phiF"] is None:
        phi: HodgeTypeFn | TateMarker = TateMarker(n, int(c["tate_p"]))
    else:
        sub = CMGaloisDatum(G, field_fixing, datum.rho)
        phi = HodgeTypeFn(sub, n, tuple(int(x) for x in c["phiF"]))
    con = Constituent(datum, cm_type, classes, field_fixing, phi, n)
    recipe = None
    if obj["recipe"] is not None and not isinstance(phi, TateMarker):
        r = obj["recipe"]
        target = HodgeTypeFn(phi.datum, int(r["target"]["weight"]), tuple(r["target"]["values"]))
        recipe = ConstructionRecipe(target, tuple(tuple(layer) for layer in r["layers"]))
    return DominationCertificate(
        con,
        int(obj["twist"]),
        recipe,
        tuple(tuple(layer) for layer in obj["lifted_layers"]),
        tuple(int(a) for a in obj["anchors"]),
        Subgroup(G, tuple(sorted(int(x) for x in obj["lift_fixing"]))),
    )
