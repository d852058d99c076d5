# coding: utf-8

# # Domination of H^n(A^k) by certificates
#
# Each irreducible constituent of H^n(A^k) is a CM structure over a
# subfield F of the closure.  After its maximal effective Tate twist it has
# a class of type (n', 0) and sits inside a product of abelian varieties.
# A certificate records the twist, the recipe and how it is realized.

from cmhodge import dominate, enumerate_constituents, fixture_datum, verify_certificate
from cmhodge.cmfield import make_cm_type
from cmhodge.serialize import certificate_to_json, dumps

E = fixture_datum("d4.json")
T = make_cm_type(E, [0, 1])


# ## Constituents of H^2 of the abelian surface

for con in enumerate_constituents(E, T, 2, 1):
    kind = "Tate" if con.is_tate else f"phiF={con.phi.values}"
    print(f"fixing={con.field_fixing.members} classes={len(con.classes)} {kind} inside E: {con.contained_in_e}")


# ## Certificates
#
# The non-Tate constituent lives on a field that is not inside E, yet it is
# still realized by abelian surfaces with CM by E, anchored at two
# different embeddings.

for cert in dominate(E, T, 2, 1):
    print("twist", cert.twist, "layers", cert.lifted_layers, "anchors", cert.anchors,
          "over E:", cert.realized_over_e, "check:", verify_certificate(cert).ok)


# Certificates serialize to canonical JSON and can be re-verified from it.

print(dumps(certificate_to_json(dominate(E, T, 2, 1)[0])), end="")
