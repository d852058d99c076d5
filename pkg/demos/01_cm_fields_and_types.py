# coding: utf-8

# # CM-fields as Galois data
#
# A CM-field is described by a finite group G (the Galois group of its
# normal closure), the subgroup H fixing the field, and complex
# conjugation rho, a central involution outside H.  Embeddings are the
# left cosets gH.

from cmhodge import (
    cm_type_classes,
    cyclic_group,
    dihedral_group,
    enumerate_cm_types,
    galois_orbits_of_cm_types,
    validate_datum,
)
from cmhodge.groups import subgroup_closure


# ## A cyclic quartic field
#
# G = C4 acting on itself, so the field is Galois.  Conjugation is g^2.

quartic = validate_datum(cyclic_group(4), [0], 2)
print("embeddings:", quartic.embeddings.cosets)
print("conjugation on embeddings:", quartic.conj)


# CM-types pick one embedding from each conjugate pair.

types = enumerate_cm_types(quartic)
print("CM-types:", [t.members for t in types])
print("Galois orbits:", [[t.members for t in o] for o in galois_orbits_of_cm_types(quartic)])
print("classes up to automorphisms of E:", len(cm_type_classes(quartic)))


# ## A non-Galois quartic field
#
# Take G = D4 acting on the vertices of a square and H generated by a
# reflection that is not central.  The rotation by a half turn is central
# and plays the role of rho.

D4 = dihedral_group(4)
half_turn = next(g for g in D4.elements if D4.element_order(g) == 2 and D4.is_central(g))
reflection = next(g for g in D4.elements if D4.element_order(g) == 2 and not D4.is_central(g))
dihedral = validate_datum(D4, subgroup_closure(D4, [reflection]), half_turn)
print("degree:", dihedral.degree)


# The field has only the automorphisms {1, rho}, so the four CM-types fall
# into two classes: two abelian surfaces with CM by this field.

for cls in cm_type_classes(dihedral):
    print("class:", [t.members for t in cls])


# The Galois group of the closure still moves every CM-type to every other.

print("orbits under G:", [len(o) for o in galois_orbits_of_cm_types(dihedral)])
