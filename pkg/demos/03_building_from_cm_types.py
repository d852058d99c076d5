# coding: utf-8

# # Every effective CM structure is cut out of a product of abelian varieties
#
# An effective phi of weight n is peeled one CM-type at a time: take the
# larger value in each conjugate pair, subtract its indicator, repeat.
# The n layers name abelian varieties B_1, .., B_n whose product carries
# phi inside H^1 x .. x H^1.

from cmhodge import decompose, fixture_datum, peel_cm_type, validate_phi, verify_recipe

E = fixture_datum("c4.json")
phi = validate_phi(E, 3, [3, 2, 0, 1])


# ## One step at a time

psi = phi
while psi.weight:
    T, psi = peel_cm_type(psi)
    print("layer", T.members, "-> remainder", psi.values)


# ## All at once, with an independent check

recipe = decompose(phi)
print("layers:", recipe.layers)
print("Kunneth component:", recipe.kunneth)
print("verified:", verify_recipe(phi, recipe).ok)
