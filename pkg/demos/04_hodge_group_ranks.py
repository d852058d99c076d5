# coding: utf-8

# # Dimensions of Mumford-Tate and Hodge tori
#
# For CM structures these groups are tori.  Their dimensions are the ranks
# of the Galois orbits of phi and of 2 phi - n, computed here exactly.

from cmhodge import fixture_datum, hodge_dimension, is_nondegenerate, mt_dimension
from cmhodge.cmfield import enumerate_cm_types, make_cm_type
from cmhodge.hodge import chi
from cmhodge.torus import combined_hodge_dimension

for name in ("c2.json", "c4.json", "biquadratic.json", "d4.json"):
    E = fixture_datum(name)
    for t in enumerate_cm_types(E)[:2]:
        x = chi(t)
        print(
            f"{name:18} {str(t.members):8} mt={mt_dimension(E, x)} hodge={hodge_dimension(E, x)}"
            f" dim A={E.degree // 2} nondegenerate={is_nondegenerate(E, t)}"
        )


# ## Products of fields with disjoint closures
#
# The Hodge group of A_1 x .. x A_m is then the product of the factors'
# groups, so dimensions add.

prod = fixture_datum("product-c4-c2.json")
c4, c2 = prod.factors
types = [make_cm_type(c4, [0, 1]), make_cm_type(c2, [0])]
print("combined:", combined_hodge_dimension(prod, types))
print("sum of factors:", sum(hodge_dimension(t.datum, chi(t)) for t in types))
