# coding: utf-8

# # Hodge structures with CM as type-functions
#
# A rational Hodge structure of weight n that is one-dimensional over a
# CM-field E is recorded by an integer phi(sigma) per embedding, with
# phi(sigma) + phi(conj sigma) = n.

from cmhodge import (
    fixture_datum,
    hodge_numbers,
    is_effective,
    max_effective_twist,
    tate_twist,
    tensor,
    validate_phi,
)
from cmhodge.cmfield import make_cm_type
from cmhodge.hodge import chi

E = fixture_datum("c4.json")


# The weight relation is enforced on construction.

phi = validate_phi(E, 4, [3, 2, 1, 2])
print("Hodge numbers:", hodge_numbers(phi))

try:
    validate_phi(E, 4, [3, 2, 2, 2])
except ValueError as exc:
    print("rejected:", exc)


# Tate twists shift every value.  The largest twist that stays effective
# is the minimum value.

r = max_effective_twist(phi)
print("max effective twist:", r)
print("twisted:", tate_twist(phi, r).values, "effective:", is_effective(tate_twist(phi, r)))
print("one more:", tate_twist(phi, r + 1).values, "effective:", is_effective(tate_twist(phi, r + 1)))


# A CM-type T gives the weight-one structure H^1 of an abelian variety,
# and tensor products add type-functions.

a = chi(make_cm_type(E, [0, 1]))
b = chi(make_cm_type(E, [0, 3]))
print("chi_T tensor chi_T':", tensor(a, b).values)
