"""Computations with CM Hodge structures encoded by Galois data.

A CM-field is a triple ``(G, H, rho)`` of a finite group, a subgroup and a
central involution; a CM Hodge structure over it is an integer function on
the cosets ``G/H``.  The subpackages cover the group plumbing
(:mod:`~cmhodge.groups`), CM-types (:mod:`~cmhodge.cmfield`), type-functions
(:mod:`~cmhodge.hodge`), realization in products of CM abelian varieties
(:mod:`~cmhodge.construct`), torus dimensions (:mod:`~cmhodge.torus`) and the
constituents of cohomology of powers with domination certificates
(:mod:`~cmhodge.spectrum`).
"""

from .cmfield import (
    CMGaloisDatum,
    CMType,
    cm_type_classes,
    enumerate_cm_types,
    galois_orbits_of_cm_types,
    is_transitive_on_cm_types,
    lift_cm_type,
    make_cm_type,
    product_datum,
    validate_datum,
)
from .construct import ConstructionRecipe, decompose, peel_cm_type, verify_recipe
from .groups import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_from_permutations,
    left_cosets,
    make_group,
    subgroup_closure,
)
from .hodge import (
    HodgeTypeFn,
    chi,
    hodge_numbers,
    is_effective,
    max_effective_twist,
    tate_twist,
    tensor,
    validate_phi,
)
from .serialize import fixture_datum, load_datum
from .spectrum import (
    DominationCertificate,
    dominate,
    enumerate_constituents,
    verify_certificate,
)
from .torus import hodge_dimension, is_nondegenerate, mt_dimension, product_factorization_check

__version__ = "0.1.0"
