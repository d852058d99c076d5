"""CM Galois data and CM-types.

A CM-field ``E`` is replaced by the triple ``(G, H, rho)``: ``G`` is the
Galois group of the Galois closure, ``H`` the subgroup fixing ``E`` and
``rho`` complex conjugation, a central involution outside ``H``.  The
embeddings of ``E`` are the left cosets ``G/H`` and Galois acts on them by
left multiplication.

Products of data (:func:`product_datum`) assume the Galois closures of the
factors are linearly disjoint.  That hypothesis is not checked; it is the
caller's responsibility.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .groups import (
    CosetSpace,
    FiniteGroup,
    Subgroup,
    direct_product,
    left_cosets,
    product_components,
    subgroup_closure,
)

__all__ = [
    "CMError",
    "RhoNotOrder2",
    "RhoNotCentral",
    "RhoFixesE",
    "DegreeTooLarge",
    "IncompatibleRho",
    "NotASubfieldChain",
    "SubfieldNotCM",
    "NotACMType",
    "CMGaloisDatum",
    "CMType",
    "MAX_CM_DEGREE",
    "validate_datum",
    "make_cm_type",
    "is_cm_type",
    "enumerate_cm_types",
    "galois_orbits_of_cm_types",
    "is_transitive_on_cm_types",
    "cm_type_classes",
    "product_datum",
    "factor_action",
    "lift_cm_type",
    "project_cm_type",
    "real_subfield",
    "closure_index_over_real_closure",
]

MAX_CM_DEGREE = 24


class CMError(ValueError):
    pass


class RhoNotOrder2(CMError):
    pass


class RhoNotCentral(CMError):
    pass


class RhoFixesE(CMError):
    pass


class DegreeTooLarge(CMError):
    pass


class IncompatibleRho(CMError):
    pass


class NotASubfieldChain(CMError):
    pass


class SubfieldNotCM(CMError):
    pass


class NotACMType(CMError):
    pass


@dataclass(frozen=True)
class CMGaloisDatum:
    group: FiniteGroup
    fixing: Subgroup
    rho: int
    # Non-empty only for data built by product_datum.
    factors: tuple["CMGaloisDatum", ...] = ()

    @cached_property
    def embeddings(self) -> CosetSpace:
        return left_cosets(self.group, self.fixing)

    @property
    def degree(self) -> int:
        return len(self.embeddings)

    @cached_property
    def conj(self) -> tuple[int, ...]:
        return self.embeddings.action_table[self.rho]

    def act(self, g: int, c: int) -> int:
        return self.embeddings.action_table[g][c]

    @cached_property
    def conj_pairs(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(s, conj(s))`` with ``s < conj(s)``, in order of ``s``."""
        return tuple((s, t) for s, t in enumerate(self.conj) if s < t)

    def subfield(self, fixing: Subgroup | Iterable[int]) -> CMGaloisDatum:
        """The datum of the subfield fixed by ``fixing`` (same ``G`` and ``rho``)."""
        if not isinstance(fixing, Subgroup):
            fixing = subgroup_closure(self.group, fixing)
        return validate_datum(self.group, fixing, self.rho)

    @cached_property
    def galois_closure(self) -> CMGaloisDatum:
        return validate_datum(self.group, Subgroup(self.group, (0,)), self.rho)

    def same_field(self, other: CMGaloisDatum) -> bool:
        return (
            self.rho == other.rho
            and self.fixing.members == other.fixing.members
            and self.group == other.group
        )


def validate_datum(
    group: FiniteGroup, fixing: Subgroup | Iterable[int], rho: int
) -> CMGaloisDatum:
    """Check the CM conditions on ``(G, H, rho)``.

    ``fixing`` may be a :class:`Subgroup` or any generating set for one.
    """
    if not isinstance(fixing, Subgroup):
        fixing = subgroup_closure(group, fixing)
    if not 0 <= rho < group.order:
        raise IndexError(f"rho = {rho} out of range")
    if group.element_order(rho) != 2:
        raise RhoNotOrder2(f"rho = {rho} has order {group.element_order(rho)}")
    if not group.is_central(rho):
        raise RhoNotCentral(f"rho = {rho} is not central")
    if rho in fixing:
        raise RhoFixesE(f"rho = {rho} lies in the fixing subgroup")
    return CMGaloisDatum(group, fixing, rho)


@dataclass(frozen=True)
class CMType:
    datum: CMGaloisDatum
    members: tuple[int, ...]

    def __contains__(self, s: int) -> bool:
        return s in self.members

    @property
    def indicator(self) -> tuple[int, ...]:
        mem = set(self.members)
        return tuple(int(s in mem) for s in range(self.datum.degree))

    def translate(self, g: int) -> CMType:
        """Galois translate ``g . T``."""
        return CMType(self.datum, tuple(sorted(self.datum.act(g, s) for s in self.members)))


def make_cm_type(datum: CMGaloisDatum, members: Iterable[int]) -> CMType:
    mem = sorted(set(int(s) for s in members))
    d = datum.degree
    if any(not 0 <= s < d for s in mem):
        raise NotACMType(f"{mem} has indices outside 0..{d - 1}")
    conj = datum.conj
    for s in range(d):
        if (s in mem) == (conj[s] in mem):
            raise NotACMType(
                f"{mem} must contain exactly one of embeddings {s} and {conj[s]}"
            )
    return CMType(datum, tuple(mem))


def is_cm_type(datum: CMGaloisDatum, members: Iterable[int]) -> bool:
    try:
        make_cm_type(datum, members)
    except NotACMType:
        return False
    return True


def enumerate_cm_types(datum: CMGaloisDatum, *, max_degree: int = MAX_CM_DEGREE) -> list[CMType]:
    """All ``2^g`` CM-types, sorted lexicographically by member tuple."""
    if datum.degree > max_degree:
        raise DegreeTooLarge(f"degree {datum.degree} exceeds cap {max_degree}")
    types = [
        CMType(datum, tuple(sorted(choice)))
        for choice in itertools.product(*datum.conj_pairs)
    ]
    types.sort(key=lambda t: t.members)
    return types


def _orbits(types: list[CMType], images) -> list[list[CMType]]:
    index = {t.members: i for i, t in enumerate(types)}
    seen = [False] * len(types)
    orbits = []
    for i, t in enumerate(types):
        if seen[i]:
            continue
        orbit = {i}
        stack = [t]
        while stack:
            u = stack.pop()
            for v in images(u):
                j = index[v]
                if j not in orbit:
                    orbit.add(j)
                    stack.append(types[j])
        for j in orbit:
            seen[j] = True
        orbits.append([types[j] for j in sorted(orbit)])
    return orbits


def galois_orbits_of_cm_types(datum: CMGaloisDatum) -> list[list[CMType]]:
    """Orbits of ``G`` acting on CM-types by ``g.T = {g s : s in T}``."""
    types = enumerate_cm_types(datum)
    gens = list(datum.group.elements)
    return _orbits(types, lambda t: (t.translate(g).members for g in gens))


def is_transitive_on_cm_types(datum: CMGaloisDatum) -> bool:
    return len(galois_orbits_of_cm_types(datum)) == 1


def cm_type_classes(datum: CMGaloisDatum) -> list[list[CMType]]:
    """CM-types modulo ``Aut(E) = N_G(H)/H`` acting on the right.

    The right action of ``n`` sends the coset ``xH`` to ``xnH``; these orbits
    stand in for isogeny classes of abelian varieties with CM by ``E``.
    """
    G, space = datum.group, datum.embeddings
    normalizer = datum.fixing.normalizer().members

    def right(n: int, s: int) -> int:
        return space.coset_of(G.mul(space.cosets[s][0], n))

    def images(t: CMType):
        for n in normalizer:
            yield tuple(sorted(right(n, s) for s in t.members))

    return _orbits(enumerate_cm_types(datum), images)


def product_datum(data: Sequence[CMGaloisDatum]) -> CMGaloisDatum:
    """Datum of the compositum of CM-fields with linearly disjoint closures.

    The group is the direct product of the factor groups and ``rho`` is the
    tuple of the factor conjugations; the fixing subgroup is the product of
    the factor fixing subgroups (the compositum).  Factor embeddings are
    reached through :func:`factor_action`.
    """
    data = list(data)
    if len(data) < 2:
        raise ValueError("product_datum needs at least two data")
    groups = [d.group for d in data]
    G = direct_product(*groups)
    by_components = {product_components(groups, g): g for g in G.elements}
    rho = by_components[tuple(d.rho for d in data)]
    if G.element_order(rho) != 2 or not G.is_central(rho):
        raise IncompatibleRho("componentwise rho is not a central involution")
    fixing = Subgroup(
        G,
        tuple(sorted(by_components[t] for t in itertools.product(*(d.fixing.members for d in data)))),
    )
    datum = validate_datum(G, fixing, rho)
    return CMGaloisDatum(G, datum.fixing, rho, tuple(data))


def factor_action(datum: CMGaloisDatum) -> tuple[list[tuple[int, int]], list[tuple[int, ...]]]:
    """Embeddings of the disjoint union of the factor coset spaces.

    Returns the labels ``(factor, coset)`` in order and, for each ``g`` in the
    product group, the induced permutation of those labels.
    """
    if not datum.factors:
        raise ValueError("datum is not a product")
    groups = [f.group for f in datum.factors]
    labels = [(i, c) for i, f in enumerate(datum.factors) for c in range(f.degree)]
    offsets = list(itertools.accumulate([0] + [f.degree for f in datum.factors]))
    perms = []
    for g in datum.group.elements:
        comps = product_components(groups, g)
        perms.append(
            tuple(offsets[i] + datum.factors[i].act(comps[i], c) for i, c in labels)
        )
    return labels, perms


def lift_cm_type(datum: CMGaloisDatum, subfield_fixing: Subgroup, t_f: CMType) -> CMType:
    """Pull a CM-type of the subfield fixed by ``subfield_fixing`` back to ``E``."""
    if not datum.fixing.issubset(subfield_fixing):
        raise NotASubfieldChain("fixing subgroup of E is not contained in that of F")
    if datum.rho in subfield_fixing:
        raise SubfieldNotCM("rho fixes the subfield, so it is totally real")
    sub = t_f.datum
    if sub.fixing.members != subfield_fixing.members or sub.rho != datum.rho:
        raise ValueError("CM-type does not belong to the given subfield")
    down = set(t_f.members)
    space = datum.embeddings
    members = [s for s in range(datum.degree) if sub.embeddings.coset_of(space.cosets[s][0]) in down]
    return make_cm_type(datum, members)


def project_cm_type(t_e: CMType, sub: CMGaloisDatum) -> tuple[int, ...]:
    """Image of ``t_e`` in the embeddings of the subfield ``sub``."""
    space = t_e.datum.embeddings
    return tuple(sorted({sub.embeddings.coset_of(space.cosets[s][0]) for s in t_e.members}))


def real_subfield(datum: CMGaloisDatum) -> Subgroup:
    """Fixing group of the maximal totally real subfield, ``<H, rho>``."""
    return subgroup_closure(datum.group, list(datum.fixing.members) + [datum.rho])


def closure_index_over_real_closure(datum: CMGaloisDatum) -> int:
    """``[Ebar : Fbar]`` for ``F`` the real subfield and bars Galois closures."""
    return real_subfield(datum).core().order
