"""Irreducible Hodge constituents of ``H^n(A^k)`` and domination certificates.

``A`` is a simple CM abelian variety given by a datum and a CM-type.  Over
``C``, ``H^n(A^k)`` is the ``n``-th exterior power of ``k`` copies of
``H^1(A)``, so its torus characters are exponent vectors ``m`` on the
embeddings with ``sum(m) == n`` and ``0 <= m[s] <= k``, each occurring
``prod(binom(k, m[s]))`` times.

Two characters agree on the Hodge group exactly when their difference pairs
to zero with every vector in the Galois orbit of ``2 chi - 1``; the tuple of
those pairings is the *signature* of ``m`` and labels an
:class:`ExponentClass`.  Galois orbits of classes are the rational
irreducible constituents.

For each constituent :func:`dominate` computes its CM-field (the stabilizer
of a class), its type-function, the largest effective Tate twist, a
construction recipe for the twist over that field, and a realization of the
recipe by CM-types of ``E``.  :func:`verify_certificate` re-derives all of
this from scratch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cmfield import (
    CMGaloisDatum,
    CMType,
    NotACMType,
    enumerate_cm_types,
    lift_cm_type,
    make_cm_type,
    project_cm_type,
)
from .construct import (
    ConstructionRecipe,
    VerificationReport,
    decompose,
    verify_recipe,
)
from .groups import Subgroup, subgroup_closure
from .hodge import HodgeTypeFn, max_effective_twist, tate_twist, validate_phi
from .torus import _orbit

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "TateOddWeight",
    "CertificateError",
    "ExponentClass",
    "TateMarker",
    "Constituent",
    "DominationCertificate",
    "count_exponent_vectors",
    "exponent_vectors",
    "enumerate_constituents",
    "constituent_field",
    "constituent_phi",
    "dominate",
    "verify_certificate",
]

DEFAULT_BUDGET = 5_000_000
SEARCH_NODES = 200_000


class BudgetExceeded(RuntimeError):
    def __init__(self, count: int, budget: int):
        super().__init__(f"{count} exponent vectors exceed the budget of {budget}")
        self.count = count
        self.budget = budget


class TateOddWeight(ValueError):
    pass


class CertificateError(RuntimeError):
    """A freshly built certificate failed verification (a bug)."""


@dataclass(frozen=True)
class ExponentClass:
    datum: CMGaloisDatum
    cm_type: CMType
    representative: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    signature: tuple[int, ...]
    multiplicity: int

    @property
    def weight(self) -> int:
        return sum(self.representative)

    @property
    def is_tate(self) -> bool:
        return not any(self.signature)


@dataclass(frozen=True)
class TateMarker:
    """The trivial structure ``Q(-p)`` of weight ``2p``."""

    weight: int
    p: int


@dataclass(frozen=True)
class Constituent:
    datum: CMGaloisDatum
    cm_type: CMType
    classes: tuple[ExponentClass, ...]  # the class used for field and phi comes first
    field_fixing: Subgroup
    phi: HodgeTypeFn | TateMarker
    weight: int

    @property
    def is_tate(self) -> bool:
        return isinstance(self.phi, TateMarker)

    @property
    def representative(self) -> ExponentClass:
        return self.classes[0]

    @property
    def multiplicity(self) -> int:
        return self.classes[0].multiplicity

    @property
    def contained_in_e(self) -> bool:
        return self.datum.fixing.issubset(self.field_fixing)


@dataclass(frozen=True)
class DominationCertificate:
    """Witness that a twist of ``constituent`` has an ``(n', 0)`` class in a product.

    ``lifted_layers[i]`` is a CM-type on ``G / lift_fixing`` and
    ``anchors[i]`` an embedding of that field; the twisted structure is the
    ideal of ``H^1(B_1) x .. x H^1(B_N)`` through the tuple of anchors.  When
    ``lift_fixing`` is the fixing group of ``E`` the ``B_i`` have CM by ``E``.
    """

    constituent: Constituent
    twist: int
    recipe: ConstructionRecipe | None
    lifted_layers: tuple[tuple[int, ...], ...]
    anchors: tuple[int, ...]
    lift_fixing: Subgroup
    verified: bool = False

    @property
    def realized_over_e(self) -> bool:
        return self.lift_fixing.members == self.constituent.datum.fixing.members

    @property
    def twisted_weight(self) -> int:
        return self.constituent.weight - 2 * self.twist


def count_exponent_vectors(degree: int, n: int, k: int) -> int:
    """Number of ``m`` in ``[0, k]^degree`` with ``sum(m) == n``."""
    ways = [1] + [0] * n
    for _ in range(degree):
        new = [0] * (n + 1)
        for total, w in enumerate(ways):
            if w:
                for x in range(min(k, n - total) + 1):
                    new[total + x] += w
        ways = new
    return ways[n]


def exponent_vectors(degree: int, n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors in decreasing lexicographic order."""
    if degree == 0:
        if n == 0:
            yield ()
        return
    rest_cap = (degree - 1) * k
    for x in range(min(k, n), max(0, n - rest_cap) - 1, -1):
        for tail in exponent_vectors(degree - 1, n - x, k):
            yield (x,) + tail


def _hodge_generators(cm_type: CMType) -> tuple[tuple[int, ...], ...]:
    v = [2 * x - 1 for x in cm_type.indicator]
    return _orbit(cm_type.datum.embeddings.action_table, v)


def _signature(gens: Sequence[Sequence[int]], m: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(m, gen)) for gen in gens)


def _stabilizer(datum: CMGaloisDatum, gens, m: Sequence[int]) -> tuple[int, ...]:
    sig = _signature(gens, m)
    return tuple(g for g in datum.group.elements if _signature(gens, _translate(datum, g, m)) == sig)


def _translate(datum: CMGaloisDatum, g: int, m: Sequence[int]) -> tuple[int, ...]:
    perm = datum.embeddings.action_table[g]
    out = [0] * len(m)
    for s, x in enumerate(m):
        out[perm[s]] = x
    return tuple(out)


def _multiplicity(m: Sequence[int], k: int) -> int:
    return math.prod(math.comb(k, x) for x in m)


def _classes(datum: CMGaloisDatum, cm_type: CMType, n: int, k: int) -> list[ExponentClass]:
    gens = _hodge_generators(cm_type)
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for m in exponent_vectors(datum.degree, n, k):
        groups.setdefault(_signature(gens, m), []).append(m)
    return [
        ExponentClass(datum, cm_type, ms[0], tuple(ms), sig, sum(_multiplicity(m, k) for m in ms))
        for sig, ms in groups.items()
    ]


def constituent_field(datum: CMGaloisDatum, cls: ExponentClass) -> Subgroup:
    """Fixing group of the CM-field of the constituent through ``cls``.

    This is the stabilizer of the class under Galois; it is all of ``G``
    exactly for Tate classes.
    """
    gens = _hodge_generators(cls.cm_type)
    return Subgroup(datum.group, _stabilizer(datum, gens, cls.representative))


def constituent_phi(
    datum: CMGaloisDatum, cls: ExponentClass, field_fixing: Subgroup
) -> HodgeTypeFn | TateMarker:
    """Type-function of the constituent over its own CM-field.

    The embedding ``gH'`` of the field corresponds to the class of ``g.m``,
    whose lines have Hodge type ``(<g.m, chi>, n - <g.m, chi>)``.
    """
    n = cls.weight
    if field_fixing.order == datum.group.order:
        if n % 2:
            raise TateOddWeight(f"Tate class in odd weight {n}")
        return TateMarker(n, n // 2)
    sub = datum.subfield(field_fixing)
    ind = cls.cm_type.indicator
    values = []
    for coset in sub.embeddings.cosets:
        gm = _translate(datum, coset[0], cls.representative)
        values.append(sum(a * b for a, b in zip(gm, ind)))
    return validate_phi(sub, n, values)


def enumerate_constituents(
    datum: CMGaloisDatum, cm_type: CMType, n: int, k: int, *, budget: int = DEFAULT_BUDGET
) -> list[Constituent]:
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if not datum.same_field(cm_type.datum):
        raise ValueError("CM-type belongs to a different datum")
    count = count_exponent_vectors(datum.degree, n, k)
    if count > budget:
        raise BudgetExceeded(count, budget)

    classes = _classes(datum, cm_type, n, k)
    gens = _hodge_generators(cm_type)
    by_sig = {c.signature: i for i, c in enumerate(classes)}
    G = datum.group
    orbit_of = [-1] * len(classes)
    orbits: list[list[int]] = []
    for i, c in enumerate(classes):
        if orbit_of[i] >= 0:
            continue
        members = sorted(
            {by_sig[_signature(gens, _translate(datum, g, c.representative))] for g in G.elements}
        )
        for j in members:
            orbit_of[j] = len(orbits)
        orbits.append(members)

    H = datum.fixing
    constituents = []
    for members in orbits:
        fields = {j: constituent_field(datum, classes[j]) for j in members}
        # Prefer a conjugate whose field sits inside E.
        rep = next((j for j in members if H.issubset(fields[j])), members[0])
        ordered = [classes[rep]] + [classes[j] for j in members if j != rep]
        phi = constituent_phi(datum, classes[rep], fields[rep])
        constituents.append(Constituent(datum, cm_type, tuple(ordered), fields[rep], phi, n))
    return constituents


def _realize_over_e(
    datum: CMGaloisDatum, cm_type: CMType, psi: HodgeTypeFn, nodes: int | None = None
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]] | None:
    """Search for CM-types and anchors of ``E`` realizing ``psi`` jointly.

    Used when no conjugate of the constituent's field lies in ``E``.  Returns
    ``None`` when nothing is found within ``nodes`` search steps.
    """
    G = datum.group
    sub = psi.datum
    target = [psi.values[sub.embeddings.coset_of(g)] for g in G.elements]
    types = enumerate_cm_types(datum)
    types.sort(key=lambda t: t.members != cm_type.members)
    options = []
    table = datum.embeddings.action_table
    for t in types:
        mem = set(t.members)
        for anchor in range(datum.degree):
            f = tuple(int(table[g][anchor] in mem) for g in G.elements)
            stab = frozenset(g for g in G.elements if table[g][anchor] == anchor)
            options.append((t.members, anchor, f, stab))
    allowed = set(psi.datum.fixing.members)
    N = psi.weight
    budget = [SEARCH_NODES if nodes is None else nodes]

    def dfs(start: int, partial: list[int], chosen: list[int], stab: frozenset) -> list[int] | None:
        if len(chosen) == N:
            return list(chosen) if stab <= allowed else None
        for i in range(start, len(options)):
            budget[0] -= 1
            if budget[0] < 0:
                return None
            f = options[i][2]
            if any(p + x > t for p, x, t in zip(partial, f, target)):
                continue
            chosen.append(i)
            found = dfs(i, [p + x for p, x in zip(partial, f)], chosen, stab & options[i][3])
            chosen.pop()
            if found is not None:
                return found
        return None

    found = dfs(0, [0] * G.order, [], frozenset(G.elements))
    if found is None:
        return None
    return tuple(options[i][0] for i in found), tuple(options[i][1] for i in found)


def _certify(con: Constituent) -> DominationCertificate:
    datum = con.datum
    if con.is_tate:
        r = con.phi.p
        return DominationCertificate(con, r, None, (), (), datum.fixing)
    r = max_effective_twist(con.phi)
    psi = tate_twist(con.phi, r)
    recipe = decompose(psi)
    sub = psi.datum
    if con.contained_in_e:
        layers = tuple(
            lift_cm_type(datum, sub.fixing, make_cm_type(sub, layer)).members for layer in recipe.layers
        )
        return DominationCertificate(con, r, recipe, layers, (0,) * len(layers), datum.fixing)
    found = _realize_over_e(datum, con.cm_type, psi)
    if found is not None:
        return DominationCertificate(con, r, recipe, found[0], found[1], datum.fixing)
    closure = datum.galois_closure
    layers = tuple(
        lift_cm_type(closure, sub.fixing, make_cm_type(sub, layer)).members for layer in recipe.layers
    )
    return DominationCertificate(con, r, recipe, layers, (0,) * len(layers), closure.fixing)


def dominate(
    datum: CMGaloisDatum, cm_type: CMType, n: int, k: int, *, budget: int = DEFAULT_BUDGET
) -> list[DominationCertificate]:
    """One verified certificate per constituent of ``H^n(A^k)``."""
    certs = []
    for con in enumerate_constituents(datum, cm_type, n, k, budget=budget):
        cert = _certify(con)
        report = verify_certificate(cert)
        if not report:
            raise CertificateError("; ".join(report.failures))
        certs.append(
            DominationCertificate(
                cert.constituent, cert.twist, cert.recipe, cert.lifted_layers,
                cert.anchors, cert.lift_fixing, verified=True,
            )
        )
    return certs


def verify_certificate(cert: DominationCertificate) -> VerificationReport:
    """Re-check a certificate from its raw data; failures are collected, not raised."""
    report = VerificationReport()
    con = cert.constituent
    datum = con.datum
    G = datum.group
    cls = con.representative
    n = con.weight

    if sum(cls.representative) != n or any(x < 0 for x in cls.representative):
        report.fail("representative is not an exponent vector of the stated weight")
        return report
    gens = _hodge_generators(con.cm_type)
    sig = _signature(gens, cls.representative)
    if sig != cls.signature:
        report.fail("stored signature does not match the representative")
    stab = _stabilizer(datum, gens, cls.representative)
    if stab != con.field_fixing.members:
        report.fail("field is not the stabilizer of the class")
        return report

    if con.is_tate:
        if any(sig):
            report.fail("Tate marker on a class with nonzero signature")
        if n % 2 or con.phi.p * 2 != n:
            report.fail("Tate marker has the wrong weight")
        if cert.twist * 2 != n:
            report.fail(f"twist {cert.twist} of a Tate class of weight {n}")
        if cert.lifted_layers or cert.anchors:
            report.fail("Tate certificate carries layers")
        return report

    H1 = con.field_fixing
    if datum.rho in H1:
        report.fail("rho fixes the constituent field")
        return report
    sub = datum.subfield(H1)
    phi = con.phi
    if not phi.datum.same_field(sub) or phi.weight != n:
        report.fail("type-function lives on the wrong field or weight")
        return report
    conj = sub.conj
    if any(phi.values[s] + phi.values[conj[s]] != n for s in range(sub.degree)):
        report.fail("type-function violates the weight relation")
    ind = con.cm_type.indicator
    expected = tuple(
        sum(a * b for a, b in zip(_translate(datum, c[0], cls.representative), ind))
        for c in sub.embeddings.cosets
    )
    if expected != phi.values:
        report.fail("type-function does not match the class")
    if cert.twist != min(phi.values):
        report.fail(f"twist {cert.twist} is not the maximal effective twist {min(phi.values)}")
    psi = tate_twist(phi, cert.twist)
    if min(psi.values) != 0:
        report.fail("twisted structure has no (n', 0) class")
    if cert.recipe is None:
        report.fail("missing recipe")
        return report
    for msg in verify_recipe(psi, cert.recipe).failures:
        report.fail(f"recipe: {msg}")

    layers, anchors = cert.lifted_layers, cert.anchors
    if len(layers) != psi.weight or len(anchors) != len(layers):
        report.fail("lifted layers do not match the twisted weight")
        return report
    if subgroup_closure(G, cert.lift_fixing.members).members != cert.lift_fixing.members:
        report.fail("lift_fixing is not a subgroup")
        return report
    try:
        lift = datum.subfield(cert.lift_fixing)
        lifted = [make_cm_type(lift, layer) for layer in layers]
    except (NotACMType, ValueError) as exc:
        report.fail(f"lifted layer is not a CM-type: {exc}")
        return report
    if any(not 0 <= a < lift.degree for a in anchors):
        report.fail("anchor out of range")
        return report
    table = lift.embeddings.action_table
    for g in G.elements:
        total = sum(int(table[g][a] in t) for t, a in zip(lifted, anchors))
        if total != psi.values[sub.embeddings.coset_of(g)]:
            report.fail(f"lifted layers do not realize the twist at group element {g}")
            break
    common = set(G.elements)
    for a in anchors:
        common &= {g for g in G.elements if table[g][a] == a}
    if not common <= set(H1.members):
        report.fail("anchor field does not contain the constituent field")
    if cert.lift_fixing.issubset(H1) and all(a == 0 for a in anchors):
        for t, layer in zip(lifted, cert.recipe.layers):
            if project_cm_type(t, sub) != tuple(layer):
                report.fail("lifted layer does not project to its recipe layer")
                break
    return report
