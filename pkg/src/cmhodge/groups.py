"""Finite groups given by Cayley tables, their subgroups and left coset spaces.

Elements are the integers ``0 .. order-1`` with ``0`` the identity, and
``table[a][b]`` is the product ``a*b``.  Everything here is immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "GroupError",
    "BadShape",
    "NoIdentity",
    "NotInvertible",
    "NotAssociative",
    "GroupTooLarge",
    "FiniteGroup",
    "Subgroup",
    "CosetSpace",
    "MAX_ORDER",
    "make_group",
    "group_from_permutations",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "subgroup_closure",
    "left_cosets",
    "act",
]

MAX_ORDER = 10_000


class GroupError(ValueError):
    pass


class BadShape(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NotInvertible(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class GroupTooLarge(GroupError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for a, row in enumerate(self.table):
            inv[a] = row.index(0)
        return tuple(inv)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def is_central(self, a: int) -> bool:
        row = self.table[a]
        return all(row[b] == self.table[b][a] for b in self.elements)

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.is_central(a) for a in self.elements)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def issubset(self, other: Subgroup) -> bool:
        return self._member_set <= other._member_set

    def is_normal(self) -> bool:
        G = self.parent
        return all(
            G.mul(G.mul(g, h), G.inv(g)) in self
            for g in G.elements
            for h in self.members
        )

    def normalizer(self) -> Subgroup:
        G = self.parent
        members = [
            g
            for g in G.elements
            if all(G.mul(G.mul(g, h), G.inv(g)) in self for h in self.members)
        ]
        return Subgroup(G, tuple(members))

    def core(self) -> Subgroup:
        """Largest normal subgroup of the parent contained in this one."""
        common = set(self.members)
        for g in self.parent.elements:
            common &= set(self.conjugate(g).members)
        return Subgroup(self.parent, tuple(sorted(common)))

    def conjugate(self, g: int) -> Subgroup:
        """The subgroup ``g H g^-1``."""
        G = self.parent
        gi = G.inv(g)
        return Subgroup(G, tuple(sorted({G.mul(G.mul(g, h), gi) for h in self.members})))


@dataclass(frozen=True)
class CosetSpace:
    """Left cosets ``gH``, ordered by their smallest member."""

    group: FiniteGroup
    subgroup: Subgroup
    cosets: tuple[tuple[int, ...], ...]
    rep: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cosets)

    def coset_of(self, g: int) -> int:
        return self.rep[g]

    def act(self, g: int, c: int) -> int:
        """Index of ``g * (coset c)``."""
        return self.rep[self.group.mul(g, self.cosets[c][0])]

    @cached_property
    def action_table(self) -> tuple[tuple[int, ...], ...]:
        """``action_table[g][c] == act(g, c)``."""
        return tuple(
            tuple(self.act(g, c) for c in range(len(self.cosets)))
            for g in self.group.elements
        )

    def stabilizer(self, c: int) -> Subgroup:
        return Subgroup(
            self.group, tuple(g for g in self.group.elements if self.act(g, c) == c)
        )


def make_group(table: Sequence[Sequence[int]], *, check_associative: bool = True) -> FiniteGroup:
    """Validate a Cayley table and wrap it as a :class:`FiniteGroup`.

    Axioms are checked in the order shape, identity, inverses, associativity;
    the first failure is raised.  Associativity uses Light's test against a
    greedily chosen generating set, so the cost is ``O(n^2 * #gens)``.
    """
    n = len(table)
    if n == 0:
        raise BadShape("empty table")
    if n > MAX_ORDER:
        raise GroupTooLarge(f"order {n} exceeds cap {MAX_ORDER}")
    rows = []
    for i, row in enumerate(table):
        row = tuple(int(x) for x in row)
        if len(row) != n:
            raise BadShape(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not 0 <= x < n:
                raise BadShape(f"entry {x} in row {i} out of range 0..{n - 1}")
        rows.append(row)
    ident = tuple(range(n))
    if rows[0] != ident or any(rows[a][0] != a for a in range(n)):
        raise NoIdentity("element 0 is not a two-sided identity")
    for a in range(n):
        if len(set(rows[a])) != n:
            raise NotInvertible(f"row {a} is not a permutation")
        if len({rows[b][a] for b in range(n)}) != n:
            raise NotInvertible(f"column {a} is not a permutation")
    for a in range(n):
        b = rows[a].index(0)
        if rows[b][a] != 0:
            raise NotInvertible(f"element {a} has no two-sided inverse")
    G = FiniteGroup(n, tuple(rows))
    if check_associative:
        _check_associative(G)
    return G


def _check_associative(G: FiniteGroup) -> None:
    t = G.table
    gens = _greedy_generators(G)
    for g in gens:
        for x in G.elements:
            xg = t[x][g]
            for y in G.elements:
                if t[xg][y] != t[x][t[g][y]]:
                    raise NotAssociative(f"({x}*{g})*{y} != {x}*({g}*{y})")
    # Light's test is only sound if gens really generate the magma.
    if len(_closure(G, gens)) != G.order:
        raise NotAssociative("table is not generated by its elements associatively")


def _closure(G: FiniteGroup, gens: Iterable[int]) -> set[int]:
    seen = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.table[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _greedy_generators(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    for a in G.elements:
        if a not in span:
            gens.append(a)
            span = _closure(G, gens)
            if len(span) == G.order:
                break
    return gens


def group_from_permutations(degree: int, gens: Sequence[Sequence[int]]) -> FiniteGroup:
    """Permutation group generated by ``gens`` (images of ``0..degree-1``).

    Elements are numbered by lexicographic order of their image tuples, so the
    identity gets index 0.  The product is ``(a*b)(i) = a(b(i))``.
    """
    ident = tuple(range(degree))
    perms = []
    for p in gens:
        p = tuple(int(x) for x in p)
        if sorted(p) != list(ident):
            raise BadShape(f"{list(p)} is not a permutation of 0..{degree - 1}")
        perms.append(p)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for p in perms:
                y = tuple(x[i] for i in p)  # x after p
                if y not in seen:
                    if len(seen) >= MAX_ORDER:
                        raise GroupTooLarge(f"group order exceeds cap {MAX_ORDER}")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    elems = sorted(seen)
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[tuple(a[i] for i in b)] for b in elems] for a in elems]
    return make_group(table, check_associative=False)


def cyclic_group(n: int) -> FiniteGroup:
    """Cyclic group where element ``i`` is the ``i``-th power of a generator."""
    return make_group([[(a + b) % n for b in range(n)] for a in range(n)], check_associative=False)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular ``n``-gon, acting on its vertices."""
    r = [(i + 1) % n for i in range(n)]
    s = [(-i) % n for i in range(n)]
    return group_from_permutations(n, [r, s])


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product; element ``(g_1, .., g_m)`` gets the mixed-radix index
    with the first factor most significant."""
    if not groups:
        return make_group([[0]])
    orders = [G.order for G in groups]
    tuples = list(itertools.product(*(range(k) for k in orders)))
    index = {t: i for i, t in enumerate(tuples)}
    table = [
        [index[tuple(G.table[x][y] for G, x, y in zip(groups, a, b))] for b in tuples]
        for a in tuples
    ]
    return make_group(table, check_associative=False)


def product_components(groups: Sequence[FiniteGroup], g: int) -> tuple[int, ...]:
    """Inverse of the mixed-radix numbering used by :func:`direct_product`."""
    out = []
    for G in reversed(groups):
        g, r = divmod(g, G.order)
        out.append(r)
    return tuple(reversed(out))


def subgroup_closure(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.order:
            raise IndexError(f"element {g} out of range")
    return Subgroup(G, tuple(sorted(_closure(G, gens))))


def left_cosets(G: FiniteGroup, H: Subgroup) -> CosetSpace:
    rep = [-1] * G.order
    cosets = []
    for g in G.elements:
        if rep[g] >= 0:
            continue
        coset = tuple(sorted(G.table[g][h] for h in H.members))
        for x in coset:
            rep[x] = len(cosets)
        cosets.append(coset)
    return CosetSpace(G, H, tuple(cosets), tuple(rep))


def act(G: FiniteGroup, g: int, c: int, space: CosetSpace) -> int:
    """Left multiplication of ``g`` on coset ``c`` of ``space``."""
    if space.group != G:
        raise ValueError("coset space belongs to a different group")
    return space.act(g, c)
