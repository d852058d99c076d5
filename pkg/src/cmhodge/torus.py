"""Dimensions of Mumford-Tate and Hodge tori by exact ranks of Galois orbits.

For a CM structure ``phi`` the Mumford-Tate torus has cocharacter space
spanned by the Galois orbit of ``phi``; the Hodge torus by the orbit of
``2 phi - n``, whose entries are the exponents ``p - q`` of the circle
action.  All ranks are computed over the integers without division.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cmfield import CMGaloisDatum, CMType, factor_action
from .hodge import HodgeTypeFn, chi

__all__ = [
    "DatumNotAProduct",
    "OrbitLattice",
    "exact_rank",
    "orbit_lattice",
    "mt_lattice",
    "hodge_lattice",
    "mt_dimension",
    "hodge_dimension",
    "is_nondegenerate",
    "product_factorization_check",
]


class DatumNotAProduct(ValueError):
    pass


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            a = m[i][col]
            row_i, row_p = m[i], m[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_p[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


@dataclass(frozen=True)
class OrbitLattice:
    datum: CMGaloisDatum
    generators: tuple[tuple[int, ...], ...]
    rank: int


def _orbit(perms: Sequence[Sequence[int]], vector: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    # (g.v)(s) = v(g^-1 s), i.e. the entry at s moves to g(s).
    seen = []
    found = set()
    for perm in perms:
        w = [0] * len(vector)
        for s, x in enumerate(vector):
            w[perm[s]] = x
        w = tuple(w)
        if w not in found:
            found.add(w)
            seen.append(w)
    return tuple(sorted(seen, reverse=True))


def orbit_lattice(datum: CMGaloisDatum, vector: Sequence[int]) -> OrbitLattice:
    """Lattice spanned by the Galois orbit of an integer vector on embeddings."""
    gens = _orbit(datum.embeddings.action_table, vector)
    return OrbitLattice(datum, gens, exact_rank(gens))


def mt_lattice(phi: HodgeTypeFn) -> OrbitLattice:
    return orbit_lattice(phi.datum, phi.values)


def hodge_lattice(phi: HodgeTypeFn) -> OrbitLattice:
    return orbit_lattice(phi.datum, [2 * v - phi.weight for v in phi.values])


def mt_dimension(datum: CMGaloisDatum, phi: HodgeTypeFn) -> int:
    _check(datum, phi)
    return mt_lattice(phi).rank


def hodge_dimension(datum: CMGaloisDatum, phi: HodgeTypeFn) -> int:
    _check(datum, phi)
    return hodge_lattice(phi).rank


def _check(datum: CMGaloisDatum, phi: HodgeTypeFn) -> None:
    if not datum.same_field(phi.datum):
        raise ValueError("type-function belongs to a different datum")


def is_nondegenerate(datum: CMGaloisDatum, cm_type: CMType) -> bool:
    """Whether the abelian variety of this CM-type has Hodge group of full dimension."""
    return hodge_dimension(datum, chi(cm_type)) == datum.degree // 2


def combined_hodge_dimension(datum: CMGaloisDatum, cm_types: Sequence[CMType]) -> int:
    """Hodge-torus dimension of ``A_1 x .. x A_m`` over a product datum."""
    if not datum.factors:
        raise DatumNotAProduct("datum was not built by product_datum")
    if len(cm_types) != len(datum.factors):
        raise ValueError(f"need {len(datum.factors)} CM-types, got {len(cm_types)}")
    vector = []
    for f, t in zip(datum.factors, cm_types):
        if not f.same_field(t.datum):
            raise ValueError("CM-type does not belong to its factor")
        vector.extend(2 * x - 1 for x in t.indicator)
    _, perms = factor_action(datum)
    return exact_rank(_orbit(perms, vector))


def product_factorization_check(datum: CMGaloisDatum, cm_types: Sequence[CMType]) -> bool:
    """Does the Hodge group of the product split as the product of the factors' groups?"""
    combined = combined_hodge_dimension(datum, cm_types)
    return combined == sum(hodge_dimension(t.datum, chi(t)) for t in cm_types)
