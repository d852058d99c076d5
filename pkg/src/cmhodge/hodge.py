"""CM Hodge structures as integer type-functions on embeddings.

A Hodge structure of weight ``n`` that is one-dimensional over a CM-field
``E`` is the same thing as a function ``phi`` on the embeddings with
``phi(s) + phi(conj s) = n``; the embedding ``s`` then spans a line of Hodge
type ``(phi(s), phi(conj s))``.  No vector space is stored.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .cmfield import CMGaloisDatum, CMType

__all__ = [
    "HodgeError",
    "WeightRelationViolated",
    "DatumMismatch",
    "HodgeTypeFn",
    "validate_phi",
    "chi",
    "hodge_numbers",
    "tate_twist",
    "is_effective",
    "max_effective_twist",
    "tensor",
    "translate",
]


class HodgeError(ValueError):
    pass


class WeightRelationViolated(HodgeError):
    def __init__(self, sigma: int, message: str):
        super().__init__(message)
        self.sigma = sigma


class DatumMismatch(HodgeError):
    pass


@dataclass(frozen=True)
class HodgeTypeFn:
    datum: CMGaloisDatum
    weight: int
    values: tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        return self.values[s]

    def __len__(self) -> int:
        return len(self.values)


def validate_phi(datum: CMGaloisDatum, weight: int, values: Sequence[int]) -> HodgeTypeFn:
    values = tuple(int(v) for v in values)
    if len(values) != datum.degree:
        raise HodgeError(f"expected {datum.degree} values, got {len(values)}")
    conj = datum.conj
    for s in range(datum.degree):
        if values[s] + values[conj[s]] != weight:
            raise WeightRelationViolated(
                s,
                f"phi({s}) + phi({conj[s]}) = {values[s] + values[conj[s]]}, expected {weight}",
            )
    return HodgeTypeFn(datum, int(weight), values)


def chi(t: CMType) -> HodgeTypeFn:
    """Weight-one type-function of a CM-type (its indicator)."""
    return HodgeTypeFn(t.datum, 1, t.indicator)


def hodge_numbers(phi: HodgeTypeFn) -> dict[tuple[int, int], int]:
    counts = Counter((p, phi.weight - p) for p in phi.values)
    return dict(sorted(counts.items(), reverse=True))


def tate_twist(phi: HodgeTypeFn, m: int) -> HodgeTypeFn:
    """``V(m)``: bidegrees drop by ``(m, m)``."""
    return HodgeTypeFn(phi.datum, phi.weight - 2 * m, tuple(v - m for v in phi.values))


def is_effective(phi: HodgeTypeFn) -> bool:
    return all(v >= 0 for v in phi.values)


def max_effective_twist(phi: HodgeTypeFn) -> int:
    return min(phi.values)


def tensor(phi: HodgeTypeFn, psi: HodgeTypeFn) -> HodgeTypeFn:
    if not phi.datum.same_field(psi.datum):
        raise DatumMismatch("type-functions live on different fields")
    return HodgeTypeFn(
        phi.datum, phi.weight + psi.weight, tuple(a + b for a, b in zip(phi.values, psi.values))
    )


def translate(phi: HodgeTypeFn, g: int) -> HodgeTypeFn:
    """Galois translate: ``(g.phi)(s) = phi(g^-1 s)``."""
    d = phi.datum
    gi = d.group.inv(g)
    return HodgeTypeFn(d, phi.weight, tuple(phi.values[d.act(gi, s)] for s in range(d.degree)))
