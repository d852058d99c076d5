"""Realizing effective CM Hodge structures inside cohomology of CM abelian varieties.

An effective ``phi`` of weight ``n`` is written as a sum of ``n`` indicator
functions of CM-types by repeatedly peeling one CM-type off.  If the layers
are ``T_1, .., T_n`` and ``A_i`` has CM-type ``T_i``, the structure sits in
the Kunneth component ``H^1(A_1) x .. x H^1(A_n)`` of ``H^n(A_1 x .. x A_n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cmfield import CMType, NotACMType, make_cm_type
from .hodge import HodgeTypeFn, chi, is_effective

__all__ = [
    "ConstructionError",
    "NotEffective",
    "WeightZero",
    "ConstructionRecipe",
    "VerificationReport",
    "peel_cm_type",
    "decompose",
    "verify_recipe",
]


class ConstructionError(ValueError):
    pass


class NotEffective(ConstructionError):
    pass


class WeightZero(ConstructionError):
    pass


@dataclass(frozen=True)
class ConstructionRecipe:
    target: HodgeTypeFn
    layers: tuple[tuple[int, ...], ...]

    @property
    def datum(self):
        return self.target.datum

    @property
    def kunneth(self) -> dict:
        return {"degrees": [1] * len(self.layers)}


@dataclass
class VerificationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, msg: str) -> None:
        self.failures.append(msg)


def peel_cm_type(phi: HodgeTypeFn) -> tuple[CMType, HodgeTypeFn]:
    """Split off one CM-type ``T`` with ``phi(s) >= phi(conj s)`` on ``T``.

    Ties go to the embedding with the smaller index.  The remainder has
    weight ``n - 1`` and stays effective because ``phi >= 1`` on ``T``.
    """
    if phi.weight == 0:
        raise WeightZero("nothing to peel from a weight-zero structure")
    if not is_effective(phi):
        raise NotEffective(f"phi = {list(phi.values)} has negative values")
    d = phi.datum
    v = phi.values
    members = []
    for s, t in d.conj_pairs:
        members.append(s if v[s] >= v[t] else t)
    T = CMType(d, tuple(sorted(members)))
    ind = T.indicator
    psi = HodgeTypeFn(d, phi.weight - 1, tuple(a - b for a, b in zip(v, ind)))
    return T, psi


def decompose(phi: HodgeTypeFn) -> ConstructionRecipe:
    if not is_effective(phi):
        raise NotEffective(f"phi = {list(phi.values)} has negative values")
    layers = []
    psi = phi
    while psi.weight > 0:
        T, psi = peel_cm_type(psi)
        assert is_effective(psi)
        layers.append(T.members)
    return ConstructionRecipe(phi, tuple(layers))


def verify_recipe(phi: HodgeTypeFn, recipe: ConstructionRecipe) -> VerificationReport:
    """Check independently that the layers are CM-types summing to ``phi``."""
    report = VerificationReport()
    d = phi.datum
    if not d.same_field(recipe.target.datum):
        report.fail("recipe targets a different field")
        return report
    if recipe.target.values != phi.values or recipe.target.weight != phi.weight:
        report.fail("recipe target differs from phi")
    if len(recipe.layers) != phi.weight:
        report.fail(f"{len(recipe.layers)} layers for weight {phi.weight}")
    total = [0] * d.degree
    for i, layer in enumerate(recipe.layers):
        try:
            T = make_cm_type(d, layer)
        except NotACMType as exc:
            report.fail(f"layer {i}: {exc}")
            continue
        for s, x in enumerate(chi(T).values):
            total[s] += x
    if report.ok and tuple(total) != phi.values:
        report.fail(f"layers sum to {total}, expected {list(phi.values)}")
    return report
