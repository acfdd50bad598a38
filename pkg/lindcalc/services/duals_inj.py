"""Cardinal arithmetic, injective-hull profiles and the lind/Tens predicates.

Profiles are label-level shadows of modules: no vector space is ever built.
Non-socle layers of an injective hull ``I_λ`` carry the uniform multiplicity
``ℶ₁``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from lindcalc.config import DEFAULT_STABLE_MARGIN
from lindcalc.models.cardinal import ONE, ZERO, Cardinality
from lindcalc.models.profile import Layer, LoewyProfile
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services.errors import BoundExceededError, FamilyMismatchError, NotSemisimpleError
from lindcalc.services.theta_order import theta_k
from lindcalc.services.weights import norm, star

logger = logging.getLogger(__name__)

BETH_1 = Cardinality.beth(1)
BETH_2 = Cardinality.beth(2)

# Largest finite n for which 2^n is written out exactly.
MAX_FINITE_EXPONENT = 4096


def card_add(a: Cardinality, b: Cardinality) -> Cardinality:
    return a + b


def card_mul(a: Cardinality, b: Cardinality) -> Cardinality:
    return a * b


def card_power(a: Cardinality) -> Cardinality:
    """``2^a``; ``ℶ_{k+1}`` is the cardinality of the power set of a ``ℶ_k``-set.

    Raises:
        BoundExceededError: ``a`` is finite and above ``MAX_FINITE_EXPONENT``
    """
    if a.is_finite and a.value > MAX_FINITE_EXPONENT:
        raise BoundExceededError(
            f"2^{a.value} is too large to write out (finite exponents up to {MAX_FINITE_EXPONENT})"
        )
    return a.power_set()


def inj_profile(lam: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN) -> LoewyProfile:
    """Socle layers of the injective hull ``I_λ = ((V_λ)_*)^*``.

    Layer 0 is ``V_λ`` with multiplicity one; layer ``k`` holds every
    ``μ ∈ Θᵏ(λ)`` with multiplicity ``ℶ₁``. The length is ``|λ| + 1``.
    """
    layers: list[Layer] = [{lam: ONE}]
    for k in range(1, norm(lam) + 1):
        labels = theta_k(lam, k, margin)
        if not labels:
            break
        layers.append(dict.fromkeys(labels, BETH_1))
    logger.debug("I_%s has %d socle layers", lam, len(layers))
    return LoewyProfile(lam.family, tuple(layers))


def loewy_length(profile: LoewyProfile) -> int:
    return len(profile.layers)


def theta_support(profile: LoewyProfile) -> frozenset[ThetaWeight]:
    """All labels occurring in some layer."""
    return frozenset(w for layer in profile.layers for w in layer)


def lind_level(profile: LoewyProfile) -> int:
    """Smallest ``k`` with the profile in ``lindᵏ``: the largest norm in the support."""
    return max((norm(w) for w in theta_support(profile)), default=0)


@dataclass(frozen=True)
class ClosureVerdict:
    """Outcome of :func:`family_closure_check`.

    ``level`` is the uniform lind level when ``closed`` holds, else ``None``.
    """

    closed: bool
    level: int | None
    reason: str = ""

    def to_dict(self) -> dict[str, object]:
        return {
            "closed": self.closed,
            "level": None if self.level is None else str(self.level),
            "reason": self.reason,
        }


@dataclass(frozen=True)
class InfiniteFamily:
    """An infinite family of modules given only by a bound on the lind level.

    ``level_bound`` is ``None`` when the levels are declared unbounded, e.g.
    ``{V_{λ_j}}`` with ``|λ_j| = j``.
    """

    family: Family
    level_bound: int | None
    description: str = ""


def family_closure_check(
    profiles: Sequence[LoewyProfile] | InfiniteFamily,
) -> ClosureVerdict:
    """Whether a family of profiles stays inside one ``lindᵏ``.

    A finite list always does, at its maximal level. An infinite family does
    exactly when a uniform level bound is supplied.

    Raises:
        FamilyMismatchError: profiles of different families
    """
    if isinstance(profiles, InfiniteFamily):
        if profiles.level_bound is None:
            return ClosureVerdict(
                False, None, "levels are unbounded; the socle filtration of the sum is infinite"
            )
        return ClosureVerdict(True, profiles.level_bound, "uniform level bound supplied")
    families = {p.family for p in profiles}
    if len(families) > 1:
        names = ", ".join(sorted(f.value for f in families))
        raise FamilyMismatchError(f"closure check needs one family, got {names}")
    level = max((lind_level(p) for p in profiles), default=0)
    return ClosureVerdict(True, level, f"finite family of {len(profiles)} profiles")


def dual_socle_profile(profile: LoewyProfile) -> LoewyProfile:
    """Profile of ``M_*`` for semisimple ``M``: every label starred, same cardinals.

    Raises:
        NotSemisimpleError: more than one layer
    """
    if not profile.is_semisimple:
        raise NotSemisimpleError(
            f"dualization needs a semisimple profile, got Loewy length {len(profile)}"
        )
    layers = tuple({star(w): m for w, m in layer.items()} for layer in profile.layers)
    return LoewyProfile(profile.family, layers)


def _natural_label(family: Family) -> ThetaWeight:
    if family is Family.SL:
        return ThetaWeight.sl((1,))
    return ThetaWeight.single(family, (1,))


def natural_dual_profile(family: Family, conatural: bool = False) -> LoewyProfile:
    """``V^*`` (socle ``V_*``), or ``(V_*)^*`` (socle ``V``) when ``conatural``.

    The top is a trivial module of cardinality ``ℶ₁``.
    """
    socle = _natural_label(family)
    if not conatural:
        socle = star(socle)
    return LoewyProfile(family, ({socle: ONE}, {ThetaWeight.trivial(family): BETH_1}))


def natural_double_dual_profile(family: Family) -> LoewyProfile:
    """``V^{**} ≅ (V_*)^* ⊕ T`` with ``T`` trivial of cardinality ``ℶ₂``."""
    trivial = ThetaWeight.trivial(family)
    return LoewyProfile(
        family, ({_natural_label(family): ONE, trivial: BETH_2}, {trivial: BETH_1})
    )


def natural_product_profile(family: Family, card: Cardinality) -> LoewyProfile:
    """``∏_F V`` over an index set of cardinality ``card``.

    A finite product is semisimple. An infinite one has socle ``V`` and top a
    trivial module, both of multiplicity ``2^card``.
    """
    if card == ZERO:
        return LoewyProfile.zero(family)
    label = _natural_label(family)
    if card.is_finite:
        return LoewyProfile(family, ({label: card},))
    big = card_power(card)
    return LoewyProfile(family, ({label: big}, {ThetaWeight.trivial(family): big}))


def natural_sum_hull_profile(family: Family, card: Cardinality) -> LoewyProfile:
    """Injective hull of ``⊕_F V`` for an index set of cardinality ``card``.

    Socle ``V`` with multiplicity ``card``; the trivial top has
    cardinality ``max(card·ℶ₁, 2^card)``.
    """
    if card == ZERO:
        return LoewyProfile.zero(family)
    top = max(card_mul(card, BETH_1), card_power(card))
    return LoewyProfile(
        family, ({_natural_label(family): card}, {ThetaWeight.trivial(family): top})
    )


def cardinality_bound(profile: LoewyProfile) -> Cardinality:
    """Largest multiplicity in the profile (``0`` for the zero profile)."""
    return max((m for layer in profile.layers for m in layer.values()), default=ZERO)


def in_tens(profile: LoewyProfile) -> bool:
    """Membership in the cardinality-bounded subcategory.

    Every multiplicity here is finite or some ``ℶ_k``, so this always holds.
    """
    return isinstance(cardinality_bound(profile), Cardinality)
