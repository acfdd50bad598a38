"""Composition factors and Loewy layers of ``T^{p,q}``; stable tensor products.

Factors are read off the character oracle at the stable rank. The layer of a
factor ``V_μ`` of ``T^{p,q}`` is ``(p + q - |μ|) / 2``: socle constituents
have full degree, and every contraction lowers the degree by two and pushes
the constituent one layer up.
"""

from __future__ import annotations

import logging
from collections import Counter

from lindcalc.config import DEFAULT_STABLE_MARGIN, DEFAULT_TPQ_BOUND
from lindcalc.models.cardinal import Cardinality
from lindcalc.models.profile import LoewyProfile
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services.char_oracle import (
    conatural,
    decompose_product,
    natural,
    stable_rank,
    truncate,
    untruncate,
)
from lindcalc.services.errors import (
    BoundExceededError,
    FamilyMismatchError,
    LayerParityError,
    NotAFactorError,
)
from lindcalc.services.weights import norm

logger = logging.getLogger(__name__)

Factors = tuple[tuple[ThetaWeight, int], ...]


def _normalize(family: Family, p: int, q: int) -> tuple[int, int]:
    """``V ≅ V_*`` for o/sp, so ``T^{p,q}`` is ``T^{p+q,0}`` there."""
    if p < 0 or q < 0:
        raise ValueError(f"p and q must be nonnegative, got p={p}, q={q}")
    return (p, q) if family is Family.SL else (p + q, 0)


def _check_bound(degree: int, bound: int) -> None:
    if degree > bound:
        raise BoundExceededError(f"degree {degree} exceeds the configured bound {bound}")


def _sorted_factors(decomposition: Counter[ThetaWeight]) -> Factors:
    return tuple(sorted(decomposition.items(), key=lambda item: item[0].sort_key(), reverse=True))


def tpq_factors_at(family: Family, p: int, q: int, rank: int) -> Factors:
    """Composition factors of ``T^{p,q}`` computed at an explicit rank."""
    p, q = _normalize(family, p, q)
    if p + q == 0:
        return ((ThetaWeight.trivial(family), 1),)
    weights = [natural(family, rank)] * p + [conatural(family, rank)] * q
    decomposition = decompose_product(weights)
    logger.debug("T^{%d,%d} over %s%d: %d factors", p, q, family.value, rank, len(decomposition))
    result: Counter[ThetaWeight] = Counter()
    for weight, mult in decomposition.items():
        result[untruncate(weight)] += mult
    return _sorted_factors(result)


def tpq_factors(
    family: Family,
    p: int,
    q: int,
    bound: int = DEFAULT_TPQ_BOUND,
    margin: int = DEFAULT_STABLE_MARGIN,
) -> Factors:
    """Composition factors of ``T^{p,q} = V^{⊗p} ⊗ V_*^{⊗q}`` with finite multiplicities.

    Raises:
        BoundExceededError: ``p + q`` above ``bound``
    """
    _check_bound(p + q, bound)
    return tpq_factors_at(family, p, q, stable_rank(family, p + q, margin=margin))


def tpq_layer(
    mu: ThetaWeight,
    p: int,
    q: int,
    bound: int = DEFAULT_TPQ_BOUND,
    margin: int = DEFAULT_STABLE_MARGIN,
) -> int:
    """Socle layer of the factor ``V_μ`` of ``T^{p,q}`` (0 is the socle).

    Raises:
        NotAFactorError: ``V_μ`` does not occur
        LayerParityError: ``p + q - |μ|`` is odd
    """
    factors = dict(tpq_factors(mu.family, p, q, bound, margin))
    if mu not in factors:
        raise NotAFactorError(f"{mu} is not a composition factor of T^{{{p},{q}}}")
    gap = p + q - norm(mu)
    if gap < 0 or gap % 2:
        raise LayerParityError(f"factor {mu} of T^{{{p},{q}}} has norm of the wrong parity")
    return gap // 2


def tpq_loewy(
    family: Family,
    p: int,
    q: int,
    bound: int = DEFAULT_TPQ_BOUND,
    margin: int = DEFAULT_STABLE_MARGIN,
) -> int:
    """Loewy length of ``T^{p,q}``, one more than the highest layer of a factor.

    The count always equals ``min(p, q) + 1`` for sl and ``⌊(p+q)/2⌋ + 1`` for o/sp.

    Raises:
        BoundExceededError: ``p + q`` above ``bound``
        LayerParityError: the factor layers disagree with that count
    """
    _check_bound(p + q, bound)
    _normalize(family, p, q)
    expected = min(p, q) + 1 if family is Family.SL else (p + q) // 2 + 1
    length = 1 + max((p + q - norm(w)) // 2 for w, _ in tpq_factors(family, p, q, bound, margin))
    if length != expected:
        raise LayerParityError(f"T^{{{p},{q}}} has {length} socle layers, expected {expected}")
    return length


def tpq_profile(
    family: Family,
    p: int,
    q: int,
    bound: int = DEFAULT_TPQ_BOUND,
    margin: int = DEFAULT_STABLE_MARGIN,
) -> LoewyProfile:
    """Loewy profile of ``T^{p,q}`` with finite multiplicities."""
    layers: dict[int, dict[ThetaWeight, Cardinality]] = {}
    for weight, mult in tpq_factors(family, p, q, bound, margin):
        gap = p + q - norm(weight)
        if gap % 2:
            raise LayerParityError(f"factor {weight} of T^{{{p},{q}}} has norm of the wrong parity")
        layers.setdefault(gap // 2, {})[weight] = Cardinality.finite(mult)
    return LoewyProfile(family, tuple(layers[k] for k in sorted(layers)))


def tensor_factors_at(lam: ThetaWeight, mu: ThetaWeight, rank: int) -> Factors:
    """Composition factors of ``V_λ ⊗ V_μ`` computed at an explicit rank."""
    if lam.family is not mu.family:
        raise FamilyMismatchError(
            f"cannot tensor {lam.family.value} label {lam} with {mu.family.value} label {mu}"
        )
    decomposition = decompose_product([truncate(lam, rank), truncate(mu, rank)])
    result: Counter[ThetaWeight] = Counter()
    for weight, mult in decomposition.items():
        result[untruncate(weight)] += mult
    return _sorted_factors(result)


def tensor_factors(
    lam: ThetaWeight,
    mu: ThetaWeight,
    bound: int = DEFAULT_TPQ_BOUND,
    margin: int = DEFAULT_STABLE_MARGIN,
) -> Factors:
    """Stable composition factors of ``V_λ ⊗ V_μ``.

    Raises:
        FamilyMismatchError: labels of different families
        BoundExceededError: ``|λ| + |μ|`` above ``bound``
    """
    if lam.family is not mu.family:
        raise FamilyMismatchError(
            f"cannot tensor {lam.family.value} label {lam} with {mu.family.value} label {mu}"
        )
    _check_bound(norm(lam) + norm(mu), bound)
    return tensor_factors_at(lam, mu, stable_rank(lam.family, norm(lam), norm(mu), margin=margin))
