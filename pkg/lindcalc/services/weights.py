"""Norm, dual-socle involution and bounded enumeration of Θ."""

from __future__ import annotations

from functools import lru_cache

from lindcalc.models.weights import Family, ThetaWeight, partitions_of


def norm(weight: ThetaWeight) -> int:
    """Total number of boxes ``|λ|``."""
    return weight.plus.size + weight.minus.size


def star(weight: ThetaWeight) -> ThetaWeight:
    """Label of ``(V_λ)_*``: swap the diagrams for sl, identity for o/sp."""
    if weight.family is Family.SL:
        return ThetaWeight(Family.SL, weight.minus, weight.plus)
    return weight


def enumerate_theta(family: Family, k: int) -> tuple[ThetaWeight, ...]:
    """All labels of norm at most ``k`` in canonical order.

    The order is by norm, then lexicographically on the (plus, minus) part
    sequences.

    Raises:
        ValueError: negative ``k``
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return _enumerate(family, k)


@lru_cache(maxsize=64)
def _enumerate(family: Family, k: int) -> tuple[ThetaWeight, ...]:
    labels: list[ThetaWeight] = []
    for total in range(k + 1):
        if family is Family.SL:
            for plus_size in range(total + 1):
                for plus in partitions_of(plus_size):
                    for minus in partitions_of(total - plus_size):
                        labels.append(ThetaWeight(family, plus, minus))
        else:
            labels.extend(ThetaWeight(family, p) for p in partitions_of(total))
    return tuple(sorted(labels, key=ThetaWeight.sort_key))


def contained_in(inner: ThetaWeight, outer: ThetaWeight) -> bool:
    """Componentwise diagram containment of labels."""
    return outer.plus.contains(inner.plus) and outer.minus.contains(inner.minus)


def sub_labels(weight: ThetaWeight) -> tuple[ThetaWeight, ...]:
    """All labels componentwise contained in ``weight``."""
    return tuple(w for w in enumerate_theta(weight.family, norm(weight)) if contained_in(w, weight))


__all__ = [
    "contained_in",
    "enumerate_theta",
    "norm",
    "star",
    "sub_labels",
]
