"""The partial order on Θ, chain lengths, the layer sets Θᵏ(λ) and Ext¹.

``μ ≤ λ`` when, for all sufficiently large ``i``, some ``j > i`` has
``Hom_{g_i}(V_μⁱ, V_λʲ) ≠ 0``. The quantifier is realized by a fixed stable
probe ``i = N_stable(μ, λ)``, ``j = i + max(1, |λ|)``; a nonzero ``window``
repeats the probe at ``i + 1, ..., i + window`` and insists on agreement.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from lindcalc.config import DEFAULT_STABLE_MARGIN, DEFAULT_WINDOW
from lindcalc.models.cardinal import Cardinality
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services.branching import restrict_mult
from lindcalc.services.char_oracle import stable_rank
from lindcalc.services.errors import FamilyMismatchError, StabilizationError
from lindcalc.services.weights import enumerate_theta, norm

logger = logging.getLogger(__name__)


class Incomparable(Enum):
    """Result of :func:`chain_length` for a pair with ``μ ≰ λ``."""

    INCOMPARABLE = "incomparable"

    def __str__(self) -> str:
        return self.value


INCOMPARABLE = Incomparable.INCOMPARABLE


def _check_family(mu: ThetaWeight, lam: ThetaWeight) -> None:
    if mu.family is not lam.family:
        raise FamilyMismatchError(
            f"cannot compare {mu.family.value} label {mu} with {lam.family.value} label {lam}"
        )


def probe_ranks(
    mu: ThetaWeight, lam: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN
) -> tuple[int, int]:
    """The stable probe ``(i, j)`` used by :func:`leq`."""
    i = stable_rank(lam.family, norm(mu), norm(lam), margin=margin)
    return i, i + max(1, norm(lam))


@lru_cache(maxsize=65536)
def _leq(mu: ThetaWeight, lam: ThetaWeight, margin: int, window: int) -> bool:
    i, j = probe_ranks(mu, lam, margin)
    verdicts = {restrict_mult(mu, i + s, lam, j + s) > 0 for s in range(window + 1)}
    if len(verdicts) != 1:
        raise StabilizationError(
            f"probes for {mu} <= {lam} disagree across ranks {i}..{i + window}"
        )
    return verdicts.pop()


def leq(
    mu: ThetaWeight,
    lam: ThetaWeight,
    margin: int = DEFAULT_STABLE_MARGIN,
    window: int = DEFAULT_WINDOW,
) -> bool:
    """``μ ≤ λ`` in the branching-defined order.

    Raises:
        FamilyMismatchError: labels of different families
        StabilizationError: widened probes disagree
    """
    _check_family(mu, lam)
    return _leq(mu, lam, margin, window)


def lt(mu: ThetaWeight, lam: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN) -> bool:
    return mu != lam and leq(mu, lam, margin)


@dataclass(frozen=True)
class DownSet:
    """Snapshot of ``{ν : ν ≤ λ}`` with its strict relation."""

    top: ThetaWeight
    elements: tuple[ThetaWeight, ...]
    above: dict[ThetaWeight, tuple[ThetaWeight, ...]]

    def covers(self) -> list[tuple[ThetaWeight, ThetaWeight]]:
        """Covering pairs ``(ν, ν')`` with nothing strictly in between."""
        pairs: list[tuple[ThetaWeight, ThetaWeight]] = []
        for low in self.elements:
            ups = set(self.above[low])
            for high in self.above[low]:
                if not any(high in self.above[mid] for mid in ups if mid != high):
                    pairs.append((low, high))
        return pairs


@lru_cache(maxsize=1024)
def _down_set(lam: ThetaWeight, margin: int) -> DownSet:
    # every ν ≤ λ has norm ≤ |λ|
    elements = tuple(
        nu for nu in enumerate_theta(lam.family, norm(lam)) if leq(nu, lam, margin)
    )
    above = {
        low: tuple(high for high in elements if high != low and leq(low, high, margin))
        for low in elements
    }
    return DownSet(lam, elements, above)


def down_set(lam: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN) -> DownSet:
    return _down_set(lam, margin)


def chain_length(
    lam: ThetaWeight, mu: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN
) -> int | Incomparable:
    """Number of elements in a longest chain ``μ < ... < λ``, both ends included.

    ``chain_length(λ, λ) == 1``; a pair with ``μ ≰ λ`` yields :data:`INCOMPARABLE`.
    """
    _check_family(mu, lam)
    if not leq(mu, lam, margin):
        return INCOMPARABLE
    poset = down_set(lam, margin)
    longest: dict[ThetaWeight, int] = {}

    def walk(node: ThetaWeight) -> int:
        # longest chain from node up to λ
        if node == lam:
            return 1
        if node not in longest:
            longest[node] = 1 + max(walk(up) for up in poset.above[node])
        return longest[node]

    return walk(mu)


def theta_k(
    lam: ThetaWeight, k: int, margin: int = DEFAULT_STABLE_MARGIN
) -> tuple[ThetaWeight, ...]:
    """``Θᵏ(λ) = {μ < λ : l(λ, μ) ≥ k + 1}`` in canonical order.

    The definition nests: ``Θᵏ⁺¹(λ) ⊆ Θᵏ(λ)``.

    Raises:
        ValueError: ``k < 1``
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    result = []
    for mu in down_set(lam, margin).elements:
        if mu == lam:
            continue
        length = chain_length(lam, mu, margin)
        if isinstance(length, int) and length >= k + 1:
            result.append(mu)
    return tuple(result)


def ext1_nonzero(
    mu: ThetaWeight, lam: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN
) -> bool:
    """``Ext¹(V_μ, V_λ) ≠ 0`` exactly when ``μ < λ``."""
    _check_family(mu, lam)
    return lt(mu, lam, margin)


def ext1_dim(
    mu: ThetaWeight, lam: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN
) -> Cardinality:
    """``ℶ₁`` (the cardinality of ``2^ℤ``) for ``μ < λ``, otherwise 0."""
    return Cardinality.beth(1) if ext1_nonzero(mu, lam, margin) else Cardinality.finite(0)


def is_single_block(family: Family, k: int, margin: int = DEFAULT_STABLE_MARGIN) -> bool:
    """Every nontrivial label of norm ≤ k extends the trivial module."""
    trivial = ThetaWeight.trivial(family)
    return all(
        ext1_nonzero(trivial, lam, margin)
        for lam in enumerate_theta(family, k)
        if not lam.is_trivial
    )


def hasse_diagram(
    lam: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN
) -> list[tuple[ThetaWeight, ThetaWeight]]:
    """Covering pairs of ``{ν : ν ≤ λ}``, lower element first."""
    return down_set(lam, margin).covers()


def hasse_dot(lam: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN) -> str:
    """Hasse diagram of ``{ν : ν ≤ λ}`` in DOT format, edges pointing upward."""
    poset = down_set(lam, margin)
    lines = [f'digraph "{lam.family.value}:{lam}" {{', "  rankdir=BT;"]
    lines.extend(f'  "{node}" [label="{node}"];' for node in poset.elements)
    lines.extend(f'  "{low}" -> "{high}";' for low, high in poset.covers())
    lines.append("}")
    return "\n".join(lines) + "\n"
