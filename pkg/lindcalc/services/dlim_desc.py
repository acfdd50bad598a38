"""Direct-limit descriptors and the dual-integrability semi-decision.

``M^*`` is integrable exactly when, for each ``i``, only finitely many simple
rank-``i`` modules ``N`` have ``Hom(N, M) ≠ 0``. The procedure probes the
isotypic types of ``M_j`` restricted to rank ``i`` over a finite window of
``(i, j)`` pairs; the built-in families are additionally certified by their
closed-form type counts.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Sequence
from enum import Enum

from lindcalc.models.descriptor import (
    DescriptorKind,
    DirectSystemDescriptor,
    SpinorLabel,
    SpinorSequence,
    TypeLabel,
)
from lindcalc.models.ranked import RankedWeight
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services.branching import restrict, restrict_mult
from lindcalc.services.char_oracle import minimal_rank, truncate
from lindcalc.services.errors import DescriptorRangeError, InadmissibleRankError
from lindcalc.services.weights import norm, sub_labels

logger = logging.getLogger(__name__)

ProbePair = tuple[int, int]


class Verdict(Enum):
    BOUNDED_TYPES = "BoundedTypes"
    GROWING_TYPES = "GrowingTypes"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


def window_pairs(low: int, high: int) -> list[ProbePair]:
    """All probe pairs ``low <= i < j <= high``."""
    if low < 1 or high <= low:
        raise ValueError(f"window needs 1 <= low < high, got {low}..{high}")
    return list(itertools.combinations(range(low, high + 1), 2))


def parse_window(text: str) -> list[ProbePair]:
    """Parse ``"a..b"`` into :func:`window_pairs`."""
    low, sep, high = text.strip().partition("..")
    if not sep:
        raise ValueError(f"windows are written 'a..b', got '{text}'")
    try:
        return window_pairs(int(low), int(high))
    except ValueError as exc:
        raise ValueError(f"Invalid window '{text}': {exc}") from None


def _sympower_weight(j: int) -> RankedWeight:
    return RankedWeight(Family.SL, j, (j,) + (0,) * (j - 1))


def sl_type(weight: RankedWeight) -> RankedWeight:
    """Representative of ``weight`` up to a power of the determinant.

    Among the shifts with a zero coordinate, the one of least absolute size
    wins, ties going to the lexicographically larger representative.
    """
    candidates = {tuple(c - shift for c in weight.coords) for shift in weight.coords}
    best = max(candidates, key=lambda coords: (-sum(map(abs, coords)), coords))
    return RankedWeight(weight.family, weight.rank, best)


def _restricted_types(weights: Iterable[RankedWeight], i: int) -> frozenset[TypeLabel]:
    types: set[TypeLabel] = set()
    for w in weights:
        constituents = restrict(w, i)
        if w.family is Family.SL:
            types.update(sl_type(c) for c in constituents)
        else:
            types.update(constituents)
    return frozenset(types)


def types_at(desc: DirectSystemDescriptor, i: int, j: int) -> frozenset[TypeLabel]:
    """Distinct rank-``i`` simple types occurring in ``M_j``.

    sl types are counted over the special linear subalgebra, one
    :func:`sl_type` per class of gl weights differing by the determinant.

    Spinor stages restrict symbolically: each half-spin module of rank ``j``
    restricts to the sum of both half-spin modules one rank down.

    Raises:
        InadmissibleRankError: ``i >= j`` or ``i < 1``
        DescriptorRangeError: the descriptor has no stage at ``j``
    """
    if i < 1 or i >= j:
        raise InadmissibleRankError(f"types_at needs 1 <= i < j, got i={i}, j={j}")
    if desc.kind is DescriptorKind.SPINOR:
        return frozenset({SpinorLabel(i, 1), SpinorLabel(i, 2)})
    if desc.kind is DescriptorKind.SYMPOWER:
        return _restricted_types([_sympower_weight(j)], i)
    if desc.kind is DescriptorKind.STABLE:
        assert desc.label is not None
        if j < minimal_rank(desc.label):
            raise DescriptorRangeError(
                f"{desc.describe()} has no stage at rank {j} "
                f"(needs rank >= {minimal_rank(desc.label)})"
            )
        return _restricted_types([truncate(desc.label, j)], i)
    stage = desc.stage(j)
    if stage is None:
        ranks = [s.rank for s in desc.stages]
        raise DescriptorRangeError(f"{desc.describe()} has no stage at rank {j}; stages: {ranks}")
    return _restricted_types(stage.weights, i)


def settled(desc: DirectSystemDescriptor, i: int, j: int) -> bool:
    """Whether a stable label has reached its closed-form type count at ``(i, j)``.

    That takes ``i >= minimal_rank(λ)``, so distinct contained labels stay
    distinct types, and ``j >= i + |λ|``, so each of them has been reached.
    Other descriptors are settled everywhere.
    """
    if desc.kind is not DescriptorKind.STABLE:
        return True
    assert desc.label is not None
    return i >= minimal_rank(desc.label) and j >= i + norm(desc.label)


def closed_form_type_count(desc: DirectSystemDescriptor, i: int, j: int) -> int | None:
    """Type count known in closed form, or ``None``.

    Symmetric powers have ``j + 1`` types (one at ``i = 1``, where sl is zero),
    spinors two, and a settled stable label ``λ`` one type per label contained
    in ``λ``. Explicit descriptors and unsettled stable pairs give ``None``.
    """
    if desc.kind is DescriptorKind.SYMPOWER:
        return 1 if i == 1 else j + 1
    if desc.kind is DescriptorKind.SPINOR:
        return 2
    if desc.kind is DescriptorKind.STABLE and settled(desc, i, j):
        assert desc.label is not None
        return len(sub_labels(desc.label))
    return None


_CLOSED_FORM_VERDICTS = {
    DescriptorKind.SYMPOWER: Verdict.GROWING_TYPES,
    DescriptorKind.SPINOR: Verdict.BOUNDED_TYPES,
    DescriptorKind.STABLE: Verdict.BOUNDED_TYPES,
}


def window_verdict(desc: DirectSystemDescriptor, window: Sequence[ProbePair]) -> Verdict:
    """The verdict supported by the window data alone.

    Only settled pairs are probed. Probes are grouped by ``i``; groups with a
    single probe carry no trend. Every trend constant means bounded; every
    trend nondecreasing with at least one strictly increasing means growing.
    """
    groups: dict[int, list[int]] = {}
    for i, j in sorted(set(window)):
        if settled(desc, i, j):
            groups.setdefault(i, []).append(len(types_at(desc, i, j)))
    trends = [counts for counts in groups.values() if len(counts) > 1]
    if not trends:
        return Verdict.INCONCLUSIVE
    if all(len(set(counts)) == 1 for counts in trends):
        return Verdict.BOUNDED_TYPES
    steps = [list(itertools.pairwise(counts)) for counts in trends]
    if all(a <= b for pairs in steps for a, b in pairs) and any(
        all(a < b for a, b in pairs) for pairs in steps
    ):
        return Verdict.GROWING_TYPES
    return Verdict.INCONCLUSIVE


def dual_integrable_verdict(
    desc: DirectSystemDescriptor, window: Sequence[ProbePair]
) -> Verdict:
    """Semi-decide whether ``M^*`` is integrable.

    Built-in families answer with their certified closed-form verdict; explicit
    descriptors answer with what the window shows.

    Raises:
        ValueError: empty window
    """
    if not window:
        raise ValueError("window must contain at least one probe pair")
    observed = window_verdict(desc, window)
    certified = _CLOSED_FORM_VERDICTS.get(desc.kind)
    if certified is None:
        if observed is Verdict.INCONCLUSIVE:
            logger.warning("window %s is inconclusive for %s", list(window), desc.describe())
        return observed
    if observed is not Verdict.INCONCLUSIVE and observed is not certified:
        logger.warning(
            "window data suggests %s for %s; certified verdict is %s",
            observed,
            desc.describe(),
            certified,
        )
    return certified


def spinor_equiv(t: SpinorSequence, t_prime: SpinorSequence) -> bool:
    """``S(t) ≅ S(t')``: the sequences agree from some index on."""
    return t.tail == t_prime.tail


def mult_one_check(lam: ThetaWeight, ranks: Sequence[int]) -> bool:
    """``dim Hom(V_λⁱ, V_λʲ) == 1`` for every probed pair ``i < j``.

    Raises:
        InadmissibleRankError: a rank below :func:`minimal_rank`
    """
    needed = minimal_rank(lam)
    bad = sorted(r for r in ranks if r < needed)
    if bad:
        raise InadmissibleRankError(f"{lam} needs ranks >= {needed}, got {bad}")
    for i, j in itertools.combinations(sorted(set(ranks)), 2):
        mult = restrict_mult(lam, i, lam, j)
        if mult != 1:
            logger.debug("V_%s at rank %d occurs %d times at rank %d", lam, i, mult, j)
            return False
    return True
