"""Classical branching rules and restriction multiplicities.

One step lowers the rank by one:
    gl(n) ⊃ gl(n-1)          interlacing, multiplicity free
    so(2n+1) ⊃ so(2n-1)      through so(2n); multiplicity = number of middle rows
    sp(2n) ⊃ sp(2n-2)        double interlacing; multiplicity = number of middle rows
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from functools import lru_cache

from lindcalc.models.ranked import Exponent, RankedWeight
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services.char_oracle import truncate
from lindcalc.services.errors import FamilyMismatchError, InadmissibleRankError

logger = logging.getLogger(__name__)


def _interlacing(upper: Exponent) -> list[range]:
    """Ranges for a row of length ``len(upper) - 1`` squeezed between ``upper``."""
    return [range(upper[k + 1], upper[k] + 1) for k in range(len(upper) - 1)]


def _gl_step(coords: Exponent) -> Counter[Exponent]:
    return Counter(itertools.product(*_interlacing(coords)))


def _so_step(coords: Exponent) -> Counter[Exponent]:
    n = len(coords)
    # so(2n+1) -> so(2n): last entry may be negative
    middle_ranges = _interlacing(coords) + [range(-coords[-1], coords[-1] + 1)]
    result: Counter[Exponent] = Counter()
    for middle in itertools.product(*middle_ranges):
        # so(2n) -> so(2n-1)
        ranges = [range(middle[k + 1], middle[k] + 1) for k in range(n - 2)]
        ranges.append(range(abs(middle[-1]), middle[-2] + 1))
        result.update(itertools.product(*ranges))
    return result


def _sp_step(coords: Exponent) -> Counter[Exponent]:
    n = len(coords)
    middle_ranges = _interlacing(coords) + [range(0, coords[-1] + 1)]
    result: Counter[Exponent] = Counter()
    for middle in itertools.product(*middle_ranges):
        ranges = [range(middle[k + 1], middle[k] + 1) for k in range(n - 1)]
        result.update(itertools.product(*ranges))
    return result


_STEPS = {Family.SL: _gl_step, Family.O: _so_step, Family.SP: _sp_step}


@lru_cache(maxsize=8192)
def _branch(weight: RankedWeight) -> tuple[tuple[RankedWeight, int], ...]:
    step = _STEPS[weight.family](weight.coords)
    return tuple(
        sorted(
            ((RankedWeight(weight.family, weight.rank - 1, c), m) for c, m in step.items()),
            reverse=True,
        )
    )


def branch(weight: RankedWeight) -> Counter[RankedWeight]:
    """Restriction of ``V_wⁿ`` to the rank ``n-1`` subalgebra.

    Raises:
        InadmissibleRankError: rank 1 input
    """
    if weight.rank < 2:
        raise InadmissibleRankError(f"cannot branch rank-1 weight {weight}")
    return Counter(dict(_branch(weight)))


@lru_cache(maxsize=8192)
def _restrict(weight: RankedWeight, i: int) -> tuple[tuple[RankedWeight, int], ...]:
    if weight.rank == i:
        return ((weight, 1),)
    logger.debug("descending %s to rank %d", weight, i)
    total: Counter[RankedWeight] = Counter()
    for child, mult in _branch(weight):
        for grandchild, m in _restrict(child, i):
            total[grandchild] += mult * m
    return tuple(sorted(total.items(), reverse=True))


def restrict(weight: RankedWeight, i: int) -> Counter[RankedWeight]:
    """Composite restriction of ``V_wʲ`` down to rank ``i``.

    Intermediate layers are memoized per (weight, target rank).

    Raises:
        InadmissibleRankError: ``i`` outside ``[1, rank]``
    """
    if not 1 <= i <= weight.rank:
        raise InadmissibleRankError(f"cannot restrict {weight} to rank {i}")
    return Counter(dict(_restrict(weight, i)))


def _same_sl_weight(a: Exponent, b: Exponent) -> bool:
    """gl weights differing by a multiple of the determinant agree on sl."""
    shifts = {x - y for x, y in zip(a, b, strict=True)}
    return len(shifts) == 1


def restrict_mult(mu: ThetaWeight, i: int, lam: ThetaWeight, j: int) -> int:
    """``dim Hom_{g_i}(V_μⁱ, V_λʲ)``.

    For sl the count is taken over the special linear subalgebra, so gl
    constituents that differ from ``V_μⁱ`` by a power of the determinant count too.

    Raises:
        FamilyMismatchError: labels from different families
        InadmissibleRankError: ``i >= j``
        RankTooSmallError: a truncation is not admissible
    """
    if mu.family is not lam.family:
        raise FamilyMismatchError(f"cannot compare {mu.family.value} and {lam.family.value} labels")
    if i >= j:
        raise InadmissibleRankError(f"restriction needs i < j, got i={i}, j={j}")
    target = truncate(mu, i)
    constituents = restrict(truncate(lam, j), i)
    if lam.family is not Family.SL:
        return constituents.get(target, 0)
    return sum(m for w, m in constituents.items() if _same_sl_weight(w.coords, target.coords))
