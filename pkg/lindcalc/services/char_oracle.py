"""Exact finite-rank character arithmetic.

This is the brute-force oracle behind every stable claim. Weight
multiplicities of an irreducible are computed with Freudenthal's recursion
over dominant weights, then spread over Weyl orbits. All arithmetic is on
Python integers (``Fraction`` only inside the Weyl dimension product).
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache

from sympy.utilities.iterables import multiset_permutations

from lindcalc.config import DEFAULT_STABLE_MARGIN
from lindcalc.models.ranked import (
    Exponent,
    FormalCharacter,
    RankedWeight,
    dominant_representative,
)
from lindcalc.models.weights import Family, Partition, ThetaWeight
from lindcalc.services.errors import (
    FamilyMismatchError,
    InadmissibleRankError,
    NotACharacterError,
    RankTooSmallError,
)
from lindcalc.services.weights import norm

logger = logging.getLogger(__name__)

# (index, coefficient) pairs; a positive root touches at most two coordinates.
Root = tuple[tuple[int, int], ...]


def stable_rank(family: Family, *norms: int, margin: int = DEFAULT_STABLE_MARGIN) -> int:
    """Rank at which labels of the given norms are interpreted.

    ``Σ norms + margin`` for sl and ``2·Σ norms + margin`` for o/sp, never below
    the rank every label of those norms can be truncated to.
    """
    total = sum(norms)
    if family is Family.SL:
        return max(total + 1 if total else 1, total + margin)
    return max(1, 2 * total + margin)


def minimal_rank(weight: ThetaWeight) -> int:
    """Smallest rank admitting :func:`truncate`.

    A nontrivial sl truncation keeps at least one zero coordinate between the
    plus and minus parts.
    """
    if weight.family is Family.SL:
        return len(weight.plus) + len(weight.minus) + 1
    return max(1, len(weight.plus))


def truncate(weight: ThetaWeight, n: int) -> RankedWeight:
    """Finite-rank truncation ``V_λⁿ`` of a stable label.

    sl: plus parts, zero padding, then the minus parts negated in reverse.
    o/sp: the padded partition.

    Raises:
        RankTooSmallError: ``n`` is below :func:`minimal_rank`
    """
    needed = minimal_rank(weight)
    if n < needed:
        raise RankTooSmallError(
            f"{weight.family.value} weight {weight} needs rank >= {needed}, got {n}",
            minimal_rank=needed,
        )
    plus = weight.plus.parts
    minus = tuple(-m for m in reversed(weight.minus.parts))
    padding = (0,) * (n - len(plus) - len(minus))
    return RankedWeight(weight.family, n, plus + padding + minus)


def untruncate(weight: RankedWeight) -> ThetaWeight:
    """Read a stable label back off a finite-rank weight."""
    coords = weight.coords
    plus = Partition(tuple(c for c in coords if c > 0))
    if weight.family is not Family.SL:
        return ThetaWeight(weight.family, plus)
    minus = Partition(tuple(-c for c in reversed(coords) if c < 0))
    return ThetaWeight(Family.SL, plus, minus)


def _two_rho(family: Family, n: int) -> Exponent:
    if family is Family.SL:
        return tuple(n - 1 - 2 * i for i in range(n))
    if family is Family.O:
        return tuple(2 * (n - i) - 1 for i in range(n))
    return tuple(2 * (n - i) for i in range(n))


@lru_cache(maxsize=128)
def _positive_roots(family: Family, n: int) -> tuple[Root, ...]:
    roots: list[Root] = []
    for i, j in itertools.combinations(range(n), 2):
        roots.append(((i, 1), (j, -1)))
        if family is not Family.SL:
            roots.append(((i, 1), (j, 1)))
    if family is Family.O:
        roots.extend(((i, 1),) for i in range(n))
    elif family is Family.SP:
        roots.extend(((i, 2),) for i in range(n))
    return tuple(roots)


def dim(weight: RankedWeight) -> int:
    """Weyl dimension of the irreducible with highest weight ``weight``."""
    r = _two_rho(weight.family, weight.rank)
    lam = tuple(2 * c + s for c, s in zip(weight.coords, r, strict=True))
    value = Fraction(1)
    for i, j in itertools.combinations(range(weight.rank), 2):
        value *= Fraction(lam[i] - lam[j], r[i] - r[j])
        if weight.family is not Family.SL:
            value *= Fraction(lam[i] + lam[j], r[i] + r[j])
    if weight.family is not Family.SL:
        for i in range(weight.rank):
            value *= Fraction(lam[i], r[i])
    assert value.denominator == 1, f"non-integral Weyl dimension for {weight}"
    return int(value)


def _dominated(family: Family, lower: Exponent, upper: Exponent) -> bool:
    """``upper - lower`` is a nonnegative combination of simple roots."""
    running = 0
    for a, b in zip(upper, lower, strict=True):
        running += a - b
        if running < 0:
            return False
    if family is Family.SL:
        return running == 0
    if family is Family.SP:
        return running % 2 == 0
    return True


def _shift(exponent: Exponent, root: Root, k: int) -> Exponent:
    values = list(exponent)
    for index, coef in root:
        values[index] += k * coef
    return tuple(values)


def _pair(exponent: Exponent, root: Root) -> int:
    return sum(exponent[index] * coef for index, coef in root)


def _dominant_weights(family: Family, n: int, top: Exponent) -> list[Exponent]:
    """Dominant weights below ``top``, highest first."""
    roots = _positive_roots(family, n)
    seen = {top}
    frontier = [top]
    while frontier:
        nxt: list[Exponent] = []
        for current in frontier:
            for root in roots:
                candidate = dominant_representative(family, _shift(current, root, -1))
                if candidate not in seen and _dominated(family, candidate, top):
                    seen.add(candidate)
                    nxt.append(candidate)
        frontier = nxt
    two_rho = _two_rho(family, n)
    return sorted(
        seen,
        key=lambda mu: (sum((t - m) * s for t, m, s in zip(top, mu, two_rho, strict=True)), mu),
    )


@lru_cache(maxsize=4096)
def _dominant_multiplicities(
    family: Family, n: int, top: Exponent
) -> tuple[tuple[Exponent, int], ...]:
    """Freudenthal's recursion restricted to dominant weights."""
    roots = _positive_roots(family, n)
    two_rho = _two_rho(family, n)

    def casimir(mu: Exponent) -> int:
        # |mu + rho|^2 up to the constant |rho|^2
        return sum(m * m + m * s for m, s in zip(mu, two_rho, strict=True))

    top_value = casimir(top)
    mult: dict[Exponent, int] = {}
    for mu in _dominant_weights(family, n, top):
        if mu == top:
            mult[mu] = 1
            continue
        total = 0
        for root in roots:
            k = 1
            while True:
                shifted = _shift(mu, root, k)
                m = mult.get(dominant_representative(family, shifted))
                if m is None:
                    break
                total += m * _pair(shifted, root)
                k += 1
        denominator = top_value - casimir(mu)
        value, remainder = divmod(2 * total, denominator)
        assert remainder == 0, f"Freudenthal recursion left a remainder at {mu}"
        mult[mu] = value
    logger.debug("dominant multiplicities %s%d%s: %d weights", family.value, n, top, len(mult))
    return tuple(sorted(mult.items(), reverse=True))


def dominant_character(weight: RankedWeight) -> dict[Exponent, int]:
    """Multiplicities of the dominant weights of the irreducible."""
    return dict(_dominant_multiplicities(weight.family, weight.rank, weight.coords))


def _orbit(family: Family, dominant: Exponent) -> Iterable[Exponent]:
    for perm in multiset_permutations(list(dominant)):
        if family is Family.SL:
            yield tuple(perm)
            continue
        nonzero = [i for i, v in enumerate(perm) if v]
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            values = list(perm)
            for index, sign in zip(nonzero, signs, strict=True):
                values[index] *= sign
            yield tuple(values)


def _symmetrize(family: Family, n: int, dominant: Mapping[Exponent, int]) -> FormalCharacter:
    terms: dict[Exponent, int] = {}
    for exponent, mult in dominant.items():
        for image in _orbit(family, exponent):
            terms[image] = mult
    return FormalCharacter(family, n, terms)


@lru_cache(maxsize=1024)
def _character(weight: RankedWeight) -> FormalCharacter:
    return _symmetrize(weight.family, weight.rank, dominant_character(weight))


def char(weight: RankedWeight) -> FormalCharacter:
    """Full character (all weight multiplicities) of the irreducible."""
    return _character(weight)


def _check_compatible(a: FormalCharacter, b: FormalCharacter) -> None:
    if a.family is not b.family or a.rank != b.rank:
        raise FamilyMismatchError(
            f"cannot combine {a.family.value}{a.rank} with {b.family.value}{b.rank}"
        )


def mul(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    """Character of a tensor product: convolution of exponent maps.

    Raises:
        FamilyMismatchError: different family or rank
    """
    _check_compatible(a, b)
    terms: dict[Exponent, int] = {}
    for ea, ma in a.terms.items():
        for eb, mb in b.terms.items():
            key = tuple(x + y for x, y in zip(ea, eb, strict=True))
            terms[key] = terms.get(key, 0) + ma * mb
    return FormalCharacter(a.family, a.rank, terms)


def _dominant_product(
    family: Family, full: Mapping[Exponent, int], dominant: Mapping[Exponent, int]
) -> dict[Exponent, int]:
    """Dominant terms of ``full · W(dominant)`` without expanding the second factor."""
    candidates = {
        dominant_representative(family, tuple(x + y for x, y in zip(a, b, strict=True)))
        for a in full
        for b in dominant
    }
    product: dict[Exponent, int] = {}
    for nu in candidates:
        total = 0
        for a, ma in full.items():
            rest = dominant_representative(family, tuple(x - y for x, y in zip(nu, a, strict=True)))
            mb = dominant.get(rest)
            if mb:
                total += ma * mb
        if total:
            product[nu] = total
    return product


def _peel(family: Family, n: int, dominant: Mapping[Exponent, int]) -> Counter[RankedWeight]:
    """Repeatedly extract the highest dominant term and subtract its irreducible."""
    remaining = dict(dominant)
    result: Counter[RankedWeight] = Counter()
    while remaining:
        top = max(remaining)
        mult = remaining[top]
        if mult < 0:
            raise NotACharacterError(f"negative multiplicity {mult} at {top}")
        weight = RankedWeight(family, n, top)
        result[weight] += mult
        for exponent, m in dominant_character(weight).items():
            left = remaining.get(exponent, 0) - mult * m
            if left < 0:
                raise NotACharacterError(
                    f"subtracting {mult}x{weight} leaves multiplicity {left} at {exponent}"
                )
            if left:
                remaining[exponent] = left
            else:
                remaining.pop(exponent, None)
    return result


def decompose(c: FormalCharacter) -> Counter[RankedWeight]:
    """Irreducible decomposition of a genuine character.

    Raises:
        NotACharacterError: a subtraction step goes negative, or the result
            does not reassemble the total mass (e.g. a non-symmetric input)
    """
    result = _peel(c.family, c.rank, c.dominant_terms())
    if sum(m * dim(w) for w, m in result.items()) != c.mass:
        raise NotACharacterError("input is not invariant under the Weyl group")
    logger.debug(
        "decomposed %s%d character into %d irreducibles", c.family.value, c.rank, len(result)
    )
    return result


def decompose_product(weights: Sequence[RankedWeight]) -> Counter[RankedWeight]:
    """Decomposition of the tensor product of the given irreducibles.

    Equal to ``decompose(mul(char(w1), mul(char(w2), ...)))``; only the
    dominant part of the running product is ever stored.

    Raises:
        FamilyMismatchError: weights of different family or rank
        ValueError: empty input
    """
    if not weights:
        raise ValueError("decompose_product needs at least one weight")
    family, n = weights[0].family, weights[0].rank
    for w in weights:
        if w.family is not family or w.rank != n:
            raise FamilyMismatchError(f"cannot tensor {w} with {family.value}{n} weights")
    ordered = sorted(weights, key=dim, reverse=True)
    running = dominant_character(ordered[0])
    for w in ordered[1:]:
        running = _dominant_product(family, char(w).terms, running)
    return _peel(family, n, running)


def restrict_character(c: FormalCharacter, i: int) -> FormalCharacter:
    """Restrict to the rank-``i`` subalgebra by dropping the trailing variables.

    Raises:
        InadmissibleRankError: ``i`` outside ``[1, rank]``
    """
    if not 1 <= i <= c.rank:
        raise InadmissibleRankError(f"cannot restrict rank {c.rank} character to rank {i}")
    terms: dict[Exponent, int] = {}
    for exponent, mult in c.terms.items():
        key = exponent[:i]
        terms[key] = terms.get(key, 0) + mult
    return FormalCharacter(c.family, i, terms)


def natural(family: Family, n: int) -> RankedWeight:
    """Highest weight of the natural module at rank n."""
    return RankedWeight(family, n, (1,) + (0,) * (n - 1))


def conatural(family: Family, n: int) -> RankedWeight:
    if family is not Family.SL:
        return natural(family, n)
    return RankedWeight(family, n, (0,) * (n - 1) + (-1,))


def stable_rank_for(*labels: ThetaWeight, margin: int = DEFAULT_STABLE_MARGIN) -> int:
    """:func:`stable_rank` for a collection of labels of one family."""
    if not labels:
        raise ValueError("stable_rank_for needs at least one label")
    family = labels[0].family
    return stable_rank(family, *(norm(w) for w in labels), margin=margin)
