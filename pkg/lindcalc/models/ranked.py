"""Finite-rank weights and formal characters.

Finite ranks realize the three families as
``gl(n)`` (sl), ``so(2n+1)`` (o) and ``sp(2n)`` (sp).
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from lindcalc.models.weights import Family

Exponent = tuple[int, ...]


def dominant_representative(family: Family, exponent: Exponent) -> Exponent:
    """The dominant element of the Weyl-group orbit of ``exponent``."""
    if family is Family.SL:
        return tuple(sorted(exponent, reverse=True))
    return tuple(sorted((abs(e) for e in exponent), reverse=True))


def is_dominant(family: Family, coords: Exponent) -> bool:
    if any(a < b for a, b in zip(coords, coords[1:], strict=False)):
        return False
    return family is Family.SL or all(c >= 0 for c in coords)


@dataclass(frozen=True, order=True)
class RankedWeight:
    """Dominant integral weight of the rank-``n`` algebra, i.e. the module ``V_λⁿ``.

    Attributes:
        family: sl (as gl(n)), o (as so(2n+1)) or sp (as sp(2n))
        rank: n
        coords: highest weight in the standard ε-basis, length n
    """

    family: Family
    rank: int
    coords: Exponent

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise TypeError(f"rank must be an integer, got {type(self.rank).__name__}")
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        coords = tuple(self.coords)
        if len(coords) != self.rank:
            raise ValueError(f"coords must have length {self.rank}, got {coords}")
        if not is_dominant(self.family, coords):
            kind = "weakly decreasing" if self.family is Family.SL else "a partition"
            raise ValueError(f"{self.family.value} coords must be {kind}, got {coords}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def trivial(cls, family: Family, rank: int) -> RankedWeight:
        return cls(family, rank, (0,) * rank)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coords)

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}({self.to_text()})"


@dataclass(frozen=True)
class FormalCharacter:
    """Finitely supported map exponent vector → positive multiplicity.

    Absent keys mean multiplicity zero. ``terms`` is read-only after construction.
    """

    family: Family
    rank: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Exponent, int] = {}
        for key, mult in self.terms.items():
            exponent = tuple(key)
            if len(exponent) != self.rank:
                raise ValueError(f"exponent {exponent} does not have length {self.rank}")
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"multiplicities must be nonnegative integers, got {mult}")
            if mult:
                clean[exponent] = mult
        object.__setattr__(self, "terms", MappingProxyType(clean))

    def __getitem__(self, exponent: Exponent) -> int:
        return self.terms.get(tuple(exponent), 0)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return (
            self.family is other.family
            and self.rank == other.rank
            and dict(self.terms) == dict(other.terms)
        )

    def __hash__(self) -> int:
        return hash((self.family, self.rank, frozenset(self.terms.items())))

    @property
    def mass(self) -> int:
        """Total multiplicity (the dimension of the module)."""
        return sum(self.terms.values())

    def dominant_terms(self) -> dict[Exponent, int]:
        return {e: m for e, m in self.terms.items() if is_dominant(self.family, e)}

    def is_weyl_invariant(self) -> bool:
        """Check invariance under the simple reflections.

        Adjacent transpositions generate the permutations; for o/sp a sign
        change of the last coordinate completes the generating set.
        """
        for exponent, mult in self.terms.items():
            for i in range(self.rank - 1):
                swapped = list(exponent)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self[tuple(swapped)] != mult:
                    return False
            if self.family is not Family.SL:
                flipped = (*exponent[:-1], -exponent[-1])
                if self[flipped] != mult:
                    return False
        return True

    def to_dict(self) -> dict[str, str]:
        """Decimal-string rendering keyed by comma-joined exponents, sorted descending."""
        return {
            ",".join(str(e) for e in exponent): str(self.terms[exponent])
            for exponent in sorted(self.terms, reverse=True)
        }
