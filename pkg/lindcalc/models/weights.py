"""Partitions and stable simple-tensor-module labels."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from lindcalc.services.errors import InvalidWeightError

EMPTY_SIDE = "-"


class Family(Enum):
    """The three classical families of finitary simple Lie algebras."""

    SL = "sl"
    O = "o"  # noqa: E741
    SP = "sp"

    @classmethod
    def parse(cls, text: str) -> Family:
        """Parse a family name case-insensitively.

        Raises:
            ValueError: unknown family name
        """
        try:
            return cls(text.strip().lower())
        except ValueError:
            choices = ", ".join(f.value for f in cls)
            raise ValueError(f"Unknown family: '{text}'. Choose one of: {choices}") from None


@dataclass(frozen=True, order=True)
class Partition:
    """A Young diagram given by its weakly decreasing row lengths.

    Attributes:
        parts: positive row lengths, longest first. ``()`` is the zero partition.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"parts must be integers, got {type(p).__name__}")
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:], strict=False)):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def contains(self, other: Partition) -> bool:
        """Diagram containment ``other ⊆ self``."""
        if len(other) > len(self):
            return False
        return all(b <= a for a, b in zip(self.parts, other.parts, strict=False))

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else EMPTY_SIDE

    @classmethod
    def from_sequence(cls, values: list[int] | tuple[int, ...]) -> Partition:
        """Build a partition from a weakly decreasing sequence, dropping zeros."""
        if any(v < 0 for v in values):
            raise ValueError(f"partition entries must be nonnegative, got {tuple(values)}")
        return cls(tuple(v for v in values if v > 0))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"2,1"``; ``"-"``, ``"0"`` and ``""`` denote the empty diagram.

        Raises:
            InvalidWeightError: not a comma list of weakly decreasing nonnegative integers
        """
        cleaned = text.strip()
        if cleaned in ("", EMPTY_SIDE):
            return cls()
        try:
            values = [int(chunk) for chunk in cleaned.split(",")]
        except ValueError:
            raise InvalidWeightError(f"Invalid partition: '{text}'") from None
        try:
            return cls.from_sequence(values)
        except ValueError as e:
            raise InvalidWeightError(f"Invalid partition '{text}': {e}") from None

    def __str__(self) -> str:
        return self.to_text()


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` with parts at most ``max_part``, lexicographically ascending."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    cap = n if max_part is None else min(n, max_part)

    def build(remaining: int, largest: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        out: list[tuple[int, ...]] = []
        for first in range(1, min(remaining, largest) + 1):
            out.extend((first, *rest) for rest in build(remaining - first, first))
        return out

    return sorted(Partition(p) for p in build(n, cap))


@dataclass(frozen=True)
class ThetaWeight:
    """Label of a simple tensor module ``V_λ``.

    For ``sl`` the label is a pair of diagrams ``(plus, minus)``; ``minus`` holds
    the negated trailing coefficients of the stabilized highest weight. For
    ``o``/``sp`` the label is the single diagram ``plus`` and ``minus`` stays empty.
    """

    family: Family
    plus: Partition = field(default_factory=Partition)
    minus: Partition = field(default_factory=Partition)

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            raise TypeError(f"family must be a Family, got {type(self.family).__name__}")
        if self.family is not Family.SL and self.minus:
            raise ValueError(
                f"{self.family.value} labels carry a single partition, got minus={self.minus}"
            )

    @classmethod
    def sl(cls, plus: tuple[int, ...] = (), minus: tuple[int, ...] = ()) -> ThetaWeight:
        return cls(Family.SL, Partition(plus), Partition(minus))

    @classmethod
    def single(cls, family: Family, part: tuple[int, ...] = ()) -> ThetaWeight:
        return cls(family, Partition(part))

    @classmethod
    def trivial(cls, family: Family) -> ThetaWeight:
        return cls(family)

    @property
    def part(self) -> Partition:
        """The single diagram of an ``o``/``sp`` label."""
        return self.plus

    @property
    def is_trivial(self) -> bool:
        return not self.plus and not self.minus

    def sort_key(self) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        """Canonical order: by norm, then lexicographically on (plus, minus)."""
        return (self.plus.size + self.minus.size, self.plus.parts, self.minus.parts)

    def to_text(self) -> str:
        if self.family is Family.SL:
            return f"{self.plus.to_text()}|{self.minus.to_text()}"
        return self.plus.to_text()

    @classmethod
    def parse(cls, family: Family, text: str) -> ThetaWeight:
        """Parse the textual weight syntax.

        ``sl``: ``"2,1|1"`` (plus-parts, bar, minus-parts, empty side ``-``).
        ``o``/``sp``: ``"2,1"``.

        Raises:
            InvalidWeightError: malformed text
        """
        cleaned = text.strip()
        if family is Family.SL:
            if cleaned.count("|") != 1:
                raise InvalidWeightError(f"sl weights are written 'plus|minus', got '{text}'")
            plus_text, minus_text = cleaned.split("|")
            return cls(family, Partition.parse(plus_text), Partition.parse(minus_text))
        if "|" in cleaned:
            raise InvalidWeightError(f"{family.value} weights carry one partition, got '{text}'")
        return cls(family, Partition.parse(cleaned))

    def __str__(self) -> str:
        return self.to_text()
