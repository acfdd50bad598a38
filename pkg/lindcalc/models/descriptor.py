"""Descriptors of direct systems ``M = lim M_i`` and spinor data."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import pairwise

from lindcalc.models.ranked import RankedWeight
from lindcalc.models.weights import EMPTY_SIDE, Family, ThetaWeight

SPINOR_VALUES = (1, 2)


@dataclass(frozen=True)
class SpinorSequence:
    """An eventually constant sequence ``t_1, t_2, ...`` over {1, 2}.

    ``prefix`` lists the first entries; every later entry equals ``tail``.
    """

    prefix: tuple[int, ...] = ()
    tail: int = 1

    def __post_init__(self) -> None:
        prefix = tuple(self.prefix)
        for value in (*prefix, self.tail):
            if value not in SPINOR_VALUES:
                raise ValueError(f"spinor choices must be 1 or 2, got {value!r}")
        object.__setattr__(self, "prefix", prefix)

    def at(self, index: int) -> int:
        """``t_index`` (1-based)."""
        if index < 1:
            raise ValueError(f"index must be positive, got {index}")
        if index <= len(self.prefix):
            return self.prefix[index - 1]
        return self.tail

    def to_text(self) -> str:
        head = ",".join(str(v) for v in self.prefix) or EMPTY_SIDE
        return f"{head}:{self.tail}"

    @classmethod
    def parse(cls, text: str) -> SpinorSequence:
        """Parse ``"prefix:tail"``, e.g. ``"1,2,2:1"`` or ``"-:2"``.

        Raises:
            ValueError: malformed text
        """
        head, sep, tail = text.strip().partition(":")
        if not sep:
            raise ValueError(f"spinor sequences are written 'prefix:tail', got '{text}'")
        head = head.strip()
        try:
            prefix = (
                ()
                if head in ("", EMPTY_SIDE)
                else tuple(int(v) for v in head.split(","))
            )
            return cls(prefix, int(tail))
        except ValueError as exc:
            raise ValueError(f"Invalid spinor sequence '{text}': {exc}") from None

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True, order=True)
class SpinorLabel:
    """One of the two half-spin modules ``S¹_i``, ``S²_i`` of the rank-``i`` algebra."""

    rank: int
    index: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        if self.index not in SPINOR_VALUES:
            raise ValueError(f"spinor index must be 1 or 2, got {self.index}")

    def to_text(self) -> str:
        return f"S{self.index}_{self.rank}"

    def __str__(self) -> str:
        return self.to_text()


TypeLabel = RankedWeight | SpinorLabel


class DescriptorKind(Enum):
    STABLE = "stable"
    SYMPOWER = "sympower"
    SPINOR = "spinor"
    EXPLICIT = "explicit"

    @classmethod
    def parse(cls, text: str) -> DescriptorKind:
        try:
            return cls(text.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"Invalid descriptor kind: '{text}' (choose from {choices})") from None


@dataclass(frozen=True)
class ExplicitStage:
    """The stage ``M_rank``, a multiset of irreducibles (repeats allowed)."""

    rank: int
    weights: tuple[RankedWeight, ...]

    def __post_init__(self) -> None:
        weights = tuple(self.weights)
        for w in weights:
            if w.rank != self.rank:
                raise ValueError(f"stage at rank {self.rank} holds weight {w} of rank {w.rank}")
        object.__setattr__(self, "weights", weights)


@dataclass(frozen=True)
class DirectSystemDescriptor:
    """Finite description of an exhaustion ``M_1 ⊂ M_2 ⊂ ...``.

    Attributes:
        family: the algebra family
        kind: which of the built-in shapes this is
        label: the stable label, for ``STABLE``
        spinor: the choice sequence, for ``SPINOR``
        stages: strictly increasing stages, for ``EXPLICIT``
    """

    family: Family
    kind: DescriptorKind
    label: ThetaWeight | None = None
    spinor: SpinorSequence | None = None
    stages: tuple[ExplicitStage, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        stages = tuple(self.stages)
        object.__setattr__(self, "stages", stages)
        if self.kind is DescriptorKind.STABLE:
            if self.label is None:
                raise ValueError("stable descriptors need a label")
            if self.label.family is not self.family:
                raise ValueError(
                    f"label {self.label} is {self.label.family.value}, "
                    f"descriptor is {self.family.value}"
                )
        elif self.kind is DescriptorKind.SYMPOWER:
            if self.family is not Family.SL:
                raise ValueError("symmetric power descriptors exist for sl only")
        elif self.kind is DescriptorKind.SPINOR:
            if self.family is not Family.O:
                raise ValueError("spinor descriptors exist for o only")
            if self.spinor is None:
                raise ValueError("spinor descriptors need a choice sequence")
        else:
            if not stages:
                raise ValueError("explicit descriptors need at least one stage")
            ranks = [s.rank for s in stages]
            if any(a >= b for a, b in pairwise(ranks)):
                raise ValueError(f"explicit stage ranks must strictly increase, got {ranks}")
            for stage in stages:
                for w in stage.weights:
                    if w.family is not self.family:
                        raise ValueError(f"stage weight {w} is not a {self.family.value} weight")

    @classmethod
    def stable(cls, label: ThetaWeight) -> DirectSystemDescriptor:
        return cls(label.family, DescriptorKind.STABLE, label=label)

    @classmethod
    def sympower(cls) -> DirectSystemDescriptor:
        return cls(Family.SL, DescriptorKind.SYMPOWER)

    @classmethod
    def spinors(cls, sequence: SpinorSequence) -> DirectSystemDescriptor:
        return cls(Family.O, DescriptorKind.SPINOR, spinor=sequence)

    @classmethod
    def explicit(
        cls, family: Family, stages: tuple[ExplicitStage, ...]
    ) -> DirectSystemDescriptor:
        return cls(family, DescriptorKind.EXPLICIT, stages=stages)

    def stage(self, rank: int) -> ExplicitStage | None:
        return next((s for s in self.stages if s.rank == rank), None)

    def describe(self) -> str:
        if self.kind is DescriptorKind.STABLE:
            return f"stable({self.label})"
        if self.kind is DescriptorKind.SPINOR:
            return f"spinor({self.spinor})"
        if self.kind is DescriptorKind.EXPLICIT:
            return f"explicit(ranks {[s.rank for s in self.stages]})"
        return "sympower"
