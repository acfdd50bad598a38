"""Symbolic cardinal numbers: finite counts and the beth numbers."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering


class CardinalKind(Enum):
    FINITE = "finite"
    BETH = "beth"


@total_ordering
@dataclass(frozen=True)
class Cardinality:
    """``Finite(n)`` or ``Beth(k)``.

    ``Beth(0)`` is the cardinality of ℤ, ``Beth(1)`` that of ``2^ℤ``, and
    ``Beth(k+1)`` that of the power set of a set of cardinality ``Beth(k)``.
    Every finite cardinal is below every beth number.
    """

    kind: CardinalKind
    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.kind, CardinalKind):
            raise TypeError(f"kind must be a CardinalKind, got {type(self.kind).__name__}")
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise TypeError(f"value must be an integer, got {type(self.value).__name__}")
        if self.value < 0:
            raise ValueError(f"value must be nonnegative, got {self.value}")

    @classmethod
    def finite(cls, n: int) -> Cardinality:
        return cls(CardinalKind.FINITE, n)

    @classmethod
    def beth(cls, k: int) -> Cardinality:
        return cls(CardinalKind.BETH, k)

    @property
    def is_finite(self) -> bool:
        return self.kind is CardinalKind.FINITE

    def _key(self) -> tuple[int, int]:
        return (0 if self.is_finite else 1, self.value)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Cardinality):
            return NotImplemented
        return self._key() < other._key()

    def __add__(self, other: Cardinality) -> Cardinality:
        if self.is_finite and other.is_finite:
            return Cardinality.finite(self.value + other.value)
        return max(self, other)

    def __mul__(self, other: Cardinality) -> Cardinality:
        if self == ZERO or other == ZERO:
            return ZERO
        if self.is_finite and other.is_finite:
            return Cardinality.finite(self.value * other.value)
        return max(self, other)

    def power_set(self) -> Cardinality:
        """``2^self``."""
        if self.is_finite:
            return Cardinality.finite(2**self.value)
        return Cardinality.beth(self.value + 1)

    def to_text(self) -> str:
        """``"finite:n"`` or ``"beth:k"``."""
        return f"{self.kind.value}:{self.value}"

    @classmethod
    def parse(cls, text: str) -> Cardinality:
        """Parse ``"finite:n"`` / ``"beth:k"``; a bare integer means a finite count.

        Raises:
            ValueError: malformed text
        """
        cleaned = text.strip().lower()
        kind_text, sep, value_text = cleaned.partition(":")
        if not sep:
            kind_text, value_text = CardinalKind.FINITE.value, cleaned
        try:
            kind = CardinalKind(kind_text)
            value = int(value_text)
        except ValueError:
            raise ValueError(f"Invalid cardinal: '{text}' (use finite:n or beth:k)") from None
        return cls(kind, value)

    def __str__(self) -> str:
        return self.to_text()


ZERO = Cardinality.finite(0)
ONE = Cardinality.finite(1)
