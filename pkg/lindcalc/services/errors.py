"""Exception hierarchy for the lindcalc services."""

from __future__ import annotations


class LindCalcError(Exception):
    """Base class for domain errors (bad weights, inadmissible ranks, ...)."""

    code = "DOMAIN_ERROR"


class InvalidWeightError(LindCalcError, ValueError):
    """A weight, partition or character argument is malformed."""

    code = "INVALID_WEIGHT"


class FamilyMismatchError(LindCalcError):
    """Operands belong to different families (or ranks)."""

    code = "FAMILY_MISMATCH"


class RankTooSmallError(LindCalcError):
    """A label cannot be truncated to the requested rank."""

    code = "RANK_TOO_SMALL"

    def __init__(self, message: str, minimal_rank: int) -> None:
        super().__init__(message)
        self.minimal_rank = minimal_rank


class InadmissibleRankError(LindCalcError):
    """Rank arguments violate an operation's precondition."""

    code = "INADMISSIBLE_RANK"


class NotACharacterError(LindCalcError):
    """A formal character is not a nonnegative combination of irreducibles."""

    code = "NOT_A_CHARACTER"


class BoundExceededError(LindCalcError):
    """Degree exceeds the configured computation bound."""

    code = "BOUND_EXCEEDED"


class NotAFactorError(LindCalcError):
    """Label is not a composition factor of the module in question."""

    code = "NOT_A_FACTOR"


class LayerParityError(LindCalcError):
    """Internal inconsistency: a factor norm of the wrong parity, or a Loewy
    length that disagrees with the layers."""

    code = "LAYER_PARITY"


class NotSemisimpleError(LindCalcError):
    """Operation needs a single-layer profile."""

    code = "NOT_SEMISIMPLE"


class StabilizationError(LindCalcError):
    """Probes in the stable window disagree."""

    code = "STABILIZATION"


class DescriptorRangeError(LindCalcError):
    """A direct-system descriptor is not defined at the requested ranks."""

    code = "DESCRIPTOR_RANGE"
