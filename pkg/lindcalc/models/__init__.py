"""Value types: labels, finite-rank weights, cardinals, profiles and descriptors."""

from lindcalc.models.cardinal import Cardinality, CardinalKind
from lindcalc.models.descriptor import (
    DescriptorKind,
    DirectSystemDescriptor,
    ExplicitStage,
    SpinorLabel,
    SpinorSequence,
)
from lindcalc.models.profile import LoewyProfile
from lindcalc.models.ranked import FormalCharacter, RankedWeight
from lindcalc.models.weights import Family, Partition, ThetaWeight

__all__ = [
    "CardinalKind",
    "Cardinality",
    "DescriptorKind",
    "DirectSystemDescriptor",
    "ExplicitStage",
    "Family",
    "FormalCharacter",
    "LoewyProfile",
    "Partition",
    "RankedWeight",
    "SpinorLabel",
    "SpinorSequence",
    "ThetaWeight",
]
