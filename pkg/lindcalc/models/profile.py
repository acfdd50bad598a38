"""Loewy profiles: label-level shadows of socle filtrations."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from lindcalc.models.cardinal import Cardinality
from lindcalc.models.weights import Family, ThetaWeight

Layer = Mapping[ThetaWeight, Cardinality]


@dataclass(frozen=True)
class LoewyProfile:
    """Ordered socle layers, index 0 being the socle.

    Each layer maps a label to the cardinal multiplicity of ``V_λ`` in
    ``soc^k(M) / soc^(k-1)(M)``. The zero profile has no layers; otherwise
    no layer is empty.
    """

    family: Family
    layers: tuple[Layer, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        frozen: list[Layer] = []
        for index, layer in enumerate(self.layers):
            if not layer:
                raise ValueError(f"layer {index} is empty")
            for weight, mult in layer.items():
                if weight.family is not self.family:
                    raise ValueError(
                        f"layer {index} holds {weight.family.value} label {weight} "
                        f"in a {self.family.value} profile"
                    )
                if not isinstance(mult, Cardinality):
                    raise TypeError(
                        f"multiplicities must be Cardinality, got {type(mult).__name__}"
                    )
            ordered = dict(sorted(layer.items(), key=lambda item: item[0].sort_key()))
            frozen.append(MappingProxyType(ordered))
        object.__setattr__(self, "layers", tuple(frozen))

    @classmethod
    def zero(cls, family: Family) -> LoewyProfile:
        return cls(family, ())

    @property
    def is_zero(self) -> bool:
        return not self.layers

    @property
    def is_semisimple(self) -> bool:
        return len(self.layers) <= 1

    def __len__(self) -> int:
        return len(self.layers)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoewyProfile):
            return NotImplemented
        return self.family is other.family and [dict(x) for x in self.layers] == [
            dict(y) for y in other.layers
        ]

    def __hash__(self) -> int:
        return hash((self.family, tuple(frozenset(layer.items()) for layer in self.layers)))

    def to_dict(self) -> dict[str, object]:
        return {
            "family": self.family.value,
            "loewy_length": str(len(self.layers)),
            "layers": [
                [{"weight": w.to_text(), "mult": m.to_text()} for w, m in layer.items()]
                for layer in self.layers
            ],
        }
