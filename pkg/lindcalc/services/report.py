"""JSON payloads shared by the CLI and the HTTP API.

Every number is emitted as a decimal string and keys are sorted, so the
same query always serializes to the same bytes.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from typing import Any

from lindcalc.models.cardinal import Cardinality
from lindcalc.models.descriptor import DirectSystemDescriptor, TypeLabel
from lindcalc.models.profile import LoewyProfile
from lindcalc.models.ranked import FormalCharacter, RankedWeight
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services.dlim_desc import Verdict
from lindcalc.services.theta_order import Incomparable
from lindcalc.services.weights import norm


def dumps(payload: Any) -> str:
    """Canonical serialization: sorted keys, two-space indent, UTF-8 kept."""
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2)


def label_entry(weight: ThetaWeight) -> dict[str, str]:
    return {"weight": weight.to_text(), "norm": str(norm(weight))}


def labels_payload(family: Family, labels: Iterable[ThetaWeight]) -> dict[str, Any]:
    entries = [label_entry(w) for w in labels]
    return {"family": family.value, "count": str(len(entries)), "labels": entries}


def ranked_entry(weight: RankedWeight, mult: int | None = None) -> dict[str, str]:
    entry = {"rank": str(weight.rank), "weight": weight.to_text()}
    if mult is not None:
        entry["mult"] = str(mult)
    return entry


def ranked_multiset_payload(
    family: Family, rank: int, items: Mapping[RankedWeight, int]
) -> dict[str, Any]:
    ordered = sorted(items.items(), reverse=True)
    return {
        "family": family.value,
        "rank": str(rank),
        "constituents": [ranked_entry(w, m) for w, m in ordered],
    }


def character_payload(character: FormalCharacter) -> dict[str, Any]:
    return {
        "family": character.family.value,
        "rank": str(character.rank),
        "mass": str(character.mass),
        "terms": character.to_dict(),
    }


def factors_payload(
    family: Family,
    factors: Iterable[tuple[ThetaWeight, int]],
    layers: Mapping[ThetaWeight, int] | None = None,
) -> dict[str, Any]:
    entries = []
    for weight, mult in factors:
        entry = {"weight": weight.to_text(), "mult": str(mult)}
        if layers is not None:
            entry["layer"] = str(layers[weight])
        entries.append(entry)
    return {"family": family.value, "factors": entries}


def profile_payload(profile: LoewyProfile) -> dict[str, Any]:
    return profile.to_dict()


def cardinal_payload(value: Cardinality) -> dict[str, str]:
    return {"cardinal": value.to_text()}


def chain_payload(lam: ThetaWeight, mu: ThetaWeight, length: int | Incomparable) -> dict[str, str]:
    return {
        "family": lam.family.value,
        "lambda": lam.to_text(),
        "mu": mu.to_text(),
        "length": str(length),
    }


def types_payload(
    desc: DirectSystemDescriptor, i: int, j: int, types: Iterable[TypeLabel]
) -> dict[str, Any]:
    labels = sorted(str(t) for t in types)
    return {
        "descriptor": desc.describe(),
        "i": str(i),
        "j": str(j),
        "count": str(len(labels)),
        "types": labels,
    }


def verdict_payload(
    desc: DirectSystemDescriptor, window: Iterable[tuple[int, int]], verdict: Verdict
) -> dict[str, Any]:
    return {
        "descriptor": desc.describe(),
        "family": desc.family.value,
        "window": [[str(i), str(j)] for i, j in window],
        "verdict": verdict.value,
    }
