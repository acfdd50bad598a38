"""Tests for the shared JSON payloads."""

import json

from lindcalc.models.cardinal import Cardinality
from lindcalc.models.descriptor import DirectSystemDescriptor
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services import report
from lindcalc.services.dlim_desc import Verdict
from lindcalc.services.duals_inj import inj_profile
from lindcalc.services.tensor_calc import tpq_factors
from lindcalc.services.theta_order import INCOMPARABLE


class TestDumps:
    def test_keys_are_sorted(self):
        assert report.dumps({"b": "1", "a": "2"}) == '{\n  "a": "2",\n  "b": "1"\n}'

    def test_round_trip_is_byte_identical(self):
        payload = report.profile_payload(inj_profile(ThetaWeight.sl((1,), (1,))))
        text = report.dumps(payload)
        assert report.dumps(json.loads(text)) == text

    def test_non_ascii_is_kept(self):
        assert report.dumps({"title": "ランク不足"}) == '{\n  "title": "ランク不足"\n}'


class TestPayloads:
    def test_numbers_are_strings(self):
        payload = report.factors_payload(Family.SL, tpq_factors(Family.SL, 2, 0))
        for entry in payload["factors"]:
            assert isinstance(entry["mult"], str)

    def test_labels(self):
        payload = report.labels_payload(Family.O, [ThetaWeight.single(Family.O, (2,))])
        assert payload == {"family": "o", "count": "1", "labels": [{"weight": "2", "norm": "2"}]}

    def test_chain_incomparable(self):
        lam, mu = ThetaWeight.sl(), ThetaWeight.sl((1,))
        assert report.chain_payload(lam, mu, INCOMPARABLE)["length"] == "incomparable"

    def test_cardinal(self):
        assert report.cardinal_payload(Cardinality.beth(2)) == {"cardinal": "beth:2"}

    def test_verdict(self):
        payload = report.verdict_payload(
            DirectSystemDescriptor.sympower(), [(3, 4)], Verdict.GROWING_TYPES
        )
        assert payload == {
            "descriptor": "sympower",
            "family": "sl",
            "window": [["3", "4"]],
            "verdict": "GrowingTypes",
        }
