"""Tests for the composition factors and Loewy layers of mixed tensor powers."""

import itertools

import pytest

from lindcalc.models.weights import Family, Partition, ThetaWeight
from lindcalc.services.char_oracle import dim, natural, stable_rank, truncate
from lindcalc.services.errors import (
    BoundExceededError,
    FamilyMismatchError,
    LayerParityError,
    NotAFactorError,
)
from lindcalc.services.tensor_calc import (
    tensor_factors,
    tensor_factors_at,
    tpq_factors,
    tpq_factors_at,
    tpq_layer,
    tpq_loewy,
    tpq_profile,
)
from lindcalc.services.weights import enumerate_theta, norm

TRIVIAL = ThetaWeight.trivial(Family.SL)
V = ThetaWeight.sl((1,))
V_STAR = ThetaWeight.sl((), (1,))
ADJOINT = ThetaWeight.sl((1,), (1,))


def o(*parts):
    return ThetaWeight.single(Family.O, parts)


def sp(*parts):
    return ThetaWeight.single(Family.SP, parts)


def degrees(limit):
    return [(p, total - p) for total in range(limit + 1) for p in range(total + 1)]


def row_sum(a, b):
    rows = max(len(a), len(b))
    padded = [(a.parts + (0,) * rows)[:rows], (b.parts + (0,) * rows)[:rows]]
    return Partition(tuple(x + y for x, y in zip(*padded, strict=True)))


class TestTpqFactors:
    def test_natural_times_conatural(self):
        assert tpq_factors(Family.SL, 1, 1) == ((ADJOINT, 1), (TRIVIAL, 1))

    def test_natural_is_simple(self):
        assert tpq_factors(Family.SL, 1, 0) == ((V, 1),)

    def test_orthogonal_square(self):
        assert dict(tpq_factors(Family.O, 2, 0)) == {o(2): 1, o(1, 1): 1, o(): 1}

    def test_orthogonal_mixed_degree_is_normalized(self):
        assert tpq_factors(Family.SP, 1, 1) == tpq_factors(Family.SP, 2, 0)

    def test_degree_zero(self, family):
        assert tpq_factors(family, 0, 0) == ((ThetaWeight.trivial(family), 1),)

    @pytest.mark.parametrize(("p", "q"), degrees(4), ids=lambda v: str(v))
    def test_dimensions_add_up(self, family, p, q):
        n = stable_rank(family, p + q)
        total = sum(m * dim(truncate(w, n)) for w, m in tpq_factors(family, p, q))
        assert total == dim(natural(family, n)) ** (p + q)

    def test_independent_of_rank(self, family):
        n = stable_rank(family, 3)
        assert tpq_factors_at(family, 2, 1, n) == tpq_factors_at(family, 2, 1, n + 2)

    def test_bound(self):
        with pytest.raises(BoundExceededError, match="exceeds the configured bound 6"):
            tpq_factors(Family.SL, 4, 3)
        assert tpq_factors(Family.SL, 1, 0, bound=1) == ((V, 1),)

    def test_negative_degree(self):
        with pytest.raises(ValueError, match="nonnegative"):
            tpq_factors(Family.O, -1, 0)


class TestTpqLayer:
    def test_adjoint_is_the_socle_of_natural_times_conatural(self):
        assert tpq_layer(ADJOINT, 1, 1) == 0

    def test_trace_sits_one_layer_up(self):
        assert tpq_layer(TRIVIAL, 1, 1) == 1

    def test_contraction_in_degree_three(self):
        assert tpq_layer(V, 2, 1) == 1

    def test_not_a_factor(self):
        with pytest.raises(NotAFactorError):
            tpq_layer(ThetaWeight.sl((2,)), 1, 1)

    def test_socles(self):
        socle = tpq_profile(Family.SL, 1, 1).layers[0]
        assert set(socle) == {ADJOINT}
        assert set(tpq_profile(Family.O, 2, 0).layers[0]) == {o(2), o(1, 1)}
        assert sp(2) in tpq_profile(Family.SP, 2, 0).layers[0]


class TestTpqLoewy:
    def test_closed_form_examples(self):
        assert tpq_loewy(Family.SL, 2, 1) == 2
        assert tpq_loewy(Family.O, 2, 2) == 3
        assert tpq_loewy(Family.SP, 0, 0) == 1

    @pytest.mark.parametrize(
        ("p", "q"),
        [*degrees(4), *(pytest.param(p, 5 - p, marks=pytest.mark.slow) for p in range(6))],
    )
    def test_profile_length_matches_closed_form(self, family, p, q):
        assert len(tpq_profile(family, p, q)) == tpq_loewy(family, p, q)

    def test_profile_multiplicities(self):
        profile = tpq_profile(Family.SL, 2, 1)
        assert profile.to_dict()["layers"][1] == [{"weight": "1|-", "mult": "finite:2"}]

    def test_layers_must_match_the_count(self, monkeypatch):
        monkeypatch.setattr(
            "lindcalc.services.tensor_calc.tpq_factors", lambda *args, **kwargs: ((ADJOINT, 1),)
        )
        with pytest.raises(LayerParityError, match="expected 2"):
            tpq_loewy(Family.SL, 1, 1)


class TestTensorFactors:
    def test_square_of_natural(self):
        assert dict(tensor_factors(V, V)) == {ThetaWeight.sl((2,)): 1, ThetaWeight.sl((1, 1)): 1}

    def test_natural_times_conatural(self):
        assert dict(tensor_factors(V, V_STAR)) == dict(tpq_factors(Family.SL, 1, 1))

    def test_unit(self, family):
        lam = next(w for w in tpq_factors(family, 2, 0) if w[0].plus.size == 2)[0]
        assert tensor_factors(lam, ThetaWeight.trivial(family)) == ((lam, 1),)

    def test_family_mismatch(self):
        with pytest.raises(FamilyMismatchError):
            tensor_factors(V, o(1))

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            tensor_factors(ThetaWeight.sl((2, 2)), ThetaWeight.sl((), (2, 1)))

    @pytest.mark.slow
    def test_independent_of_rank(self, family):
        for lam, mu in itertools.combinations_with_replacement(enumerate_theta(family, 2), 2):
            n = stable_rank(family, norm(lam), norm(mu))
            assert tensor_factors_at(lam, mu, n) == tensor_factors_at(lam, mu, n + 2), (lam, mu)

    def test_cartan_piece_occurs_once(self, family):
        for lam, mu in itertools.combinations_with_replacement(enumerate_theta(family, 2), 2):
            top = ThetaWeight(family, row_sum(lam.plus, mu.plus), row_sum(lam.minus, mu.minus))
            assert dict(tensor_factors(lam, mu)).get(top) == 1, (lam, mu)
