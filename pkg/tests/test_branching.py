"""Tests for branching rules and restriction multiplicities."""

import itertools
import random
from collections import Counter

import pytest

from lindcalc.models.ranked import RankedWeight
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services.branching import branch, restrict, restrict_mult
from lindcalc.services.char_oracle import (
    char,
    dim,
    minimal_rank,
    restrict_character,
    stable_rank,
    truncate,
)
from lindcalc.services.errors import FamilyMismatchError, InadmissibleRankError
from lindcalc.services.weights import contained_in, enumerate_theta, norm

from .conftest import ALL_FAMILIES


def rw(family, *coords):
    return RankedWeight(family, len(coords), tuple(coords))


def assembled_character(pieces):
    terms: dict[tuple[int, ...], int] = {}
    for piece, m in pieces.items():
        for exponent, k in char(piece).terms.items():
            terms[exponent] = terms.get(exponent, 0) + m * k
    return terms


def random_weight(rng, family, rank):
    values = sorted((rng.randint(0, 3) for _ in range(rank)), reverse=True)
    if family is Family.SL:
        shift = rng.randint(-2, 1)
        values = [v + shift for v in values]
    return RankedWeight(family, rank, tuple(values))


class TestBranch:
    def test_gl_symmetric_square(self):
        expected = {rw(Family.SL, 2): 1, rw(Family.SL, 1): 1, rw(Family.SL, 0): 1}
        assert branch(rw(Family.SL, 2, 0)) == expected

    def test_gl_exterior_square(self):
        assert branch(rw(Family.SL, 1, 1, 0)) == {rw(Family.SL, 1, 1): 1, rw(Family.SL, 1, 0): 1}

    @pytest.mark.parametrize("family", [Family.O, Family.SP], ids=lambda f: f.value)
    def test_natural_picks_up_two_trivials(self, family):
        assert branch(rw(family, 1, 0)) == {rw(family, 1): 1, rw(family, 0): 2}

    @pytest.mark.parametrize("family", ALL_FAMILIES, ids=lambda f: f.value)
    def test_mass_is_conserved(self, family):
        rng = random.Random(20240917)
        for _ in range(200):
            weight = random_weight(rng, family, rng.randint(2, 7))
            pieces = branch(weight)
            assert sum(m * dim(w) for w, m in pieces.items()) == dim(weight), weight

    def test_rank_one_cannot_branch(self):
        with pytest.raises(InadmissibleRankError):
            branch(rw(Family.SP, 3))


class TestRestrict:
    def test_identity_at_same_rank(self):
        weight = rw(Family.O, 2, 1, 0)
        assert restrict(weight, 3) == {weight: 1}

    def test_composes_single_steps(self):
        weight = rw(Family.SP, 2, 1, 0)
        two_steps: Counter = Counter()
        for child, m in branch(weight).items():
            for grandchild, k in branch(child).items():
                two_steps[grandchild] += m * k
        assert restrict(weight, 1) == two_steps

    @pytest.mark.parametrize(
        "weight",
        [rw(Family.SL, 2, 1, 0, -1), rw(Family.O, 2, 1, 1), rw(Family.SP, 1, 1, 0)],
        ids=str,
    )
    def test_matches_restricted_character(self, weight):
        expected = dict(restrict_character(char(weight), 2).terms)
        assert assembled_character(restrict(weight, 2)) == expected

    @pytest.mark.slow
    def test_every_small_label_matches_the_oracle(self, family):
        for lam in enumerate_theta(family, 3):
            j = minimal_rank(lam) + 2
            weight = truncate(lam, j)
            for i in range(max(1, j - 2), j):
                expected = dict(restrict_character(char(weight), i).terms)
                assert assembled_character(restrict(weight, i)) == expected, (lam, i)

    def test_rank_out_of_range(self):
        with pytest.raises(InadmissibleRankError):
            restrict(rw(Family.SL, 1, 0), 0)


class TestRestrictMult:
    def test_natural_in_natural(self, family, natural_label):
        v = natural_label(family)
        assert restrict_mult(v, 2, v, 3) == 1

    def test_trivial_in_natural_grows_with_gap(self, family, natural_label):
        trivial = ThetaWeight.trivial(family)
        per_step = 1 if family is Family.SL else 2
        for j in (3, 4, 5):
            assert restrict_mult(trivial, 2, natural_label(family), j) == per_step * (j - 2)

    def test_larger_label_does_not_occur(self):
        assert restrict_mult(ThetaWeight.sl((2,)), 2, ThetaWeight.sl((1,)), 3) == 0

    def test_adjoint_contains_natural_once(self):
        adjoint, v = ThetaWeight.sl((1,), (1,)), ThetaWeight.sl((1,))
        assert [restrict_mult(v, i, adjoint, i + 1) for i in (3, 4, 5)] == [1, 1, 1]

    def test_determinant_twists_count_for_sl(self):
        # gl(2) constituents of (1,1,0,0): (1,1) once, (1,0) twice, (0,0) once;
        # (1,1) is the determinant, trivial on sl(2)
        trivial = ThetaWeight.trivial(Family.SL)
        assert restrict_mult(trivial, 2, ThetaWeight.sl((1, 1)), 4) == 2

    @pytest.mark.slow
    def test_positivity_is_stable_and_matches_containment(self, family):
        labels = enumerate_theta(family, 3)
        for mu, lam in itertools.product(labels, repeat=2):
            n = stable_rank(family, norm(mu), norm(lam))
            verdicts = {
                restrict_mult(mu, i, lam, j) > 0
                for i in (n, n + 1)
                for j in (i + max(1, norm(lam)), i + max(1, norm(lam)) + 1)
            }
            assert verdicts == {contained_in(mu, lam)}, (mu, lam)

    def test_needs_increasing_ranks(self, natural_label):
        v = natural_label(Family.O)
        with pytest.raises(InadmissibleRankError):
            restrict_mult(v, 3, v, 3)

    def test_family_mismatch(self):
        with pytest.raises(FamilyMismatchError):
            restrict_mult(ThetaWeight.sl((1,)), 2, ThetaWeight.single(Family.O, (1,)), 3)
