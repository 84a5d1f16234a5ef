"""The Burau determinant oracle: matrices, relations, Markov stability."""

import random

import pytest

from tanglex.laurent import LaurentPoly, ONE
from tanglex.oracle import (KNOT_CORPUS, MultiComponentClosureError,
                            OracleError, alexander_via_burau,
                            braid_permutation, burau_reduced,
                            closure_components, hopf_link_value,
                            normalize_symmetric, unreduced_burau)

T = LaurentPoly.q_power(1)


class TestBurauMatrices:
    def test_empty_word_is_identity(self):
        m = burau_reduced([], 3)
        assert m == ((ONE, LaurentPoly.zero()), (LaurentPoly.zero(), ONE))

    def test_inverse_pair(self):
        for g in (1, 2):
            m = burau_reduced([g, -g], 3)
            assert m == burau_reduced([], 3)

    def test_sigma1_cubed_in_b2(self):
        m = burau_reduced([1, 1, 1], 2)
        assert m == ((LaurentPoly.monomial(-1, 3),),)

    def test_braid_relations(self):
        rng = random.Random(0)
        for strands in range(2, 6):
            gens = list(range(1, strands))
            # far commutation
            for i in gens:
                for j in gens:
                    if abs(i - j) >= 2:
                        assert unreduced_burau([i, j], strands) == \
                            unreduced_burau([j, i], strands)
            # the braid relation
            for i in gens[:-1]:
                assert unreduced_burau([i, i + 1, i], strands) == \
                    unreduced_burau([i + 1, i, i + 1], strands)
            # random word and a rewriting of it
            for _ in range(5):
                w = [rng.choice(gens) * rng.choice((1, -1)) for _ in range(6)]
                i = rng.randrange(len(w))
                w2 = w[:i] + [w[i], -w[i], w[i]] + w[i + 1:]
                assert unreduced_burau(w, strands) == \
                    unreduced_burau(w2, strands)

    def test_bad_generator(self):
        with pytest.raises(ValueError):
            unreduced_burau([3], 3)
        with pytest.raises(ValueError):
            braid_permutation([0], 2)


class TestClosureCounting:
    def test_components(self):
        assert closure_components([], 1) == 1
        assert closure_components([], 3) == 3
        assert closure_components([1], 2) == 1
        assert closure_components([1, 1], 2) == 2      # Hopf link
        assert closure_components([1], 3) == 2


class TestAlexanderValues:
    def test_anchors(self):
        assert alexander_via_burau([], 1) == ONE
        assert alexander_via_burau([1, 1, 1], 2) == \
            LaurentPoly.parse("q^-2 - 1 + q^2")
        assert alexander_via_burau([1, -2, 1, -2], 3) == \
            LaurentPoly.parse("-q^-2 + 3 - q^2")

    def test_multi_component_rejected(self):
        with pytest.raises(MultiComponentClosureError):
            alexander_via_burau([1, 1], 2)
        with pytest.raises(MultiComponentClosureError):
            alexander_via_burau([1], 3)

    def test_markov_stability(self):
        rng = random.Random(1)
        checked = 0
        while checked < 15:
            strands = rng.choice((2, 3, 4))
            w = tuple(rng.choice(range(1, strands)) * rng.choice((1, -1))
                      for _ in range(rng.randint(1, 8)))
            if closure_components(w, strands) != 1:
                continue
            base = alexander_via_burau(w, strands)
            g = rng.choice(range(1, strands)) * rng.choice((1, -1))
            assert alexander_via_burau((g,) + w + (-g,), strands) == base
            assert alexander_via_burau(w + (strands,), strands + 1) == base
            assert alexander_via_burau(w + (-strands,), strands + 1) == base
            checked += 1

    def test_corpus_shape(self):
        assert len(KNOT_CORPUS) >= 10
        for name, word, strands in KNOT_CORPUS:
            assert len(word) <= 8, name
            assert closure_components(word, strands) == 1, name


class TestNormalization:
    def test_uniqueness(self):
        p = alexander_via_burau([1, 1, 1], 2)
        # no other +-q^k multiple is symmetric with value one at q=1
        for k in range(-3, 4):
            for sign in (1, -1):
                m = p * LaurentPoly.monomial(sign, k)
                if k == 0 and sign == 1:
                    continue
                assert not (m.invert_q() == m and m.eval_at_one() == 1)

    def test_failures(self):
        with pytest.raises(OracleError):
            normalize_symmetric(LaurentPoly.zero())
        with pytest.raises(OracleError):
            normalize_symmetric(LaurentPoly.parse("1 + q"))   # asymmetric
        with pytest.raises(OracleError):
            normalize_symmetric(LaurentPoly.parse("q^-1 + 3 + q"))  # value 5


class TestHopf:
    def test_value(self):
        v = hopf_link_value()
        assert v == LaurentPoly.parse("-q^-1 + q")
        assert v.invert_q() == -v
        assert v.eval_at_one() == 0
