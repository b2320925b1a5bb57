"""Permutation layer: composition algebra, Bruhat order, Rothe diagrams."""

from math import comb

import pytest
from hypothesis import given

import oracles
from conftest import permutation_pairs, sized_permutations
from flagpipes.exceptions import DomainError, GuardExceededError, SizeMismatchError
from flagpipes.perm import (
    all_permutations,
    ascents,
    bruhat_leq,
    bruhat_leq_subword_oracle,
    compose,
    descents,
    fixed_points,
    grassmannian_shape,
    identity,
    inverse,
    inversions,
    is_permutation,
    key,
    length,
    longest,
    reduced_word,
    rothe_diagram,
    simple,
    right_multiply,
    validate_permutation,
    word_to_perm,
    word_x_of_rothe,
)


class TestBasics:
    def test_identity_and_longest(self):
        assert identity(4) == (1, 2, 3, 4)
        assert longest(4) == (4, 3, 2, 1)
        assert length(identity(5)) == 0
        assert length(longest(5)) == comb(5, 2)

    def test_is_permutation(self):
        assert is_permutation((2, 1, 3))
        assert not is_permutation((1, 1, 3))
        assert not is_permutation((0, 1, 2))
        assert is_permutation(())

    def test_validate_rejects_malformed(self):
        with pytest.raises(DomainError):
            validate_permutation((1, 3))
        assert validate_permutation([2, 1]) == (2, 1)

    def test_all_permutations_lex(self):
        perms = list(all_permutations(3))
        assert perms == sorted(perms)
        assert len(perms) == 6

    @given(sized_permutations())
    def test_inverse_involution(self, w):
        assert inverse(inverse(w)) == w
        assert compose(w, inverse(w)) == identity(len(w))
        assert compose(inverse(w), w) == identity(len(w))

    @given(permutation_pairs())
    def test_compose_pointwise(self, pair):
        a, b = pair
        c = compose(a, b)
        assert all(c[i - 1] == a[b[i - 1] - 1] for i in range(1, len(a) + 1))

    def test_compose_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            compose((1, 2), (1, 2, 3))

    def test_simple_and_right_multiply(self):
        assert simple(4, 2) == (1, 3, 2, 4)
        assert right_multiply((3, 1, 2), 1) == (1, 3, 2)
        # right multiplication by s_i equals composition with simple(n, i)
        assert right_multiply((3, 1, 2), 2) == compose((3, 1, 2), simple(3, 2))
        with pytest.raises(DomainError):
            simple(3, 3)
        with pytest.raises(DomainError):
            right_multiply((2, 1), 2)

    @given(sized_permutations())
    def test_length_counts_inversions(self, w):
        assert length(w) == len(inversions(w))

    @given(sized_permutations())
    def test_descents_ascents_partition(self, w):
        n = len(w)
        assert sorted(descents(w) + ascents(w)) == list(range(1, n))

    def test_fixed_points(self):
        assert fixed_points((1, 3, 2, 4)) == (1, 4)
        assert fixed_points(longest(4)) == ()


class TestWords:
    @given(sized_permutations())
    def test_reduced_word_roundtrip(self, w):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert word_to_perm(len(w), word) == w

    def test_word_to_perm_golden(self):
        assert word_to_perm(3, (1, 2)) == (2, 3, 1)
        assert word_to_perm(3, ()) == (1, 2, 3)


class TestBruhat:
    def test_key_golden(self):
        assert key((3, 1, 2)) == ((1, 3), (3,))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_three_routes_agree(self, n):
        perms = list(all_permutations(n))
        for u in perms:
            for v in perms:
                got = bruhat_leq(u, v)
                assert got == bruhat_leq_subword_oracle(u, v)
                assert got == oracles.sorted_prefix_leq(u, v)

    def test_partial_order_laws(self):
        perms = list(all_permutations(3))
        for u in perms:
            assert bruhat_leq(u, u)
            assert bruhat_leq(identity(3), u)
            assert bruhat_leq(u, longest(3))
            for v in perms:
                if u != v:
                    assert not (bruhat_leq(u, v) and bruhat_leq(v, u))
                for w in perms:
                    if bruhat_leq(u, v) and bruhat_leq(v, w):
                        assert bruhat_leq(u, w)

    @given(permutation_pairs())
    def test_leq_respects_length(self, pair):
        u, v = pair
        if bruhat_leq(u, v):
            assert length(u) <= length(v)

    def test_subword_oracle_guard(self):
        with pytest.raises(GuardExceededError):
            bruhat_leq_subword_oracle(identity(7), longest(7))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            bruhat_leq((1, 2), (1, 2, 3))


class TestRothe:
    def test_goldens(self):
        assert sorted(rothe_diagram((1, 2, 3))) == [(1, 2), (1, 3), (2, 3)]
        assert rothe_diagram((3, 2, 1)) == frozenset()

    @given(sized_permutations())
    def test_box_count_complements_length(self, w):
        assert len(rothe_diagram(w)) == comb(len(w), 2) - length(w)

    @given(sized_permutations(max_n=5))
    def test_word_x_lifts_to_longest(self, w):
        n = len(w)
        word = word_x_of_rothe(w)
        assert len(word) == comb(n, 2) - length(w)
        target = compose(inverse(w), longest(n))
        assert word_to_perm(n, word) == target
        assert length(target) == len(word)  # the word is reduced

    def test_word_x_golden(self):
        assert word_x_of_rothe((5, 3, 1, 6, 2, 7, 4)) == (
            5, 6, 4, 3, 4, 5, 6, 2, 3, 4, 1, 2)


class TestGrassmannianShape:
    def test_golden(self):
        assert grassmannian_shape((4, 6, 1, 2, 3, 5)) == (4, 3)
        assert grassmannian_shape(identity(4)) == ()

    def test_rejects_two_descents(self):
        with pytest.raises(DomainError):
            grassmannian_shape((2, 1, 4, 3))

    def test_shape_size_is_length(self):
        for w in all_permutations(5):
            if len(descents(w)) <= 1:
                assert sum(grassmannian_shape(w)) == length(w)

    def test_explicit_k_must_match_descent(self):
        assert grassmannian_shape(identity(4), 2) == (0, 0)
        with pytest.raises(DomainError):
            grassmannian_shape((1, 3, 2, 4), 1)
