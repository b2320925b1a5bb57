"""Decorated permutations: boundary data, cyclic shift moves, duality."""

import pytest
from hypothesis import given, strategies as st

from flagpipes.decperm import (
    DecoratedPermutation,
    all_decperms,
    covered_by_shift,
    covers_by_shift,
    decperm_of,
    dle_of,
    dual_positroid,
    inverse_decperm,
    left_cyclic_shift,
    left_unblocked_positions,
    or_set,
    parse_decperm,
    positroid_of,
    right_cyclic_shift,
    tc_set,
    unblocked_positions,
)
from flagpipes.exceptions import DomainError, EmptyChoiceError, NotUnblockedError
from flagpipes.pipedream import construct_fpp, restrict
from flagpipes.positroid import dual, enumerate_positroids, unblocked_columns


def decperms(max_n: int = 6):
    """Strategy: a random decorated permutation, any fixed-point colors."""
    def build(n):
        return st.tuples(
            st.permutations(tuple(range(1, n + 1))).map(tuple),
            st.lists(st.booleans(), min_size=n, max_size=n),
        ).map(_decorate)
    return st.integers(min_value=1, max_value=max_n).flatmap(build)


def _decorate(args):
    perm, flags = args
    color = tuple(
        2 if (v > j or (v == j and flag)) else 1
        for j, (v, flag) in enumerate(zip(perm, flags), 1))
    return DecoratedPermutation(perm, color)


RUNNING = "5o1u3u9o2u7o6u4u8u"


class TestRepresentation:
    def test_forced_colors(self):
        with pytest.raises(DomainError):
            DecoratedPermutation((2, 1), (1, 1))  # 2 > 1 forces color 2
        with pytest.raises(DomainError):
            DecoratedPermutation((2, 1), (2, 2))  # 1 < 2 forces color 1
        with pytest.raises(DomainError):
            DecoratedPermutation((1, 2), (1,))    # wrong length
        with pytest.raises(DomainError):
            DecoratedPermutation((1, 2), (1, 3))  # bad color value

    def test_rank_counts_over_marks(self):
        assert parse_decperm(RUNNING).rank == 3
        assert parse_decperm("1o2o").rank == 2

    @given(decperms())
    def test_string_roundtrip(self, dp):
        assert parse_decperm(dp.to_string()) == dp

    def test_comma_form_beyond_nine(self):
        dp = _decorate((tuple(range(10, 0, -1)), [False] * 10))
        text = dp.to_string()
        assert "," in text
        assert parse_decperm(text) == dp

    def test_parse_rejects_garbage(self):
        with pytest.raises(DomainError):
            parse_decperm("3o1x2u")
        with pytest.raises(DomainError):
            parse_decperm("")
        with pytest.raises(DomainError):
            parse_decperm("2o2o1u")  # not a permutation

    def test_counts(self):
        assert [len(all_decperms(n)) for n in (1, 2, 3, 4)] == [2, 5, 16, 65]
        texts = {dp.to_string() for dp in all_decperms(4)}
        assert len(texts) == 65


class TestBoundaryData:
    def test_decperm_of_golden(self):
        d = restrict(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)), 2)
        assert decperm_of(d).to_string() == "1u2o3u4o"

    def test_dle_of_golden(self):
        assert dle_of(parse_decperm("2o1u4o3u")).pivots == (3, 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_decperm_dream_mutual_inverse(self, n):
        for dp in all_decperms(n):
            assert decperm_of(dle_of(dp)) == dp
        canonical = {P.key for P in enumerate_positroids(n)}
        via_decperms = {positroid_of(dp).key for dp in all_decperms(n)}
        assert canonical == via_decperms

    def test_running_example_roundtrip(self, running_example):
        assert decperm_of(running_example.dream).to_string() == RUNNING


class TestUnblocked:
    def test_golden(self):
        assert unblocked_positions(parse_decperm(RUNNING)) == (2, 5, 8, 9)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_positions_match_columns(self, n):
        for dp in all_decperms(n):
            assert unblocked_positions(dp) == unblocked_columns(dle_of(dp))

    def test_left_golden(self):
        omega = inverse_decperm(parse_decperm(RUNNING))
        assert omega.to_string() == "2o5o3o8o1u7o6u9o4u"
        assert left_unblocked_positions(omega) == (1, 2, 4, 8)


class TestCompletionSets:
    def test_tc_goldens(self):
        pi = parse_decperm(RUNNING)
        assert tc_set(pi, {8}) == (1, 4)
        assert tc_set(pi, {2, 5, 8, 9}) == ()
        assert tc_set(pi, {5, 9}) == (4,)
        assert tc_set(pi, {2, 5, 8}) == (1,)

    def test_or_golden(self):
        omega = parse_decperm("2o5o3o8o1u7o6u9o4u")
        assert or_set(omega, {2, 8}) == (9,)

    def test_errors(self):
        pi = parse_decperm(RUNNING)
        with pytest.raises(EmptyChoiceError):
            tc_set(pi, set())
        with pytest.raises(NotUnblockedError):
            tc_set(pi, {3})
        omega = parse_decperm("2o5o3o8o1u7o6u9o4u")
        with pytest.raises(EmptyChoiceError):
            or_set(omega, set())
        with pytest.raises(NotUnblockedError):
            or_set(omega, {3})


class TestShifts:
    def test_footnote_example(self):
        assert right_cyclic_shift(parse_decperm("1u2u"), {2}).to_string() \
            == "1u2o"

    def test_table_rows(self):
        pi = parse_decperm(RUNNING)
        rows = {
            (2, 5, 8, 9): "5o8o3u9o1u7o6u2u4u",
            (2, 5, 8): "4o5o3u9o1u7o6u2u8u",
            (5, 9): "5o1u3u8o9o7o6u4u2u",
            (8,): "4o1u3u5o2u7o6u9o8u",
        }
        for C, want in rows.items():
            assert right_cyclic_shift(pi, C).to_string() == want

    def test_left_shift_golden(self):
        omega = parse_decperm("2o5o3o8o1u7o6u9o4u")
        assert left_cyclic_shift(omega, {2, 8}).to_string() == "2o9o3o8o1u7o6u4u5u"

    def test_shift_raises_rank_by_one(self):
        pi = parse_decperm(RUNNING)
        for q in covers_by_shift(pi):
            assert q.rank == pi.rank + 1
        assert len(covers_by_shift(pi)) == 15

    def test_duality_square(self):
        pi = parse_decperm(RUNNING)
        omega = inverse_decperm(pi)
        assert inverse_decperm(right_cyclic_shift(pi, {5, 9})) \
            == left_cyclic_shift(omega, {2, 8})

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_square_commutes_everywhere(self, n):
        from itertools import combinations
        for dp in all_decperms(n):
            omega = inverse_decperm(dp)
            U = unblocked_positions(dp)
            for r in range(1, len(U) + 1):
                for C in combinations(U, r):
                    R = tuple(sorted(dp.perm[c - 1] for c in C))
                    left = inverse_decperm(right_cyclic_shift(dp, C))
                    assert left == left_cyclic_shift(omega, R)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_covered_mirrors_covers(self, n):
        for dp in all_decperms(n):
            up = {inverse_decperm(q).to_string() for q in covers_by_shift(dp)}
            down = {q.to_string()
                    for q in covered_by_shift(inverse_decperm(dp))}
            assert up == down


class TestDuality:
    @given(decperms())
    def test_inverse_is_involution(self, dp):
        assert inverse_decperm(inverse_decperm(dp)) == dp
        assert inverse_decperm(dp).rank == dp.n - dp.rank

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_dual_positroid_complements_bases(self, n):
        for P in enumerate_positroids(n):
            assert dual_positroid(P).bases == dual(P.bases)
