"""Edit-distance ball enumeration."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bruteforce import all_tuples, ball_ref
from conftest import rank_tuples
from lsb import Alphabet, Sequence, neighborhood, neighborhood_size_radius_one
from lsb.neighborhood import ball_array, ball_by_scan, ball_ranks


@pytest.mark.parametrize("n,m", [(1, 2), (2, 4), (3, 3), (4, 2)])
@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_ball_matches_whole_space_filter(n, m, r):
    for ranks in all_tuples(n, m):
        assert ball_ranks(ranks, r, m) == ball_ref(ranks, r, m)


@given(st.integers(2, 4).flatmap(
    lambda m: st.tuples(rank_tuples(4, m), st.just(m), st.integers(0, 3))
))
def test_ball_array_equals_ball_ranks(args):
    ranks, m, r = args
    rows = ball_array(ranks, r, m)
    as_set = {tuple(int(x) for x in row) for row in rows}
    assert len(as_set) == rows.shape[0]  # no duplicate rows
    assert as_set == ball_ranks(ranks, r, m)


@given(rank_tuples(5, 4), st.integers(0, 3))
def test_ball_contains_center_and_grows_with_radius(ranks, r):
    ball = ball_ranks(ranks, r, 4)
    assert ranks in ball
    assert ball <= ball_ranks(ranks, r + 1, 4)


@given(rank_tuples(3, 3), rank_tuples(3, 3))
def test_ball_membership_is_symmetric(a, b):
    assert (b in ball_ranks(a, 2, 3)) == (a in ball_ranks(b, 2, 3))


@pytest.mark.parametrize("n,m", [(2, 2), (3, 4), (5, 4), (20, 4)])
def test_radius_one_ball_size_closed_form(n, m):
    alphabet = Alphabet.of_size(m)
    s = Sequence(tuple(i % m for i in range(n)), alphabet)
    expected = n * (m - 1) + 1
    assert neighborhood_size_radius_one(n, alphabet) == expected
    assert len(neighborhood(s, 1)) == expected


def test_neighborhood_returns_sequences_over_same_alphabet():
    s = Sequence.from_text("ACG")
    ball = neighborhood(s, 1)
    assert s in ball
    assert all(t.alphabet == s.alphabet and t.n == 3 for t in ball)


def test_ball_by_scan_agrees_with_enumeration():
    alphabet = Alphabet.of_size(4)
    space = [Sequence(t, alphabet) for t in all_tuples(3, 4)]
    s = Sequence.from_text("ACG")
    for r in (1, 2, 3):
        assert {x.ranks for x in ball_by_scan(s, r, space)} == ball_ranks(s.ranks, r, 4)


def test_ball_rejects_negative_radius():
    with pytest.raises(ValueError):
        ball_ranks((0, 1), -1, 4)


def test_big_radius_covers_whole_space():
    assert ball_ranks((0, 0, 0), 3, 2) == set(all_tuples(3, 2))


def test_ball_array_rows_are_int64():
    rows = ball_array((0, 1, 2, 3), 2, 4)
    assert rows.dtype == np.int64
    assert rows.shape[1] == 4
