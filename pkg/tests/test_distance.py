"""Edit distance, batch DP, and edit-type classification."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bruteforce import (
    all_tuples,
    hamming_ref,
    levenshtein_ref,
    min_indel_pairs_ref,
)
from conftest import spaced_pair, sequence_pair
from lsb import (
    Alphabet,
    ContractError,
    EditType,
    Sequence,
    edit_distance,
    edit_type,
    hamming_distance,
    min_indel_pairs,
)
from lsb.distance import levenshtein, levenshtein_batch, min_indel_substitutions


def _alpha(m):
    return Alphabet.of_size(m)


@given(spaced_pair())
def test_levenshtein_matches_reference(args):
    a, b, _, _ = args
    assert levenshtein(a, b) == levenshtein_ref(a, b)


@given(spaced_pair())
def test_levenshtein_is_a_metric(args):
    a, b, _, _ = args
    assert levenshtein(a, a) == 0
    assert levenshtein(a, b) == levenshtein(b, a)
    assert (levenshtein(a, b) == 0) == (a == b)


def test_levenshtein_handles_unequal_lengths():
    assert levenshtein((0, 1, 2), (0, 2)) == 1
    assert levenshtein((0,), (0, 1, 2, 3)) == 3


@given(spaced_pair())
def test_hamming_bounds_edit_distance(args):
    a, b, n, m = args
    alphabet_pair = (Sequence(a, _alpha(m)), Sequence(b, _alpha(m)))
    h = hamming_distance(*alphabet_pair)
    d = edit_distance(*alphabet_pair)
    assert h == hamming_ref(a, b)
    assert d <= h  # substitutions alone realize the Hamming script


def test_distance_input_validation():
    s = Sequence.from_text("ACG")
    with pytest.raises(ValueError):
        edit_distance(s, Sequence.from_text("ACGT"))
    with pytest.raises(ValueError):
        hamming_distance(s, Sequence((0, 1, 2), _alpha(3)))


def test_batch_matches_scalar_exhaustively():
    target = (0, 1, 2, 3)
    cands = np.array(all_tuples(4, 4), dtype=np.int64)
    got = levenshtein_batch(cands, target)
    expected = [levenshtein_ref(tuple(row), target) for row in cands.tolist()]
    assert got.tolist() == expected


@given(spaced_pair(n_max=4))
def test_min_indel_pairs_matches_alignment_enumeration(args):
    a, b, n, m = args
    d_ref, b_ref = min_indel_pairs_ref(a, b)
    alphabet = _alpha(m)
    pair = (Sequence(a, alphabet), Sequence(b, alphabet))
    assert edit_distance(*pair) == d_ref
    assert min_indel_pairs(*pair, d_ref) == b_ref


def test_min_indel_pairs_frozen_examples():
    # A cyclic shift needs one indel pair even though four substitutions exist.
    s, t = Sequence.from_text("ACGT"), Sequence.from_text("CGTA")
    assert edit_distance(s, t) == 2
    assert min_indel_pairs(s, t, 2) == 1
    assert edit_type(s, t) == EditType(substitutions=0, indel_pairs=1)

    # Two substitutions, no indels.
    s, t = Sequence.from_text("AA"), Sequence.from_text("CC")
    assert min_indel_pairs(s, t, 2) == 0
    assert edit_type(s, t).label == "2+0×2"


def test_min_indel_pairs_rejects_wrong_distance():
    s, t = Sequence.from_text("AAAA"), Sequence.from_text("AAAC")
    with pytest.raises(ContractError):
        min_indel_pairs(s, t, 3)


@given(sequence_pair(n_max=4))
def test_edit_type_is_consistent(pair):
    s, t = pair
    et = edit_type(s, t)
    assert et.distance == edit_distance(s, t)
    assert et.substitutions >= 0 and et.indel_pairs >= 0
    assert et.label == f"{et.substitutions}+{et.indel_pairs}×2"


def test_min_indel_substitutions_reports_unreachable_counts():
    # Identical strings: zero substitutions at zero pairs; k=1 needs a
    # wasteful delete+insert, still zero substitutions.
    per_k = min_indel_substitutions((0, 1), (0, 1), 1)
    assert per_k == [0, 0]
    # Distinct single characters cannot be aligned with zero edits.
    per_k = min_indel_substitutions((0,), (1,), 0)
    assert per_k == [1]
