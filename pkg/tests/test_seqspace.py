"""Alphabets, sequences, and integer codes."""

import pytest
from hypothesis import given, strategies as st

from conftest import rank_tuples
from lsb import Alphabet, CapacityError, DNA, Sequence, decode, encode
from lsb.seqspace import (
    all_rank_tuples,
    all_sequences,
    decode_ranks,
    encode_ranks,
    max_code_length,
)


def test_alphabet_ranks_round_trip():
    assert [DNA.rank(c) for c in "ACGT"] == [0, 1, 2, 3]
    assert [DNA.char(r) for r in range(4)] == list("ACGT")


@pytest.mark.parametrize("glyphs", ["", "A", "AAC", "ACGA"])
def test_alphabet_rejects_bad_glyphs(glyphs):
    with pytest.raises(ValueError):
        Alphabet(glyphs)


def test_alphabet_rejects_unknown_character():
    with pytest.raises(ValueError, match="'X'"):
        DNA.rank("X")


@pytest.mark.parametrize("m", [2, 3, 4, 10, 36])
def test_of_size_builds_distinct_glyphs(m):
    alphabet = Alphabet.of_size(m)
    assert alphabet.size == m
    assert len(set(alphabet.glyphs)) == m


def test_of_size_out_of_range():
    with pytest.raises(ValueError):
        Alphabet.of_size(1)
    with pytest.raises(ValueError):
        Alphabet.of_size(100)


def test_sequence_from_text_round_trip():
    s = Sequence.from_text("GATTACA")
    assert s.ranks == (2, 0, 3, 3, 0, 1, 0)
    assert s.text() == "GATTACA"
    assert str(s) == "GATTACA"


def test_sequence_validation():
    with pytest.raises(ValueError):
        Sequence(())
    with pytest.raises(ValueError):
        Sequence((0, 4))  # rank 4 outside a 4-letter alphabet


def test_sequences_are_hashable_and_comparable():
    assert Sequence.from_text("ACGT") == Sequence.from_text("ACGT")
    assert len({Sequence.from_text("AC"), Sequence.from_text("AC")}) == 1


@st.composite
def _coded_sequence(draw):
    m = draw(st.integers(2, 6))
    n = draw(st.integers(1, 6))
    ranks = tuple(draw(st.integers(0, m - 1)) for _ in range(n))
    return Sequence(ranks, Alphabet.of_size(m))


@given(_coded_sequence())
def test_encode_decode_round_trip(s):
    code = encode(s)
    assert 0 <= code < s.alphabet.size**s.n
    assert decode(code, s.n, s.alphabet) == s


def test_codes_are_a_bijection_exhaustively():
    codes = {encode(s) for s in all_sequences(3, DNA)}
    assert codes == set(range(64))


@given(rank_tuples(5, 4))
def test_encode_ranks_matches_positional_arithmetic(ranks):
    expected = sum(r * 4 ** (4 - i) for i, r in enumerate(ranks))
    assert encode_ranks(ranks, 4) == expected
    assert decode_ranks(expected, 5, 4) == ranks


def test_code_capacity_guard():
    n_max = max_code_length(DNA)
    assert n_max == 64  # 4**64 == 2**128
    encode(Sequence((0,) * n_max))
    with pytest.raises(CapacityError, match="64"):
        encode(Sequence((0,) * (n_max + 1)))
    with pytest.raises(CapacityError):
        decode(0, n_max + 1, DNA)


def test_decode_rejects_out_of_range_codes():
    with pytest.raises(ValueError):
        decode(16, 2, DNA)
    with pytest.raises(ValueError):
        decode(-1, 2, DNA)


def test_all_rank_tuples_lexicographic():
    tuples = list(all_rank_tuples(2, Alphabet.of_size(3)))
    assert tuples == sorted(tuples)
    assert len(tuples) == 9
