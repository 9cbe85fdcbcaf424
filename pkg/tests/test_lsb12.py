"""The optimal ungapped construction: n buckets per sequence, sharing
exactly on Hamming distance <= 1."""

import pytest
from hypothesis import given, strategies as st

from bruteforce import all_tuples, hamming_ref
from conftest import rank_tuples
from lsb import (
    Alphabet,
    CapacityError,
    DNA,
    Sequence,
    check_counts,
    check_lsb,
    lsb12_buckets,
    lsb12_shares,
    lsb12_spec,
)
from lsb.lsb12 import lsb12_bucket_id, lsb12_build_table

# Ground-truth bucket contents for n = 2 over ACGT: eight buckets, each
# holding the four sequences that agree outside one position. Bucket
# labels are arbitrary, so equality is checked on the family of member
# sets, not on the labels.
N2_BUCKET_MEMBERS = [
    {"AA", "CA", "GA", "TA"},
    {"AA", "AC", "AG", "AT"},
    {"AC", "CC", "GC", "TC"},
    {"AG", "CG", "GG", "TG"},
    {"AT", "CT", "GT", "TT"},
    {"CA", "CC", "CG", "CT"},
    {"GA", "GC", "GG", "GT"},
    {"TA", "TC", "TG", "TT"},
]


def _bucket_members(n: int) -> dict[int, set[str]]:
    members: dict[int, set[str]] = {}
    for ranks in all_tuples(n, 4):
        s = Sequence(ranks)
        for code in lsb12_buckets(s):
            members.setdefault(code, set()).add(s.text())
    return members


def test_n2_bucket_family_matches_ground_truth():
    members = _bucket_members(2)
    assert len(members) == 8
    family = [frozenset(v) for v in members.values()]
    assert sorted(family, key=sorted) == sorted(
        (frozenset(x) for x in N2_BUCKET_MEMBERS), key=sorted
    )


def test_bucket_count_per_sequence_is_n():
    for n in (1, 2, 3, 4):
        for ranks in all_tuples(n, 3):
            s = Sequence(ranks, Alphabet.of_size(3))
            assert len(lsb12_buckets(s)) == n


def test_bucket_ids_are_position_prefixed():
    s = Sequence.from_text("ACGT")
    span = 4**3
    ids = lsb12_buckets(s)
    assert {code // span for code in ids} == {0, 1, 2, 3}
    # Dropping position 0 of ACGT leaves CGT, encoded in base 4.
    assert lsb12_bucket_id(s, 0) == 0 * span + (1 * 16 + 2 * 4 + 3)


@given(st.integers(2, 4).flatmap(
    lambda m: st.tuples(rank_tuples(4, m), rank_tuples(4, m), st.just(m))
))
def test_sharing_iff_hamming_at_most_one(args):
    a, b, m = args
    alphabet = Alphabet.of_size(m)
    s, t = Sequence(a, alphabet), Sequence(b, alphabet)
    expected = hamming_ref(a, b) <= 1
    assert lsb12_shares(s, t) == expected
    assert bool(lsb12_buckets(s) & lsb12_buckets(t)) == expected


def test_sharing_matches_bucket_intersection_exhaustively():
    seqs = [Sequence(t) for t in all_tuples(2, 4)]
    for s in seqs:
        for t in seqs:
            assert lsb12_shares(s, t) == bool(lsb12_buckets(s) & lsb12_buckets(t))


@pytest.mark.parametrize("n", [2, 3])
def test_sensitivity_certified_exhaustively(n):
    assert check_lsb(lsb12_spec(n), 1, 2) == []


@pytest.mark.parametrize("n,m", [(2, 4), (3, 4), (3, 2), (2, 3)])
def test_counts_match_closed_forms(n, m):
    report = check_counts(lsb12_spec(n, Alphabet.of_size(m)))
    assert report.ok
    assert report.observed_buckets == n * m ** (n - 1)
    assert report.size_histogram == {n: m**n}


def test_build_table_matches_bucket_function_up_to_relabeling():
    # The sweep numbers buckets consecutively as it scans; the closed form
    # packs (position, punctured). Same buckets, different labels.
    table = lsb12_build_table(3, DNA)
    assert len(table) == 64

    def family(assignment):
        members = {}
        for s, codes in assignment.items():
            for code in codes:
                members.setdefault(code, set()).add(s)
        return sorted(
            (frozenset(v) for v in members.values()),
            key=lambda fs: sorted(str(x) for x in fs),
        )

    direct = {s: lsb12_buckets(s) for s in table}
    assert family(table) == family(direct)
    assert all(len(codes) == 3 for codes in table.values())


def test_id_capacity_guard():
    lsb12_buckets(Sequence((0,) * 62))  # 62 * 4**61 < 2**128
    with pytest.raises(CapacityError, match="62"):
        lsb12_buckets(Sequence((0,) * 63))


def test_mismatched_pair_is_rejected():
    with pytest.raises(ValueError):
        lsb12_shares(Sequence.from_text("AC"), Sequence.from_text("ACG"))
    with pytest.raises(ValueError):
        lsb12_shares(
            Sequence.from_text("AC"), Sequence((0, 1), Alphabet.of_size(3))
        )
