"""The optimal ungapped bucketing function: sequences at edit distance at
most 1 always share a bucket, sequences at distance 2 or more never do.

Each bucket holds the m sequences that agree everywhere except at one fixed
position, so a bucket is identified by (position, sequence with that
position removed). Two labelings are provided: a direct closed form that
packs that pair into an integer in O(n) per sequence, and a literal sweep
that assigns consecutive integers while scanning the whole space. They
induce the same buckets up to relabeling, which the tests verify.
"""

from __future__ import annotations

from .errors import CapacityError
from .seqspace import Alphabet, Sequence, all_rank_tuples, encode_ranks

#: The sweep materializes the full space; keep it desk-scale.
SWEEP_GUARD = 1 << 20

#: Packed ids live in the 128-bit code space.
ID_SPACE_BITS = 128


def _check_id_capacity(n: int, m: int) -> None:
    if n * m ** (n - 1) > 1 << ID_SPACE_BITS:
        max_n = 1
        while (max_n + 1) * m**max_n <= 1 << ID_SPACE_BITS:
            max_n += 1
        raise CapacityError(
            f"bucket ids for n={n}, alphabet size {m} exceed {ID_SPACE_BITS} bits "
            f"(max supported length is {max_n})"
        )


def lsb12_bucket_id(s: Sequence, position: int) -> int:
    """Packed id of the bucket of ``s`` at a 0-based position: the position
    index times m**(n-1), plus the code of ``s`` with that position removed."""
    _check_id_capacity(s.n, s.alphabet.size)
    punctured = s.ranks[:position] + s.ranks[position + 1 :]
    return position * s.alphabet.size ** (s.n - 1) + encode_ranks(punctured, s.alphabet.size)


def lsb12_buckets(s: Sequence) -> set[int]:
    """The n bucket ids of ``s``, one per position."""
    return {lsb12_bucket_id(s, i) for i in range(s.n)}


def lsb12_shares(s: Sequence, t: Sequence) -> bool:
    """Whether ``s`` and ``t`` share a bucket: true exactly when they differ
    in at most one position."""
    if s.alphabet != t.alphabet or s.n != t.n:
        raise ValueError("sequences must share length and alphabet")
    diffs = 0
    for a, b in zip(s.ranks, t.ranks):
        if a != b:
            diffs += 1
            if diffs > 1:
                return False
    return True


def lsb12_build_table(n: int, alphabet: Alphabet) -> dict[Sequence, set[int]]:
    """Assign buckets by sweeping the whole space in lexicographic order.

    Every time the scan meets the smallest character at some position of
    some sequence, a fresh integer names a new bucket and all m variants at
    that position join it. Exponential in n; serves as the reference the
    closed form is checked against.
    """
    m = alphabet.size
    if m**n > SWEEP_GUARD:
        raise CapacityError(
            f"sweep for n={n}, alphabet size {m} enumerates {m}**{n} sequences; "
            f"guard is {SWEEP_GUARD}"
        )
    table: dict[tuple[int, ...], set[int]] = {t: set() for t in all_rank_tuples(n, alphabet)}
    next_bucket = 1
    for ranks in all_rank_tuples(n, alphabet):
        for i, r in enumerate(ranks):
            if r == 0:
                head, tail = ranks[:i], ranks[i + 1 :]
                for c in range(m):
                    table[head + (c,) + tail].add(next_bucket)
                next_bucket += 1
    return {Sequence(t, alphabet): ids for t, ids in table.items()}
