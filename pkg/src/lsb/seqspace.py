"""Alphabets, fixed-length sequences, and their integer codes.

Sequences are stored as tuples of character ranks (0-based positions in the
alphabet's character order). All values here are immutable and hashable, so
they are safe to share across threads and to use as dict/set keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .errors import CapacityError

#: Code values are kept inside a 128-bit space so downstream consumers can
#: treat bucket labels as fixed-width integers.
CODE_SPACE_BITS = 128

_GLYPH_POOL = "ACGT" + "0123456789" + "BDEFHIJKLMNOPQRSUVWXYZ"


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet of at least two characters.

    The position of a character in ``glyphs`` is its rank; ranks drive all
    arithmetic (codes, partition indices) while glyphs only matter for I/O.
    """

    glyphs: str

    def __post_init__(self) -> None:
        if len(self.glyphs) < 2:
            raise ValueError(f"alphabet needs at least 2 characters, got {len(self.glyphs)}")
        if len(set(self.glyphs)) != len(self.glyphs):
            raise ValueError(f"alphabet characters must be distinct: {self.glyphs!r}")

    @property
    def size(self) -> int:
        return len(self.glyphs)

    @property
    def rank_of(self) -> dict[str, int]:
        # Cached on first use; object.__setattr__ sidesteps the frozen guard.
        cached = self.__dict__.get("_rank_of")
        if cached is None:
            cached = {ch: i for i, ch in enumerate(self.glyphs)}
            object.__setattr__(self, "_rank_of", cached)
        return cached

    def rank(self, ch: str) -> int:
        try:
            return self.rank_of[ch]
        except KeyError:
            raise ValueError(f"character {ch!r} is not in alphabet {self.glyphs!r}") from None

    def char(self, rank: int) -> str:
        return self.glyphs[rank]

    @staticmethod
    def of_size(m: int) -> "Alphabet":
        """A default alphabet of ``m`` characters (DNA glyphs when m <= 4)."""
        if m < 2 or m > len(_GLYPH_POOL):
            raise ValueError(f"no default glyphs for alphabet size {m}")
        return Alphabet(_GLYPH_POOL[:m])


#: The default 4-character DNA alphabet.
DNA = Alphabet("ACGT")


@dataclass(frozen=True)
class Sequence:
    """A fixed-length word over an :class:`Alphabet`, stored as ranks."""

    ranks: tuple[int, ...]
    alphabet: Alphabet = field(default=DNA)

    def __post_init__(self) -> None:
        if len(self.ranks) < 1:
            raise ValueError("sequences must have length >= 1")
        m = self.alphabet.size
        if any(r < 0 or r >= m for r in self.ranks):
            raise ValueError(f"ranks {self.ranks} out of range for alphabet size {m}")

    @property
    def n(self) -> int:
        return len(self.ranks)

    def text(self) -> str:
        g = self.alphabet.glyphs
        return "".join(g[r] for r in self.ranks)

    def __str__(self) -> str:
        return self.text()

    @staticmethod
    def from_text(text: str, alphabet: Alphabet = DNA) -> "Sequence":
        return Sequence(tuple(alphabet.rank(ch) for ch in text), alphabet)


def max_code_length(alphabet: Alphabet) -> int:
    """Largest n for which all length-n codes fit the 128-bit code space."""
    m, n = alphabet.size, 0
    while m ** (n + 1) <= 1 << CODE_SPACE_BITS:
        n += 1
    return n


def _check_code_capacity(n: int, alphabet: Alphabet) -> None:
    if alphabet.size**n > 1 << CODE_SPACE_BITS:
        raise CapacityError(
            f"codes for length-{n} sequences over {alphabet.size} characters exceed "
            f"{CODE_SPACE_BITS} bits (max supported length is {max_code_length(alphabet)})"
        )


def encode(s: Sequence) -> int:
    """Rank of ``s`` in the lexicographic order of all length-n words."""
    _check_code_capacity(s.n, s.alphabet)
    return encode_ranks(s.ranks, s.alphabet.size)


def encode_ranks(ranks: tuple[int, ...], m: int) -> int:
    code = 0
    for r in ranks:
        code = code * m + r
    return code


def decode(code: int, n: int, alphabet: Alphabet) -> Sequence:
    """Inverse of :func:`encode` for the given length and alphabet."""
    _check_code_capacity(n, alphabet)
    if code < 0 or code >= alphabet.size**n:
        raise ValueError(f"code {code} out of range for length {n} over {alphabet.size} characters")
    return Sequence(decode_ranks(code, n, alphabet.size), alphabet)


def decode_ranks(code: int, n: int, m: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        code, out[i] = divmod(code, m)
    return tuple(out)


def all_rank_tuples(n: int, alphabet: Alphabet) -> Iterator[tuple[int, ...]]:
    """All length-n rank tuples in lexicographic order."""
    return itertools.product(range(alphabet.size), repeat=n)


def all_sequences(n: int, alphabet: Alphabet) -> Iterator[Sequence]:
    """All length-n sequences in lexicographic order."""
    for ranks in all_rank_tuples(n, alphabet):
        yield Sequence(ranks, alphabet)
