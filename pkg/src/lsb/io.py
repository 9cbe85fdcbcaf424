"""Sequence input for the command line.

Two formats are sniffed automatically: FASTA (first non-blank character is
'>') and plain text with one sequence per line. A window length tiles each
record into all contiguous substrings of that length, tagged name:offset,
which adapts long reads to the fixed-length machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .seqspace import Alphabet, Sequence


@dataclass(frozen=True)
class InputRecord:
    """One parsed sequence plus where it came from (line number or
    FASTA record name, with :offset when windowed)."""

    tag: str
    sequence: Sequence


def _to_sequence(text: str, alphabet: Alphabet, where: str) -> Sequence:
    try:
        return Sequence.from_text(text, alphabet)
    except ValueError as exc:
        raise ValueError(f"{where}: {exc}") from None


def _windows(text: str, n: int) -> Iterator[tuple[int, str]]:
    for off in range(len(text) - n + 1):
        yield off, text[off : off + n]


def _parse_plain(lines: list[str], alphabet: Alphabet, window: int | None) -> list[InputRecord]:
    out = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if window is None:
            out.append(InputRecord(str(lineno), _to_sequence(text, alphabet, f"line {lineno}")))
        else:
            for off, chunk in _windows(text, window):
                out.append(InputRecord(
                    f"{lineno}:{off}", _to_sequence(chunk, alphabet, f"line {lineno}")
                ))
    return out


def _parse_fasta(lines: list[str], alphabet: Alphabet, window: int | None) -> list[InputRecord]:
    records: list[tuple[str, str]] = []
    name: str | None = None
    parts: list[str] = []
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            if name is not None:
                records.append((name, "".join(parts)))
            name = line[1:].split()[0] if line[1:].split() else line[1:]
            parts = []
        elif name is None:
            raise ValueError("FASTA input must start with a '>' header line")
        else:
            parts.append(line)
    if name is not None:
        records.append((name, "".join(parts)))

    out = []
    for name, text in records:
        if window is None:
            out.append(InputRecord(name, _to_sequence(text, alphabet, f"record {name}")))
        else:
            for off, chunk in _windows(text, window):
                out.append(InputRecord(
                    f"{name}:{off}", _to_sequence(chunk, alphabet, f"record {name}")
                ))
    return out


def read_records(stream: TextIO, alphabet: Alphabet, window: int | None = None) -> list[InputRecord]:
    """Parse a whole input stream, sniffing FASTA vs. plain lines.

    All parsed sequences must end up the same length; windowed records
    shorter than the window are skipped (they produce no substrings).
    """
    lines = stream.read().splitlines()
    is_fasta = next((ln.lstrip().startswith(">") for ln in lines if ln.strip()), False)
    records = (_parse_fasta if is_fasta else _parse_plain)(lines, alphabet, window)
    lengths = {rec.sequence.n for rec in records}
    if len(lengths) > 1:
        raise ValueError(
            f"sequences must share one length, found lengths {sorted(lengths)}"
        )
    return records
