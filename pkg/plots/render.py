#!/usr/bin/env python3
"""Render grouped bar charts of sharing frequencies from experiment CSVs.

Two chart kinds: ``sweep`` plots frequency against edit distance, one
bar color per input CSV (one CSV per bucketing function); ``gap`` plots
frequency against edit-type category at a single distance. Output is a
static image, vector formats preferred. Rendering is deterministic:
the same CSVs always produce byte-identical SVG.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "sharing-frequency-plots"

import matplotlib.pyplot as plt

#: Expected CSV header, in order.
SCHEMA = (
    "function", "n", "sigma", "d", "category",
    "trials", "shared", "frequency", "seed",
)
INT_COLUMNS = ("n", "sigma", "d", "trials", "shared", "seed")

#: Bar colors by function order (first CSV red, second green, third blue).
COLORS = ("red", "green", "blue", "orange", "purple", "brown")

EXIT_OK = 0
EXIT_SCHEMA = 2


class SchemaError(Exception):
    """A CSV does not match the experiment-record schema."""


@dataclass(frozen=True)
class Row:
    function: str
    d: int
    category: str
    frequency: float


def _parse_row(raw: dict[str, str], path: str, line: int) -> Row:
    for column in INT_COLUMNS:
        try:
            int(raw[column])
        except ValueError:
            raise SchemaError(
                f"{path}: line {line}: column '{column}' is not an integer: "
                f"{raw[column]!r}"
            ) from None
    try:
        frequency = float(raw["frequency"])
    except ValueError:
        raise SchemaError(
            f"{path}: line {line}: column 'frequency' is not a number: "
            f"{raw['frequency']!r}"
        ) from None
    if not 0.0 <= frequency <= 1.0:
        raise SchemaError(
            f"{path}: line {line}: column 'frequency' outside [0, 1]: {frequency!r}"
        )
    return Row(raw["function"], int(raw["d"]), raw["category"], frequency)


def read_rows(path: str) -> list[Row]:
    """Parse one CSV, validating the header and every cell."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected header") from None
        for got, want in zip(header, SCHEMA):
            if got != want:
                raise SchemaError(
                    f"{path}: header column {got!r} does not match expected "
                    f"column '{want}'"
                )
        if len(header) != len(SCHEMA):
            raise SchemaError(
                f"{path}: expected {len(SCHEMA)} header columns, got {len(header)}"
            )
        rows = []
        for line, values in enumerate(reader, start=2):
            if len(values) != len(SCHEMA):
                raise SchemaError(
                    f"{path}: line {line}: expected {len(SCHEMA)} values, "
                    f"got {len(values)}"
                )
            rows.append(_parse_row(dict(zip(SCHEMA, values)), path, line))
        return rows


def _functions_in_order(tables: list[list[Row]]) -> list[str]:
    seen: list[str] = []
    for rows in tables:
        for row in rows:
            if row.function not in seen:
                seen.append(row.function)
    return seen


def _grouped_bars(ax, groups: list, series: list[str], height) -> None:
    """One bar per (group, series) pair; ``height`` maps the pair to a
    frequency or None for no bar."""
    width = 0.8 / max(len(series), 1)
    for k, name in enumerate(series):
        xs, ys = [], []
        for g, group in enumerate(groups):
            y = height(group, name)
            if y is not None:
                xs.append(g + (k - (len(series) - 1) / 2) * width)
                ys.append(y)
        ax.bar(xs, ys, width=width, label=name, color=COLORS[k % len(COLORS)])
    ax.set_xticks(range(len(groups)))
    ax.set_xticklabels([str(g) for g in groups])
    ax.set_ylim(0.0, 1.0)
    ax.set_ylabel("sharing frequency")
    if series:
        ax.legend()


def render_sweep(tables: list[list[Row]], ax) -> None:
    """Frequency vs distance, grouped by distance, colored by function."""
    series = _functions_in_order(tables)
    heights: dict[tuple[int, str], float] = {}
    for rows in tables:
        for row in rows:
            heights[(row.d, row.function)] = row.frequency
    groups = sorted({d for d, _ in heights})
    _grouped_bars(ax, groups, series, lambda d, f: heights.get((d, f)))
    ax.set_xlabel("edit distance")


def render_gap(tables: list[list[Row]], ax) -> None:
    """Frequency vs edit-type category at one distance, in CSV row order."""
    series = _functions_in_order(tables)
    heights: dict[tuple[str, str], float] = {}
    groups: list[str] = []
    for rows in tables:
        for row in rows:
            heights[(row.category, row.function)] = row.frequency
            if row.category not in groups:
                groups.append(row.category)
    _grouped_bars(ax, groups, series, lambda c, f: heights.get((c, f)))
    ax.set_xlabel("edit type")
    distances = {row.d for rows in tables for row in rows}
    if len(distances) == 1:
        ax.set_title(f"edit distance {distances.pop()}")


RENDERERS = {"sweep": render_sweep, "gap": render_gap}


def build_figure(kind: str, tables: list[list[Row]]):
    fig, ax = plt.subplots(figsize=(6.4, 3.6), layout="constrained")
    RENDERERS[kind](tables, ax)
    return fig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kind", required=True, choices=sorted(RENDERERS),
                        help="chart type")
    parser.add_argument("--csv", required=True, nargs="+",
                        help="input CSVs, one per function")
    parser.add_argument("--out", required=True, help="output image path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        tables = [read_rows(path) for path in args.csv]
    except (OSError, SchemaError) as exc:
        print(f"render: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    fig = build_figure(args.kind, tables)
    # A pinned metadata date keeps the SVG byte-stable across runs.
    metadata = {"Date": None} if Path(args.out).suffix == ".svg" else None
    fig.savefig(args.out, metadata=metadata)
    plt.close(fig)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
