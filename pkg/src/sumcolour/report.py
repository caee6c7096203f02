"""Delimited colour tables plus rendered figures for a ground set."""
from __future__ import annotations

import csv
from collections import Counter
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .qvec import format_vec
from .registry import ColouringRef, resolve

_DELIMS = {"csv": ",", "tsv": "\t"}


def write_report(colouring: str | ColouringRef,
                 ground: Sequence[Sequence[Fraction]],
                 out_dir: str | Path, fmt: str = "csv") -> list[Path]:
    """Colour every ground vector; write one table and two figures.

    The table lands in ``colours.<fmt>`` with a row per vector, the
    figures in ``scatter.png`` (points placed by their first one or two
    coordinates, tinted by colour) and ``class_sizes.png`` (colour class
    counts).  Returns the written paths in that order.
    """
    ref = resolve(colouring) if isinstance(colouring, str) else colouring
    if fmt not in _DELIMS:
        raise ValueError(f"fmt must be one of {sorted(_DELIMS)}, got {fmt!r}")
    vecs = [tuple(Fraction(c) for c in v) for v in ground]
    if not vecs:
        raise ValueError("ground must be non-empty")
    dim = len(vecs[0])
    colours = [ref.fn(v) for v in vecs]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    table = out / f"colours.{fmt}"
    with table.open("w", newline="") as fh:
        writer = csv.writer(fh, delimiter=_DELIMS[fmt])
        writer.writerow([f"c{i}" for i in range(dim)] + ["colour"])
        for vec, c in zip(vecs, colours):
            writer.writerow(format_vec(vec) + [c])

    scatter = out / "scatter.png"
    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = [float(v[0]) for v in vecs]
    if dim == 1:
        ax.scatter(xs, colours, s=14, c=colours, cmap="tab20")
        ax.set_xlabel("value")
        ax.set_ylabel("colour")
    else:
        ys = [float(v[1]) for v in vecs]
        ax.scatter(xs, ys, s=14, c=colours, cmap="tab20")
        ax.set_xlabel("first coordinate")
        ax.set_ylabel("second coordinate")
    ax.set_title(f"{ref.spec} over {len(vecs)} points")
    fig.tight_layout()
    fig.savefig(scatter, dpi=150)
    plt.close(fig)

    sizes = out / "class_sizes.png"
    counts = Counter(colours)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bar([str(c) for c in sorted(counts)],
           [counts[c] for c in sorted(counts)])
    ax.set_xlabel("colour")
    ax.set_ylabel("points")
    ax.set_title(f"{ref.spec}: occupied classes")
    fig.tight_layout()
    fig.savefig(sizes, dpi=150)
    plt.close(fig)

    return [table, scatter, sizes]
