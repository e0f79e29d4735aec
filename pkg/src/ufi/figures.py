"""Report rendering: CSV summaries plus matplotlib figures written to files.

This is the only module that touches matplotlib; the Agg backend is forced so
report generation works headless.  PNG metadata is pinned to keep repeated
runs byte-stable.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .invariants import BettiTable, HilbertSummary  # noqa: E402
from .poset import IndexVectorPoset, covering_relations  # noqa: E402
from .simplicial import SimplicialComplex  # noqa: E402

_PNG_META = {"Software": "ufi"}


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=110, metadata=_PNG_META)
    plt.close(fig)


def fvector_figure(complex_: SimplicialComplex, path: Path) -> None:
    f = complex_.f_vector
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ax.bar(range(-1, len(f) - 1), f, color="#4878a8")
    ax.set_xlabel("face dimension")
    ax.set_ylabel("count")
    ax.set_title("f-vector")
    ax.set_xticks(range(-1, len(f) - 1))
    fig.tight_layout()
    _save(fig, path)


def betti_figure(table: BettiTable, path: Path) -> None:
    data = table.as_dict()
    cols = sorted({i for i, _j in data})
    totals = [sum(r for (i, _j), r in data.items() if i == c) for c in cols]
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ax.bar(cols, totals, color="#a85448")
    ax.set_xlabel("homological index")
    ax.set_ylabel("total Betti number")
    ax.set_title("Betti numbers")
    ax.set_xticks(cols)
    fig.tight_layout()
    _save(fig, path)


def hasse_figure(poset: IndexVectorPoset, path: Path) -> None:
    """Hasse diagram with elements layered by coordinate sum."""
    by_rank: dict[int, list] = {}
    for e in poset.elements:
        by_rank.setdefault(sum(e), []).append(e)
    positions = {}
    for rank, row in sorted(by_rank.items()):
        for idx, e in enumerate(row):
            positions[e] = (idx - (len(row) - 1) / 2, rank)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for lo, hi, gap in covering_relations(poset):
        (x1, y1), (x2, y2) = positions[lo], positions[hi]
        style = "-" if gap == 1 else "--"
        ax.plot([x1, x2], [y1, y2], style, color="#777777", zorder=1, lw=1)
    for e, (x, y) in positions.items():
        label = "(" + ",".join(map(str, e)) + ")"
        ax.annotate(
            label,
            (x, y),
            ha="center",
            va="center",
            zorder=2,
            fontsize=8,
            bbox={"boxstyle": "round", "fc": "white", "ec": "#333333"},
        )
    ax.set_axis_off()
    ax.set_title("index-vector poset")
    fig.tight_layout()
    _save(fig, path)


# ---------------------------------------------------------------------------
# delimited output
# ---------------------------------------------------------------------------


def write_generators_csv(path: Path, tags) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["face", "index_vector", "monomial"])
        writer.writerows(tags)


def write_betti_csv(path: Path, table: BettiTable) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["homological_index", "degree", "rank"])
        for (i, j), r in table.entries:
            writer.writerow([i, j, r])


def write_invariants_csv(path: Path, summary: HilbertSummary) -> None:
    rows = [
        ("n", summary.n),
        ("classes", summary.k),
        ("f_vector", " ".join(map(str, summary.f_vector))),
        ("hilbert_numerator", summary.numerator_str),
        ("dimension", summary.dimension),
        ("codimension", summary.codimension),
        ("multiplicity", summary.multiplicity),
        ("projective_dimension", summary.projective_dimension),
        ("depth", summary.depth),
        ("regularity", summary.regularity),
        ("cohen_macaulay", "true" if summary.cohen_macaulay else "false"),
    ]
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["invariant", "value"])
        writer.writerows(rows)
