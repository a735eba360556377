"""Figures written next to the TSV reports."""

from __future__ import annotations

import os
from collections import Counter
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .mapping import OneMap  # noqa: E402
from .remap import LossReport  # noqa: E402

# no Software/date chunks, so reruns produce identical files
_METADATA = {"Software": None}


def savefig(fig, path: str, dpi: int = 120) -> str:
    tmp = path + ".tmp"
    fig.savefig(tmp, dpi=dpi, format="png", bbox_inches="tight", metadata=_METADATA)
    plt.close(fig)
    os.replace(tmp, path)
    return path


def plot_loss_reports(reports: Sequence[LossReport], path: str) -> str:
    """Horizontal bars of lost synset percentage per language."""
    reports = sorted(reports, key=lambda r: (-r.synsets_before, r.language))
    height = max(2.0, 0.3 * len(reports) + 1.0)
    fig, ax = plt.subplots(figsize=(6.0, height))
    labels = [f"{r.language} ({r.synsets_before})" for r in reports]
    values = [r.lost_pct for r in reports]
    ax.barh(range(len(reports)), values, color="0.35")
    ax.set_yticks(range(len(reports)))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("synsets lost (%)")
    for y, v in enumerate(values):
        ax.text(v, y, f" {v:.2f}", va="center", fontsize=7)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    return savefig(fig, path)


def plot_mapping_summary(one: OneMap, path: str) -> str:
    """Outcome counts per source POS, plus the distribution of split sizes."""
    mapped = Counter(s.pos or "ili" for s in one.genuine_sources())
    lost = Counter(s.pos or "ili" for s in one.nomap)
    split = Counter(s.pos or "ili" for s, _ in one.splits)
    groups = sorted(set(mapped) | set(lost))

    fig, (left, right) = plt.subplots(1, 2, figsize=(9.0, 3.2))
    xs = range(len(groups))
    width = 0.27
    for i, (name, tally) in enumerate((("mapped", mapped), ("split", split), ("lost", lost))):
        left.bar([x + (i - 1) * width for x in xs], [tally[g] for g in groups],
                 width, label=name)
    left.set_xticks(list(xs))
    left.set_xticklabels(groups)
    left.set_yscale("symlog")
    left.set_ylabel("source synsets")
    left.legend(frameon=False, fontsize=8)

    sizes = Counter(len(bag) for _, bag in one.splits)
    ks = sorted(sizes)
    right.bar([str(k) for k in ks], [sizes[k] for k in ks], color="0.35")
    right.set_xlabel("candidate targets per split synset")
    right.set_ylabel("synsets")
    for ax in (left, right):
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
    return savefig(fig, path)
