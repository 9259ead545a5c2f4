"""Report figures written next to the delimited report files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .oov import GENERATION, TRANSLATION, OovComparison  # noqa: E402

# fixed metadata keeps reruns byte-identical
_PNG_META = {"Software": None}


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)


def plot_oov_comparison(comparison: OovComparison, path, title: str = "OOV tokens before and after injection"):
    steps = (TRANSLATION, GENERATION)
    before = [comparison.before.by_step[s] for s in steps]
    after = [comparison.after.by_step[s] for s in steps]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    xs = range(len(steps))
    width = 0.38
    ax.bar([x - width / 2 for x in xs], before, width, label="before", color="#8c8c8c")
    ax.bar([x + width / 2 for x in xs], after, width, label="after", color="#2b6cb0")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(["%s step" % s for s in steps])
    ax.set_ylabel("OOV tokens")
    red = comparison.reduction_percent
    sub = "" if red is None else " (reduction %.1f%%)" % red
    ax.set_title(title + sub, fontsize=9)
    ax.legend(frameon=False)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    _save(fig, path)


def plot_dictionary_summary(counts: dict, path, class_counts: dict = None):
    panels = 2 if class_counts else 1
    fig, axes = plt.subplots(1, panels, figsize=(4 * panels, 3.2), squeeze=False)
    ax = axes[0][0]
    ax.bar(["noun", "verb"], [counts.get("noun", 0), counts.get("verb", 0)], color=["#2b6cb0", "#c05621"])
    ax.set_ylabel("records")
    ax.set_title("word-form records (%d)" % counts.get("total", 0), fontsize=9)
    if class_counts:
        ax = axes[0][1]
        labels = sorted(class_counts)
        ax.bar(labels, [class_counts[k] for k in labels], color="#718096")
        ax.set_title("nouns per class", fontsize=9)
    _save(fig, path)
