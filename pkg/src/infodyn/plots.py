"""Emission of standalone plot scripts for sweep output directories.

The harness writes data plus a script rather than rendered images, so the
package itself needs no plotting dependency.  The emitted scripts require
matplotlib when executed and read the CSVs written next to them.
"""

from __future__ import annotations

__all__ = ["plot_script"]

_COMMON = '''#!/usr/bin/env python3
"""Render @TITLE@ from the aggregate CSV written alongside this script.

Usage: python plot_@EXPERIMENT@.py [aggregate_csv] [output_prefix]
Requires matplotlib.
"""
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = Path(__file__).resolve().parent
CSV_PATH = Path(sys.argv[1]) if len(sys.argv) > 1 else HERE / "@EXPERIMENT@_aggregate.csv"
PREFIX = sys.argv[2] if len(sys.argv) > 2 else str(HERE / "@EXPERIMENT@")

MEASURES = ("E", "S", "C", "H")

with open(CSV_PATH) as fh:
    ROWS = [row for row in csv.DictReader(fh)]
for row in ROWS:
    row["scale"] = int(row["scale"])
    for key in MEASURES:
        row[key] = float(row[key])
'''

_RBN_BODY = '''
K_VALUES = sorted({float(r["rule_or_k"]) for r in ROWS})
SCALES = sorted({r["scale"] for r in ROWS})

def stat_curve(stat, scale, key):
    by_k = {float(r["rule_or_k"]): r[key] for r in ROWS
            if r["stat"] == stat and r["scale"] == scale}
    return [by_k[k] for k in K_VALUES]

fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True)
for ax, key, label in zip(
    axes.ravel(), MEASURES,
    ("Emergence", "Self-organization", "Complexity", "Homeostasis"),
):
    for scale in SCALES:
        ax.plot(K_VALUES, stat_curve("mean", scale, key), marker="o",
                markersize=3, label=f"b={scale}")
    ax.set_title(label)
    ax.set_xlabel("K")
    ax.set_ylim(-0.05, 1.05)
    ax.grid(True, alpha=0.3)
axes[0, 0].legend(fontsize=8)
fig.suptitle("Mean measures vs. connectivity")
fig.tight_layout()
fig.savefig(f"{PREFIX}_means.png", dpi=150)

# boxplots at the smallest scale, from the precomputed quartile rows
scale = SCALES[0]
fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True)
for ax, key, label in zip(
    axes.ravel(), MEASURES,
    ("Emergence", "Self-organization", "Complexity", "Homeostasis"),
):
    stats = []
    for k in K_VALUES:
        cell = {r["stat"]: r[key] for r in ROWS
                if float(r["rule_or_k"]) == k and r["scale"] == scale}
        stats.append({
            "med": cell["median"], "q1": cell["q25"], "q3": cell["q75"],
            "whislo": cell["whisker_lo"], "whishi": cell["whisker_hi"],
            "label": f"{k:g}",
        })
    ax.bxp(stats, showfliers=False)
    ax.set_title(label)
    ax.set_xlabel("K")
    ax.tick_params(axis="x", labelsize=6)
    ax.grid(True, alpha=0.3)
fig.suptitle(f"Distribution across instances (b={scale})")
fig.tight_layout()
fig.savefig(f"{PREFIX}_boxplots.png", dpi=150)
print(f"wrote {PREFIX}_means.png and {PREFIX}_boxplots.png")
'''

_ECA_BODY = '''
RULES = list(dict.fromkeys(r["rule_or_k"] for r in ROWS))
SCALES = sorted({r["scale"] for r in ROWS})
POSITIONS = range(len(RULES))

for scale in SCALES:
    fig, axes = plt.subplots(2, 2, figsize=(11, 7), sharex=True)
    for ax, key, label in zip(
        axes.ravel(), MEASURES,
        ("Emergence", "Self-organization", "Complexity", "Homeostasis"),
    ):
        means = {r["rule_or_k"]: r[key] for r in ROWS
                 if r["stat"] == "mean" and r["scale"] == scale}
        ax.bar(POSITIONS, [means[rule] for rule in RULES])
        ax.set_title(label)
        ax.set_xticks(POSITIONS)
        ax.set_xticklabels(RULES, rotation=90, fontsize=7)
        ax.set_ylim(0, 1.05)
        ax.grid(True, axis="y", alpha=0.3)
    fig.suptitle(f"Mean measures per rule (b={scale})")
    fig.tight_layout()
    fig.savefig(f"{PREFIX}_b{scale}.png", dpi=150)
    print(f"wrote {PREFIX}_b{scale}.png")
'''

_PROFILE_BODY = '''
RULES = list(dict.fromkeys(r["rule_or_k"] for r in ROWS))
SCALES = sorted({r["scale"] for r in ROWS})

baseline = {}
baseline_path = CSV_PATH.with_name(CSV_PATH.name.replace("_aggregate.csv", "_h_baseline.csv"))
if baseline_path.exists():
    with open(baseline_path) as fh:
        for row in csv.DictReader(fh):
            baseline[int(row["scale"])] = float(row["h_baseline"])

fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True)
for ax, key, label in zip(
    axes.ravel(), MEASURES,
    ("Emergence", "Self-organization", "Complexity", "Homeostasis"),
):
    for rule in RULES:
        curve = {r["scale"]: r[key] for r in ROWS
                 if r["stat"] == "mean" and r["rule_or_k"] == rule}
        ax.plot(SCALES, [curve[s] for s in SCALES], marker="o", label=f"rule {rule}")
    if key == "H" and baseline:
        ax.plot(SCALES, [baseline[s] for s in SCALES], "k--", label="uncorrelated")
    ax.set_title(label)
    ax.set_xlabel("scale b")
    ax.set_xscale("log", base=2)
    ax.set_xticks(SCALES)
    ax.set_xticklabels(SCALES)
    ax.set_ylim(-0.05, 1.05)
    ax.grid(True, alpha=0.3)
axes[0, 0].legend(fontsize=8)
fig.suptitle("Multiscale profiles")
fig.tight_layout()
fig.savefig(f"{PREFIX}.png", dpi=150)
print(f"wrote {PREFIX}.png")
'''

_BODIES = {
    "rbn_sweep": ("connectivity sweep results", _RBN_BODY),
    "eca_survey": ("rule survey results", _ECA_BODY),
    "eca_profiles": ("multiscale profiles", _PROFILE_BODY),
}


def plot_script(experiment: str) -> str:
    """Standalone script text for one experiment's output directory."""
    if experiment not in _BODIES:
        raise ValueError(f"no plot script for experiment {experiment!r}")
    title, body = _BODIES[experiment]
    return (_COMMON + body).replace("@EXPERIMENT@", experiment).replace("@TITLE@", title)
