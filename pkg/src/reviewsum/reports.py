"""Ablation report writers: JSON, CSV, aligned text table, and a figure.

Every run drops four files into the output directory: the machine-readable
report (ablation.json), a delimited version (ablation.csv), a plain-text
table with the usual row labels (ablation.txt), and a grouped bar chart of
the macro scores (ablation.png).
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402 - backend must be pinned first

from .evaluation import AblationReport, report_to_dict

METRIC_LABELS = [("rouge1_p", "ROUGE-1"), ("rouge2_p", "ROUGE-2"), ("rougeL_p", "ROUGE-L")]


def write_ablation_outputs(report: AblationReport, out_dir: str | Path) -> dict[str, Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        "json": out_dir / "ablation.json",
        "csv": out_dir / "ablation.csv",
        "txt": out_dir / "ablation.txt",
        "png": out_dir / "ablation.png",
    }
    paths["json"].write_text(
        json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    _write_csv(report, paths["csv"])
    paths["txt"].write_text(format_table(report) + "\n", encoding="utf-8")
    _write_figure(report, paths["png"])
    return paths


def _write_csv(report: AblationReport, path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["configuration", "place", "rouge1_p", "rouge2_p", "rougeL_p"])
        for row in report.rows:
            if row.macro is not None:
                writer.writerow(
                    [row.label, "(macro)", row.macro.rouge1_p, row.macro.rouge2_p, row.macro.rougeL_p]
                )
            for place in report.places:
                scores = row.per_place.get(place)
                if scores is None:
                    writer.writerow([row.label, place, "", "", ""])
                else:
                    writer.writerow(
                        [row.label, place, scores.rouge1_p, scores.rouge2_p, scores.rougeL_p]
                    )


def format_table(report: AblationReport) -> str:
    """Aligned macro-score table, one row per grid configuration."""
    width = max(len(row.label) for row in report.rows) + 2
    lines = [f"{'Configuration':<{width}}ROUGE-1  ROUGE-2  ROUGE-L"]
    for row in report.rows:
        if row.macro is None:
            lines.append(f"{row.label:<{width}}   --       --       --")
        else:
            lines.append(
                f"{row.label:<{width}}"
                f"{row.macro.rouge1_p:7.3f}  {row.macro.rouge2_p:7.3f}  {row.macro.rougeL_p:7.3f}"
            )
        for place, err in sorted(row.errors.items()):
            lines.append(f"{'':<{width}}! {place}: {err}")
    return "\n".join(lines)


def _write_figure(report: AblationReport, path: Path) -> None:
    labels = [row.label for row in report.rows]
    fig, ax = plt.subplots(figsize=(9, 4.5))
    width = 0.26
    for k, (key, name) in enumerate(METRIC_LABELS):
        values = [getattr(row.macro, key) if row.macro is not None else 0.0 for row in report.rows]
        offsets = [i + (k - 1) * width for i in range(len(labels))]
        ax.bar(offsets, values, width=width, label=name)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=20, ha="right", fontsize=8)
    ax.set_ylabel("precision (macro)")
    ax.set_ylim(0.0, 1.0)
    ax.set_title("ROUGE precision by configuration")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
