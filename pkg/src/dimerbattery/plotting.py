"""Direct matplotlib rendering of sweep results.

Mirrors the layout of the generated plot scripts: one panel per selected
metric, one curve per secondary-axis value, dimensionless drive time on the
x axis. Used by the CLI to drop a PNG next to each CSV.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .sweep import SweepResult, _METRIC_LABELS, _sorted_rows

_SAMPLE_FIELDS = {
    "ergotropy": "ergotropy",
    "anti_ergotropy": "anti_ergotropy",
    "capacity": "capacity",
    "power": "power",
    "avg_power": "avg_power",
    "coherence": "coherence_l1",
}


def render_figure(result: SweepResult, path) -> None:
    """Render the panel grid for ``result`` and save it to ``path``."""
    metrics = result.spec.metrics
    axis_name = result.spec.vary_name
    curves: dict[float | None, list] = {}
    for row in _sorted_rows(result):
        curves.setdefault(row.axis_value, []).append(row.sample)

    ncols = 2 if len(metrics) > 1 else 1
    nrows = (len(metrics) + ncols - 1) // ncols
    fig, axes = plt.subplots(
        nrows, ncols, figsize=(6.0 * ncols, 4.0 * nrows), squeeze=False
    )
    flat = axes.ravel()
    for panel, metric in zip(flat, metrics):
        field = _SAMPLE_FIELDS[metric]
        for axis_value, samples in curves.items():
            points = [
                (s.tau, getattr(s, field))
                for s in samples
                if getattr(s, field) is not None
            ]
            if not points:
                continue
            label = f"{axis_name}={axis_value:g}" if axis_name else None
            panel.plot([p[0] for p in points], [p[1] for p in points], label=label)
        panel.set_xlabel(r"$\Omega t$")
        panel.set_ylabel(_METRIC_LABELS[metric])
        if axis_name:
            panel.legend(fontsize=8)
    for panel in flat[len(metrics):]:
        panel.set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
