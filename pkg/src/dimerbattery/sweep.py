"""Parameter-sweep engine, bundled figure presets, and flat-file emission.

A sweep evaluates the selected metrics on a tau grid, optionally repeated
over a secondary parameter axis (detuning, mean frequency, coupling or
temperature). Results are persisted as a single CSV with a fixed header and
a deterministic byte layout, plus a standalone plain-text plotting script
that reads the sibling CSV. Provenance (the full normalized configuration
and the tool version) is echoed as ``#``-prefixed comment lines at the top
of the CSV so every output file is self-describing and reproducible.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from .charging import evolve
from .linalg import hermitian_eig
from .metrics import (
    MetricsSample,
    anti_ergotropy,
    average_power,
    capacity,
    ergotropy,
    instantaneous_power,
    l1_coherence,
)
from .model import DimerParams, hamiltonian

VARY_AXES = ("delta", "nu0", "v12", "temperature")
METRIC_NAMES = ("ergotropy", "anti_ergotropy", "capacity", "power", "avg_power", "coherence")
CSV_HEADER = "axis,axis_value,tau,ergotropy,anti_ergotropy,capacity,power,avg_power,coherence"

_CONFIG_KEYS = (
    "nu0",
    "delta",
    "v12",
    "temperature",
    "tau_start",
    "tau_stop",
    "tau_count",
    "vary_name",
    "vary_values",
    "metrics",
    "power_step",
)


class InvalidSpec(ValueError):
    """Sweep specification violates its invariants; ``problems`` lists them."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


class ValidationError(InvalidSpec):
    """Configuration document parsed but failed validation."""


class ParseError(ValueError):
    """Configuration document is not valid JSON; carries line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownPreset(KeyError):
    """No bundled figure preset under that name."""


class IoFailure(OSError):
    """Emitting results failed at the I/O layer."""


@dataclass(frozen=True)
class SweepSpec:
    """Everything needed to reproduce one sweep."""

    params: DimerParams
    tau_start: float = 0.0
    tau_stop: float = 2.0 * math.pi
    tau_count: int = 401
    vary_name: str | None = None
    vary_values: tuple[float, ...] = ()
    metrics: tuple[str, ...] = METRIC_NAMES
    power_step: float = 1e-5

    def tau_grid(self) -> np.ndarray:
        return np.linspace(self.tau_start, self.tau_stop, self.tau_count)

    def problems(self) -> list[str]:
        """Field-level diagnostics; empty when the spec is runnable."""
        out = []
        if not math.isfinite(self.tau_start) or self.tau_start < 0:
            out.append(f"tau_start must be finite and >= 0, got {self.tau_start}")
        if not math.isfinite(self.tau_stop):
            out.append("tau_stop must be finite")
        if self.tau_count < 1:
            out.append(f"tau_count must be >= 1, got {self.tau_count}")
        if self.tau_count > 1 and not self.tau_stop > self.tau_start:
            out.append("tau_stop must exceed tau_start")
        if self.vary_name is not None and self.vary_name not in VARY_AXES:
            out.append(f"vary_name must be one of {VARY_AXES}, got {self.vary_name!r}")
        if self.vary_name is None and self.vary_values:
            out.append("vary_values given without vary_name")
        if self.vary_name is not None:
            if not self.vary_values:
                out.append("vary_name given without vary_values")
            for value in self.vary_values:
                if not math.isfinite(value):
                    out.append(f"vary_values must be finite, got {value}")
                elif self.vary_name in ("nu0", "temperature") and value <= 0:
                    out.append(f"{self.vary_name} values must be > 0, got {value}")
        if not self.metrics:
            out.append("metrics must be non-empty")
        for name in self.metrics:
            if name not in METRIC_NAMES:
                out.append(f"unknown metric {name!r}")
        if not (math.isfinite(self.power_step) and self.power_step > 0):
            out.append(f"power_step must be finite and > 0, got {self.power_step}")
        return out

    def to_config(self) -> dict:
        """Flat mapping that :func:`parse_config` accepts losslessly."""
        return {
            "nu0": self.params.nu0,
            "delta": self.params.delta,
            "v12": self.params.v12,
            "temperature": self.params.temperature,
            "tau_start": self.tau_start,
            "tau_stop": self.tau_stop,
            "tau_count": self.tau_count,
            "vary_name": self.vary_name,
            "vary_values": list(self.vary_values),
            "metrics": list(self.metrics),
            "power_step": self.power_step,
        }


@dataclass(frozen=True)
class SweepRow:
    """One metrics sample tagged with its secondary-axis value (None if no axis)."""

    axis_value: float | None
    sample: MetricsSample


@dataclass
class SweepResult:
    spec: SweepSpec
    rows: list[SweepRow]
    provenance: dict = field(default_factory=dict)


def figure_preset(name: str) -> SweepSpec:
    """Bundled parameter studies fig1..fig4.

    fig1 sweeps the detuning at fixed mean frequency and weak coupling, fig2
    the mean frequency on resonance, fig3 the coupling strength under fixed
    detuning, fig4 the temperature in the nearly uncoupled detuned regime.
    Each uses 401 tau points on [0, 2 pi] and the four plotted metrics.
    """
    presets = {
        "fig1": dict(
            fixed=dict(nu0=6.0, v12=0.05, temperature=0.5),
            vary_name="delta",
            vary_values=(0.0, 4.0, -8.0, 10.0),
        ),
        "fig2": dict(
            fixed=dict(delta=0.0, v12=0.5, temperature=0.5),
            vary_name="nu0",
            vary_values=(2.0, 4.0, 6.0, 8.0),
        ),
        "fig3": dict(
            fixed=dict(nu0=3.5, delta=5.0, temperature=0.5),
            vary_name="v12",
            vary_values=(0.0, 1.5, 10.0),
        ),
        "fig4": dict(
            fixed=dict(nu0=4.0, delta=6.0, v12=0.01),
            vary_name="temperature",
            vary_values=(0.5, 1.0, 2.0),
        ),
    }
    if name not in presets:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {sorted(presets)}")
    entry = presets[name]
    base = dict(entry["fixed"])
    base[entry["vary_name"]] = entry["vary_values"][0]
    return SweepSpec(
        params=DimerParams(**base),
        vary_name=entry["vary_name"],
        vary_values=entry["vary_values"],
        metrics=("ergotropy", "power", "coherence", "capacity"),
    )


def _compute_sample(
    params: DimerParams, tau: float, metrics: tuple[str, ...], power_step: float
) -> MetricsSample:
    h = hamiltonian(params)
    basis = hermitian_eig(h)
    rho = evolve(params, tau)
    values: dict[str, float | None] = {}
    if "ergotropy" in metrics:
        values["ergotropy"] = ergotropy(rho, h)
    if "anti_ergotropy" in metrics:
        values["anti_ergotropy"] = anti_ergotropy(rho, h)
    if "capacity" in metrics:
        values["capacity"] = capacity(rho, h)
    if "power" in metrics:
        values["power"] = instantaneous_power(params, tau, power_step)
    if "avg_power" in metrics:
        values["avg_power"] = average_power(params, tau) if tau > 0 else None
    if "coherence" in metrics:
        values["coherence_l1"] = l1_coherence(rho, basis)
    return MetricsSample(tau=tau, **values)


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate the spec; deterministic row set, one row per (axis value, tau).

    Raises:
        InvalidSpec: with field-level diagnostics if the spec is malformed.
    """
    problems = spec.problems()
    if problems:
        raise InvalidSpec(problems)

    if spec.vary_name is None:
        curves: list[tuple[float | None, DimerParams]] = [(None, spec.params)]
    else:
        curves = [
            (value, replace(spec.params, **{spec.vary_name: value}))
            for value in spec.vary_values
        ]

    taus = spec.tau_grid()
    rows = [
        SweepRow(axis_value, _compute_sample(params, float(tau), spec.metrics, spec.power_step))
        for axis_value, params in curves
        for tau in taus
    ]
    provenance = {
        "generator": "dimerbattery",
        "version": __version__,
        "config": spec.to_config(),
        "csv": "sweep.csv",
    }
    return SweepResult(spec=spec, rows=rows, provenance=provenance)


def _render(value: float | None) -> str:
    return "" if value is None else format(value, ".17g")


def _sorted_rows(result: SweepResult) -> list[SweepRow]:
    return sorted(
        result.rows,
        key=lambda row: (
            row.axis_value if row.axis_value is not None else 0.0,
            row.sample.tau,
        ),
    )


def emit_csv(result: SweepResult, destination) -> None:
    """Write the sweep as CSV with a provenance comment header.

    Fixed column set; metrics outside the spec's selection stay empty, as
    does avg_power at tau = 0. Floats carry 17 significant digits so parsing
    the file back reproduces every value bit for bit. Rows are ordered by
    (axis value, tau).

    Raises:
        IoFailure: if writing to ``destination`` fails.
    """
    axis_name = result.spec.vary_name or "none"
    lines = [
        f"# generator: {result.provenance.get('generator', 'dimerbattery')} "
        f"{result.provenance.get('version', __version__)}",
        f"# csv: {result.provenance.get('csv', 'sweep.csv')}",
        "# config: " + json.dumps(result.provenance.get("config", result.spec.to_config()),
                                  sort_keys=True, separators=(",", ":")),
        CSV_HEADER,
    ]
    for row in _sorted_rows(result):
        sample = row.sample
        lines.append(
            ",".join(
                (
                    axis_name,
                    _render(row.axis_value),
                    _render(sample.tau),
                    _render(sample.ergotropy),
                    _render(sample.anti_ergotropy),
                    _render(sample.capacity),
                    _render(sample.power),
                    _render(sample.avg_power),
                    _render(sample.coherence_l1),
                )
            )
        )
    try:
        destination.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IoFailure(f"CSV emission failed: {exc}") from exc


_METRIC_LABELS = {
    "ergotropy": "ergotropy E",
    "anti_ergotropy": "anti-ergotropy W",
    "capacity": "capacity C",
    "power": "power P",
    "avg_power": "average power",
    "coherence": "l1 coherence",
}

_PLOT_TEMPLATE = '''#!/usr/bin/env python3
"""Render {stem} panels from the sibling CSV ({csv}).

Generated by dimerbattery {version}. Usage:

    python3 {stem}.plot [output.png]
"""
import csv
import sys
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

CSV_PATH = Path(__file__).resolve().parent / {csv!r}
METRICS = {metrics!r}
LABELS = {labels!r}
COLUMNS = {header!r}.split(",")

curves = {{}}
with open(CSV_PATH, newline="", encoding="utf-8") as handle:
    rows = [r for r in csv.reader(handle) if r and not r[0].startswith("#")]
for record in rows[1:]:
    named = dict(zip(COLUMNS, record))
    key = named["axis_value"]
    curves.setdefault(key, []).append(named)

ncols = 2 if len(METRICS) > 1 else 1
nrows = (len(METRICS) + ncols - 1) // ncols
fig, axes = plt.subplots(nrows, ncols, figsize=(6.0 * ncols, 4.0 * nrows), squeeze=False)
flat = axes.ravel()
axis_name = rows[1][0] if len(rows) > 1 else "none"
for panel, metric in zip(flat, METRICS):
    column = "coherence" if metric == "coherence" else metric
    for key in sorted(curves, key=lambda k: float(k) if k else 0.0):
        pts = [(float(r["tau"]), float(r[column])) for r in curves[key] if r[column]]
        if not pts:
            continue
        label = f"{{axis_name}}={{float(key):g}}" if key else None
        panel.plot([p[0] for p in pts], [p[1] for p in pts], label=label)
    panel.set_xlabel(r"$\\Omega t$")
    panel.set_ylabel(LABELS[metric])
    if any(curves):
        panel.legend(fontsize=8)
for panel in flat[len(METRICS):]:
    panel.set_visible(False)
fig.tight_layout()
out = sys.argv[1] if len(sys.argv) > 1 else str(CSV_PATH.with_suffix(".png"))
fig.savefig(out, dpi=150)
print(f"wrote {{out}}")
'''


def emit_plot_script(result: SweepResult, destination) -> None:
    """Write a standalone plotting script next to the CSV.

    One panel per selected metric, one curve per secondary-axis value,
    x axis labelled with the dimensionless drive time. The script locates
    the CSV through the relative name recorded in the result's provenance.

    Raises:
        IoFailure: if writing to ``destination`` fails.
    """
    if not result.rows:
        raise IoFailure("refusing to emit a plot script for an empty result")
    csv_name = result.provenance.get("csv", "sweep.csv")
    stem = csv_name.rsplit(".", 1)[0]
    script = _PLOT_TEMPLATE.format(
        stem=stem,
        csv=csv_name,
        version=result.provenance.get("version", __version__),
        metrics=tuple(result.spec.metrics),
        labels=_METRIC_LABELS,
        header=CSV_HEADER,
    )
    try:
        destination.write(script)
    except OSError as exc:
        raise IoFailure(f"plot-script emission failed: {exc}") from exc


def _require_number(problems: list[str], config: dict, key: str) -> float | None:
    value = config[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        problems.append(f"{key} must be a number, got {value!r}")
        return None
    if not math.isfinite(value):
        problems.append(f"{key} must be finite, got {value!r}")
        return None
    return float(value)


def parse_config(text: str) -> SweepSpec:
    """Parse a flat JSON configuration document into a SweepSpec.

    Required keys: nu0, delta, v12, temperature (no physical defaults).
    Optional keys with defaults: tau_start 0, tau_stop 2 pi, tau_count 401,
    vary_name null, vary_values [], metrics all, power_step 1e-5. Unknown
    keys are rejected.

    Raises:
        ParseError: on malformed JSON, with line and column.
        ValidationError: listing every violated invariant.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc

    problems: list[str] = []
    if not isinstance(raw, dict):
        raise ValidationError(["configuration must be a JSON object"])

    unknown = sorted(set(raw) - set(_CONFIG_KEYS))
    if unknown:
        problems.append(f"unknown keys: {', '.join(unknown)}")

    numbers: dict[str, float] = {}
    for key in ("nu0", "delta", "v12", "temperature"):
        if key not in raw:
            problems.append(f"{key} is required (no physical default)")
        else:
            value = _require_number(problems, raw, key)
            if value is not None:
                numbers[key] = value
    if "nu0" in numbers and numbers["nu0"] <= 0:
        problems.append(f"nu0 must be > 0, got {numbers['nu0']}")
    if "temperature" in numbers and numbers["temperature"] <= 0:
        problems.append(f"temperature must be > 0, got {numbers['temperature']}")

    grid = {"tau_start": 0.0, "tau_stop": 2.0 * math.pi, "power_step": 1e-5}
    for key in ("tau_start", "tau_stop", "power_step"):
        if key in raw:
            value = _require_number(problems, raw, key)
            if value is not None:
                grid[key] = value

    tau_count = 401
    if "tau_count" in raw:
        if isinstance(raw["tau_count"], bool) or not isinstance(raw["tau_count"], int):
            problems.append(f"tau_count must be an integer, got {raw['tau_count']!r}")
        else:
            tau_count = raw["tau_count"]

    vary_name = raw.get("vary_name")
    if vary_name is not None and not isinstance(vary_name, str):
        problems.append(f"vary_name must be a string or null, got {vary_name!r}")
        vary_name = None

    vary_values: tuple[float, ...] = ()
    if raw.get("vary_values") is not None:
        if not isinstance(raw.get("vary_values", []), list):
            problems.append("vary_values must be a list of numbers")
        else:
            collected = []
            for item in raw.get("vary_values", []):
                if isinstance(item, bool) or not isinstance(item, (int, float)):
                    problems.append(f"vary_values entries must be numbers, got {item!r}")
                else:
                    collected.append(float(item))
            vary_values = tuple(collected)

    metrics: tuple[str, ...] = METRIC_NAMES
    if "metrics" in raw:
        if not isinstance(raw["metrics"], list) or not all(
            isinstance(m, str) for m in raw["metrics"]
        ):
            problems.append("metrics must be a list of metric names")
        else:
            metrics = tuple(raw["metrics"])
            if len(set(metrics)) != len(metrics):
                problems.append("metrics contains duplicates")

    if problems:
        raise ValidationError(problems)

    spec = SweepSpec(
        params=DimerParams(
            nu0=numbers["nu0"],
            delta=numbers["delta"],
            v12=numbers["v12"],
            temperature=numbers["temperature"],
        ),
        tau_start=grid["tau_start"],
        tau_stop=grid["tau_stop"],
        tau_count=tau_count,
        vary_name=vary_name,
        vary_values=vary_values,
        metrics=metrics,
        power_step=grid["power_step"],
    )
    spec_problems = spec.problems()
    if spec_problems:
        raise ValidationError(spec_problems)
    return spec
