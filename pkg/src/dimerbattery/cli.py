"""Command-line interface.

Subcommands:

    sweep    --config cfg.json --out dir    run a configured sweep
    figure   {fig1..fig4}      --out dir    run a bundled preset
    validate --config cfg.json              check a configuration only

``sweep`` and ``figure`` write ``<stem>.csv`` (data plus provenance header),
``<stem>.plot`` (standalone plotting script) and ``<stem>.png`` (rendered
panels, suppressed by --no-figures) under the output directory. Exit codes:
0 on success, 2 on validation problems, 1 on I/O failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .sweep import (
    InvalidSpec,
    IoFailure,
    ParseError,
    SweepResult,
    UnknownPreset,
    emit_csv,
    emit_plot_script,
    figure_preset,
    parse_config,
    run_sweep,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2


def _load_config(path: Path):
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read config {path}: {exc}") from exc


def _write_outputs(result: SweepResult, out_dir: Path, stem: str, figures: bool) -> None:
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        result.provenance["csv"] = f"{stem}.csv"
        csv_path = out_dir / f"{stem}.csv"
        with open(csv_path, "w", encoding="utf-8", newline="") as handle:
            emit_csv(result, handle)
        print(f"wrote {csv_path}")
        plot_path = out_dir / f"{stem}.plot"
        with open(plot_path, "w", encoding="utf-8", newline="") as handle:
            emit_plot_script(result, handle)
        print(f"wrote {plot_path}")
        if figures:
            from .plotting import render_figure

            png_path = out_dir / f"{stem}.png"
            render_figure(result, png_path)
            print(f"wrote {png_path}")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def _cmd_sweep(args) -> int:
    config_path = Path(args.config)
    spec = parse_config(_load_config(config_path))
    result = run_sweep(spec)
    _write_outputs(result, Path(args.out), config_path.stem, not args.no_figures)
    return EXIT_OK


def _cmd_figure(args) -> int:
    spec = figure_preset(args.name)
    result = run_sweep(spec)
    _write_outputs(result, Path(args.out), args.name, not args.no_figures)
    return EXIT_OK


def _cmd_validate(args) -> int:
    spec = parse_config(_load_config(Path(args.config)))
    print(json.dumps(spec.to_config(), indent=2, sort_keys=True))
    print("configuration OK")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimerbattery",
        description="Simulate a thermally initialized two-emitter dimer battery "
        "under a collective X-drive and sweep its performance metrics.",
    )
    parser.add_argument("--version", action="version", version=f"dimerbattery {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a sweep from a JSON config")
    p_sweep.add_argument("--config", required=True, help="path to the JSON configuration")
    p_sweep.add_argument("--out", required=True, help="output directory")
    p_sweep.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_figure = sub.add_parser("figure", help="run a bundled preset study")
    p_figure.add_argument("name", choices=["fig1", "fig2", "fig3", "fig4"])
    p_figure.add_argument("--out", required=True, help="output directory")
    p_figure.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    p_figure.set_defaults(func=_cmd_figure)

    p_validate = sub.add_parser("validate", help="validate a JSON config")
    p_validate.add_argument("--config", required=True, help="path to the JSON configuration")
    p_validate.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidSpec, UnknownPreset) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
