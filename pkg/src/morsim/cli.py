"""Command-line front end.

Two subcommands::

    morsim sweep --config sweep.cfg [--engine both] [--format csv] [--out path]
    morsim figure fig2 [--out directory]

Exit codes: 0 on success, 1 on configuration or parameter errors, 2 on
numeric failures (including analytic-vs-numeric cross-validation).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .errors import MorsimError, NumericError
from .sweep import ENGINES, FORMATS, PRESET_NAMES, emit, parse_config, preset, run_sweep


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morsim",
        description="Susceptibility and magneto-optical rotation spectra of a "
                    "control-driven four-level medium.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep_cmd = sub.add_parser("sweep", help="run a sweep described by a config file")
    sweep_cmd.add_argument("--config", required=True, help="path to flat key-value config")
    sweep_cmd.add_argument("--engine", choices=ENGINES, default=None,
                           help="override the engine selected in the config")
    sweep_cmd.add_argument("--format", choices=FORMATS, default=None, dest="out_format",
                           help="override the output format selected in the config")
    sweep_cmd.add_argument("--out", default=None,
                           help="output path (default: config 'output', else stdout)")

    figure_cmd = sub.add_parser("figure", help="emit the data behind a built-in preset")
    figure_cmd.add_argument("name", choices=PRESET_NAMES)
    figure_cmd.add_argument("--out", default=".",
                            help="directory for <name>.csv (default: current directory)")
    return parser


def _run_sweep_command(args: argparse.Namespace) -> int:
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read config {args.config}: {exc}", file=sys.stderr)
        return 1
    cfg = parse_config(text)
    if args.engine is not None:
        cfg = replace(cfg, engine=args.engine)
    if args.out_format is not None:
        cfg = replace(cfg, out_format=args.out_format)
    if args.out is not None:
        cfg = replace(cfg, out_path=args.out)

    rows = run_sweep(cfg)
    if cfg.out_path is None or cfg.out_path == "-":
        sys.stdout.buffer.write(emit(rows, cfg.out_format))
    else:
        emit(rows, cfg.out_format, cfg.out_path)
        print(f"wrote {len(rows)} rows to {cfg.out_path}")
    return 0


def _run_figure_command(args: argparse.Namespace) -> int:
    cfg = preset(args.name)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{args.name}.csv"
    rows = run_sweep(cfg)
    emit(rows, "csv", path)
    print(f"wrote {len(rows)} rows to {path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage problems are
        # configuration errors under this tool's exit-code contract.
        return 0 if exc.code in (0, None) else 1

    try:
        if args.command == "sweep":
            return _run_sweep_command(args)
        return _run_figure_command(args)
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 2
    except (MorsimError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
