"""Command-line interface: `cnls run <config>` and `cnls fit <csv> ...`."""

from __future__ import annotations

import argparse
import sys

from .config import ConfigError, parse_config
from .runner import EXIT_CONFIG, EXIT_IO, EXIT_NUMERICAL, EXIT_OK, fit_report, run_experiment

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cnls",
        description="Conservative finite-difference solver for the coupled "
        "defocusing nonlinear Schrodinger system",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run an experiment described by a config file")
    p_run.add_argument("config", help="path to the key = value configuration file")

    p_fit = sub.add_parser("fit", help="power-law decay fits over a diagnostics CSV")
    p_fit.add_argument("csv", help="diagnostics CSV produced by `cnls run`")
    p_fit.add_argument("--t-min", type=float, required=True, help="left edge of the fit window")
    p_fit.add_argument(
        "--targets",
        required=True,
        help="comma-separated columns to fit (linf_u, linf_v, l2p2_u, l2p2_v)",
    )
    return parser


def _cmd_run(config_path: str) -> int:
    try:
        with open(config_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: kind=io detail={exc}", file=sys.stderr)
        return EXIT_IO
    try:
        config = parse_config(text)
    except ConfigError as exc:
        print(f"error: kind=config detail={exc}", file=sys.stderr)
        return EXIT_CONFIG
    return run_experiment(config)


def _cmd_fit(csv_path: str, t_min: float, targets_arg: str) -> int:
    targets = [t.strip() for t in targets_arg.split(",") if t.strip()]
    if not targets:
        print("error: kind=config detail=empty target list", file=sys.stderr)
        return EXIT_CONFIG
    try:
        report = fit_report(csv_path, t_min, targets)
    except OSError as exc:
        print(f"error: kind=io detail={exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: kind=config detail={exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(report)
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args.config)
    return _cmd_fit(args.csv, args.t_min, args.targets)


if __name__ == "__main__":
    sys.exit(main())
