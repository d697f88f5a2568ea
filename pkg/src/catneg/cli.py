"""Command-line driver: sweep configs in, deterministic CSV out.

Values are resolved in precedence order: built-in defaults, then a
``--config`` file of key=value pairs, then explicit command-line flags.
Exit codes: 0 success, 2 configuration error, 3 capacity exceeded,
4 numeric failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .linalg import CapacityError, NonHermitianError
from .sweeps import MODES, ConfigError, SweepConfig, result_to_csv, run_sweep

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CAPACITY = 3
EXIT_NUMERIC = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catneg",
        description=(
            "Negativity of an N-qubit cat state under per-qubit dephasing or "
            "depolarizing noise: time, qubit-number and partition sweeps with "
            "closed-form cross-checks."
        ),
    )
    parser.add_argument(
        "mode",
        nargs="?",
        choices=MODES,
        help="sweep mode (may instead come from the config file)",
    )
    parser.add_argument("--config", help="key=value config file ('#' comments)")
    parser.add_argument("--n", type=int, help="number of qubits (default 10)")
    parser.add_argument("--n-max", type=int, help="top of the N range (n_sweep)")
    parser.add_argument("--k", type=int, help="transposed partition size (default 1)")
    parser.add_argument("--theta0", type=float, help="tilt angle in radians (default pi/3)")
    parser.add_argument("--s", type=float, help="Gaussian angle spread; 0 = delta (default)")
    parser.add_argument("--gamma", type=float, help="decay rate (default 1)")
    parser.add_argument("--t", type=float, help="time, or sweep start (default 0)")
    parser.add_argument("--t-max", type=float, help="sweep end time")
    parser.add_argument("--steps", type=int, help="time samples, endpoints included (default 51)")
    parser.add_argument(
        "--channel",
        choices=("dephasing", "depolarizing"),
        help="noise channel (default dephasing)",
    )
    parser.add_argument(
        "--variant",
        choices=("standard", "zbasis", "zerotilted"),
        help="initial state family (default standard)",
    )
    parser.add_argument("--quad-nodes", type=int, help="quadrature nodes for s>0 (default 61)")
    parser.add_argument(
        "--quad-halfwidth",
        type=float,
        help="quadrature support half-width in units of s (default 6)",
    )
    parser.add_argument("--eps", type=float, help="negative-eigenvalue threshold override")
    parser.add_argument("--out", help="CSV output path (default: stdout)")
    parser.add_argument(
        "--plot",
        action="store_true",
        help="also render <out>.png next to the CSV (requires --out)",
    )
    return parser


def parse_config_file(path: str) -> dict:
    """Read key=value lines; '#' starts a comment, blank lines ignored."""
    mapping: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {text!r}")
        key, value = text.split("=", 1)
        mapping[key.strip()] = value.strip()
    return mapping


def _merge_config(args: argparse.Namespace) -> SweepConfig:
    mapping = parse_config_file(args.config) if args.config else {}
    overrides = {
        "mode": args.mode,
        "n": args.n,
        "n_max": args.n_max,
        "k": args.k,
        "theta0": args.theta0,
        "s": args.s,
        "gamma": args.gamma,
        "t": args.t,
        "t_max": args.t_max,
        "steps": args.steps,
        "channel": args.channel,
        "variant": args.variant,
        "quad_nodes": args.quad_nodes,
        "quad_halfwidth": args.quad_halfwidth,
        "eps": args.eps,
    }
    for key, value in overrides.items():
        if value is not None:
            mapping[key] = value
    return SweepConfig.from_mapping(mapping)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.plot and not args.out:
            raise ConfigError("--plot requires --out")
        cfg = _merge_config(args)
        result = run_sweep(cfg)
        csv_text = result_to_csv(result)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (NonHermitianError, np.linalg.LinAlgError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv_text)
        print(f"wrote {args.out} ({len(result.rows)} rows)", file=sys.stderr)
        if args.plot:
            from .plotting import render_sweep

            plot_path = args.out.rsplit(".", 1)[0] + ".png"
            render_sweep(result, plot_path)
            print(f"wrote {plot_path}", file=sys.stderr)
        if result.summary:
            print(result.summary)
    else:
        sys.stdout.write(csv_text)
        if result.summary:
            print(result.summary, file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
