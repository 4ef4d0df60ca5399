"""Command-line interface.

Commands: ``measure`` (multiscale report of a bit sequence), ``rbn`` and
``eca`` (single simulator runs), ``sweep`` (batch experiments writing CSV/JSON
result files).  Exit codes: 0 success, 1 internal failure, 2 usage or input
error.  Numeric CSV output uses 9 significant digits so repeated runs can be
compared byte for byte.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

import numpy as np

from .eca import EcaConfig, eca_measures, run_eca
from .experiments import (
    DEFAULT_K_GRID,
    DEFAULT_RULES,
    PROFILE_RULES,
    eca_class_survey,
    multiscale_profiles,
    rbn_sweep,
    write_sweep_files,
)
from .measures import NORM_CONSTANT, SymbolSequence, normalized_information, rescale
from .plots import plot_script
from .rbn import RbnConfig, generate_rbn, network_measures, run_rbn, serialize_network
from .trajectory import trajectory_csv, trajectory_pbm

__all__ = ["main"]


class CliInputError(Exception):
    """Bad user input: reported with exit code 2."""


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _parse_scales(text: str) -> tuple[int, ...]:
    try:
        scales = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise CliInputError(f"bad scales list: {text!r}") from exc
    if not scales or any(b < 1 for b in scales):
        raise CliInputError(f"bad scales list: {text!r}")
    return scales


def _parse_rules(text: str) -> tuple[int, ...]:
    try:
        rules = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise CliInputError(f"bad rules list: {text!r}") from exc
    for rule in rules:
        if not 0 <= rule <= 255:
            raise CliInputError(f"rule out of range: {rule}")
    return rules


def _parse_k_grid(text: str) -> tuple[float, ...]:
    try:
        if ":" in text:
            start, stop, step = (float(part) for part in text.split(":"))
            if step <= 0 or stop < start:
                raise ValueError
            count = int(round((stop - start) / step)) + 1
            return tuple(round(start + i * step, 10) for i in range(count))
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise CliInputError(f"bad K grid {text!r} (use 'a,b,c' or 'start:stop:step')") from exc


def _resolve_threads(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("INFODYN_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise CliInputError(f"bad INFODYN_THREADS value: {env!r}") from exc
    return 1


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _read_bytes(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    return Path(source).read_bytes()


def _read_input(source: str, fmt: str) -> SymbolSequence:
    """Parse a binary sequence from a file or stdin ('-')."""
    if fmt == "ascii01":
        text = _read_text(source)
        try:
            seq = SymbolSequence.from_bits(text)
        except ValueError as exc:
            raise CliInputError(str(exc)) from exc
    elif fmt == "raw":
        data = _read_bytes(source)
        bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))  # MSB first
        seq = SymbolSequence(bits.astype(np.int64), 1)
    elif fmt == "csv":
        tokens = [t for t in re.split(r"[,\s]+", _read_text(source).strip()) if t]
        try:
            values = [int(t) for t in tokens]
        except ValueError as exc:
            raise CliInputError("symbol CSV must contain integers") from exc
        if any(v not in (0, 1) for v in values):
            raise CliInputError("symbol CSV must contain only bits (0 or 1)")
        seq = SymbolSequence(np.array(values, dtype=np.int64), 1)
    else:  # pragma: no cover - argparse restricts choices
        raise CliInputError(f"unknown input format: {fmt}")
    if len(seq) == 0:
        raise CliInputError("empty input sequence")
    return seq


def _fmt(value) -> str:
    if value is None:
        return ""
    return format(float(value), ".9g")


def _emit_report(rows: list[dict], columns: tuple[str, ...], args) -> None:
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        lines = [",".join(columns)]
        for row in rows:
            lines.append(
                ",".join(
                    str(row[c]) if c == "scale" else _fmt(row[c]) for c in columns
                )
            )
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def cmd_measure(args) -> int:
    seq = _read_input(args.input, args.input_format)
    rows = []
    for b in _parse_scales(args.scales):
        try:
            i_b = normalized_information(rescale(seq, b))
        except ValueError:
            _warn(f"scale {b}: sequence too short, reported as null")
            rows.append({"scale": b, "I_b": None, "E": None, "S": None, "C": None})
            continue
        rows.append(
            {
                "scale": b,
                "I_b": i_b,
                "E": i_b,
                "S": 1.0 - i_b,
                "C": NORM_CONSTANT * i_b * (1.0 - i_b),
            }
        )
    _emit_report(rows, ("scale", "I_b", "E", "S", "C"), args)
    return 0


def _measure_rows(traj, scales, measure_fn) -> list[dict]:
    rows = []
    for b in scales:
        try:
            ms = measure_fn(traj, b)
        except ValueError:
            _warn(f"scale {b}: window too short, reported as null")
            rows.append({"scale": b, "E": None, "S": None, "C": None, "H": None})
            continue
        rows.append(
            {
                "scale": b,
                "E": ms.emergence,
                "S": ms.self_organization,
                "C": ms.complexity,
                "H": ms.homeostasis,
            }
        )
    return rows


def cmd_rbn(args) -> int:
    config = RbnConfig(
        n=args.n, k=args.k, transient=args.transient, window=args.window, seed=args.seed
    )
    traj = run_rbn(config)
    if args.dump_network:
        # regenerate from the same seed: identical to the simulated network
        net = generate_rbn(config, np.random.default_rng(config.seed))
        with open(args.dump_network, "w", newline="\n") as fh:
            fh.write(serialize_network(net))
    if args.dump_trajectory:
        with open(args.dump_trajectory, "w", newline="\n") as fh:
            fh.write(trajectory_csv(traj))

    def measure(t, b):
        return network_measures(t, b, average_h=args.average_h)

    rows = _measure_rows(traj, _parse_scales(args.scales), measure)
    _emit_report(rows, ("scale", "E", "S", "C", "H"), args)
    return 0


def cmd_eca(args) -> int:
    config = EcaConfig(
        rule=args.rule,
        n=args.n,
        init=args.init,
        transient=args.transient,
        window=args.window,
        seed=args.seed,
        orientation=args.orientation,
    )
    traj = run_eca(config)
    if args.dump_bitmap:
        with open(args.dump_bitmap, "w", newline="\n") as fh:
            fh.write(trajectory_pbm(traj))
    if args.dump_trajectory:
        with open(args.dump_trajectory, "w", newline="\n") as fh:
            fh.write(trajectory_csv(traj))

    def measure(t, b):
        return eca_measures(t, b, args.orientation, average_h=args.average_h)

    rows = _measure_rows(traj, _parse_scales(args.scales), measure)
    _emit_report(rows, ("scale", "E", "S", "C", "H"), args)
    return 0


SWEEP_PRESETS = {
    "rbn": {
        "paper": dict(n=100, instances=1000, transient=1000, window=1000,
                      scales=(1, 2, 4, 8), k_grid=DEFAULT_K_GRID),
        "desk": dict(n=100, instances=100, transient=512, window=512,
                     scales=(1, 2, 4, 8), k_grid=DEFAULT_K_GRID),
    },
    "eca": {
        "paper": dict(n=256, instances=50, transient=4096, window=4096,
                      scales=(1, 2, 4, 8), rules=DEFAULT_RULES),
        "desk": dict(n=256, instances=50, transient=1024, window=1024,
                     scales=(1, 2, 4, 8), rules=DEFAULT_RULES),
    },
    "profile": {
        "paper": dict(n=256, instances=50, transient=4096, window=4096,
                      scales=(1, 2, 4, 8), rules=PROFILE_RULES),
        "desk": dict(n=256, instances=50, transient=1024, window=1024,
                     scales=(1, 2, 4, 8), rules=PROFILE_RULES),
    },
}


def cmd_sweep(args) -> int:
    params = dict(SWEEP_PRESETS[args.what][args.preset])
    for name in ("n", "instances", "transient", "window"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if args.scales is not None:
        params["scales"] = _parse_scales(args.scales)
    if args.rules is not None and "rules" in params:
        params["rules"] = _parse_rules(args.rules)
    if args.k_grid is not None and "k_grid" in params:
        params["k_grid"] = _parse_k_grid(args.k_grid)

    threads = _resolve_threads(args.threads)
    outdir = Path(args.output_dir)

    if args.what == "rbn":
        results = rbn_sweep(master_seed=args.seed, threads=threads, **params)
        experiment, baseline = "rbn_sweep", None
    elif args.what == "eca":
        results = eca_class_survey(master_seed=args.seed, threads=threads, **params)
        experiment, baseline = "eca_survey", None
    else:
        profile = multiscale_profiles(
            master_seed=args.seed,
            threads=threads,
            baseline_form=args.h_baseline,
            **params,
        )
        results, baseline = profile.sweeps, profile.h_baseline
        experiment = "eca_profiles"

    script = plot_script(experiment) if args.plot_script else None
    written = write_sweep_files(
        results, outdir, experiment, h_baseline=baseline, plot_script=script
    )
    for path in written:
        print(path)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infodyn",
        description="Information-theoretic measures of discrete dynamical systems",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    run_flags = argparse.ArgumentParser(add_help=False)
    run_flags.add_argument("--seed", type=_u64, default=0,
                           help="RNG seed (master seed for sweeps)")
    run_flags.add_argument("--threads", type=int, default=None,
                           help="worker threads (default: $INFODYN_THREADS or 1); "
                                "affects wall-clock only, never results")

    report_flags = argparse.ArgumentParser(add_help=False)
    report_flags.add_argument("--format", choices=("csv", "json"), default="csv",
                              help="report format (default csv)")
    report_flags.add_argument("--output", metavar="PATH",
                              help="write the report to a file instead of stdout")

    p = sub.add_parser("measure", parents=[run_flags, report_flags],
                       help="multiscale information report of a bit sequence")
    p.add_argument("input", nargs="?", default="-",
                   help="input file, or '-' for stdin (default)")
    p.add_argument("--input-format", choices=("ascii01", "raw", "csv"),
                   default="ascii01",
                   help="ascii01: '0'/'1' text; raw: bytes, MSB first; "
                        "csv: comma/whitespace separated bits")
    p.add_argument("--scales", default="1,2,4,8", help="comma list of scales")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("rbn", parents=[run_flags, report_flags],
                       help="run one random Boolean network and measure it")
    p.add_argument("--n", type=int, default=100, help="node count")
    p.add_argument("--k", type=float, default=2.0, help="mean in-degree (may be fractional)")
    p.add_argument("--transient", type=int, default=1000, help="steps discarded before recording")
    p.add_argument("--window", type=int, default=1000, help="recorded steps")
    p.add_argument("--scales", default="1,2,4,8", help="comma list of scales")
    p.add_argument("--average-h", action="store_true",
                   help="average H over all successive macro-state pairs "
                        "(noise-reduced alternative to the final-pair definition)")
    p.add_argument("--dump-network", metavar="PATH", help="write the generated network")
    p.add_argument("--dump-trajectory", metavar="PATH", help="write the trajectory as CSV")
    p.set_defaults(func=cmd_rbn)

    p = sub.add_parser("eca", parents=[run_flags, report_flags],
                       help="run one elementary cellular automaton and measure it")
    p.add_argument("--rule", type=int, required=True, help="rule number 0..255")
    p.add_argument("--n", type=int, default=256, help="cell count")
    p.add_argument("--init", choices=("random", "single_cell"), default="random")
    p.add_argument("--transient", type=int, default=1024)
    p.add_argument("--window", type=int, default=1024)
    p.add_argument("--scales", default="1,2,4,8", help="comma list of scales")
    p.add_argument("--orientation", choices=("vertical", "horizontal", "diagonal"),
                   default="vertical", help="series read-out direction")
    p.add_argument("--average-h", action="store_true",
                   help="average H over all successive macro-state pairs")
    p.add_argument("--dump-bitmap", metavar="PATH", help="write the trajectory as a PBM bitmap")
    p.add_argument("--dump-trajectory", metavar="PATH", help="write the trajectory as CSV")
    p.set_defaults(func=cmd_eca)

    p = sub.add_parser("sweep", parents=[run_flags],
                       help="batch experiments writing CSV/JSON result files")
    p.add_argument("what", choices=("rbn", "eca", "profile"))
    p.add_argument("--preset", choices=("paper", "desk"), default="desk",
                   help="paper: full-scale runs; desk: reduced scale (default)")
    p.add_argument("--output-dir", default="infodyn_results", metavar="DIR")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--instances", type=int, default=None)
    p.add_argument("--transient", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--scales", default=None, help="comma list of scales")
    p.add_argument("--rules", default=None, help="comma list of rules (eca/profile)")
    p.add_argument("--k-grid", default=None,
                   help="K values: 'a,b,c' or 'start:stop:step' (rbn)")
    p.add_argument("--h-baseline", choices=("exact", "inv2b"), default="exact",
                   help="uncorrelated-H reference: 2^-b (exact) or 1/(2b) (inv2b)")
    p.add_argument("--plot-script", action="store_true",
                   help="also emit a matplotlib script next to the data")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except (CliInputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
