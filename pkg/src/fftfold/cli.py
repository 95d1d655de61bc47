"""Command-line front end: ``fftfold {transform,trace,rom,resources,selftest}``.

Exit codes: 0 success, 1 selftest failure, 2 usage error (argparse),
3 I/O error, 4 validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .datapath import build_twiddle_rom, write_rom_csv
from .numerics import FxFormat, internal_format
from .oracle import dft_direct, is_power_of_two, max_abs_error
from .processor import FoldedFftProcessor
from .resources import powers_of_two, write_figure_series, write_resource_csv
from .sampleio import SampleFile, SampleFileError, read_sample_file, write_sample_file
from .selftest import run_selftest

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_IO = 3
EXIT_VALIDATION = 4


class ValidationError(ValueError):
    pass


def _register_format(args, n: int) -> FxFormat:
    default = internal_format(n)
    return FxFormat(args.int_bits if args.int_bits is not None else default.int_bits,
                    args.frac_bits if args.frac_bits is not None else default.frac_bits)


def cmd_transform(args) -> int:
    sf = read_sample_file(args.input)
    proc = FoldedFftProcessor(sf.n, _register_format(args, sf.n), record_trace=False)
    y, _ = proc.run(sf.samples)
    out = SampleFile(sf.n, proc.format, tuple(y))
    write_sample_file(args.output, out, raw=args.raw)
    report = {
        "n": sf.n,
        "input_format": str(sf.format),
        "register_format": str(proc.format),
        "frame_cycles": proc.stages,
        "butterfly_units": proc.butterfly_units,
    }
    if args.check:
        err = max_abs_error(y, dft_direct(sf.complex_values()))
        report["max_abs_error"] = err
        report["error_bound"] = 4 * sf.n * 2.0 ** -proc.format.frac_bits
        print(f"max abs error vs direct DFT: {err}")
    Path(str(args.output) + ".report.json").write_text(json.dumps(report, indent=1) + "\n")
    return EXIT_OK


def cmd_trace(args) -> int:
    sf = read_sample_file(args.input)
    proc = FoldedFftProcessor(sf.n, _register_format(args, sf.n))
    _, trace = proc.run(sf.samples)
    with open(args.trace, "w", newline="") as fh:
        trace.write_csv(fh)
    return EXIT_OK


def cmd_rom(args) -> int:
    if not is_power_of_two(args.n) or args.n < 2:
        raise ValidationError(f"n={args.n} must be a power of two >= 2")
    rom = build_twiddle_rom(args.n, _register_format(args, args.n))
    with open(args.output, "w", newline="") as fh:
        write_rom_csv(rom, fh)
    return EXIT_OK


def cmd_resources(args) -> int:
    try:
        ns = powers_of_two(args.n_min, args.n_max)
    except ValueError as exc:
        raise ValidationError(f"invalid range: {exc}") from exc
    if ns[0] < 2:
        raise ValidationError("n_min must be at least 2")
    with open(args.csv, "w", newline="") as fh:
        write_resource_csv(ns, fh)
    if args.figures:
        base = Path(args.csv)
        for quantity in ("multipliers", "adders"):
            path = base.with_name(f"{base.stem}_{quantity}.csv")
            with open(path, "w", newline="") as fh:
                write_figure_series(ns, fh, quantity)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(max_n=args.max_n, seed=args.seed, frames=args.frames)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fftfold", description="Folded radix-2 FFT processor model")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_flags(p):
        p.add_argument("--int-bits", type=int, default=None,
                       help="register integer bits incl. sign (default ceil(log2 n)+2)")
        p.add_argument("--frac-bits", type=int, default=None, help="register fractional bits (default 15)")

    p = sub.add_parser("transform", help="run one frame through the folded processor")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--check", action="store_true", help="report max abs error against the direct DFT")
    p.add_argument("--raw", action="store_true", help="write integer mantissas")
    fmt_flags(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("trace", help="dump the per-cycle trace of one frame as CSV")
    p.add_argument("input")
    p.add_argument("trace")
    fmt_flags(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("rom", help="dump the twiddle ROM as CSV")
    p.add_argument("n", type=int)
    p.add_argument("output")
    fmt_flags(p)
    p.set_defaults(func=cmd_rom)

    p = sub.add_parser("resources", help="butterfly/multiplier/adder counts as CSV")
    p.add_argument("--n-min", type=int, default=8)
    p.add_argument("--n-max", type=int, default=1024)
    p.add_argument("--figures", action="store_true",
                   help="also write <csv>_multipliers.csv and <csv>_adders.csv")
    p.add_argument("csv")
    p.set_defaults(func=cmd_resources)

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--max-n", type=int, default=256)
    p.add_argument("--frames", type=int, default=4)
    p.add_argument("--seed", type=int, default=None, help="overrides FFTFOLD_SEED")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"fftfold: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SampleFileError, ValidationError, ValueError) as exc:
        print(f"fftfold: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
