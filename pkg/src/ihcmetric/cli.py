"""Command-line front end: compute, synth, intervals, and maps subcommands.

Exit codes: 0 success, 1 usage error, 2 data/validation error, 3 I/O error.
"""

import argparse
import csv
import sys
from pathlib import Path

from .charts import line_chart_svg
from .metric import evaluate_sequence
from .retinex import DEFAULT_SIGMA
from .sequence_io import (
    FrameSource,
    dump_maps,
    load_sequence,
    make_document,
    write_gray_png,
    write_report,
)
from .synth import IntervalSample, RampSpec, generate_ramp, interval_sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage status code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_interval_list(text: str) -> list[int]:
    """Parse a comma-separated interval list; a..b tokens expand inclusively."""
    intervals: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if ".." in token:
            lo_text, _, hi_text = token.partition("..")
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad interval range {token!r}")
            if lo > hi:
                raise argparse.ArgumentTypeError(f"empty interval range {token!r}")
            intervals.extend(range(lo, hi + 1))
        else:
            try:
                intervals.append(int(token))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad interval {token!r}")
    if not intervals:
        raise argparse.ArgumentTypeError("empty interval list")
    if any(i < 1 for i in intervals):
        raise argparse.ArgumentTypeError("intervals must be positive integers")
    return intervals


def _add_sigma(parser):
    parser.add_argument(
        "--sigma",
        type=float,
        default=DEFAULT_SIGMA,
        help="Gaussian surround scale in pixels for illumination estimation",
    )


def _add_ramp_flags(parser):
    parser.add_argument("--frames", type=int, default=100, help="number of frames")
    parser.add_argument("--width", type=int, default=256, help="frame width in pixels")
    parser.add_argument("--height", type=int, default=256, help="frame height in pixels")
    parser.add_argument(
        "--start", type=float, default=40.0, help="brightness of the first frame"
    )
    parser.add_argument(
        "--end", type=float, default=200.0, help="brightness of the last frame"
    )
    parser.add_argument(
        "--base-pattern",
        choices=["flat", "checker", "radial"],
        default="flat",
        help="spatial base pattern under the brightness ramp",
    )
    parser.add_argument(
        "--amplitude", type=float, default=40.0, help="peak pattern amplitude"
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for stochastic textures"
    )
    parser.add_argument(
        "--mode",
        choices=["additive", "multiplicative"],
        default="additive",
        help="brightness composition: additive offset or multiplicative lighting",
    )


def _ramp_spec(args) -> RampSpec:
    return RampSpec(
        frame_count=args.frames,
        width=args.width,
        height=args.height,
        brightness_start=args.start,
        brightness_end=args.end,
        base_pattern=args.base_pattern,
        pattern_amplitude=args.amplitude,
        seed=args.seed,
        mode=args.mode,
    )


def cmd_compute(args) -> int:
    source = FrameSource(root=args.input_dir, pattern=args.pattern)
    frames, names = load_sequence(source)
    report = evaluate_sequence(frames, sigma=args.sigma, frame_ids=names)
    print(f"IHD={report.ihd:.9f} IHC={report.ihc:.9f}")
    out_path = args.out if args.out else f"report.{args.format}"
    write_report(make_document(report, source), args.format, out_path)
    print(f"report written to {out_path}", file=sys.stderr)
    return EXIT_OK


def cmd_synth(args) -> int:
    spec = _ramp_spec(args)
    frames = generate_ramp(spec)
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out_dir}: {exc}") from exc
    pad = max(3, len(str(spec.frame_count - 1)))
    for t, frame in enumerate(frames):
        write_gray_png(frame, out_dir / f"frame_{t:0{pad}d}.png")
    print(f"{len(frames)} frames written to {out_dir}")
    return EXIT_OK


def cmd_intervals(args) -> int:
    spec = _ramp_spec(args)
    template = IntervalSample(center=args.center, arm=args.arm, interval=1)
    rows = interval_sweep(spec, template, args.intervals, sigma=args.sigma)

    print(f"{'interval':>8}  {'ihd':<12} {'ihc':<12} frames")
    for interval, ihd_score, ihc_score in rows:
        ids = IntervalSample(
            center=args.center, arm=args.arm, interval=interval
        ).indices()
        id_text = ",".join(str(i) for i in ids)
        print(f"{interval:>8}  {ihd_score:<12.9f} {ihc_score:<12.9f} {id_text}")

    try:
        with open(args.out_csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["interval", "ihd", "ihc"])
            for interval, ihd_score, ihc_score in rows:
                writer.writerow([interval, f"{ihd_score:.17g}", f"{ihc_score:.17g}"])
    except OSError as exc:
        raise OSError(f"cannot write sweep CSV to {args.out_csv}: {exc}") from exc

    svg = line_chart_svg(
        [row[0] for row in rows],
        [("IHD", [row[1] for row in rows]), ("IHC", [row[2] for row in rows])],
        title="Illumination consistency vs frame interval",
        x_label="frame interval",
        y_label="score",
    )
    try:
        Path(args.out_svg).write_text(svg, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write chart to {args.out_svg}: {exc}") from exc
    print(f"wrote {args.out_csv} and {args.out_svg}", file=sys.stderr)
    return EXIT_OK


def cmd_maps(args) -> int:
    source = FrameSource(root=args.input_dir, pattern=args.pattern)
    frames, _names = load_sequence(source)
    written = dump_maps(frames, args.sigma, args.out_dir)
    print(f"{len(written)} files written to {args.out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ihc",
        description=(
            "Illumination histogram consistency scoring for frame sequences: "
            "Retinex illumination maps, 256-bin histograms, and the IHD/IHC "
            "discrepancy scores."
        ),
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=_Parser
    )

    fmt = argparse.ArgumentDefaultsHelpFormatter

    compute = subparsers.add_parser(
        "compute",
        help="score a directory of frames and write a report",
        formatter_class=fmt,
    )
    compute.add_argument("input_dir", help="directory containing the frame files")
    compute.add_argument(
        "--pattern", default="*.png", help="filename glob selecting the frames"
    )
    _add_sigma(compute)
    compute.add_argument(
        "--format", choices=["json", "csv"], default="json", help="report format"
    )
    compute.add_argument(
        "--out",
        default=None,
        help="report path (default: report.<format> in the working directory)",
    )
    compute.set_defaults(func=cmd_compute)

    synth = subparsers.add_parser(
        "synth",
        help="generate a synthetic linear-illumination frame sequence",
        formatter_class=fmt,
    )
    synth.add_argument("out_dir", help="directory receiving frame_*.png files")
    _add_ramp_flags(synth)
    synth.set_defaults(func=cmd_synth)

    intervals = subparsers.add_parser(
        "intervals",
        help="sweep frame intervals over the synthetic ramp and chart the scores",
        formatter_class=fmt,
    )
    intervals.add_argument(
        "--intervals",
        type=parse_interval_list,
        required=True,
        help="comma-separated intervals; a..b expands to the inclusive range",
    )
    intervals.add_argument(
        "--center", type=int, default=50, help="center frame of each sample"
    )
    intervals.add_argument(
        "--arm", type=int, default=4, help="frames sampled on each side of the center"
    )
    _add_ramp_flags(intervals)
    _add_sigma(intervals)
    intervals.add_argument(
        "--out-csv", default="intervals.csv", help="sweep table output path"
    )
    intervals.add_argument(
        "--out-svg", default="intervals.svg", help="line chart output path"
    )
    intervals.set_defaults(func=cmd_intervals)

    maps = subparsers.add_parser(
        "maps",
        help="dump per-frame raw/reflectance/illumination maps and histograms",
        formatter_class=fmt,
    )
    maps.add_argument("input_dir", help="directory containing the frame files")
    maps.add_argument("out_dir", help="directory receiving the dumped files")
    maps.add_argument(
        "--pattern", default="*.png", help="filename glob selecting the frames"
    )
    _add_sigma(maps)
    maps.set_defaults(func=cmd_maps)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
