#!/usr/bin/env python3
"""Frame-interval experiment on the synthetic brightness ramp.

Scores the default 100-frame linear ramp at every frame interval from 1 to
the largest one that fits, then reports whether IHD grows (and IHC shrinks)
monotonically with the interval and how close the growth is to linear.
Writes the sweep table as CSV and both score curves as an SVG chart.
"""

import argparse
import csv
import sys
from pathlib import Path

from ihcmetric.charts import line_chart_svg
from ihcmetric.retinex import DEFAULT_SIGMA
from ihcmetric.synth import (
    IntervalSample,
    RampSpec,
    interval_sweep,
    max_legal_interval,
    successive_difference_spread,
)


def main(argv=None):
    parser = argparse.ArgumentParser(
        description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument(
        "--out-dir",
        type=Path,
        default=Path("experiment_out"),
        help="directory for the CSV table and SVG chart (default: experiment_out)",
    )
    parser.add_argument(
        "--sigma",
        type=float,
        default=DEFAULT_SIGMA,
        help=f"Gaussian surround scale in pixels (default: {DEFAULT_SIGMA})",
    )
    parser.add_argument(
        "--max-interval",
        type=int,
        default=None,
        help="largest interval to score (default: largest legal one)",
    )
    parser.add_argument(
        "--base-pattern",
        choices=["flat", "checker", "radial"],
        default="flat",
        help="spatial pattern under the brightness ramp (default: flat)",
    )
    args = parser.parse_args(argv)

    spec = RampSpec(base_pattern=args.base_pattern)
    template = IntervalSample()
    legal_max = max_legal_interval(spec.frame_count, template)
    top = args.max_interval if args.max_interval is not None else legal_max
    if not 1 <= top <= legal_max:
        parser.error(f"--max-interval must be in 1..{legal_max}")
    intervals = list(range(1, top + 1))

    rows = interval_sweep(spec, template, intervals, sigma=args.sigma)

    print(f"{'interval':>8}  {'ihd':<14} {'ihc':<14}")
    for interval, ihd_score, ihc_score in rows:
        print(f"{interval:>8}  {ihd_score:<14.9f} {ihc_score:<14.9f}")

    ihds = [r[1] for r in rows]
    ihcs = [r[2] for r in rows]
    ihd_up = all(b > a for a, b in zip(ihds, ihds[1:]))
    ihc_down = all(b < a for a, b in zip(ihcs, ihcs[1:]))
    spread = successive_difference_spread(ihds)
    print()
    print(f"IHD strictly increasing with interval: {'yes' if ihd_up else 'NO'}")
    print(f"IHC strictly decreasing with interval: {'yes' if ihc_down else 'NO'}")
    print(
        f"IHD successive-difference spread: {spread:.3f} (0 would be perfectly linear)"
    )

    args.out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = args.out_dir / "interval_sweep.csv"
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["interval", "ihd", "ihc"])
        for interval, ihd_score, ihc_score in rows:
            writer.writerow([interval, f"{ihd_score:.17g}", f"{ihc_score:.17g}"])

    svg_path = args.out_dir / "interval_sweep.svg"
    svg = line_chart_svg(
        [r[0] for r in rows],
        [("IHD", ihds), ("IHC", ihcs)],
        title=f"Consistency vs frame interval ({args.base_pattern} ramp, "
        f"sigma={args.sigma:g})",
        x_label="frame interval",
        y_label="score",
    )
    svg_path.write_text(svg, encoding="utf-8")
    print(f"\nwrote {csv_path} and {svg_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
