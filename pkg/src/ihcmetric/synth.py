"""Synthetic frame sequences with linearly increasing illumination.

Generates a fixed spatial base pattern whose brightness rises linearly from
frame to frame, plus the fixed-interval subsampling used to study how frame
spacing drives the consistency scores: wider spacing spans more illumination
change, so IHD rises and IHC falls.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .metric import evaluate_sequence
from .retinex import DEFAULT_SIGMA

BASE_PATTERNS = ("flat", "checker", "radial")
RAMP_MODES = ("additive", "multiplicative")


@dataclass(frozen=True)
class RampSpec:
    """Parameters of the synthetic linear-illumination sequence.

    The defaults keep pattern +/- amplitude inside [0, 255] for every frame,
    so clamping never reshapes the histograms.
    """

    frame_count: int = 100
    width: int = 256
    height: int = 256
    brightness_start: float = 40.0
    brightness_end: float = 200.0
    base_pattern: str = "flat"
    pattern_amplitude: float = 40.0
    seed: int = 0
    mode: str = "additive"

    def __post_init__(self):
        if self.frame_count < 2:
            raise ValueError(
                f"frame_count must be at least 2 for a ramp, got {self.frame_count}"
            )
        if self.width < 1 or self.height < 1:
            raise ValueError(f"invalid dimensions {self.width}x{self.height}")
        if not 0.0 <= self.brightness_start <= 255.0:
            raise ValueError(f"brightness_start {self.brightness_start} outside [0, 255]")
        if not 0.0 <= self.brightness_end <= 255.0:
            raise ValueError(f"brightness_end {self.brightness_end} outside [0, 255]")
        if self.brightness_start > self.brightness_end:
            raise ValueError(
                f"brightness_start {self.brightness_start} exceeds "
                f"brightness_end {self.brightness_end}"
            )
        if self.base_pattern not in BASE_PATTERNS:
            raise ValueError(
                f"unknown base_pattern {self.base_pattern!r}, "
                f"expected one of {BASE_PATTERNS}"
            )
        if self.pattern_amplitude < 0:
            raise ValueError(f"pattern_amplitude must be >= 0, got {self.pattern_amplitude}")
        if self.mode not in RAMP_MODES:
            raise ValueError(f"unknown mode {self.mode!r}, expected one of {RAMP_MODES}")

    def brightness_at(self, t: int) -> float:
        """Brightness offset of 0-based frame t on the linear ramp."""
        step = (self.brightness_end - self.brightness_start) / (self.frame_count - 1)
        return self.brightness_start + t * step


@dataclass(frozen=True)
class IntervalSample:
    """Symmetric fixed-interval frame selection around a center frame."""

    center: int = 50
    arm: int = 4
    interval: int = 1

    def __post_init__(self):
        if self.arm < 0:
            raise ValueError(f"arm must be >= 0, got {self.arm}")
        if self.interval < 1:
            raise ValueError(f"interval must be a positive integer, got {self.interval}")

    def indices(self) -> list[int]:
        return [self.center + k * self.interval for k in range(-self.arm, self.arm + 1)]


def base_pattern(spec: RampSpec) -> np.ndarray:
    """Build the zero-mean spatial pattern scaled to the requested amplitude.

    Patterns:
      flat    -- planar diagonal gradient; affine in (x, y), so wide Gaussian
                 smoothing leaves its interior intact
      checker -- per-pixel +/-1 parity; averages away under smoothing
      radial  -- spotlight falloff, brightest at the image center

    The raw pattern is centered to zero mean and peak-normalized, so the
    final values span [-amplitude, +amplitude].
    """
    xs = np.arange(spec.width, dtype=np.float64)
    ys = np.arange(spec.height, dtype=np.float64)
    x, y = np.meshgrid(xs, ys)
    if spec.base_pattern == "flat":
        raw = (x - (spec.width - 1) / 2.0) + (y - (spec.height - 1) / 2.0)
    elif spec.base_pattern == "checker":
        raw = np.where((x.astype(np.int64) + y.astype(np.int64)) % 2 == 0, 1.0, -1.0)
    else:
        cx = (spec.width - 1) / 2.0
        cy = (spec.height - 1) / 2.0
        raw = -np.hypot(x - cx, y - cy)
    raw = raw - raw.mean()
    peak = np.abs(raw).max()
    if peak == 0.0:
        return np.zeros_like(raw)
    return raw * (spec.pattern_amplitude / peak)


def generate_ramp(spec: RampSpec) -> list[np.ndarray]:
    """Generate the frame sequence the ramp parameters describe.

    Additive mode offsets the pattern by the per-frame brightness; the
    multiplicative mode treats the pattern as a unit-mean reflectance
    modulation lit by the per-frame brightness.  Output is deterministic for
    a fixed spec.
    """
    pattern = base_pattern(spec)
    frames = []
    for t in range(spec.frame_count):
        level = spec.brightness_at(t)
        if spec.mode == "additive":
            frame = pattern + level
        else:
            frame = (1.0 + pattern / 255.0) * level
        frames.append(np.clip(frame, 0.0, 255.0))
    return frames


def max_legal_interval(frame_count: int, sample: IntervalSample) -> int:
    """Largest interval keeping every sampled index inside the sequence."""
    if sample.arm == 0:
        return frame_count - 1 if 0 <= sample.center < frame_count else 0
    return min(sample.center, frame_count - 1 - sample.center) // sample.arm


def sample_interval(
    frames: Sequence[np.ndarray], sample: IntervalSample
) -> list[np.ndarray]:
    """Pick frames at fixed spacing around the sample's center, in index order."""
    indices = sample.indices()
    if indices[0] < 0 or indices[-1] >= len(frames):
        raise ValueError(
            f"interval {sample.interval} reaches frames {indices[0]}..{indices[-1]} "
            f"outside 0..{len(frames) - 1}; the maximum legal interval is "
            f"{max_legal_interval(len(frames), sample)}"
        )
    return [frames[i] for i in indices]


def interval_sweep(
    spec: RampSpec,
    sample_template: IntervalSample,
    intervals: Sequence[int],
    sigma: float = DEFAULT_SIGMA,
) -> list[tuple[int, float, float]]:
    """Score the ramp at each frame interval.

    Returns (interval, ihd, ihc) triples ordered as the input intervals.
    All intervals are validated up front so no work happens on a bad list.
    """
    samples = [
        IntervalSample(center=sample_template.center, arm=sample_template.arm, interval=i)
        for i in intervals
    ]
    legal_max = max_legal_interval(spec.frame_count, sample_template)
    for sample in samples:
        lo = sample.indices()[0]
        hi = sample.indices()[-1]
        if lo < 0 or hi >= spec.frame_count:
            raise ValueError(
                f"interval {sample.interval} reaches frames {lo}..{hi} outside "
                f"0..{spec.frame_count - 1}; the maximum legal interval is {legal_max}"
            )
    frames = generate_ramp(spec)
    results = []
    for sample in samples:
        subset = sample_interval(frames, sample)
        report = evaluate_sequence(subset, sigma=sigma)
        results.append((sample.interval, report.ihd, report.ihc))
    return results


def successive_difference_spread(values: Sequence[float]) -> float:
    """Relative spread of successive differences: (max - min) / mean.

    Gauges how close a sweep is to linear growth; returns NaN when there are
    fewer than two values or the differences average zero.
    """
    if len(values) < 2:
        return math.nan
    diffs = np.diff(np.asarray(values, dtype=np.float64))
    mean = diffs.mean()
    if mean == 0.0:
        return math.nan
    return float((diffs.max() - diffs.min()) / abs(mean))
