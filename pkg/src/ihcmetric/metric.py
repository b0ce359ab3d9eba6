"""Illumination histogram discrepancy (IHD) and consistency (IHC) scores.

Each frame's illumination map is reduced to a 256-bin histogram of pixel
counts.  The sequence-level discrepancy is the total L1 deviation of every
frame's histogram from the mean histogram, normalized by frame count times
pixel count; consistency is two minus that discrepancy.  IHD lives in
[0, 2), IHC in (0, 2]: identical frames score IHD 0 / IHC 2, and sequences
whose histograms share no bins at all approach IHD 2.
"""

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .retinex import DEFAULT_SIGMA, build_kernel, blur

BIN_COUNT = 256


@dataclass(frozen=True)
class SequenceReport:
    """Per-frame discrepancy contributions plus the sequence scores."""

    frame_count: int
    pixel_count: int
    per_frame_discrepancy: list[float]
    ihd: float
    ihc: float
    sigma: float
    frame_ids: list[str] = field(default_factory=list)


def quantize_intensities(values: np.ndarray) -> np.ndarray:
    """Map real intensities to integer bins 0..255.

    Rounds half away from zero (np.round would round half to even) and clamps
    to the 8-bit range.
    """
    arr = np.asarray(values, dtype=np.float64)
    return np.clip(np.floor(arr + 0.5), 0, BIN_COUNT - 1).astype(np.int64)


def histogram_of(illumination: np.ndarray) -> np.ndarray:
    """Count illumination values per brightness level.

    Returns a length-256 int64 array whose entries sum to the pixel count.
    """
    arr = np.asarray(illumination, dtype=np.float64)
    if arr.size == 0:
        raise ValueError("cannot histogram an empty illumination map")
    bins = quantize_intensities(arr)
    return np.bincount(bins.ravel(), minlength=BIN_COUNT).astype(np.int64)


def _pixel_count(histogram: np.ndarray, index: int) -> int:
    hist = np.asarray(histogram)
    if hist.shape != (BIN_COUNT,):
        raise ValueError(
            f"histogram {index} must have exactly {BIN_COUNT} bins, "
            f"got shape {hist.shape}"
        )
    if np.any(hist < 0):
        raise ValueError(f"histogram {index} has negative bin counts")
    return int(hist.sum())


def _checked_pixel_count(histograms: Sequence[np.ndarray]) -> int:
    if len(histograms) == 0:
        raise ValueError("need at least one histogram")
    pixel_count = _pixel_count(histograms[0], 0)
    if pixel_count == 0:
        raise ValueError("histograms must count at least one pixel")
    for i, hist in enumerate(histograms[1:], start=1):
        count = _pixel_count(hist, i)
        if count != pixel_count:
            raise ValueError(
                f"histogram {i} counts {count} pixels but histogram 0 "
                f"counts {pixel_count}; all frames must share one size"
            )
    return pixel_count


def mean_histogram(histograms: Sequence[np.ndarray]) -> np.ndarray:
    """Average the histograms bin by bin.

    Counts are summed exactly in int64 before the single float division, so
    the result is independent of input order.
    """
    _checked_pixel_count(histograms)
    stacked = np.stack([np.asarray(h, dtype=np.int64) for h in histograms])
    return stacked.sum(axis=0, dtype=np.int64) / len(histograms)


def frame_discrepancy(histogram: np.ndarray, mean_hist: np.ndarray) -> float:
    """Total L1 deviation of one frame's histogram from the mean histogram."""
    hist = np.asarray(histogram, dtype=np.float64)
    mean = np.asarray(mean_hist, dtype=np.float64)
    if hist.shape != (BIN_COUNT,) or mean.shape != (BIN_COUNT,):
        raise ValueError(
            f"expected {BIN_COUNT}-bin histograms, got shapes "
            f"{hist.shape} and {mean.shape}"
        )
    # mean histograms carry float error below 1e-6; anything larger is a
    # genuine frame-size mismatch
    if abs(float(hist.sum()) - float(mean.sum())) > 1e-3:
        raise ValueError(
            f"pixel counts differ: histogram has {hist.sum()}, "
            f"mean histogram has {mean.sum()}"
        )
    return float(np.abs(hist - mean).sum())


def ihd(histograms: Sequence[np.ndarray]) -> float:
    """Normalized illumination histogram discrepancy over a sequence.

    Per-frame L1 deviations are combined with an exactly rounded sum, so the
    score does not depend on frame order.
    """
    pixel_count = _checked_pixel_count(histograms)
    mean = mean_histogram(histograms)
    total = math.fsum(frame_discrepancy(h, mean) for h in histograms)
    return total / (len(histograms) * pixel_count)


def ihc(histograms: Sequence[np.ndarray]) -> float:
    """Illumination histogram consistency: 2 minus the discrepancy score."""
    return 2.0 - ihd(histograms)


def evaluate_sequence(
    frames: Sequence[np.ndarray],
    sigma: float = DEFAULT_SIGMA,
    frame_ids: Sequence[str] | None = None,
) -> SequenceReport:
    """Run the full pipeline over a frame sequence.

    Estimates each frame's illumination map, histograms it, and reduces the
    histograms to IHD/IHC.  All frames must share one width and height.

    Args:
        frames: gray images (2-D arrays, intensities in [0, 255]).
        sigma: Gaussian surround scale in pixels.
        frame_ids: optional identifiers reported alongside per-frame values;
            defaults to the frame indices.

    Returns:
        SequenceReport with per-frame discrepancies and sequence scores.
    """
    if len(frames) == 0:
        raise ValueError("cannot evaluate an empty frame sequence")
    if frame_ids is None:
        ids = [str(i) for i in range(len(frames))]
    else:
        ids = [str(fid) for fid in frame_ids]
        if len(ids) != len(frames):
            raise ValueError(
                f"got {len(ids)} frame ids for {len(frames)} frames"
            )

    shape = np.asarray(frames[0]).shape
    for i, frame in enumerate(frames[1:], start=1):
        if np.asarray(frame).shape != shape:
            raise ValueError(
                f"frame {ids[i]} has shape {np.asarray(frame).shape} but "
                f"frame {ids[0]} has shape {shape}; all frames must match"
            )

    kernel = build_kernel(sigma)
    histograms = [histogram_of(blur(frame, kernel)) for frame in frames]
    pixel_count = _checked_pixel_count(histograms)
    mean = mean_histogram(histograms)
    per_frame = [frame_discrepancy(h, mean) for h in histograms]
    discrepancy = math.fsum(per_frame) / (len(frames) * pixel_count)
    return SequenceReport(
        frame_count=len(frames),
        pixel_count=pixel_count,
        per_frame_discrepancy=per_frame,
        ihd=discrepancy,
        ihc=2.0 - discrepancy,
        sigma=float(sigma),
        frame_ids=ids,
    )
