"""Frame-sequence loading, report serialization, and map dumps.

Frames come from directories of PNG / JPEG / PGM files selected by glob and
ordered lexicographically by filename.  Reports serialize to JSON (schema
version 1) or CSV.  Map dumps write per-frame raw / reflectance /
illumination PNGs plus the histogram each illumination map produced; the
PNGs are 8-bit visualizations only, all scores are computed from in-memory
reals.
"""

import csv
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

import numpy as np
from PIL import Image, UnidentifiedImageError

from .metric import BIN_COUNT, SequenceReport, histogram_of, quantize_intensities
from .retinex import (
    build_kernel,
    blur,
    reflectance_from_illumination,
    rescale_for_display,
    to_luminance,
)

SCHEMA_VERSION = "1"

# 16-bit and float rasters are out of scope; the 256-bin histograms are tied
# to the 8-bit 0..255 scale.
_REJECTED_MODES = {"I", "I;16", "I;16B", "I;16L", "I;16N", "F"}


@dataclass(frozen=True)
class FrameSource:
    """A directory of frame files selected by a filename glob."""

    root: str
    pattern: str = "*.png"


@dataclass(frozen=True)
class ReportDocument:
    """A sequence report plus provenance for serialization."""

    schema_version: str
    report: SequenceReport
    source: FrameSource
    timestamp: str  # ISO-8601 UTC instant


def resolve_frame_files(source: FrameSource) -> list[Path]:
    """List the files matched by the source glob, lexicographically."""
    root = Path(source.root)
    if not root.is_dir():
        raise FileNotFoundError(f"frame directory does not exist: {root}")
    files = sorted(p for p in root.glob(source.pattern) if p.is_file())
    if not files:
        raise ValueError(
            f"no frames matched pattern {source.pattern!r} in {root}"
        )
    return files


def _decode_frame(path: Path) -> np.ndarray:
    try:
        with Image.open(path) as img:
            if img.mode in _REJECTED_MODES:
                raise ValueError(
                    f"cannot decode {path}: {img.mode}-mode images are not "
                    f"8-bit; only 8-bit samples are supported"
                )
            if img.mode == "L":
                raster = np.asarray(img)
            else:
                raster = np.asarray(img.convert("RGB"))
    except UnidentifiedImageError as exc:
        raise ValueError(f"cannot decode {path}: {exc}") from exc
    return to_luminance(raster)


def load_sequence(source: FrameSource) -> tuple[list[np.ndarray], list[str]]:
    """Decode all matched frames as gray images, in filename order.

    Returns the frames plus their filenames.  All frames must share one
    width and height.
    """
    files = resolve_frame_files(source)
    frames = [_decode_frame(path) for path in files]
    first = frames[0].shape
    for path, frame in zip(files[1:], frames[1:]):
        if frame.shape != first:
            raise ValueError(
                f"frame dimensions differ: {files[0].name} is "
                f"{first[1]}x{first[0]} but {path.name} is "
                f"{frame.shape[1]}x{frame.shape[0]}"
            )
    return frames, [path.name for path in files]


def make_document(
    report: SequenceReport,
    source: FrameSource,
    timestamp: str | None = None,
) -> ReportDocument:
    """Wrap a report with schema version and a UTC timestamp."""
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat()
    return ReportDocument(
        schema_version=SCHEMA_VERSION,
        report=report,
        source=source,
        timestamp=timestamp,
    )


def write_report(doc: ReportDocument, format: str, path) -> None:
    """Serialize a report document as JSON or CSV."""
    if format == "json":
        _write_report_json(doc, Path(path))
    elif format == "csv":
        _write_report_csv(doc, Path(path))
    else:
        raise ValueError(f"unknown report format {format!r}, expected json or csv")


def _write_report_json(doc: ReportDocument, path: Path) -> None:
    payload = {
        "schema_version": doc.schema_version,
        "timestamp": doc.timestamp,
        "source": {"root": doc.source.root, "pattern": doc.source.pattern},
        "report": {
            "frame_count": doc.report.frame_count,
            "pixel_count": doc.report.pixel_count,
            "sigma": doc.report.sigma,
            "ihd": doc.report.ihd,
            "ihc": doc.report.ihc,
            "frame_ids": doc.report.frame_ids,
            "per_frame_discrepancy": doc.report.per_frame_discrepancy,
        },
    }
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def read_report(path) -> ReportDocument:
    """Parse a JSON report document written by write_report."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise OSError(f"cannot read report from {path}: {exc}") from exc
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(
            f"{path}: unsupported schema_version "
            f"{payload.get('schema_version')!r}, expected {SCHEMA_VERSION!r}"
        )
    rep = payload["report"]
    report = SequenceReport(
        frame_count=int(rep["frame_count"]),
        pixel_count=int(rep["pixel_count"]),
        per_frame_discrepancy=[float(v) for v in rep["per_frame_discrepancy"]],
        ihd=float(rep["ihd"]),
        ihc=float(rep["ihc"]),
        sigma=float(rep["sigma"]),
        frame_ids=[str(v) for v in rep["frame_ids"]],
    )
    src = payload["source"]
    return ReportDocument(
        schema_version=payload["schema_version"],
        report=report,
        source=FrameSource(root=src["root"], pattern=src["pattern"]),
        timestamp=payload["timestamp"],
    )


def _write_report_csv(doc: ReportDocument, path: Path) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["frame_id", "discrepancy"])
            for fid, disc in zip(
                doc.report.frame_ids, doc.report.per_frame_discrepancy
            ):
                writer.writerow([fid, f"{disc:.17g}"])
            fh.write(f"# ihd={doc.report.ihd:.17g}\n")
            fh.write(f"# ihc={doc.report.ihc:.17g}\n")
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def quantize_to_uint8(values: np.ndarray) -> np.ndarray:
    """Quantize real intensities to 8-bit for PNG output."""
    return quantize_intensities(values).astype(np.uint8)


def write_gray_png(values: np.ndarray, path) -> None:
    """Write a [0, 255]-valued array as an 8-bit grayscale PNG."""
    path = Path(path)
    try:
        Image.fromarray(quantize_to_uint8(values), mode="L").save(path, format="PNG")
    except OSError as exc:
        raise OSError(f"cannot write image to {path}: {exc}") from exc


def dump_maps(frames: Sequence[np.ndarray], sigma: float, out_dir) -> list[Path]:
    """Write per-frame raw/reflectance/illumination PNGs and histogram CSVs.

    For frame i the files are raw_i.png, reflectance_i.png (min-max rescaled
    for display), illumination_i.png, and histogram_i.csv with 256 bin,count
    rows taken from the in-memory histogram.  Returns the written paths.
    """
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out}: {exc}") from exc
    kernel = build_kernel(sigma)
    written: list[Path] = []
    for i, frame in enumerate(frames):
        illumination = blur(frame, kernel)
        reflectance = reflectance_from_illumination(frame, illumination)
        histogram = histogram_of(illumination)

        raw_path = out / f"raw_{i}.png"
        write_gray_png(frame, raw_path)
        refl_path = out / f"reflectance_{i}.png"
        write_gray_png(rescale_for_display(reflectance), refl_path)
        illum_path = out / f"illumination_{i}.png"
        write_gray_png(illumination, illum_path)

        hist_path = out / f"histogram_{i}.csv"
        try:
            with open(hist_path, "w", encoding="utf-8", newline="") as fh:
                writer = csv.writer(fh)
                for j in range(BIN_COUNT):
                    writer.writerow([j, int(histogram[j])])
        except OSError as exc:
            raise OSError(f"cannot write histogram to {hist_path}: {exc}") from exc
        written.extend([raw_path, refl_path, illum_path, hist_path])
    return written
