"""Illumination histogram consistency scoring for frame sequences.

Pipeline: estimate each frame's illumination map with a single-scale Retinex
Gaussian surround, histogram the maps into 256 brightness levels, and reduce
the histograms to the sequence-level IHD (discrepancy, 0 is best) and IHC
(consistency, 2 is best) scores.
"""

from .charts import line_chart_svg
from .metric import (
    BIN_COUNT,
    SequenceReport,
    evaluate_sequence,
    frame_discrepancy,
    histogram_of,
    ihc,
    ihd,
    mean_histogram,
    quantize_intensities,
)
from .retinex import (
    DEFAULT_SIGMA,
    REFLECTANCE_EPSILON,
    GaussianKernel,
    blur,
    build_kernel,
    estimate_illumination,
    estimate_reflectance,
    reflectance_from_illumination,
    rescale_for_display,
    to_luminance,
    validate_gray_image,
)
from .sequence_io import (
    SCHEMA_VERSION,
    FrameSource,
    ReportDocument,
    dump_maps,
    load_sequence,
    make_document,
    read_report,
    resolve_frame_files,
    write_gray_png,
    write_report,
)
from .synth import (
    IntervalSample,
    RampSpec,
    base_pattern,
    generate_ramp,
    interval_sweep,
    max_legal_interval,
    sample_interval,
    successive_difference_spread,
)

__version__ = "0.1.0"

__all__ = [
    "BIN_COUNT",
    "DEFAULT_SIGMA",
    "REFLECTANCE_EPSILON",
    "SCHEMA_VERSION",
    "FrameSource",
    "GaussianKernel",
    "IntervalSample",
    "RampSpec",
    "ReportDocument",
    "SequenceReport",
    "base_pattern",
    "blur",
    "build_kernel",
    "dump_maps",
    "estimate_illumination",
    "estimate_reflectance",
    "evaluate_sequence",
    "frame_discrepancy",
    "generate_ramp",
    "histogram_of",
    "ihc",
    "ihd",
    "interval_sweep",
    "line_chart_svg",
    "load_sequence",
    "make_document",
    "max_legal_interval",
    "mean_histogram",
    "quantize_intensities",
    "read_report",
    "reflectance_from_illumination",
    "rescale_for_display",
    "resolve_frame_files",
    "sample_interval",
    "successive_difference_spread",
    "to_luminance",
    "validate_gray_image",
    "write_gray_png",
    "write_report",
]
