"""Single-scale Retinex illumination and reflectance estimation.

An observed gray frame is modeled as reflectance times illumination.  The
illumination map is estimated by smoothing the frame with a wide Gaussian
surround; log-domain reflectance is the residual between the frame and its
smoothed version.  All images are 2-D float64 arrays (height x width) with
intensities on the 0..255 scale.
"""

from dataclasses import dataclass

import numpy as np

# Wide surround: captures global lighting rather than object texture.
DEFAULT_SIGMA = 80.0

# Floor added inside both logs so zero-intensity pixels stay finite.
REFLECTANCE_EPSILON = 1.0

# ITU-R BT.601 luma weights for RGB -> gray conversion.
_LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114])


@dataclass(frozen=True)
class GaussianKernel:
    """Normalized 1-D Gaussian tap weights, truncated at three sigma."""

    sigma: float
    radius: int
    weights: np.ndarray  # length 2*radius + 1, sums to 1


def validate_gray_image(image: np.ndarray, name: str = "image") -> np.ndarray:
    """Check a 2-D intensity raster and return it as float64."""
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D (height x width), got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} has no pixels (shape {arr.shape})")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    if arr.min() < 0.0 or arr.max() > 255.0:
        raise ValueError(
            f"{name} intensities must lie in [0, 255], "
            f"got range [{arr.min()}, {arr.max()}]"
        )
    return arr


def to_luminance(frame: np.ndarray) -> np.ndarray:
    """Convert an 8-bit raster to a gray intensity image.

    Single-channel input passes through unchanged; 3-channel input is mapped
    to BT.601 luma (0.299 R + 0.587 G + 0.114 B).  Returns float64 values in
    [0, 255].
    """
    arr = np.asarray(frame)
    if arr.ndim == 2:
        return arr.astype(np.float64)
    if arr.ndim == 3 and arr.shape[2] == 1:
        return arr[:, :, 0].astype(np.float64)
    if arr.ndim == 3 and arr.shape[2] == 3:
        luma = arr.astype(np.float64) @ _LUMA_WEIGHTS
        # the weights sum to 1 only up to rounding; keep outputs inside [0, 255]
        return np.clip(luma, 0.0, 255.0)
    channels = arr.shape[2] if arr.ndim == 3 else "?"
    raise ValueError(
        f"unsupported channel count {channels}: expected 1 or 3 channels, "
        f"got shape {arr.shape}"
    )


def build_kernel(sigma: float) -> GaussianKernel:
    """Build a normalized 1-D Gaussian kernel with radius ceil(3*sigma).

    Truncation discards under 0.3% of the mass; renormalization restores the
    convex-combination property that keeps smoothed values inside the input
    range.
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    radius = int(np.ceil(3.0 * sigma))
    offsets = np.arange(-radius, radius + 1, dtype=np.float64)
    weights = np.exp(-(offsets**2) / (2.0 * sigma * sigma))
    weights /= weights.sum()
    return GaussianKernel(sigma=float(sigma), radius=radius, weights=weights)


def _convolve_rows(image: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Convolve every row with a 1-D kernel, clamping at the row ends.

    Each output pixel is an independent dot product accumulated in fixed tap
    order, so results do not depend on how callers parallelize over frames.
    """
    radius = (len(weights) - 1) // 2
    width = image.shape[1]
    padded = np.pad(image, ((0, 0), (radius, radius)), mode="edge")
    out = np.zeros_like(image)
    for k, w in enumerate(weights):
        out += w * padded[:, k : k + width]
    return out


def blur(image: np.ndarray, kernel: GaussianKernel) -> np.ndarray:
    """Separable Gaussian smoothing with replicate (clamp-to-edge) borders.

    Equivalent to dense 2-D convolution with the outer-product kernel; the
    horizontal pass runs first, the vertical pass reuses the row routine on
    the transpose.
    """
    arr = validate_gray_image(image)
    horizontal = _convolve_rows(arr, kernel.weights)
    return np.ascontiguousarray(_convolve_rows(horizontal.T, kernel.weights).T)


def estimate_illumination(image: np.ndarray, sigma: float = DEFAULT_SIGMA) -> np.ndarray:
    """Estimate the per-pixel illumination map as the Gaussian-smoothed scene."""
    return blur(image, build_kernel(sigma))


def reflectance_from_illumination(
    image: np.ndarray, illumination: np.ndarray
) -> np.ndarray:
    """Log-domain reflectance of a scene given its illumination map.

    Computes log(scene + eps) - log(illumination + eps) with eps = 1 on the
    0..255 scale, so all-black regions map to exactly zero instead of -inf.
    """
    arr = np.asarray(image, dtype=np.float64)
    illum = np.asarray(illumination, dtype=np.float64)
    if arr.shape != illum.shape:
        raise ValueError(
            f"scene shape {arr.shape} does not match illumination shape {illum.shape}"
        )
    return np.log(arr + REFLECTANCE_EPSILON) - np.log(illum + REFLECTANCE_EPSILON)


def estimate_reflectance(image: np.ndarray, sigma: float = DEFAULT_SIGMA) -> np.ndarray:
    """Estimate the log-domain reflectance map of a gray frame."""
    arr = validate_gray_image(image)
    return reflectance_from_illumination(arr, blur(arr, build_kernel(sigma)))


def rescale_for_display(values: np.ndarray) -> np.ndarray:
    """Affinely rescale a map to the displayable [0, 255] range.

    A constant map has no span to stretch and maps to mid-gray 128.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        raise ValueError("cannot rescale an empty map")
    lo = arr.min()
    hi = arr.max()
    if hi == lo:
        return np.full_like(arr, 128.0)
    return (arr - lo) * (255.0 / (hi - lo))
