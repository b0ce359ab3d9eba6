import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from ihcmetric.retinex import (
    blur,
    build_kernel,
    estimate_illumination,
    estimate_reflectance,
    reflectance_from_illumination,
    rescale_for_display,
    to_luminance,
    validate_gray_image,
)

from oracles import dense_gaussian_blur, gaussian_weights_direct

# frozen from the direct-evaluation oracle (gaussian_weights_direct, sigma=1)
SIGMA1_CENTER_WEIGHT = 0.3990502796524549
SIGMA1_IMPULSE_CENTER = 40.60648705112912  # center_weight**2 * 255


def small_images(max_side=12):
    sides = st.integers(min_value=1, max_value=max_side)
    return sides.flatmap(
        lambda h: sides.flatmap(
            lambda w: hnp.arrays(
                np.float64,
                (h, w),
                elements=st.floats(min_value=0.0, max_value=255.0, allow_nan=False),
            )
        )
    )


class TestBuildKernel:
    def test_sigma_one_shape_and_center(self):
        kernel = build_kernel(1.0)
        assert kernel.radius == 3
        assert len(kernel.weights) == 7
        assert kernel.weights[3] == pytest.approx(SIGMA1_CENTER_WEIGHT, abs=1e-12)

    def test_matches_direct_evaluation(self):
        for sigma in (0.3, 1.0, 2.5, 7.0, 80.0):
            expected, radius = gaussian_weights_direct(sigma)
            kernel = build_kernel(sigma)
            assert kernel.radius == radius
            np.testing.assert_allclose(kernel.weights, expected, atol=1e-14)

    @given(st.floats(min_value=0.1, max_value=100.0, allow_nan=False))
    def test_normalized_symmetric_positive(self, sigma):
        kernel = build_kernel(sigma)
        assert kernel.radius == int(np.ceil(3 * sigma))
        assert abs(kernel.weights.sum() - 1.0) <= 1e-12
        assert np.all(kernel.weights > 0)
        np.testing.assert_array_equal(kernel.weights, kernel.weights[::-1])

    @pytest.mark.parametrize("sigma", [0.0, -1.0, -0.5])
    def test_rejects_nonpositive_sigma(self, sigma):
        with pytest.raises(ValueError, match="sigma"):
            build_kernel(sigma)


class TestToLuminance:
    def test_gray_passthrough(self):
        out = to_luminance(np.array([[128]], dtype=np.uint8))
        assert out.dtype == np.float64
        assert out[0, 0] == 128.0

    def test_single_channel_axis_passthrough(self):
        out = to_luminance(np.full((2, 2, 1), 7, dtype=np.uint8))
        assert out.shape == (2, 2)
        assert np.all(out == 7.0)

    def test_white_maps_to_full_luma(self):
        out = to_luminance(np.array([[[255, 255, 255]]], dtype=np.uint8))
        assert out[0, 0] == pytest.approx(255.0, abs=1e-12)

    def test_red_maps_to_bt601_weight(self):
        out = to_luminance(np.array([[[255, 0, 0]]], dtype=np.uint8))
        assert out[0, 0] == pytest.approx(0.299 * 255, abs=1e-12)

    @pytest.mark.parametrize("channels", [2, 4, 5])
    def test_rejects_unsupported_channel_count(self, channels):
        frame = np.zeros((2, 2, channels), dtype=np.uint8)
        with pytest.raises(ValueError, match="channel"):
            to_luminance(frame)

    @given(
        hnp.arrays(
            np.uint8, (3, 4, 3), elements=st.integers(min_value=0, max_value=255)
        )
    )
    def test_output_in_intensity_range(self, frame):
        out = to_luminance(frame)
        assert out.min() >= 0.0
        assert out.max() <= 255.0


class TestBlur:
    def test_constant_image_is_fixed_point(self):
        image = np.full((9, 13), 42.0)
        out = blur(image, build_kernel(2.0))
        np.testing.assert_allclose(out, 42.0, atol=1e-9)

    @pytest.mark.parametrize("sigma", [0.5, 1.0, 2.0, 5.0])
    def test_matches_dense_oracle(self, sigma):
        rng = np.random.default_rng(42)
        image = rng.uniform(0.0, 255.0, size=(32, 32))
        separable = blur(image, build_kernel(sigma))
        dense = dense_gaussian_blur(image, sigma)
        assert np.max(np.abs(separable - dense)) < 1e-6

    def test_impulse_center_response(self):
        image = np.zeros((65, 65))
        image[32, 32] = 255.0
        out = blur(image, build_kernel(1.0))
        weights, radius = gaussian_weights_direct(1.0)
        assert out[32, 32] == pytest.approx(weights[radius] ** 2 * 255.0, abs=1e-9)
        assert out[32, 32] == pytest.approx(SIGMA1_IMPULSE_CENTER, abs=1e-9)

    @settings(max_examples=50, deadline=None)
    @given(small_images(), st.sampled_from([0.5, 1.0, 2.0]))
    def test_range_preservation(self, image, sigma):
        out = blur(image, build_kernel(sigma))
        assert out.min() >= image.min() - 1e-9
        assert out.max() <= image.max() + 1e-9

    @pytest.mark.parametrize("dx,dy", [(1, 0), (0, 2), (3, 3)])
    def test_shift_covariance_away_from_borders(self, dx, dy):
        rng = np.random.default_rng(7)
        image = rng.uniform(0.0, 255.0, size=(48, 48))
        kernel = build_kernel(1.5)
        shifted = np.roll(image, shift=(dy, dx), axis=(0, 1))
        blurred = blur(image, kernel)
        blurred_shifted = blur(shifted, kernel)
        margin = kernel.radius + max(abs(dx), abs(dy)) + 1
        inner = np.s_[margin:-margin, margin:-margin]
        expected = np.roll(blurred, shift=(dy, dx), axis=(0, 1))
        np.testing.assert_allclose(
            blurred_shifted[inner], expected[inner], atol=1e-9
        )

    def test_one_pixel_image_passes_through(self):
        out = blur(np.array([[100.0]]), build_kernel(3.0))
        assert out.shape == (1, 1)
        assert out[0, 0] == pytest.approx(100.0, abs=1e-9)


class TestEstimateIllumination:
    def test_constant_fixed_point(self):
        out = estimate_illumination(np.full((8, 8), 100.0), sigma=2.0)
        np.testing.assert_allclose(out, 100.0, atol=1e-9)

    def test_shape_and_range(self):
        rng = np.random.default_rng(3)
        image = rng.uniform(0.0, 255.0, size=(16, 24))
        out = estimate_illumination(image, sigma=1.0)
        assert out.shape == image.shape
        assert out.min() >= -1e-9
        assert out.max() <= 255.0 + 1e-9

    def test_preserves_linear_ramp_interior(self):
        # symmetric kernels reproduce affine images away from the borders
        image = np.tile(np.linspace(0.0, 255.0, 128), (128, 1))
        out = estimate_illumination(image, sigma=2.0)
        border = 7  # > 3*sigma
        inner = np.s_[border:-border, border:-border]
        assert np.max(np.abs(out[inner] - image[inner])) < 0.5


class TestEstimateReflectance:
    def test_constant_image_gives_zero(self):
        out = estimate_reflectance(np.full((8, 8), 77.0), sigma=2.0)
        np.testing.assert_allclose(out, 0.0, atol=1e-9)

    def test_all_black_gives_zero(self):
        out = estimate_reflectance(np.zeros((8, 8)), sigma=2.0)
        np.testing.assert_allclose(out, 0.0, atol=1e-12)

    def test_one_pixel_image_gives_zero(self):
        out = estimate_reflectance(np.array([[100.0]]), sigma=5.0)
        assert out[0, 0] == pytest.approx(0.0, abs=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(small_images(), st.sampled_from([0.5, 2.0, 10.0]))
    def test_always_finite(self, image, sigma):
        out = estimate_reflectance(image, sigma)
        assert np.all(np.isfinite(out))

    def test_mismatched_illumination_rejected(self):
        with pytest.raises(ValueError, match="shape"):
            reflectance_from_illumination(np.zeros((2, 2)), np.zeros((3, 3)))


class TestRescaleForDisplay:
    def test_affine_endpoints(self):
        out = rescale_for_display(np.array([[-1.0, 0.0, 1.0]]))
        np.testing.assert_allclose(out, [[0.0, 127.5, 255.0]], atol=1e-12)

    def test_constant_maps_to_midgray(self):
        out = rescale_for_display(np.full((3, 3), 5.5))
        np.testing.assert_array_equal(out, np.full((3, 3), 128.0))

    def test_full_span_is_identity(self):
        arr = np.array([[0.0, 10.0], [200.0, 255.0]])
        np.testing.assert_allclose(rescale_for_display(arr), arr, atol=1e-9)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            rescale_for_display(np.empty((0, 4)))


class TestValidateGrayImage:
    def test_rejects_wrong_rank(self):
        with pytest.raises(ValueError, match="2-D"):
            validate_gray_image(np.zeros(4))

    def test_rejects_empty(self):
        with pytest.raises(ValueError, match="pixels"):
            validate_gray_image(np.empty((0, 3)))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="255"):
            validate_gray_image(np.full((2, 2), 300.0))
        with pytest.raises(ValueError, match="255"):
            validate_gray_image(np.full((2, 2), -1.0))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError, match="finite"):
            validate_gray_image(np.array([[np.nan, 0.0]]))
