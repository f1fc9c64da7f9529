import numpy as np
import pytest

from fractex import (
    GrayImage,
    build_surface,
    exact_edt_volumes,
    gaussian_derivative_kernel,
    loglog_curve,
    multiscale_descriptors,
    scale_transform,
)
from fractex.descriptors import LogLogCurve
from fractex.errors import CurveTooShortError, InvalidScaleError
from fractex.multiscale import ScaleSpaceParams


def curve_from(values):
    values = np.asarray(values, dtype=np.float64)
    return LogLogCurve(np.arange(len(values), dtype=np.float64), values)


class TestKernel:
    @pytest.mark.parametrize("a", [0.5, 0.7, 1.0, 2.0])
    def test_antisymmetric_and_zero_sum(self, a):
        radius = max(1, int(np.ceil(4 * a)))
        k = gaussian_derivative_kernel(a, radius)
        assert k[radius] == 0.0
        assert np.array_equal(k, -k[::-1])
        assert abs(k.sum()) < 1e-12

    def test_first_moment_normalization(self):
        # A derivative kernel turns a unit ramp into its slope: sum(t * k) = -1.
        k = gaussian_derivative_kernel(1.0, 4)
        t = np.arange(-4, 5)
        assert abs((t * k).sum() + 1.0) < 0.02

    def test_invalid_scale(self):
        with pytest.raises(InvalidScaleError):
            gaussian_derivative_kernel(0.0, 3)
        with pytest.raises(InvalidScaleError):
            gaussian_derivative_kernel(-1.0, 3)
        with pytest.raises(InvalidScaleError):
            gaussian_derivative_kernel(1.0, 0)


class TestScaleSpaceParams:
    def test_default_radius_tracks_scale(self):
        assert ScaleSpaceParams(0.7).kernel_radius == 3
        assert ScaleSpaceParams(0.1).kernel_radius == 1
        assert ScaleSpaceParams(2.0).kernel_radius == 8

    def test_explicit_radius_kept(self):
        assert ScaleSpaceParams(0.7, kernel_radius=5).kernel_radius == 5

    def test_validation(self):
        with pytest.raises(InvalidScaleError):
            ScaleSpaceParams(0.0)
        with pytest.raises(InvalidScaleError):
            ScaleSpaceParams(0.7, threshold_index=0)
        with pytest.raises(InvalidScaleError):
            ScaleSpaceParams(0.7, boundary="zero")


class TestScaleTransform:
    def test_constant_maps_to_zero(self):
        out = scale_transform(curve_from(np.full(60, 4.2)), ScaleSpaceParams(0.7))
        assert np.abs(out).max() < 1e-10

    def test_ramp_recovers_slope(self):
        slope = 0.37
        out = scale_transform(curve_from(slope * np.arange(80.0)), ScaleSpaceParams(1.0))
        interior = out[10:-10]
        assert np.allclose(interior, slope, rtol=0.02)

    def test_sign_flip(self):
        rng = np.random.default_rng(0)
        v = rng.normal(size=50)
        params = ScaleSpaceParams(0.7)
        assert np.array_equal(
            scale_transform(curve_from(-v), params), -scale_transform(curve_from(v), params)
        )

    def test_linearity(self):
        rng = np.random.default_rng(1)
        u, w = rng.normal(size=(2, 64))
        alpha, beta = 1.7, -0.4
        params = ScaleSpaceParams(1.0)
        combined = scale_transform(curve_from(alpha * u + beta * w), params)
        separate = alpha * scale_transform(curve_from(u), params) + beta * scale_transform(
            curve_from(w), params
        )
        assert np.abs(combined - separate).max() < 1e-10

    def test_same_length_output(self):
        for n in (2, 5, 51, 200):
            out = scale_transform(curve_from(np.arange(float(n))), ScaleSpaceParams(0.7))
            assert len(out) == n

    def test_too_short(self):
        with pytest.raises(CurveTooShortError):
            scale_transform(curve_from([1.0]), ScaleSpaceParams(0.7))

    def test_smoothing_shrinks_noise_variance(self):
        rng = np.random.default_rng(42)
        scales = (0.5, 1.0, 2.0, 4.0)
        variances = np.zeros(len(scales))
        for _ in range(50):
            v = rng.normal(size=120)
            for i, a in enumerate(scales):
                out = scale_transform(curve_from(v), ScaleSpaceParams(a))
                variances[i] += out.var()
        assert np.all(np.diff(variances) < 0)


class TestMultiscaleDescriptors:
    def test_threshold_truncation(self):
        u = curve_from(np.log(np.arange(2, 87, dtype=np.float64)))
        assert len(u) == 85
        vec = multiscale_descriptors(u, ScaleSpaceParams(0.7, threshold_index=51))
        assert len(vec) == 51
        assert vec.source == "multiscale"

    def test_threshold_beyond_length_is_noop(self):
        u = curve_from(np.linspace(0, 1, 20))
        vec = multiscale_descriptors(u, ScaleSpaceParams(0.7, threshold_index=500))
        assert len(vec) == 20

    def test_length_is_min_rule(self):
        for n, thresh in ((10, 3), (10, 10), (10, 11), (51, 51), (85, 51)):
            u = curve_from(np.linspace(0, 1, n))
            vec = multiscale_descriptors(u, ScaleSpaceParams(0.7, threshold_index=thresh))
            assert len(vec) == min(thresh, n)

    def test_truncation_matches_transform_prefix(self):
        rng = np.random.default_rng(3)
        u = curve_from(rng.normal(size=70))
        params = ScaleSpaceParams(0.7, threshold_index=51)
        assert np.array_equal(
            multiscale_descriptors(u, params).values, scale_transform(u, params)[:51]
        )


class TestEndToEndInvariance:
    def test_intensity_offset_gives_identical_descriptors(self):
        rng = np.random.default_rng(9)
        base = rng.integers(0, 16, (12, 12))
        params = ScaleSpaceParams(0.7, threshold_index=51)
        vectors = []
        for offset in (0, 100):
            img = GrayImage((base + offset).astype(np.uint8))
            _, curve = exact_edt_volumes(build_surface(img), 5.0)
            vectors.append(multiscale_descriptors(loglog_curve(curve), params).values)
        assert np.array_equal(vectors[0], vectors[1])
