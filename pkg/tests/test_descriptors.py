import math

import numpy as np
import pytest

from fractex import (
    GrayImage,
    brute_force_volumes,
    build_surface,
    estimate_dimension,
    exact_edt_volumes,
    loglog_curve,
    raw_descriptors,
)
from fractex.descriptors import LogLogCurve
from fractex.errors import CurveTooShortError, DegenerateFitError
from fractex.minkowski import VolumeCurve

from conftest import random_gray


class TestLogLogCurve:
    def test_drops_radius_zero(self):
        curve = VolumeCurve([0, 1, 4], [4, 20, 60])
        u = loglog_curve(curve)
        assert np.allclose(u.t, [0.0, math.log(2)])
        assert np.allclose(u.v, [math.log(20), math.log(60)])

    def test_single_point_surface_curve(self):
        # Oracle-computed curve for a 1x1 image: V = [1, 7, 19] at r = [0, 1, sqrt(2)].
        surf = build_surface(GrayImage(np.array([[0]], dtype=np.uint8)))
        oracle = brute_force_volumes(surf, math.sqrt(2))
        assert oracle.volumes.tolist() == [1, 7, 19]
        u = loglog_curve(oracle)
        assert np.allclose(u.t, [0.0, 0.5 * math.log(2)])
        assert np.allclose(u.v, [math.log(7), math.log(19)])

    def test_too_short(self):
        with pytest.raises(CurveTooShortError):
            loglog_curve(VolumeCurve([0, 1], [1, 7]))

    def test_ordering_preserved(self):
        rng = np.random.default_rng(0)
        _, curve = exact_edt_volumes(build_surface(random_gray(rng, 6, 6)), 4.0)
        u = loglog_curve(curve)
        assert np.all(np.diff(u.t) > 0)
        assert np.all(np.diff(u.v) > 0)
        assert len(u) == len(curve) - 1


class TestEstimateDimension:
    @pytest.mark.parametrize("slope,expected", [(1.0, 2.0), (3.0, 0.0), (0.25, 2.75)])
    def test_exact_lines(self, slope, expected):
        t = np.linspace(0.1, 3.0, 40)
        u = LogLogCurve(t, slope * t + 0.8)
        est = estimate_dimension(u)
        assert abs(est.slope - slope) < 1e-12
        assert abs(est.dimension - expected) < 1e-12

    def test_fit_range(self):
        t = np.linspace(0.0, 5.0, 50)
        v = np.where(t < 2.5, 2.0 * t, 1.0 * t + 2.5)  # kinked line
        full = estimate_dimension(LogLogCurve(t, v))
        tail = estimate_dimension(LogLogCurve(t, v), (30, 50))
        assert abs(tail.slope - 1.0) < 1e-12
        assert tail.fit_range == (30, 50)
        assert full.slope != tail.slope

    def test_degenerate_abscissa(self):
        u = LogLogCurve(np.zeros(5), np.arange(5.0))
        with pytest.raises(DegenerateFitError):
            estimate_dimension(u)

    def test_needs_two_points(self):
        u = LogLogCurve(np.array([1.0]), np.array([2.0]))
        with pytest.raises(CurveTooShortError):
            estimate_dimension(u)

    def test_constant_image_is_planar(self):
        img = GrayImage(np.full((64, 64), 128, dtype=np.uint8))
        _, curve = exact_edt_volumes(build_surface(img), 10.0)
        est = estimate_dimension(loglog_curve(curve))
        assert 1.85 <= est.dimension <= 2.15

    def test_bounded_noise_rougher_than_plane(self):
        rng = np.random.default_rng(1)
        flat = GrayImage(np.full((64, 64), 128, dtype=np.uint8))
        rough = random_gray(rng, 64, 64, max_value=15)
        dims = []
        for img in (flat, rough):
            _, curve = exact_edt_volumes(build_surface(img), 10.0)
            dims.append(estimate_dimension(loglog_curve(curve)).dimension)
        assert dims[1] > dims[0]

    def test_dimension_in_open_interval(self):
        rng = np.random.default_rng(6)
        for _ in range(8):
            img = random_gray(rng, rng.integers(8, 20), rng.integers(8, 20))
            _, curve = exact_edt_volumes(build_surface(img), 5.0)
            est = estimate_dimension(loglog_curve(curve))
            assert 0.0 < est.dimension < 3.0


class TestRawDescriptors:
    def make_curve(self, n=12):
        t = np.linspace(0.0, 2.0, n)
        return LogLogCurve(t, np.log1p(t) + 3.0)

    def test_full_take_is_identity(self):
        u = self.make_curve()
        vec = raw_descriptors(u, len(u))
        assert np.array_equal(vec.values, u.v)
        assert vec.source == "raw-minkowski"

    def test_default_is_full(self):
        u = self.make_curve()
        assert np.array_equal(raw_descriptors(u).values, u.v)

    def test_prefix_property(self):
        u = self.make_curve()
        for n in range(2, len(u) + 1):
            longer = raw_descriptors(u, n).values
            shorter = raw_descriptors(u, n - 1).values
            assert np.array_equal(shorter, longer[: n - 1])

    def test_zero_length_rejected(self):
        with pytest.raises(CurveTooShortError):
            raw_descriptors(self.make_curve(), 0)

    def test_never_pads(self):
        u = self.make_curve(5)
        with pytest.raises(CurveTooShortError):
            raw_descriptors(u, 6)
