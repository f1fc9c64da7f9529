"""Log-log fractality curve, dimension estimate, and raw descriptors.

The volume curve is read on log axes: ``t = log(radius)`` against
``v = log(volume)``. Its slope determines the fractal dimension of the
intensity surface (dimension = 3 - slope), and its samples, taken directly,
form the unfiltered descriptor baseline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CurveTooShortError, DegenerateFitError
from .minkowski import VolumeCurve


@dataclass(frozen=True, eq=False)
class LogLogCurve:
    """Sampled log(volume) over log(radius); both strictly increasing.

    ``uniform_t`` records whether the abscissa was resampled to uniform
    spacing (never done by this package; kept for downstream bookkeeping).
    """

    t: np.ndarray
    v: np.ndarray
    uniform_t: bool = False

    def __len__(self) -> int:
        return len(self.t)


@dataclass(frozen=True)
class DimensionEstimate:
    dimension: float
    slope: float
    intercept: float
    fit_range: tuple[int, int]


@dataclass(frozen=True, eq=False)
class DescriptorVector:
    """Feature vector extracted from one image window."""

    values: np.ndarray
    source: str  # "raw-minkowski" or "multiscale"
    params: object | None = None

    def __len__(self) -> int:
        return len(self.values)


def loglog_curve(curve: VolumeCurve) -> LogLogCurve:
    """Take natural logs of both volume-curve axes, dropping the radius-0 sample."""
    if len(curve) < 3:
        raise CurveTooShortError(f"volume curve has {len(curve)} points, need >= 3")
    keep = curve.sq_radii > 0
    t = 0.5 * np.log(curve.sq_radii[keep].astype(np.float64))
    v = np.log(curve.volumes[keep].astype(np.float64))
    return LogLogCurve(t, v)


def estimate_dimension(curve: LogLogCurve, fit_range=None) -> DimensionEstimate:
    """Estimate the fractal dimension as 3 minus the least-squares slope.

    ``fit_range`` is an optional (start, stop) index pair selecting the
    fitted section; default is the whole curve.
    """
    start, stop = fit_range if fit_range is not None else (0, len(curve))
    t = curve.t[start:stop]
    v = curve.v[start:stop]
    if len(t) < 2:
        raise CurveTooShortError(f"fit range [{start}:{stop}] has {len(t)} points, need >= 2")
    t_centered = t - t.mean()
    denom = float(t_centered @ t_centered)
    if denom == 0.0:
        raise DegenerateFitError("abscissa has zero variance over the fit range")
    slope = float(t_centered @ (v - v.mean())) / denom
    intercept = float(v.mean() - slope * t.mean())
    return DimensionEstimate(3.0 - slope, slope, intercept, (start, stop))


def raw_descriptors(curve: LogLogCurve, length: int | None = None) -> DescriptorVector:
    """First ``length`` log-volume samples, unfiltered (the descriptor baseline).

    ``length`` defaults to the full curve; a curve shorter than requested is
    an error, never padded.
    """
    if length is None:
        length = len(curve)
    if length < 1 or length > len(curve):
        raise CurveTooShortError(f"curve has {len(curve)} points, cannot take {length}")
    return DescriptorVector(curve.v[:length].copy(), "raw-minkowski")
