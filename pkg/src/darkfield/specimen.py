"""Thin single-material specimens under the projection approximation.

A specimen is a normalized projected-thickness map T in [0, 1] (unit
thickness = the object's maximum physical thickness). The material enters
only through two observable contrast targets: the minimum transmitted
intensity exp(-mu) at T = 1 and the maximum phase shift kappa at T = 1.
The exit-surface wave is then

    psi = exp(-mu*T/2) * exp(i*kappa*T)

which is exactly 1+0i wherever T = 0, so an empty specimen reproduces the
incident unit plane wave bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fileio import RasterError, read_raster
from .grid import ComplexField, GridSpec

__all__ = [
    "ThicknessMap",
    "MaterialCalibration",
    "fwhm_to_sigma",
    "load_binary_image",
    "gaussian_smooth",
    "calibrate",
    "exit_wave",
]


@dataclass
class ThicknessMap:
    """Normalized projected thickness in [0, 1] on a grid."""

    spec: GridSpec
    values: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.values, dtype=np.float64)
        if arr.shape != self.spec.shape:
            raise ValueError(f"thickness shape {arr.shape} does not match grid {self.spec.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("thickness map contains non-finite values")
        if arr.min() < 0.0 or arr.max() > 1.0:
            raise ValueError("normalized thickness must lie in [0, 1]")
        self.values = arr


@dataclass(frozen=True)
class MaterialCalibration:
    """Attenuation (mu) and phase (kappa) per unit normalized thickness."""

    mu: float
    kappa: float

    def __post_init__(self):
        if not (math.isfinite(self.mu) and self.mu >= 0):
            raise ValueError("mu must be finite and non-negative")
        if not math.isfinite(self.kappa):
            raise ValueError("kappa must be finite")


def calibrate(target_min_intensity: float, target_max_phase: float) -> MaterialCalibration:
    """Material constants from the two published contrast targets.

    mu = -ln(target_min_intensity) so that intensity exp(-mu*T) reaches the
    target at T = 1; kappa is the maximum phase shift in radians.
    """
    if not 0.0 < target_min_intensity <= 1.0:
        raise ValueError("target minimum intensity must lie in (0, 1]")
    return MaterialCalibration(mu=-math.log(target_min_intensity), kappa=float(target_max_phase))


def load_binary_image(path, spec: GridSpec, threshold: float = 0.5) -> ThicknessMap:
    """Threshold a grayscale raster into a binary thickness map.

    Pixels with value >= threshold * max_raster_value map to T = 1, the rest
    to T = 0. Raster row 0 becomes field row 0. The raster dimensions must
    equal (nx, ny) exactly; there is no implicit resampling.
    """
    if not 0.0 < threshold < 1.0:
        raise ValueError("threshold must lie in (0, 1)")
    raster, maxval = read_raster(path)
    if raster.shape != spec.shape:
        raise RasterError(
            f"raster is {raster.shape[1]}x{raster.shape[0]} pixels but the grid "
            f"needs {spec.nx}x{spec.ny}"
        )
    values = (raster >= threshold * maxval).astype(np.float64)
    return ThicknessMap(spec, values)


def fwhm_to_sigma(fwhm: float) -> float:
    """Standard deviation of a Gaussian with the given full width at half maximum."""
    return fwhm / (2.0 * math.sqrt(2.0 * math.log(2.0)))


def _wrapped_gaussian_kernel(ny: int, nx: int, sigma: float) -> np.ndarray:
    """Unit-sum sampled Gaussian centered at pixel (0, 0) with torus distances."""
    iy = np.arange(ny, dtype=np.float64)
    ix = np.arange(nx, dtype=np.float64)
    dy = np.minimum(iy, ny - iy)
    dx = np.minimum(ix, nx - ix)
    kernel = np.exp(-(dy[:, np.newaxis] ** 2 + dx[np.newaxis, :] ** 2) / (2.0 * sigma**2))
    return kernel / kernel.sum()


def gaussian_smooth(tmap: ThicknessMap, fwhm_px: float) -> ThicknessMap:
    """Circular (periodic) Gaussian blur by a full width at half maximum in pixels.

    The kernel is a sampled Gaussian normalized to unit sum on the discrete
    grid, so constants are preserved exactly; convolution runs in the
    frequency domain. fwhm_px = 0 returns the map unchanged. Output is
    clamped to [0, 1] to absorb roundoff undershoot.
    """
    if fwhm_px < 0:
        raise ValueError("smoothing FWHM must be non-negative")
    if fwhm_px == 0:
        return ThicknessMap(tmap.spec, tmap.values.copy())
    kernel = _wrapped_gaussian_kernel(tmap.spec.ny, tmap.spec.nx, fwhm_to_sigma(fwhm_px))
    smoothed = np.fft.ifft2(np.fft.fft2(tmap.values) * np.fft.fft2(kernel)).real
    np.clip(smoothed, 0.0, 1.0, out=smoothed)
    return ThicknessMap(tmap.spec, smoothed)


def exit_wave(tmap: ThicknessMap, calib: MaterialCalibration) -> ComplexField:
    """Exit-surface wave exp(-mu*T/2) * exp(i*kappa*T) of the thin object."""
    t = tmap.values
    psi = np.exp(-0.5 * calib.mu * t) * np.exp(1j * calib.kappa * t)
    return ComplexField(tmap.spec, psi)
