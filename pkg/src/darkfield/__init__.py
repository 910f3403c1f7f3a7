"""Forward simulation of arbitrarily aberrated coherent dark-field imaging.

A linear shift-invariant imaging system is described by complex aberration
coefficients weighting monomials of spatial frequency in the exponent of its
transfer function. This package builds exit waves of thin specimens, passes
them through such systems, and composes nulling-interferometer screens to
produce bright-field, dark-field, and aberrated dark-field (dark-field
hologram) intensity images.
"""

from .aberrations import (
    AberrationSet,
    AmplificationError,
    defocus,
    spherical,
    tilt,
)
from .grid import (
    ComplexField,
    GridSpec,
    RealImage,
    forward_transform,
    frequency_coords,
    intensity,
    inverse_transform,
    is_uniform,
    plane_wave,
    total_power,
)
from .interferometer import (
    InterferometerConfig,
    analytic_phase_null,
    bright_field_image,
    dark_field_image,
    screen_field,
)
from .propagate import green_function, propagate, propagate_scattered, transfer_grid
from .specimen import (
    MaterialCalibration,
    ThicknessMap,
    calibrate,
    exit_wave,
    fwhm_to_sigma,
    gaussian_smooth,
    load_binary_image,
)

__version__ = "0.1.0"

__all__ = [
    "AberrationSet",
    "AmplificationError",
    "ComplexField",
    "GridSpec",
    "InterferometerConfig",
    "MaterialCalibration",
    "RealImage",
    "ThicknessMap",
    "analytic_phase_null",
    "bright_field_image",
    "calibrate",
    "dark_field_image",
    "defocus",
    "exit_wave",
    "forward_transform",
    "frequency_coords",
    "fwhm_to_sigma",
    "gaussian_smooth",
    "green_function",
    "intensity",
    "inverse_transform",
    "is_uniform",
    "load_binary_image",
    "plane_wave",
    "propagate",
    "propagate_scattered",
    "screen_field",
    "spherical",
    "tilt",
    "total_power",
    "transfer_grid",
    "__version__",
]
