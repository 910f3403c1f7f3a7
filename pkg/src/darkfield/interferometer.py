"""Nulling Mach-Zehnder composition of the screen field.

The object arm carries the exit wave through the aberrated system; the
reference arm re-delivers the unscattered plane wave with a constant phase
bias (and may be blocked entirely). Bright-field imaging blocks the
reference; dark-field imaging opens it with a pi bias so the unscattered
component destructively cancels, leaving only scattered radiation at
the screen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .aberrations import AberrationSet
from .grid import ComplexField, RealImage, intensity, is_uniform
from .propagate import propagate

__all__ = [
    "InterferometerConfig",
    "screen_field",
    "bright_field_image",
    "dark_field_image",
    "analytic_phase_null",
]


@dataclass(frozen=True)
class InterferometerConfig:
    """Reference-arm state and the object arm's aberration set."""

    reference_blocked: bool = False
    phase_bias: float = 0.0
    aberrations: AberrationSet = field(default_factory=AberrationSet)
    reference_amplitude: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.phase_bias):
            raise ValueError("phase bias must be finite")
        if not (math.isfinite(self.reference_amplitude) and self.reference_amplitude >= 0):
            raise ValueError("reference amplitude must be finite and non-negative")


def _check_reference(exit_field: ComplexField, psi0: ComplexField) -> None:
    if exit_field.spec != psi0.spec:
        raise ValueError("exit field and reference wave are on different grids")
    if not is_uniform(psi0):
        raise ValueError("psi0 must be a constant plane wave")


def screen_field(
    exit_field: ComplexField, psi0: ComplexField, cfg: InterferometerConfig
) -> ComplexField:
    """Complex field at the screen: propagated object arm plus biased reference.

    The reference contribution is ``reference_amplitude * exp(i*phase_bias) * psi0``,
    or zero when the reference is blocked.
    """
    _check_reference(exit_field, psi0)
    out = propagate(exit_field, cfg.aberrations)
    if cfg.reference_blocked:
        return out
    bias = cfg.reference_amplitude * np.exp(1j * cfg.phase_bias)
    return ComplexField(out.spec, out.data + bias * psi0.data)


def bright_field_image(exit_field: ComplexField, aberrations: AberrationSet) -> RealImage:
    """Intensity with the reference blocked: |propagated exit wave|^2."""
    return intensity(propagate(exit_field, aberrations))


def dark_field_image(
    exit_field: ComplexField, psi0: ComplexField, aberrations: AberrationSet
) -> RealImage:
    """Intensity of the nulled screen field |propagate(exit) - psi0|^2.

    With no object (exit wave equal to psi0) the image vanishes identically:
    the defining dark-field property. The subtraction is exact rather than
    going through exp(i*pi), which would leak a ~1e-16 imaginary part.
    """
    _check_reference(exit_field, psi0)
    out = propagate(exit_field, aberrations)
    return intensity(ComplexField(out.spec, out.data - psi0.data))


def analytic_phase_null(phi):
    """Dark-field intensity 2*(1 - cos(phi)) of a pure phase shift phi.

    Vanishes exactly at phi = 0 mod 2*pi; peaks at 4 for phi = pi. Accepts
    scalars or arrays.
    """
    result = 2.0 * (1.0 - np.cos(phi))
    return float(result) if np.isscalar(phi) else result
