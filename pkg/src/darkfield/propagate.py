"""Frequency-domain application of a transfer function to sampled fields.

The pipeline is forward transform -> per-bin multiply by chi -> inverse
transform. chi is sampled at the grid's DFT frequencies with no band
limiting or apodization; the DFT makes the geometry a torus, so severe
defocus eventually wraps fringes around the edges (user responsibility,
see the Fresnel-number diagnostic in the CLI).
"""

from __future__ import annotations

import numpy as np

from .aberrations import DEFAULT_MAX_GAIN_EXPONENT, AberrationSet
from .grid import (
    ComplexField,
    GridSpec,
    forward_transform,
    frequency_coords,
    inverse_transform,
    is_uniform,
)

__all__ = ["transfer_grid", "propagate", "propagate_scattered", "green_function"]


def transfer_grid(
    spec: GridSpec,
    aberrations: AberrationSet,
    max_gain_exponent: float = DEFAULT_MAX_GAIN_EXPONENT,
) -> np.ndarray:
    """Sample chi on the grid's DFT frequency bins, shape (ny, nx)."""
    kx, ky = frequency_coords(spec)
    return aberrations.chi(
        kx[np.newaxis, :], ky[:, np.newaxis], max_gain_exponent=max_gain_exponent
    )


def propagate(field: ComplexField, aberrations: AberrationSet) -> ComplexField:
    """Pass a field through the aberrated system described by the coefficients.

    Parameters
    ----------
    field : ComplexField
        Input complex field (e.g. an exit-surface wave).
    aberrations : AberrationSet
        Transfer-function coefficients; the empty set is the identity.

    Returns
    -------
    ComplexField
        Output field on the same grid. A constant plane wave passes through
        unchanged (up to roundoff) whenever the set has no (0, 0) term,
        because the DC bin is multiplied by chi(0, 0) = 1.
    """
    chi = transfer_grid(field.spec, aberrations)
    spectrum = forward_transform(field)
    return inverse_transform(ComplexField(field.spec, spectrum.data * chi))


def propagate_scattered(
    exit_field: ComplexField, psi0: ComplexField, aberrations: AberrationSet
) -> ComplexField:
    """Propagate only the scattered part ``exit_field - psi0`` of an exit wave.

    psi0 must be a constant plane wave on the same grid (the unscattered
    component). By linearity the result equals ``propagate(exit_field) - psi0``
    whenever chi(0, 0) = 1; that equality is exercised in the test suite.
    """
    if exit_field.spec != psi0.spec:
        raise ValueError("exit field and plane wave are on different grids")
    if not is_uniform(psi0):
        raise ValueError("psi0 must be a constant plane wave")
    return propagate(exit_field - psi0, aberrations)


def green_function(spec: GridSpec, aberrations: AberrationSet) -> ComplexField:
    """Real-space propagator of the system: inverse transform of the chi grid.

    The identity system gives sqrt(nx*ny) at pixel (0, 0) and zero elsewhere;
    propagation is circular convolution with this kernel scaled by
    1/sqrt(nx*ny). Equivalently, a unit impulse at (0, 0) propagates to
    ``green_function(spec, s) / sqrt(nx*ny)``.
    """
    chi = transfer_grid(spec, aberrations)
    return inverse_transform(ComplexField(spec, chi))
