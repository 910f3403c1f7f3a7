"""Brute-force reference implementations for validating the fast pipeline.

The direct DFT below shares nothing with numpy's FFT: each output bin is an
explicit double sum over input samples, evaluated per bin. It is
intentionally slow and size-limited; its only job is to catch ordering or
normalization bugs in the fast transforms. The transfer function itself is
shared with the fast path on purpose (it is a pointwise scalar formula,
unit-tested separately against closed forms).
"""

from __future__ import annotations

import numpy as np

from .aberrations import AberrationSet
from .grid import ComplexField, frequency_coords

__all__ = ["MAX_ORACLE_PIXELS", "dft_direct", "propagate_direct"]

MAX_ORACLE_PIXELS = 4096


def dft_direct(field: ComplexField, inverse: bool = False) -> ComplexField:
    """Unitary 2-D DFT by direct summation (same convention as the fast path)."""
    spec = field.spec
    if spec.nx * spec.ny > MAX_ORACLE_PIXELS:
        raise ValueError(
            f"direct DFT limited to {MAX_ORACLE_PIXELS} pixels, got {spec.nx * spec.ny}"
        )
    sign = 1j if inverse else -1j
    rows = np.arange(spec.ny)
    cols = np.arange(spec.nx)
    # per-bin phase vectors exp(sign * 2*pi*p*a/ny), exp(sign * 2*pi*q*b/nx)
    row_phases = [np.exp(sign * 2.0 * np.pi * p * rows / spec.ny) for p in range(spec.ny)]
    col_phases = [np.exp(sign * 2.0 * np.pi * q * cols / spec.nx) for q in range(spec.nx)]
    out = np.empty(spec.shape, dtype=np.complex128)
    for p in range(spec.ny):
        row_sum = row_phases[p] @ field.data  # sum over a for fixed p
        for q in range(spec.nx):
            out[p, q] = row_sum @ col_phases[q]  # then over b
    out /= np.sqrt(spec.nx * spec.ny)
    return ComplexField(spec, out)


def propagate_direct(field: ComplexField, aberrations: AberrationSet) -> ComplexField:
    """Aberrated propagation via the direct DFT; contract identical to propagate."""
    spec = field.spec
    kx, ky = frequency_coords(spec)
    chi = aberrations.chi(kx[np.newaxis, :], ky[:, np.newaxis])
    spectrum = dft_direct(field)
    return dft_direct(ComplexField(spec, spectrum.data * chi), inverse=True)
