"""Sampled 2-D complex fields and the unitary discrete Fourier transform.

All geometry hangs off a :class:`GridSpec`: pixel counts, physical extent and
radiation wavelength, with every length in meters. Field data is stored
row-major as numpy ``complex128`` arrays of shape ``(ny, nx)`` (row 0 first,
matching raster row 0).

Transforms use the symmetric ``1/sqrt(nx*ny)`` normalization so that forward
and inverse are exact inverses of each other and Parseval's identity holds
without extra bookkeeping factors. The DC bin sits at index ``(0, 0)`` and
frequencies follow the standard DFT ordering (positive frequencies first,
then negative; the Nyquist bin carries the negative sign).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "GridSpec",
    "ComplexField",
    "RealImage",
    "plane_wave",
    "frequency_coords",
    "forward_transform",
    "inverse_transform",
    "intensity",
    "total_power",
    "is_uniform",
]


@dataclass(frozen=True)
class GridSpec:
    """Geometry of a sampled field.

    Attributes:
        nx, ny: pixel counts along x (columns) and y (rows); both even, >= 2.
        width, height: physical extent in meters.
        wavelength: radiation wavelength in meters.
    """

    nx: int
    ny: int
    width: float
    height: float
    wavelength: float

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ValueError(f"grid must be at least 2x2, got {self.nx}x{self.ny}")
        if self.nx % 2 or self.ny % 2:
            raise ValueError(f"grid dimensions must be even, got {self.nx}x{self.ny}")
        if not (self.width > 0 and self.height > 0):
            raise ValueError("grid width and height must be positive")
        if not self.wavelength > 0:
            raise ValueError("wavelength must be positive")

    @property
    def shape(self) -> tuple[int, int]:
        """Array shape, numpy ordering (rows, columns)."""
        return (self.ny, self.nx)

    @property
    def dx(self) -> float:
        """Pixel pitch along x, meters."""
        return self.width / self.nx

    @property
    def dy(self) -> float:
        """Pixel pitch along y, meters."""
        return self.height / self.ny

    @property
    def pixel_area(self) -> float:
        return self.dx * self.dy

    @property
    def k0(self) -> float:
        """Vacuum wavenumber 2*pi/wavelength, rad/m."""
        return 2.0 * np.pi / self.wavelength


def _as_field_array(data, shape, dtype) -> np.ndarray:
    arr = np.ascontiguousarray(data, dtype=dtype)
    if arr.shape != shape:
        raise ValueError(f"data shape {arr.shape} does not match grid shape {shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("field data contains non-finite values")
    return arr


@dataclass
class ComplexField:
    """Complex amplitudes sampled on a grid.

    Two fields may be combined pointwise (``+``, ``-``, ``*``) only when they
    share an identical :class:`GridSpec`; scalar multiplication is always
    allowed. Operations return fresh arrays.
    """

    spec: GridSpec
    data: np.ndarray

    def __post_init__(self):
        self.data = _as_field_array(self.data, self.spec.shape, np.complex128)

    def _check_compatible(self, other: "ComplexField") -> None:
        if self.spec != other.spec:
            raise ValueError("fields are on different grids and cannot be combined")

    def __add__(self, other: "ComplexField") -> "ComplexField":
        self._check_compatible(other)
        return ComplexField(self.spec, self.data + other.data)

    def __sub__(self, other: "ComplexField") -> "ComplexField":
        self._check_compatible(other)
        return ComplexField(self.spec, self.data - other.data)

    def __mul__(self, other):
        if isinstance(other, ComplexField):
            self._check_compatible(other)
            return ComplexField(self.spec, self.data * other.data)
        return ComplexField(self.spec, self.data * complex(other))

    __rmul__ = __mul__

    def __neg__(self) -> "ComplexField":
        return ComplexField(self.spec, -self.data)

    def copy(self) -> "ComplexField":
        return ComplexField(self.spec, self.data.copy())


@dataclass
class RealImage:
    """Non-negative real intensity values sampled on a grid."""

    spec: GridSpec
    data: np.ndarray

    def __post_init__(self):
        self.data = _as_field_array(self.data, self.spec.shape, np.float64)
        if np.any(self.data < 0):
            raise ValueError("intensity values must be non-negative")


def plane_wave(spec: GridSpec, amplitude: float = 1.0, phase: float = 0.0) -> ComplexField:
    """Uniform plane wave ``amplitude * exp(i*phase)`` at every pixel."""
    if amplitude < 0:
        raise ValueError("plane-wave amplitude must be non-negative")
    value = amplitude * np.exp(1j * phase)
    return ComplexField(spec, np.full(spec.shape, value, dtype=np.complex128))


def is_uniform(field: ComplexField) -> bool:
    """True when every sample holds the same value (a constant plane wave)."""
    return bool(np.all(field.data == field.data.flat[0]))


def frequency_coords(spec: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    """Angular spatial frequencies of the DFT bins, rad/m.

    Returns (kx, ky) with ``kx[i] = 2*pi*j/(nx*dx)`` where ``j = i`` for
    ``i < nx/2`` and ``j = i - nx`` otherwise (DC at index 0, Nyquist bin
    negative), and likewise for ky.
    """
    kx = 2.0 * np.pi * np.fft.fftfreq(spec.nx, d=spec.dx)
    ky = 2.0 * np.pi * np.fft.fftfreq(spec.ny, d=spec.dy)
    return kx, ky


def forward_transform(field: ComplexField) -> ComplexField:
    """Unitary 2-D DFT (symmetric 1/sqrt(N) normalization, DC at (0, 0))."""
    return ComplexField(field.spec, np.fft.fft2(field.data, norm="ortho"))


def inverse_transform(field: ComplexField) -> ComplexField:
    """Inverse of :func:`forward_transform`; round trips to machine precision."""
    return ComplexField(field.spec, np.fft.ifft2(field.data, norm="ortho"))


def intensity(field: ComplexField) -> RealImage:
    """Pointwise squared modulus |psi|^2."""
    d = field.data
    return RealImage(field.spec, d.real**2 + d.imag**2)


def total_power(field: ComplexField) -> float:
    """Integrated power sum(|psi|^2) * dx * dy, units m^2."""
    d = field.data
    return float(np.sum(d.real**2 + d.imag**2) * field.spec.pixel_area)
