"""Complex aberration coefficients and the coherent transfer function.

A linear shift-invariant imaging system is characterized here by a sparse set
of complex coefficients ``C[m, n]`` weighting monomials ``kx**m * ky**n`` in
the exponent of its transfer function::

    chi(kx, ky) = exp[ i * sum_{m,n} C[m,n] * kx**m * ky**n ]

The real part of each coefficient contributes pure phase (a coherent
aberration, |chi| unchanged); the imaginary part attenuates or amplifies
spatial frequencies (an incoherent aberration). An empty set is the identity
system, and chi(0, 0) == 1 exactly for any set without a (0, 0) coefficient.

Amplifying incoherent terms grow without bound in k, so :meth:`AberrationSet.chi`
guards the modulus exponent: an exponent above ``max_gain_exponent`` (default
50, i.e. gain ~ 5e21) raises :class:`AmplificationError` naming the offending
frequency rather than silently overflowing.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

__all__ = [
    "AberrationSet",
    "AmplificationError",
    "DEFAULT_MAX_GAIN_EXPONENT",
    "defocus",
    "tilt",
    "spherical",
]

DEFAULT_MAX_GAIN_EXPONENT = 50.0


class AmplificationError(Exception):
    """Transfer-function modulus would exceed the configured gain bound."""

    def __init__(self, kx: float, ky: float, exponent: float, bound: float):
        self.kx = kx
        self.ky = ky
        self.exponent = exponent
        self.bound = bound
        super().__init__(
            f"|chi| = exp({exponent:.4g}) exceeds the amplification bound "
            f"exp({bound:.4g}) at kx={kx:.6g} rad/m, ky={ky:.6g} rad/m"
        )


class AberrationSet:
    """Immutable sparse collection of coefficients keyed by (m, n).

    Construct from a mapping ``{(m, n): complex_value, ...}`` or an iterable
    of ``((m, n), value)`` pairs. Duplicate keys are rejected; to combine
    systems use ``+``, which merges coefficient-wise (exponents add, so the
    sum of two sets is the system obtained by applying both in sequence).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=None):
        coeffs: dict[tuple[int, int], complex] = {}
        items = coefficients.items() if hasattr(coefficients, "items") else (coefficients or ())
        for key, value in items:
            m, n = key
            if m != int(m) or n != int(n) or m < 0 or n < 0:
                raise ValueError(f"monomial powers must be non-negative integers, got {key}")
            value = complex(value)
            if not cmath.isfinite(value):
                raise ValueError(f"coefficient C[{m},{n}] is not finite: {value}")
            key = (int(m), int(n))
            if key in coeffs:
                raise ValueError(f"duplicate coefficient for (m, n) = {key}")
            coeffs[key] = value
        self._coeffs = coeffs

    @property
    def coefficients(self) -> dict[tuple[int, int], complex]:
        """Copy of the coefficient mapping."""
        return dict(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AberrationSet):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __repr__(self) -> str:
        inner = ", ".join(f"({m},{n}): {v}" for (m, n), v in sorted(self._coeffs.items()))
        return f"AberrationSet({{{inner}}})"

    def __add__(self, other: "AberrationSet") -> "AberrationSet":
        """Coefficient-wise sum, merged by (m, n)."""
        if not isinstance(other, AberrationSet):
            return NotImplemented
        merged = dict(self._coeffs)
        for key, value in other._coeffs.items():
            merged[key] = merged.get(key, 0j) + value
        return AberrationSet(merged)

    def is_coherent(self) -> bool:
        """True iff every coefficient is purely real (|chi| == 1 everywhere)."""
        return all(v.imag == 0.0 for v in self._coeffs.values())

    def exponent(self, kx, ky):
        """Evaluate ``sum C[m,n] * kx**m * ky**n``; broadcasts over arrays."""
        kx = np.asarray(kx, dtype=np.float64)
        ky = np.asarray(ky, dtype=np.float64)
        total = np.zeros(np.broadcast_shapes(kx.shape, ky.shape), dtype=np.complex128)
        for (m, n), value in self._coeffs.items():
            total += value * kx**m * ky**n
        return total

    def chi(self, kx, ky, max_gain_exponent: float = DEFAULT_MAX_GAIN_EXPONENT):
        """Transfer-function value exp(i * exponent), guarded against blow-up.

        Accepts scalars or broadcastable arrays of kx, ky. |chi| equals
        exp(-Im(exponent)); if that modulus exponent exceeds
        ``max_gain_exponent`` anywhere, AmplificationError is raised for the
        worst offending frequency.
        """
        scalar = np.isscalar(kx) and np.isscalar(ky)
        exponent = self.exponent(kx, ky)
        gain = -exponent.imag  # log of |chi|
        if exponent.size and np.max(gain) > max_gain_exponent:
            flat = int(np.argmax(gain))
            bkx, bky = np.broadcast_arrays(np.asarray(kx, float), np.asarray(ky, float))
            raise AmplificationError(
                kx=float(bkx.flat[flat]),
                ky=float(bky.flat[flat]),
                exponent=float(gain.flat[flat]),
                bound=max_gain_exponent,
            )
        value = np.exp(1j * exponent)
        return complex(value[()]) if scalar else value


def defocus(z: float, k0: float) -> AberrationSet:
    """Defocus by free-space propagation distance z (meters), paraxial.

    Produces the two quadratic coefficients C[2,0] = C[0,2] = -z/(2*k0),
    whose exponent -z*|k|^2/(2*k0) is the Fresnel propagator phase. Negative
    z propagates backward; z = 0 is the identity system.
    """
    if k0 <= 0:
        raise ValueError("wavenumber k0 must be positive")
    c = complex(-z / (2.0 * k0))
    return AberrationSet({(2, 0): c, (0, 2): c})


def tilt(a_t: float, alpha: float) -> AberrationSet:
    """Incoherent tilt of strength a_t (meters) along direction alpha (radians).

    Purely imaginary first-order coefficients C[1,0] = i*a_t*cos(alpha) and
    C[0,1] = i*a_t*sin(alpha), giving the real attenuation/amplification
    kernel |chi| = exp(-a_t * k . (cos alpha, sin alpha)): frequencies along
    the tilt direction are damped, those opposing it amplified.
    """
    if a_t < 0:
        raise ValueError("tilt strength must be non-negative")
    return AberrationSet(
        {(1, 0): 1j * a_t * math.cos(alpha), (0, 1): 1j * a_t * math.sin(alpha)}
    )


def spherical(cs: float, k0: float) -> AberrationSet:
    """Spherical aberration of strength cs (meters).

    Purely real quartic coefficients C[4,0] = C[0,4] = -cs/(8*k0**3) and
    C[2,2] = -cs/(4*k0**3); the exponent collapses to the rotationally
    symmetric form -cs*|k|^4/(8*k0**3).
    """
    if k0 <= 0:
        raise ValueError("wavenumber k0 must be positive")
    c = complex(-cs / (8.0 * k0**3))
    return AberrationSet({(4, 0): c, (0, 4): c, (2, 2): 2.0 * c})
