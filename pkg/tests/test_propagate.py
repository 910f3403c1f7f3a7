"""Frequency-domain propagation: identities, oracle checks, conservation laws."""

import numpy as np
import pytest

import darkfield as df
from darkfield import oracle
from darkfield.aberrations import AberrationSet

from conftest import PAPER_WAVELENGTH, random_field


def _spec(n, pitch=1e-5):
    return df.GridSpec(n, n, n * pitch, n * pitch, PAPER_WAVELENGTH)


class TestPropagate:
    def test_plane_wave_unaffected_by_defocus(self, paper_spec):
        psi0 = df.plane_wave(paper_spec)
        out = df.propagate(psi0, df.defocus(10e-3, paper_spec.k0))
        assert np.abs(out.data - psi0.data).max() < 1e-13

    def test_empty_set_is_identity(self):
        spec = _spec(32)
        field = random_field(spec, seed=21)
        out = df.propagate(field, AberrationSet())
        assert np.abs(out.data - field.data).max() < 1e-12

    def test_matches_direct_oracle_on_defocus(self, small_spec):
        field = random_field(small_spec, seed=22)
        preset = df.defocus(10e-3, small_spec.k0)
        fast = df.propagate(field, preset)
        direct = oracle.propagate_direct(field, preset)
        assert np.abs(fast.data - direct.data).max() < 1e-10

    def test_linearity(self):
        spec = _spec(64)
        preset = df.defocus(10e-3, spec.k0) + df.tilt(1e-6, 0.4)
        f, g = random_field(spec, 23), random_field(spec, 24)
        a, b = 0.8 - 1.1j, -2.0 + 0.3j
        lhs = df.propagate(a * f + b * g, preset)
        rhs = a * df.propagate(f, preset) + b * df.propagate(g, preset)
        assert np.abs(lhs.data - rhs.data).max() < 1e-11

    def test_shift_invariance(self):
        spec = _spec(64)
        preset = df.spherical(5e-3, spec.k0)
        field = random_field(spec, 25)
        shifted = df.ComplexField(spec, np.roll(field.data, (5, -9), axis=(0, 1)))
        lhs = df.propagate(shifted, preset)
        rhs = np.roll(df.propagate(field, preset).data, (5, -9), axis=(0, 1))
        assert np.abs(lhs.data - rhs).max() < 1e-11

    def test_defocus_semigroup(self):
        spec = _spec(64)
        field = random_field(spec, 26)
        twice = df.propagate(df.propagate(field, df.defocus(5e-3, spec.k0)), df.defocus(5e-3, spec.k0))
        once = df.propagate(field, df.defocus(10e-3, spec.k0))
        assert np.abs(twice.data - once.data).max() < 1e-10

    def test_sequential_equals_composed(self):
        spec = _spec(64)
        field = random_field(spec, 27)
        a = df.defocus(4e-3, spec.k0)
        b = df.tilt(1e-6, np.pi / 3) + df.spherical(2e-3, spec.k0)
        sequential = df.propagate(df.propagate(field, a), b)
        composed = df.propagate(field, a + b)
        assert np.abs(sequential.data - composed.data).max() < 1e-10

    def test_coherent_sets_preserve_power(self):
        spec = _spec(128)
        field = random_field(spec, 28)
        for preset in (df.defocus(10e-3, spec.k0), df.spherical(5e-3, spec.k0)):
            out = df.propagate(field, preset)
            assert df.total_power(out) == pytest.approx(df.total_power(field), rel=1e-12)

    def test_incoherent_tilt_changes_power_but_not_dc(self):
        spec = _spec(128)
        field = random_field(spec, 29)
        preset = df.tilt(3e-6, np.pi / 2)
        out = df.propagate(field, preset)
        assert abs(df.total_power(out) / df.total_power(field) - 1) > 1e-3
        # the DC bin is multiplied by chi(0,0) == 1 exactly
        assert df.transfer_grid(spec, preset)[0, 0] == 1 + 0j
        assert np.mean(out.data) == pytest.approx(np.mean(field.data), rel=1e-13)

    def test_amplification_error_propagates(self, paper_spec):
        field = df.plane_wave(paper_spec)
        with pytest.raises(df.AmplificationError):
            df.propagate(field, df.tilt(1.0, np.pi / 2))


class TestPropagateScattered:
    def test_no_object_gives_zero(self, small_spec):
        psi0 = df.plane_wave(small_spec)
        out = df.propagate_scattered(psi0, psi0, df.defocus(10e-3, small_spec.k0))
        assert np.abs(out.data).max() < 1e-13

    def test_empty_set_subtracts_exactly(self, small_spec):
        exit_f = random_field(small_spec, 30)
        psi0 = df.plane_wave(small_spec)
        out = df.propagate_scattered(exit_f, psi0, AberrationSet())
        assert np.abs(out.data - (exit_f.data - psi0.data)).max() < 1e-13

    def test_linearity_route_equivalence(self):
        spec = _spec(32)
        exit_f = random_field(spec, 31)
        psi0 = df.plane_wave(spec, 1.0, 0.0)
        for preset in (df.defocus(10e-3, spec.k0), df.tilt(2e-6, 1.0), df.spherical(5e-3, spec.k0)):
            scattered = df.propagate_scattered(exit_f, psi0, preset)
            other = df.propagate(exit_f, preset) - psi0
            assert np.abs(scattered.data - other.data).max() < 1e-12

    def test_spec_mismatch_rejected(self, small_spec):
        other = df.GridSpec(16, 16, 100e-6, 100e-6, PAPER_WAVELENGTH)
        with pytest.raises(ValueError):
            df.propagate_scattered(df.plane_wave(small_spec), df.plane_wave(other), AberrationSet())

    def test_nonuniform_psi0_rejected(self, small_spec):
        with pytest.raises(ValueError):
            df.propagate_scattered(
                df.plane_wave(small_spec), random_field(small_spec, 32), AberrationSet()
            )


class TestGreenFunction:
    def test_identity_system_is_scaled_impulse(self, small_spec):
        g = df.green_function(small_spec, AberrationSet())
        assert g.data[0, 0] == pytest.approx(np.sqrt(16 * 16), rel=1e-13)
        rest = g.data.copy()
        rest[0, 0] = 0.0
        assert np.abs(rest).max() < 1e-13

    def test_defocus_kernel_has_fourfold_symmetry(self):
        spec = _spec(64)
        g = df.green_function(spec, df.defocus(10e-3, spec.k0)).data
        # 90-degree rotation about pixel (0, 0) on the torus
        rotated = np.empty_like(g)
        n = spec.nx
        for i in range(n):
            rotated[i] = g[(-np.arange(n)) % n, i]
        assert np.abs(g - rotated).max() < 1e-12

    def test_impulse_response_matches_kernel(self):
        spec = _spec(32)
        preset = df.spherical(5e-3, spec.k0)
        data = np.zeros(spec.shape, dtype=complex)
        data[0, 0] = 1.0
        response = df.propagate(df.ComplexField(spec, data), preset)
        kernel = df.green_function(spec, preset)
        scale = 1.0 / np.sqrt(spec.nx * spec.ny)
        assert np.abs(response.data - kernel.data * scale).max() < 1e-12

    def test_propagation_is_circular_convolution_with_kernel(self, small_spec):
        # literal torus convolution, summed pixel by pixel
        preset = df.defocus(10e-3, small_spec.k0)
        field = random_field(small_spec, seed=33)
        kernel = df.green_function(small_spec, preset).data / np.sqrt(16 * 16)
        ny, nx = small_spec.shape
        conv = np.zeros(small_spec.shape, dtype=complex)
        for i in range(ny):
            for j in range(nx):
                for a in range(ny):
                    for b in range(nx):
                        conv[i, j] += field.data[a, b] * kernel[(i - a) % ny, (j - b) % nx]
        out = df.propagate(field, preset)
        assert np.abs(out.data - conv).max() < 1e-11


class TestNonSquareGrids:
    def test_oracle_agreement_with_direction_sensitive_preset(self):
        # nx != ny catches kx/ky axis swaps that square grids hide
        spec = df.GridSpec(nx=8, ny=16, width=80e-6, height=160e-6, wavelength=PAPER_WAVELENGTH)
        field = random_field(spec, seed=34)
        preset = df.tilt(2e-6, np.pi / 2) + df.defocus(5e-3, spec.k0)
        fast = df.propagate(field, preset)
        direct = oracle.propagate_direct(field, preset)
        assert np.abs(fast.data - direct.data).max() < 1e-10

    def test_tilt_direction_lands_on_correct_axis(self):
        spec = df.GridSpec(nx=8, ny=16, width=80e-6, height=160e-6, wavelength=PAPER_WAVELENGTH)
        kx, ky = df.frequency_coords(spec)
        assert kx.shape == (8,) and ky.shape == (16,)
        chi = df.transfer_grid(spec, df.tilt(2e-6, np.pi / 2))
        assert chi.shape == (16, 8)
        # tilt along +ky: modulus varies down the rows, constant across columns
        assert np.abs(np.diff(np.abs(chi), axis=1)).max() < 1e-15
        assert np.abs(np.diff(np.abs(chi), axis=0)).max() > 1e-3
