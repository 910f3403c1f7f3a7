import numpy as np
import pytest

import darkfield as df
from darkfield import phantoms

PAPER_WAVELENGTH = 632.8e-9

# paper-scale contrast targets
MIN_INTENSITY = 0.998
MAX_PHASE = 3.6 * np.pi


@pytest.fixture(scope="session")
def paper_spec():
    return df.GridSpec(nx=512, ny=512, width=5.12e-3, height=5.12e-3, wavelength=PAPER_WAVELENGTH)


@pytest.fixture(scope="session")
def small_spec():
    # paper pixel pitch on a 16x16 patch, small enough for the direct oracle
    return df.GridSpec(nx=16, ny=16, width=160e-6, height=160e-6, wavelength=PAPER_WAVELENGTH)


@pytest.fixture(scope="session")
def phantom_raster(tmp_path_factory):
    path = tmp_path_factory.mktemp("phantom") / "object_512.pgm"
    phantoms.save_pgm8(phantoms.symmetric_plate(512, 512), path)
    return path


@pytest.fixture(scope="session")
def phantom_thickness(paper_spec, phantom_raster):
    tmap = df.load_binary_image(phantom_raster, paper_spec, threshold=0.5)
    return df.gaussian_smooth(tmap, 1.5)


@pytest.fixture(scope="session")
def phantom_exit_wave(phantom_thickness):
    calib = df.calibrate(MIN_INTENSITY, MAX_PHASE)
    return df.exit_wave(phantom_thickness, calib)


def random_field(spec, seed=0):
    rng = np.random.default_rng(seed)
    data = rng.standard_normal(spec.shape) + 1j * rng.standard_normal(spec.shape)
    return df.ComplexField(spec, data)


def torus_flip(arr, axis):
    """Reflection i -> (-i) mod n along one axis (fixes index 0)."""
    return np.roll(np.flip(arr, axis), 1, axis)
