"""Shared setup for the demo scripts: paper-scale grid, specimen, plotting."""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import darkfield as df

REPO = Path(__file__).resolve().parent.parent
OUTPUT = Path(__file__).resolve().parent / "output"

# paper-scale setup: 512 x 512 pixels over 5.12 mm x 5.12 mm of HeNe light
SPEC = df.GridSpec(nx=512, ny=512, width=5.12e-3, height=5.12e-3, wavelength=632.8e-9)


def specimen_exit_wave():
    """Exit wave of the shipped weakly absorbing, strongly phase-shifting object."""
    tmap = df.load_binary_image(REPO / "assets" / "object_512.pgm", SPEC, threshold=0.5)
    tmap = df.gaussian_smooth(tmap, fwhm_px=1.5)
    calib = df.calibrate(target_min_intensity=0.998, target_max_phase=3.6 * np.pi)
    return df.exit_wave(tmap, calib)


def save_pair(name, left, right, titles, log_right=False):
    """Save a side-by-side bright/dark (or similar) figure."""
    OUTPUT.mkdir(exist_ok=True)
    fig, axes = plt.subplots(1, 2, figsize=(9, 4.6))
    for ax, img, title in zip(axes, (left, right), titles):
        shown = np.log10(img + 1e-12) if log_right and img is right else img
        im = ax.imshow(shown, cmap="gray", origin="upper",
                       extent=[0, SPEC.width * 1e3, SPEC.height * 1e3, 0])
        ax.set_title(title)
        ax.set_xlabel("x (mm)")
        ax.set_ylabel("y (mm)")
        fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    path = OUTPUT / f"{name}.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    print(f"wrote {path}")
