"""The generalized Huygens wavelets (outgoing Green functions) themselves.

Each system's real-space propagator is the inverse transform of its
transfer function: a scaled impulse for the identity system, the familiar
expanding-spherical-wave kernel for defocus, a distinct rotationally
symmetric kernel for spherical aberration, and a one-sided lobe for the
incoherent tilt. Propagation is circular convolution with these kernels;
they are what replaces the Fresnel wavelet in the dark-field-hologram view.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import darkfield as df
from _shared import OUTPUT, SPEC

systems = {
    "identity": df.AberrationSet(),
    "defocus z = 10 mm": df.defocus(10e-3, SPEC.k0),
    "spherical Cs = 5 mm": df.spherical(5e-3, SPEC.k0),
    "tilt A_t = 3 um": df.tilt(3e-6, np.pi / 2),
}

OUTPUT.mkdir(exist_ok=True)
fig, axes = plt.subplots(1, len(systems), figsize=(4 * len(systems), 4.2))
for ax, (name, system) in zip(axes, systems.items()):
    green = df.green_function(SPEC, system)
    image = df.intensity(green).data
    # center the kernel for display (it lives at pixel (0, 0) on the torus)
    centered = np.fft.fftshift(image)
    ax.imshow(np.log10(centered + 1e-9), cmap="inferno", origin="upper",
              extent=[-SPEC.width / 2 * 1e3, SPEC.width / 2 * 1e3,
                      SPEC.height / 2 * 1e3, -SPEC.height / 2 * 1e3])
    ax.set_title(name)
    ax.set_xlabel("x (mm)")
    print(f"{name:<22} peak |G|^2 = {image.max():.3e} at offset "
          f"{np.unravel_index(int(image.argmax()), image.shape)}")
fig.suptitle("log10 intensity of the outgoing Green functions")
fig.tight_layout()
fig.savefig(OUTPUT / "05_green_functions.png", dpi=120)
print(f"wrote {OUTPUT / '05_green_functions.png'}")
