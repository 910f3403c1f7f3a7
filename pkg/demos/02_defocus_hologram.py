"""Defocus: inline holography bright field, dark-field hologram when nulled.

Quadratic coefficients C(2,0) = C(0,2) = -z/(2 k0) make the system a Fresnel
free-space propagator. At z = 10 mm the Fresnel number for an ~80 um feature
is about 1, so fringes sit in the intermediate regime: the bright field is a
classic inline hologram. Subtracting the unscattered wave leaves the
propagated scattered field alone -- a dark-field hologram whose reference is
the boundary wave diffracted from the object's edges, not the plane wave.
"""

import numpy as np

import darkfield as df
from _shared import SPEC, save_pair, specimen_exit_wave

Z = 10e-3
FEATURE = 80e-6

exit_wave = specimen_exit_wave()
psi0 = df.plane_wave(SPEC)
system = df.defocus(Z, SPEC.k0)

bright = df.bright_field_image(exit_wave, system)
dark = df.dark_field_image(exit_wave, psi0, system)

n_fresnel = FEATURE**2 / (SPEC.wavelength * Z)
print(f"Fresnel number for a {FEATURE * 1e6:.0f} um feature at z = {Z * 1e3:.0f} mm: "
      f"{n_fresnel:.2f} (intermediate field)")
print(f"bright field range: [{bright.data.min():.3f}, {bright.data.max():.3f}] "
      "(Fresnel fringes)")

# unlike the aberration-free case, fringes now spill outside the object
border = np.ones(SPEC.shape, dtype=bool)
border[40:-40, 40:-40] = False
print(f"dark-field intensity near the frame edge: max {dark.data[border].max():.3f} "
      "(fringe energy escapes the original support)")
scattered = df.propagate_scattered(exit_wave, psi0, system)
print(f"scattered-wave power reaching the screen: {df.total_power(scattered):.3e} m^2 "
      f"of {df.total_power(exit_wave):.3e} m^2 incident")

save_pair("02_defocus_hologram", bright.data, dark.data,
          (f"defocused bright field (z = {Z * 1e3:.0f} mm)", "dark-field hologram"))
