"""Command-line front end: simulate, psf, presets, selftest.

Exit codes: 0 success, 2 config error, 3 raster error, 4 amplification
error, 5 output I/O error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from . import aberrations as ab
from .aberrations import AmplificationError
from .config import ConfigError, SimulationConfig, load_config, parse_length
from .fileio import RasterError, write_field, write_intensity
from .grid import ComplexField, GridSpec, intensity, plane_wave, total_power
from .interferometer import InterferometerConfig, screen_field
from .oracle import propagate_direct
from .propagate import green_function, propagate, transfer_grid
from .specimen import calibrate, exit_wave, gaussian_smooth, load_binary_image

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RASTER = 3
EXIT_AMPLIFICATION = 4
EXIT_IO = 5


def _print_diagnostics(diag: dict, out) -> None:
    print(f"total input power   = {diag['input_power']:.6e} m^2", file=out)
    print(f"total output power  = {diag['output_power']:.6e} m^2", file=out)
    chi00 = diag["chi00"]
    print(f"chi(0,0)            = {chi00.real:.6g}{chi00.imag:+.6g}j", file=out)
    print(f"max |chi| on grid   = {diag['max_abs_chi']:.6e}", file=out)
    if "fresnel_number" in diag:
        print(
            f"Fresnel number      = {diag['fresnel_number']:.4g} "
            f"(feature size {diag['feature_size']:.4g} m, defocus {diag['defocus_z']:.4g} m)",
            file=out,
        )


def _build_exit_wave(cfg: SimulationConfig):
    if cfg.raster_path is None:
        raise ConfigError("config has no object section")
    if cfg.min_intensity is None or cfg.max_phase is None:
        raise ConfigError("config has no contrast section")
    tmap = load_binary_image(cfg.raster_path, cfg.grid, cfg.threshold)
    tmap = gaussian_smooth(tmap, cfg.smooth_fwhm_px)
    calib = calibrate(cfg.min_intensity, cfg.max_phase)
    return exit_wave(tmap, calib)


def _diagnostics(cfg: SimulationConfig, field_in, field_out) -> dict:
    chi = transfer_grid(cfg.grid, cfg.aberrations)
    diag = {
        "input_power": total_power(field_in),
        "output_power": total_power(field_out),
        "chi00": cfg.aberrations.chi(0.0, 0.0),
        "max_abs_chi": float(np.abs(chi).max()),
    }
    if cfg.feature_size is not None and cfg.defocus_z_total != 0.0:
        diag["feature_size"] = cfg.feature_size
        diag["defocus_z"] = cfg.defocus_z_total
        diag["fresnel_number"] = cfg.feature_size**2 / (
            cfg.grid.wavelength * abs(cfg.defocus_z_total)
        )
    return diag


def run_simulation(cfg: SimulationConfig, out=None) -> dict:
    """Run the configured imaging mode and write the requested outputs."""
    out = out if out is not None else sys.stdout
    if cfg.mode is None:
        raise ConfigError("config has no mode")
    if cfg.outputs is None:
        raise ConfigError("config has no outputs section")
    exit_f = _build_exit_wave(cfg)
    psi0 = plane_wave(cfg.grid)
    if cfg.mode == "bright":
        screen = propagate(exit_f, cfg.aberrations)
    elif cfg.mode == "dark":
        propagated = propagate(exit_f, cfg.aberrations)
        screen = ComplexField(cfg.grid, propagated.data - psi0.data)
    else:
        icfg = InterferometerConfig(
            reference_blocked=cfg.reference_blocked,
            phase_bias=cfg.phase_bias,
            aberrations=cfg.aberrations,
        )
        screen = screen_field(exit_f, psi0, icfg)
    image = intensity(screen)
    diag = _diagnostics(cfg, exit_f, screen)
    _print_diagnostics(diag, out)
    write_intensity(image, cfg.outputs.intensity_path, cfg.outputs.normalization)
    print(f"wrote intensity     -> {cfg.outputs.intensity_path}", file=out)
    if cfg.outputs.field_path:
        write_field(screen, cfg.outputs.field_path)
        print(f"wrote field dump    -> {cfg.outputs.field_path}", file=out)
    return diag


def run_psf(cfg: SimulationConfig, out=None) -> dict:
    """Write intensity and field dumps of the system's real-space propagator."""
    out = out if out is not None else sys.stdout
    if cfg.outputs is None:
        raise ConfigError("config has no outputs section")
    green = green_function(cfg.grid, cfg.aberrations)
    image = intensity(green)
    write_intensity(image, cfg.outputs.intensity_path, cfg.outputs.normalization)
    print(f"wrote PSF intensity -> {cfg.outputs.intensity_path}", file=out)
    if cfg.outputs.field_path:
        write_field(green, cfg.outputs.field_path)
        print(f"wrote PSF field     -> {cfg.outputs.field_path}", file=out)
    chi = transfer_grid(cfg.grid, cfg.aberrations)
    return {"peak": float(image.data.max()), "max_abs_chi": float(np.abs(chi).max())}


def run_presets(args, out=None) -> None:
    out = out if out is not None else sys.stdout
    wavelength = parse_length(args.wavelength, "--wavelength")
    k0 = 2.0 * np.pi / wavelength
    z = parse_length(args.defocus_z, "--defocus-z")
    a_t = parse_length(args.tilt_at, "--tilt-at")
    cs = parse_length(args.spherical_cs, "--spherical-cs")
    alpha = args.tilt_alpha
    print(f"wavelength = {wavelength:.6e} m, k0 = {k0:.6e} rad/m", file=out)
    dz = ab.defocus(z, k0).coefficients[(2, 0)]
    print(f"defocus z = {z:.6e} m:", file=out)
    print(f"  C(2,0) = C(0,2) = -z/(2 k0) = {dz.real:.6e} m^2", file=out)
    t = ab.tilt(a_t, alpha).coefficients
    print(f"incoherent tilt A_t = {a_t:.6e} m, alpha = {alpha:.6f} rad:", file=out)
    print(f"  C(1,0) = i A_t cos(alpha) = {t[(1, 0)].imag:.6e}i m", file=out)
    print(f"  C(0,1) = i A_t sin(alpha) = {t[(0, 1)].imag:.6e}i m", file=out)
    s = ab.spherical(cs, k0).coefficients
    print(f"spherical Cs = {cs:.6e} m:", file=out)
    print(f"  C(4,0) = C(0,4) = -Cs/(8 k0^3) = {s[(4, 0)].real:.6e} m^4", file=out)
    print(f"  C(2,2) = -Cs/(4 k0^3) = {s[(2, 2)].real:.6e} m^4", file=out)


def run_selftest(args, out=None) -> int:
    """Compare the fast pipeline against the direct-DFT oracle on random fields."""
    out = out if out is not None else sys.stdout
    rng = np.random.default_rng(args.seed)
    sizes = [int(s) for s in args.sizes.split(",")]
    wavelength = 632.8e-9
    k0 = 2.0 * np.pi / wavelength
    presets = {
        "defocus": ab.defocus(10e-3, k0),
        "tilt": ab.tilt(3e-6, np.pi / 2),
        "spherical": ab.spherical(5e-3, k0),
    }
    tol = 1e-10
    worst = 0.0
    ok = True
    for n in sizes:
        spec = GridSpec(nx=n, ny=n, width=n * 1e-5, height=n * 1e-5, wavelength=wavelength)
        for name, preset in presets.items():
            diff = 0.0
            for _ in range(args.cases):
                data = rng.standard_normal(spec.shape) + 1j * rng.standard_normal(spec.shape)
                f = ComplexField(spec, data)
                fast = propagate(f, preset)
                direct = propagate_direct(f, preset)
                diff = max(diff, float(np.abs(fast.data - direct.data).max()))
            status = "ok" if diff < tol else "FAIL"
            print(f"{n:>4}x{n:<4} {name:<10} max |fast - direct| = {diff:.3e}  {status}", file=out)
            worst = max(worst, diff)
            ok = ok and diff < tol
    print(f"selftest {'PASSED' if ok else 'FAILED'} (worst {worst:.3e}, tolerance {tol:.0e})", file=out)
    return EXIT_OK if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="darkfield",
        description="Simulate arbitrarily aberrated coherent bright- and dark-field imaging.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run a simulation config end to end")
    p_sim.add_argument("config", help="path to a JSON simulation config")

    p_psf = sub.add_parser("psf", help="dump the system's point spread function")
    p_psf.add_argument("config", help="path to a JSON config with grid and aberrations")

    p_pre = sub.add_parser("presets", help="print the preset coefficient formulas")
    p_pre.add_argument("--wavelength", default="632.8nm")
    p_pre.add_argument("--defocus-z", default="10mm")
    p_pre.add_argument("--tilt-at", default="3um")
    p_pre.add_argument("--tilt-alpha", type=float, default=float(np.pi / 2))
    p_pre.add_argument("--spherical-cs", default="5mm")

    p_self = sub.add_parser("selftest", help="compare the fast pipeline to the direct-DFT oracle")
    p_self.add_argument("--sizes", default="8,16")
    p_self.add_argument("--cases", type=int, default=10)
    p_self.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            run_simulation(load_config(args.config))
        elif args.command == "psf":
            run_psf(load_config(args.config))
        elif args.command == "presets":
            run_presets(args)
        elif args.command == "selftest":
            return run_selftest(args)
        return EXIT_OK
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except RasterError as exc:
        print(f"raster error: {exc}", file=sys.stderr)
        return EXIT_RASTER
    except AmplificationError as exc:
        print(f"amplification error: {exc}", file=sys.stderr)
        return EXIT_AMPLIFICATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
