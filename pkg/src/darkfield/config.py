"""JSON simulation configs with unit-suffixed lengths.

Every length in a config may be a bare number (meters) or a string with one
of the suffixes m, mm, um, µm, nm ("5.12mm", "632.8nm"); unit mistakes are
the dominant foot-gun in optics configs, so suffixed strings are preferred
in shipped files. Input paths resolve relative to the config file's
directory; output paths resolve relative to the working directory.
"""

from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass

from . import aberrations as ab
from .grid import GridSpec

__all__ = ["ConfigError", "SimulationConfig", "OutputSpec", "parse_length", "load_config"]

MODES = ("bright", "dark", "custom")


class ConfigError(Exception):
    """A simulation config is missing, malformed, or inconsistent."""


_LENGTH_RE = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*(nm|um|µm|mm|m)\s*$")
_LENGTH_SCALE = {"m": 1.0, "mm": 1e-3, "um": 1e-6, "µm": 1e-6, "nm": 1e-9}


def parse_length(value, key: str) -> float:
    """A length in meters from a number or a unit-suffixed string."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        result = float(value)
    elif isinstance(value, str):
        match = _LENGTH_RE.match(value)
        if not match:
            raise ConfigError(
                f"{key}: cannot parse length {value!r} (use meters or a m/mm/um/µm/nm suffix)"
            )
        result = float(match.group(1)) * _LENGTH_SCALE[match.group(2)]
    else:
        raise ConfigError(f"{key}: expected a length, got {value!r}")
    if not math.isfinite(result):
        raise ConfigError(f"{key}: length {value!r} is not finite")
    return result


def _require(section: dict, key: str, context: str):
    if key not in section:
        raise ConfigError(f"missing required key {context}.{key}" if context else f"missing required key {key}")
    return section[key]


def _number(value, key: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key}: expected a number, got {value!r}")
    if not math.isfinite(float(value)):
        raise ConfigError(f"{key}: value must be finite")
    return float(value)


@dataclass(frozen=True)
class OutputSpec:
    intensity_path: str
    field_path: str | None
    normalization: object  # "minmax" or (lo, hi)


@dataclass
class SimulationConfig:
    grid: GridSpec
    aberrations: ab.AberrationSet
    defocus_z_total: float  # net preset defocus, for the Fresnel diagnostic
    raster_path: str | None = None
    threshold: float = 0.5
    smooth_fwhm_px: float = 0.0
    min_intensity: float | None = None
    max_phase: float | None = None
    mode: str | None = None
    phase_bias: float = 0.0
    reference_blocked: bool = False
    outputs: OutputSpec | None = None
    feature_size: float | None = None


def _parse_grid(raw: dict) -> GridSpec:
    grid = _require(raw, "grid", "")
    wavelength = parse_length(_require(raw, "wavelength", ""), "wavelength")
    try:
        nx = int(_require(grid, "nx", "grid"))
        ny = int(_require(grid, "ny", "grid"))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"grid.nx/grid.ny must be integers: {exc}") from exc
    width = parse_length(_require(grid, "width", "grid"), "grid.width")
    height = parse_length(_require(grid, "height", "grid"), "grid.height")
    try:
        return GridSpec(nx=nx, ny=ny, width=width, height=height, wavelength=wavelength)
    except ValueError as exc:
        raise ConfigError(f"invalid grid: {exc}") from exc


def _parse_aberrations(entries, k0: float) -> tuple[ab.AberrationSet, float]:
    if entries is None:
        return ab.AberrationSet(), 0.0
    if not isinstance(entries, list):
        raise ConfigError("aberrations must be a list of entries")
    total = ab.AberrationSet()
    z_total = 0.0
    for i, entry in enumerate(entries):
        where = f"aberrations[{i}]"
        if not isinstance(entry, dict):
            raise ConfigError(f"{where}: expected an object")
        if "kind" in entry:
            kind = entry["kind"]
            if kind == "defocus":
                z = parse_length(_require(entry, "z", where), f"{where}.z")
                total = total + ab.defocus(z, k0)
                z_total += z
            elif kind == "tilt":
                a_t = parse_length(_require(entry, "a_t", where), f"{where}.a_t")
                alpha = _number(_require(entry, "alpha", where), f"{where}.alpha")
                total = total + ab.tilt(a_t, alpha)
            elif kind == "spherical":
                cs = parse_length(_require(entry, "cs", where), f"{where}.cs")
                total = total + ab.spherical(cs, k0)
            else:
                raise ConfigError(f"{where}: unknown preset kind {kind!r}")
        else:
            try:
                m = int(_require(entry, "m", where))
                n = int(_require(entry, "n", where))
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"{where}: m and n must be integers") from exc
            re_part = _number(entry.get("re", 0.0), f"{where}.re")
            im_part = _number(entry.get("im", 0.0), f"{where}.im")
            try:
                total = total + ab.AberrationSet({(m, n): complex(re_part, im_part)})
            except ValueError as exc:
                raise ConfigError(f"{where}: {exc}") from exc
    return total, z_total


def _parse_normalization(raw):
    if raw == "minmax":
        return "minmax"
    if isinstance(raw, dict) and set(raw) == {"fixed_range"}:
        rng = raw["fixed_range"]
        if not (isinstance(rng, list) and len(rng) == 2):
            raise ConfigError("outputs.normalization.fixed_range must be [lo, hi]")
        lo = _number(rng[0], "outputs.normalization lo")
        hi = _number(rng[1], "outputs.normalization hi")
        if not hi > lo:
            raise ConfigError("outputs.normalization fixed_range needs hi > lo")
        return (lo, hi)
    raise ConfigError(
        f"outputs.normalization must be \"minmax\" or {{\"fixed_range\": [lo, hi]}}, got {raw!r}"
    )


def _parse_outputs(raw) -> OutputSpec | None:
    if raw is None:
        return None
    if not isinstance(raw, dict):
        raise ConfigError("outputs must be an object")
    intensity_path = _require(raw, "intensity_path", "outputs")
    if not isinstance(intensity_path, str):
        raise ConfigError("outputs.intensity_path must be a string")
    field_path = raw.get("field_path")
    if field_path is not None and not isinstance(field_path, str):
        raise ConfigError("outputs.field_path must be a string")
    normalization = _parse_normalization(raw.get("normalization", "minmax"))
    return OutputSpec(intensity_path=intensity_path, field_path=field_path, normalization=normalization)


def load_config(path) -> SimulationConfig:
    """Parse a simulation config file.

    The object/contrast/mode/outputs sections are individually optional at
    parse time (a PSF run needs only grid + aberrations + outputs); the
    operations that need them check and complain on use.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a JSON object")

    grid = _parse_grid(raw)
    abset, z_total = _parse_aberrations(raw.get("aberrations"), grid.k0)
    cfg = SimulationConfig(grid=grid, aberrations=abset, defocus_z_total=z_total)

    base_dir = os.path.dirname(os.path.abspath(os.fspath(path)))
    obj = raw.get("object")
    if obj is not None:
        if not isinstance(obj, dict):
            raise ConfigError("object must be an object")
        raster = _require(obj, "raster_path", "object")
        if not isinstance(raster, str):
            raise ConfigError("object.raster_path must be a string")
        cfg.raster_path = os.path.normpath(os.path.join(base_dir, raster))
        cfg.threshold = _number(obj.get("threshold", 0.5), "object.threshold")
        if not 0.0 < cfg.threshold < 1.0:
            raise ConfigError("object.threshold must lie in (0, 1)")
        cfg.smooth_fwhm_px = _number(obj.get("smooth_fwhm_px", 0.0), "object.smooth_fwhm_px")
        if cfg.smooth_fwhm_px < 0:
            raise ConfigError("object.smooth_fwhm_px must be non-negative")

    contrast = raw.get("contrast")
    if contrast is not None:
        if not isinstance(contrast, dict):
            raise ConfigError("contrast must be an object")
        cfg.min_intensity = _number(_require(contrast, "min_intensity", "contrast"), "contrast.min_intensity")
        if not 0.0 < cfg.min_intensity <= 1.0:
            raise ConfigError("contrast.min_intensity must lie in (0, 1]")
        cfg.max_phase = _number(_require(contrast, "max_phase", "contrast"), "contrast.max_phase")

    mode = raw.get("mode")
    if mode is not None:
        if mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {mode!r}")
        cfg.mode = mode
        if mode == "custom":
            cfg.phase_bias = _number(_require(raw, "phase_bias", ""), "phase_bias")
            blocked = _require(raw, "reference_blocked", "")
            if not isinstance(blocked, bool):
                raise ConfigError("reference_blocked must be a boolean")
            cfg.reference_blocked = blocked
        elif "phase_bias" in raw or "reference_blocked" in raw:
            raise ConfigError("phase_bias/reference_blocked are only valid in custom mode")

    cfg.outputs = _parse_outputs(raw.get("outputs"))
    if "feature_size" in raw:
        cfg.feature_size = parse_length(raw["feature_size"], "feature_size")
        if cfg.feature_size <= 0:
            raise ConfigError("feature_size must be positive")
    return cfg
