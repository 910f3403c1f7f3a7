"""File formats: raster input, 16-bit PGM intensity output, raw field dumps.

Rasters come in as 8/16-bit binary PGM (P5) or grayscale PNG. Intensity
images go out as 16-bit P5 (maxval 65535, most significant byte first per
the Netpbm convention) with a JSON sidecar recording the value mapping.
Complex fields dump as raw little-endian float64 (re, im) pairs, row-major,
with a JSON sidecar carrying the grid geometry; read_field restores them
bit-exactly.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .grid import ComplexField, GridSpec, RealImage

__all__ = [
    "RasterError",
    "read_raster",
    "write_intensity",
    "write_field",
    "read_field",
    "sidecar_path",
]

FIELD_LAYOUT = "row_major_re_im_f64le"


class RasterError(Exception):
    """A raster file is missing, malformed, or does not fit the grid."""


def sidecar_path(path) -> str:
    return f"{path}.meta.json"


def _ensure_parent(path) -> None:
    parent = os.path.dirname(os.fspath(path))
    if parent:
        os.makedirs(parent, exist_ok=True)


# ---------------------------------------------------------------------------
# raster input


def read_raster(path) -> tuple[np.ndarray, int]:
    """Read a grayscale raster; returns (float64 array (rows, cols), maxval)."""
    try:
        with open(path, "rb") as fh:
            magic = fh.read(2)
    except OSError as exc:
        raise RasterError(f"cannot open raster {path}: {exc}") from exc
    if magic == b"P5":
        return _read_pgm(path)
    if magic == b"\x89P":
        return _read_png(path)
    raise RasterError(f"unsupported raster format in {path} (need binary PGM P5 or PNG)")


def _read_pgm(path) -> tuple[np.ndarray, int]:
    with open(path, "rb") as fh:
        raw = fh.read()
    # header: magic, width, height, maxval as whitespace-separated tokens,
    # '#' comments allowed, single whitespace byte before pixel data
    tokens = []
    pos = 2  # past magic
    while len(tokens) < 3:
        if pos >= len(raw):
            raise RasterError(f"truncated PGM header in {path}")
        ch = raw[pos : pos + 1]
        if ch == b"#":
            pos = raw.find(b"\n", pos)
            if pos < 0:
                raise RasterError(f"truncated PGM header in {path}")
            continue
        if ch.isspace():
            pos += 1
            continue
        end = pos
        while end < len(raw) and not raw[end : end + 1].isspace():
            end += 1
        tokens.append(raw[pos:end])
        pos = end
    pos += 1  # single whitespace separating header from pixels
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError as exc:
        raise RasterError(f"bad PGM header in {path}: {tokens}") from exc
    if not (0 < maxval < 65536):
        raise RasterError(f"bad PGM maxval {maxval} in {path}")
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    expected = width * height * dtype.itemsize
    payload = raw[pos : pos + expected]
    if len(payload) != expected:
        raise RasterError(f"truncated PGM pixel data in {path}")
    pixels = np.frombuffer(payload, dtype=dtype).reshape(height, width)
    return pixels.astype(np.float64), maxval


def _read_png(path) -> tuple[np.ndarray, int]:
    from PIL import Image, UnidentifiedImageError

    try:
        with Image.open(path) as img:
            img.load()
            mode = img.mode
            if mode == "1":
                arr = np.asarray(img, dtype=np.float64)
                return arr, 1
            if mode == "L":
                return np.asarray(img, dtype=np.float64), 255
            if mode in ("I;16", "I;16B", "I"):
                arr = np.asarray(img, dtype=np.float64)
                if arr.max() > 65535:
                    raise RasterError(f"PNG {path} exceeds 16-bit range")
                return arr, 65535
    except (OSError, UnidentifiedImageError) as exc:
        raise RasterError(f"cannot read PNG {path}: {exc}") from exc
    raise RasterError(f"PNG {path} has mode {mode!r}; only grayscale is supported")


# ---------------------------------------------------------------------------
# intensity output


def _grid_meta(spec: GridSpec) -> dict:
    return {"nx": spec.nx, "ny": spec.ny, "width_m": spec.width, "height_m": spec.height}


def write_intensity(image: RealImage, path, normalization="minmax") -> None:
    """Write a 16-bit PGM plus a `<path>.meta.json` sidecar.

    normalization is either the string "minmax" (map [data min, data max] to
    the full range; a constant image maps to all zeros by convention) or a
    (lo, hi) pair mapping [lo, hi] to [0, 65535] with clamping.
    """
    data = image.data
    if isinstance(normalization, str):
        if normalization != "minmax":
            raise ValueError(f"unknown normalization {normalization!r}")
        lo, hi = float(data.min()), float(data.max())
        kind = "minmax"
    else:
        lo, hi = (float(v) for v in normalization)
        if not hi > lo:
            raise ValueError("fixed_range normalization needs hi > lo")
        kind = "fixed_range"
    if hi > lo:
        scaled = np.clip((data - lo) / (hi - lo), 0.0, 1.0)
        pixels = np.round(scaled * 65535.0).astype(">u2")
    else:
        pixels = np.zeros(data.shape, dtype=">u2")
    _ensure_parent(path)
    with open(path, "wb") as fh:
        fh.write(f"P5\n{image.spec.nx} {image.spec.ny}\n65535\n".encode("ascii"))
        fh.write(pixels.tobytes())
    meta = {
        "min": lo,
        "max": hi,
        "normalization": kind,
        "grid": _grid_meta(image.spec),
        "wavelength": image.spec.wavelength,
    }
    with open(sidecar_path(path), "w", encoding="ascii") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")


# ---------------------------------------------------------------------------
# complex-field dumps


def write_field(field: ComplexField, path) -> None:
    """Dump a field as raw f64le (re, im) pairs plus a JSON sidecar."""
    spec = field.spec
    _ensure_parent(path)
    with open(path, "wb") as fh:
        fh.write(np.ascontiguousarray(field.data, dtype="<c16").tobytes())
    meta = {
        "nx": spec.nx,
        "ny": spec.ny,
        "width_m": spec.width,
        "height_m": spec.height,
        "wavelength_m": spec.wavelength,
        "layout": FIELD_LAYOUT,
    }
    with open(sidecar_path(path), "w", encoding="ascii") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")


def read_field(path) -> ComplexField:
    """Restore a field written by write_field, bit-exactly."""
    with open(sidecar_path(path), "r", encoding="ascii") as fh:
        meta = json.load(fh)
    if meta.get("layout") != FIELD_LAYOUT:
        raise ValueError(f"unsupported field layout {meta.get('layout')!r}")
    spec = GridSpec(
        nx=int(meta["nx"]),
        ny=int(meta["ny"]),
        width=float(meta["width_m"]),
        height=float(meta["height_m"]),
        wavelength=float(meta["wavelength_m"]),
    )
    with open(path, "rb") as fh:
        raw = fh.read()
    expected = spec.nx * spec.ny * 16
    if len(raw) != expected:
        raise ValueError(f"field dump {path} has {len(raw)} bytes, expected {expected}")
    data = np.frombuffer(raw, dtype="<c16").reshape(spec.shape)
    return ComplexField(spec, data)
