"""Synthetic compact binary objects for simulations and tests.

The published experiments used a binary raster that is not available, so the
shipped configurations image a deterministic phantom instead: a compact
arrangement of solid shapes with strokes wide enough that Gaussian smoothing
leaves interior thickness at 1. Every shape is an even function of the
centered coordinates, which makes the plate exactly symmetric under the
torus reflections i -> (-i) mod ny and j -> (-j) mod nx; the symmetry is
what lets tests detect the direction-breaking effect of incoherent tilt.
"""

from __future__ import annotations

import numpy as np

__all__ = ["symmetric_plate", "save_pgm8"]


def symmetric_plate(nx: int = 512, ny: int = 512) -> np.ndarray:
    """Binary object raster, uint8 {0, 255}; bright pixels mark material.

    Shapes scale with the grid so the plate stays compact (clear of the
    edges) at any size from 64 up.
    """
    if nx < 64 or ny < 64:
        raise ValueError("phantom needs at least a 64x64 raster")
    x = np.arange(nx, dtype=np.float64) - nx // 2
    y = np.arange(ny, dtype=np.float64) - ny // 2
    ax = np.abs(x)[np.newaxis, :]
    ay = np.abs(y)[:, np.newaxis]
    r = np.hypot(ax, ay)
    s = min(nx, ny) / 512.0  # feature scale relative to the reference size

    mask = r <= 34 * s  # central disk
    mask |= (62 * s <= r) & (r <= 88 * s)  # annulus around it
    mask |= (ax <= 190 * s) & (ay <= 190 * s) & (np.abs(ax - 150 * s) <= 14 * s) & (
        ay <= 60 * s
    )  # vertical bars left/right
    mask |= (np.abs(ay - 150 * s) <= 14 * s) & (ax <= 60 * s)  # horizontal bars top/bottom
    mask |= (np.hypot(ax - 186 * s, ay - 186 * s) <= 26 * s)  # corner disks
    return np.where(mask, np.uint8(255), np.uint8(0))


def save_pgm8(raster: np.ndarray, path) -> None:
    """Write a uint8 array as binary PGM (P5, maxval 255)."""
    arr = np.ascontiguousarray(raster, dtype=np.uint8)
    if arr.ndim != 2:
        raise ValueError("PGM raster must be 2-D")
    with open(path, "wb") as fh:
        fh.write(f"P5\n{arr.shape[1]} {arr.shape[0]}\n255\n".encode("ascii"))
        fh.write(arr.tobytes())
