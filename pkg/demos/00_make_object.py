"""Regenerate the binary test object shipped in assets/object_512.pgm.

The plate is a compact arrangement of solid shapes, deliberately symmetric
under reflections about the grid center: the unaberrated images inherit that
symmetry, which is what lets the other demos (and the test suite) show how
an incoherent tilt breaks it along one direction only.
"""

from pathlib import Path

from darkfield import phantoms

REPO = Path(__file__).resolve().parent.parent
OUT = Path(__file__).resolve().parent / "output"

raster = phantoms.symmetric_plate(512, 512)
target = REPO / "assets" / "object_512.pgm"
target.parent.mkdir(exist_ok=True)
phantoms.save_pgm8(raster, target)
print(f"wrote {target} ({raster.shape[1]}x{raster.shape[0]}, "
      f"{(raster > 0).mean():.1%} coverage)")

# quick-look preview next to the demo outputs
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    OUT.mkdir(exist_ok=True)
    plt.figure(figsize=(4, 4))
    plt.imshow(raster, cmap="gray", origin="upper")
    plt.title("binary object raster")
    plt.axis("off")
    plt.tight_layout()
    plt.savefig(OUT / "object.png", dpi=120)
    print(f"wrote {OUT / 'object.png'}")
except ImportError:
    print("matplotlib not installed; skipped the preview image")
