"""Net-displacement fields over the control-input subspaces.

Sweeping the scaling pair maps out course/speed control: the x field
vanishes on u1_13 = u1_24, the y field on u1_13 = -u1_24, heading stays
untouched, and the lateral reach is a fraction of the longitudinal one
(the sprawled-limb anisotropy). Sweeping the sliding pair instead leaves
translation roughly alone and hands out a bidirectional range of headings
along u2_13 = -u2_24.

Run from the repository root:  python demos/06_displacement_fields.py
"""
import pathlib

import numpy as np

from strata import displacement_field, fiducial_trot, quad
from strata.formats import write_displacement_csv

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

model = quad()
gait = fiducial_trot(model)

print("== scaling sweep (zero sliding) ==")
scaling = displacement_field(gait, "scaling", grid_n=21, samples_per_phase=256)
z = scaling.z
n = len(scaling.u_first)
print(f"max |theta| over the grid: {np.nanmax(np.abs(z[..., 2])):.2e}  (heading untouched)")
print(f"x on the u13 = u24 diagonal: max |x| = "
      f"{max(abs(z[i, i, 0]) for i in range(n)):.2e}  (zero contour)")
print(f"y on the u13 = -u24 anti-diagonal: max |y| = "
      f"{max(abs(z[i, n - 1 - i, 1]) for i in range(n)):.2e}  (zero contour)")
print(f"translational anisotropy: max|y| / max|x| = "
      f"{np.nanmax(np.abs(z[..., 1])) / np.nanmax(np.abs(z[..., 0])):.2f}")

with open(OUT / "scaling_field.csv", "w") as fh:
    rows = write_displacement_csv(fh, scaling)
print(f"wrote {rows} rows to {OUT / 'scaling_field.csv'}")

print("\n== sliding sweep (unit scaling) ==")
sliding = displacement_field(gait, "sliding", grid_n=21, samples_per_phase=256)
zs = sliding.z
hi, lo = zs[-1, 0, 2], zs[0, -1, 2]
print(f"theta at (+1, -1): {hi:+.4f}; at (-1, +1): {lo:+.4f}  (bidirectional steering)")
print(f"theta on the equal-slide diagonal: "
      f"{max(abs(zs[i, i, 2]) for i in range(n)):.2e}")

with open(OUT / "sliding_field.csv", "w") as fh:
    rows = write_displacement_csv(fh, sliding)
print(f"wrote {rows} rows to {OUT / 'sliding_field.csv'}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = ["x", "y", "theta"]
    fig, axes = plt.subplots(2, 3, figsize=(12, 7))
    for row, (fld, tag) in enumerate([(scaling, "scaling"), (sliding, "sliding")]):
        for k in range(3):
            ax = axes[row, k]
            im = ax.imshow(
                fld.z[..., k].T, origin="lower", cmap="RdBu_r",
                extent=[-1, 1, -1, 1],
            )
            lim = np.nanmax(np.abs(fld.z[..., k]))
            im.set_clim(-lim if lim > 0 else -1, lim if lim > 0 else 1)
            ax.set_title(f"z_{names[k]} over {tag} inputs")
            ax.set_xlabel(f"{tag} u_13")
            fig.colorbar(im, ax=ax, shrink=0.8)
        axes[row, 0].set_ylabel(f"{tag} u_24")
    fig.tight_layout()
    fig.savefig(OUT / "displacement_fields.png", dpi=150)
    print(f"\nsaved field heatmaps to {OUT / 'displacement_fields.png'}")
except ImportError:
    print("\nmatplotlib not available; skipped the plot")
