"""One stance-swing subgait of the four-bar and its body trajectory.

A subgait pins the feet, flows along the level set for half a phase, lifts,
and rewinds the shape while the body holds still. With the reference shape
on the theta-panel zero contour and symmetric flow times the net rotation
cancels, leaving pure translation.

Run from the repository root:  python demos/03_fourbar_subgait.py
"""
import math
import pathlib

import numpy as np

from strata import (
    ControlInputs,
    ReducedShapeSubspace,
    SubgaitSpec,
    fourbar,
    reconstruct_body_trajectory,
    stance_endpoints,
    subgait_shape_trajectory,
    inter_foot_f,
)

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

model = fourbar()
sub = ReducedShapeSubspace(model, (0, 1))
spec = SubgaitSpec(subspace=sub, alpha_star=(0.8, 0.8), t0=-0.4, t_pi=-0.4)

a0, a_pi = stance_endpoints(spec)
print(f"reference alpha* = {spec.alpha_star}")
print(f"stance start  alpha0  = ({a0[0]:+.4f}, {a0[1]:+.4f})")
print(f"stance end    alphapi = ({a_pi[0]:+.4f}, {a_pi[1]:+.4f})")
f_star = inter_foot_f(sub, spec.alpha_star)
print(f"F stays at {f_star:.4f} through the cycle:")
for tau in np.linspace(0, 2 * math.pi, 9, endpoint=False):
    alpha, beta = subgait_shape_trajectory(spec, tau)
    print(f"  tau = {tau:4.2f}: alpha = ({alpha[0]:+.4f}, {alpha[1]:+.4f}), "
          f"contacts = {tuple(int(b) for b in beta)}, "
          f"F drift = {inter_foot_f(sub, alpha) - f_star:+.1e}")

print("\n== body reconstruction ==")
traj = reconstruct_body_trajectory(spec, samples_per_phase=1000)
z = traj.net_displacement
print(f"net displacement per cycle: ({z.x:+.6f}, {z.y:+.6f}, {z.theta:+.2e})")
print("rotation cancels because alpha* sits on the theta-panel zero contour.")

print("\n== scaling and sliding move the endpoints ==")
for u1, u2 in [(0.5, 0.0), (1.0, 0.3), (0.0, 0.3)]:
    s = SubgaitSpec(subspace=sub, alpha_star=(0.8, 0.8), t0=-0.4, t_pi=-0.4,
                    inputs=ControlInputs(u1, u2))
    b0, b_pi = stance_endpoints(s)
    zz = reconstruct_body_trajectory(s, samples_per_phase=500).net_displacement
    print(f"  u = ({u1:+.1f}, {u2:+.1f}): alpha0 = ({b0[0]:+.3f}, {b0[1]:+.3f}), "
          f"z = ({zz.x:+.4f}, {zz.y:+.4f}, {zz.theta:+.1e})")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [s.pose.x for s in traj.samples]
    ys = [s.pose.y for s in traj.samples]
    a1 = [s.shape[0] for s in traj.samples]
    a2 = [s.shape[1] for s in traj.samples]
    fig, (axl, axr) = plt.subplots(1, 2, figsize=(9, 4))
    axl.plot(a1, a2, "C0")
    axl.plot(*spec.alpha_star, "k+", markersize=10)
    axl.set_xlabel("alpha1")
    axl.set_ylabel("alpha2")
    axl.set_title("shape path (stance + rewound swing)")
    axr.plot(xs, ys, "C3")
    axr.plot(xs[0], ys[0], "ko", label="start")
    axr.plot(xs[-1], ys[-1], "k^", label="end")
    axr.axis("equal")
    axr.legend()
    axr.set_title("body position")
    fig.tight_layout()
    fig.savefig(OUT / "fourbar_subgait.png", dpi=150)
    print(f"\nsaved trajectory plot to {OUT / 'fourbar_subgait.png'}")
except ImportError:
    print("\nmatplotlib not available; skipped the plot")
