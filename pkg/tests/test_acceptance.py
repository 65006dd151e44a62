"""Acceptance gate for the primary component.

One test per criterion; each prints a `[criterion N] PASS/FAIL` line (run
with `pytest tests/test_acceptance.py -s` to see them inline). The console
criterion (13) lives in the frontend's vitest suite.

Criterion 6 is expected to fail on one sub-claim: the lateral translational
panel is antisymmetric, not symmetric, about the alpha1 = -alpha2 axis. The
mirror symmetry of the mechanism forces that sign (see notes/decisions.md);
the test asserts the claim as written and therefore stays red.
"""
import math

import numpy as np

from strata import (
    ControlInputs,
    ReducedShapeSubspace,
    SingularShape,
    SubgaitSpec,
    closed_contour,
    compose_two_beat,
    displacement_field,
    fiducial_trot,
    find_singularities,
    flow,
    foot_jacobian,
    grad_f,
    inter_foot_f,
    local_connection,
    nonslip_field,
    reconstruct_body_trajectory,
    se2,
    stratified_panel,
    stratified_panel_at,
    turning_radius,
)
from strata.se2 import IDENTITY
from strata.service import SessionConfig, replay

TWO_PI = 2.0 * math.pi


def report(n: int, ok: bool, detail: str = "") -> None:
    line = f"[criterion {n:>2}] {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" - {detail}"
    print(line)


def test_criterion_01_jacobian_bootstrap(fourbar_model, rng):
    worst = 0.0
    for _ in range(100):
        a1 = rng.uniform(-math.pi / 2, math.pi)
        c, s = math.cos(a1), math.sin(a1)
        reference = np.array(
            [
                [c, s, s, 0.0, 0.0],
                [-s, c, c + 1.0, 1.0, 0.0],
                [0.0, 0.0, 1.0, 1.0, 0.0],
            ]
        )
        J = foot_jacobian(fourbar_model, [a1, rng.uniform(-1, 1)], 0)
        worst = max(worst, float(np.max(np.abs(J - reference))))
    ok = worst < 1e-12
    report(1, ok, f"max entry defect {worst:.2e}")
    assert ok


def test_criterion_02_no_slip_residual(fourbar_model, fourbar_sub, rng):
    # shape velocities are drawn along the level-set basis (the pinned
    # four-bar has one degree of freedom; arbitrary shape rates must slip)
    worst = 0.0
    done = 0
    while done < 1000:
        alpha = rng.uniform(-math.pi / 2, math.pi, size=2)
        try:
            direction = nonslip_field(fourbar_sub, alpha, singular_tol=1e-3)
        except SingularShape:
            continue
        adot = rng.uniform(-2.0, 2.0) * direction
        conn = local_connection(fourbar_model, alpha, [True, True])
        gdot = -conn.a_full @ adot
        stacked = np.concatenate([gdot, adot])
        for leg in range(2):
            speed = np.linalg.norm(foot_jacobian(fourbar_model, alpha, leg)[:2] @ stacked)
            worst = max(worst, float(speed))
        done += 1
    ok = worst < 1e-8
    report(2, ok, f"max stance-foot speed {worst:.2e} over 1000 samples")
    assert ok


def test_criterion_03_two_singularities(fourbar_sub):
    sings = find_singularities(fourbar_sub, 128)
    grads = [float(np.linalg.norm(grad_f(fourbar_sub, s.point))) for s in sings]
    ok = len(sings) == 2 and all(g < 1e-8 for g in grads)
    report(3, ok, f"{len(sings)} critical points, max |grad F| {max(grads):.2e}")
    assert ok


def test_criterion_04_level_set_conservation(fourbar_sub, rng):
    worst = 0.0
    done = 0
    while done < 100:
        p = rng.uniform(-0.6, 1.8, size=2)
        if np.linalg.norm(grad_f(fourbar_sub, p)) < 1e-2:
            continue
        f0 = inter_foot_f(fourbar_sub, p)
        try:
            for length in (2.0, -2.0):
                res = flow(fourbar_sub, p, length)
                worst = max(worst, abs(inter_foot_f(fourbar_sub, res.end) - f0))
        except SingularShape:
            continue
        done += 1
    ok = worst < 1e-9
    report(4, ok, f"max |dF| {worst:.2e} over 100 starts x (+2, -2)")
    assert ok


def test_criterion_05_holonomy_of_closed_circuit(fourbar_sub):
    start = (1.2, 0.0)
    loop = closed_contour(fourbar_sub, start)
    seg = np.diff(loop.points, axis=0)
    circumference = float(np.sum(np.hypot(seg[:, 0], seg[:, 1])))
    spec = SubgaitSpec(
        subspace=fourbar_sub,
        alpha_star=start,
        t0=-circumference / 2,
        t_pi=-circumference / 2,
    )
    z = reconstruct_body_trajectory(spec, samples_per_phase=2000).net_displacement
    worst = max(abs(z.x), abs(z.y), abs(z.theta))
    ok = worst < 1e-4
    report(5, ok, f"net displacement after full circuit {worst:.2e}")
    assert ok


def test_criterion_06_panel_symmetries(fourbar_model):
    sub = ReducedShapeSubspace(
        fourbar_model, (0, 1), bounds=((-math.pi / 2, math.pi / 2),) * 2
    )
    panel = stratified_panel(sub, grid_n=101)
    dz = panel.dz
    swapped = dz.transpose(1, 0, 2)
    anti = dz[::-1, ::-1].transpose(1, 0, 2)
    defects = {
        "x about a1=a2": np.nanmax(np.abs(swapped[..., 0] - dz[..., 0])),
        "y about a1=a2": np.nanmax(np.abs(swapped[..., 1] - dz[..., 1])),
        "x about a1=-a2": np.nanmax(np.abs(anti[..., 0] - dz[..., 0])),
        "y about a1=-a2": np.nanmax(np.abs(anti[..., 1] - dz[..., 1])),
        "theta skew about a1=a2": np.nanmax(np.abs(swapped[..., 2] + dz[..., 2])),
    }
    ok = all(v < 1e-8 for v in defects.values())
    bad = {k: f"{v:.2e}" for k, v in defects.items() if v >= 1e-8}
    report(6, ok, f"defects over threshold: {bad}" if bad else "all defects < 1e-8")
    assert ok, (
        f"symmetry defects over 1e-8: {bad}. The y-panel is antisymmetric "
        "about the anti-diagonal (mirror symmetry forces the sign flip); "
        "the claim as stated cannot hold. See notes/decisions.md."
    )


def test_criterion_07_panel_derivative_consistency(fourbar_sub):
    ok = True
    details = []
    for p in [(0.9, 0.5), (0.4, 1.1), (1.3, 0.2)]:
        dz = stratified_panel_at(fourbar_sub, p)
        rates = []
        for eps in (1e-3, 1e-4):
            spec = SubgaitSpec(
                subspace=fourbar_sub, alpha_star=p, t0=-eps / 2, t_pi=-eps / 2
            )
            z = reconstruct_body_trajectory(spec, samples_per_phase=64).net_displacement
            rates.append(np.array(z.as_tuple()) / eps)
        e3, e4 = (np.max(np.abs(r - dz)) for r in rates)
        order = math.log10(e3 / e4) if e4 > 0 else math.inf
        extrap = np.max(np.abs((10.0 * rates[1] - rates[0]) / 9.0 - dz))
        ok &= e4 < e3 / 5.0 and extrap < 1e-7
        details.append(f"order {order:.2f}")
    report(7, ok, ", ".join(details))
    assert ok


def test_criterion_08_fiducial_trot(quad_model):
    gait = fiducial_trot(quad_model)
    z = compose_two_beat(gait, samples_per_phase=2000).net_displacement
    z1 = reconstruct_body_trajectory(gait.first, samples_per_phase=2000).net_displacement
    z2 = reconstruct_body_trajectory(gait.second, samples_per_phase=2000).net_displacement
    ok = (
        abs(z.x) < 1e-6
        and abs(z.theta) < 1e-6
        and z.y > 0.0
        and abs(z1.y - z2.y) < 1e-9
    )
    report(
        8,
        ok,
        f"net = ({z.x:.2e}, {z.y:.4f}, {z.theta:.2e}), "
        f"subgait y split {abs(z1.y - z2.y):.2e}",
    )
    assert ok


def test_criterion_09_additivity(quad_model):
    gait = fiducial_trot(quad_model)
    full = compose_two_beat(gait, samples_per_phase=1000).net_displacement
    z1 = reconstruct_body_trajectory(gait.first, samples_per_phase=1000).net_displacement
    z2 = reconstruct_body_trajectory(gait.second, samples_per_phase=1000).net_displacement
    combo = se2.compose(z1, z2)
    worst = max(abs(full.x - combo.x), abs(full.y - combo.y), abs(full.theta - combo.theta))
    ok = worst < 1e-9
    report(9, ok, f"|z(trot) - z1*z2| = {worst:.2e}")
    assert ok


def test_criterion_10_scaling_field_structure(quad_model):
    fld = displacement_field(
        fiducial_trot(quad_model), "scaling", grid_n=41, samples_per_phase=512
    )
    z = fld.z
    n = len(fld.u_first)
    theta_max = float(np.nanmax(np.abs(z[..., 2])))
    diag_x = max(abs(z[i, i, 0]) for i in range(n))
    anti_y = max(abs(z[i, n - 1 - i, 1]) for i in range(n))
    iu, jl = np.triu_indices(n, k=1)
    x_upper = np.sign(z[iu, jl, 0])
    x_lower = np.sign(z[jl, iu, 0])
    x_pattern = (x_upper == x_upper[0]).all() and (x_lower == -x_upper[0]).all()
    above = [(i, j) for i in range(n) for j in range(n) if i + j > n - 1]
    below = [(i, j) for i in range(n) for j in range(n) if i + j < n - 1]
    y_above = np.sign([z[i, j, 1] for i, j in above])
    y_below = np.sign([z[i, j, 1] for i, j in below])
    y_pattern = (y_above == y_above[0]).all() and (y_below == -y_above[0]).all()
    max_x = float(np.nanmax(np.abs(z[..., 0])))
    max_y = float(np.nanmax(np.abs(z[..., 1])))
    ok = (
        not fld.flag.any()
        and theta_max < 1e-6
        and diag_x < 1e-9
        and anti_y < 1e-9
        and x_pattern
        and y_pattern
        and max_y > max_x
    )
    report(
        10,
        ok,
        f"max|theta| {theta_max:.2e}, zero contours {diag_x:.2e}/{anti_y:.2e}, "
        f"anisotropy y/x = {max_y / max_x:.2f}",
    )
    assert ok


def test_criterion_11_steering(quad_model):
    gait = fiducial_trot(quad_model)
    thetas = {}
    for c in (0.25, -0.25, 0.5, -0.5):
        g = gait.with_inputs(ControlInputs(1.0, c), ControlInputs(1.0, -c))
        thetas[c] = compose_two_beat(g, samples_per_phase=512).net_displacement.theta_wrapped
    odd_defect = max(
        abs(thetas[0.25] + thetas[-0.25]), abs(thetas[0.5] + thetas[-0.5])
    )
    nonzero = min(abs(v) for v in thetas.values()) > 1e-6

    g = gait.with_inputs(ControlInputs(1.0, 0.5), ControlInputs(1.0, -0.5))
    traj = compose_two_beat(g, samples_per_phase=512, cycles=20)
    r = turning_radius(traj.per_cycle[0])
    pose = IDENTITY
    pts = [np.zeros(2)]
    for zc in traj.per_cycle:
        pose = se2.compose(pose, zc)
        pts.append(np.array([pose.x, pose.y]))
    P = np.array(pts)
    A = np.column_stack([2 * P[:, 0], 2 * P[:, 1], np.ones(len(P))])
    b = (P**2).sum(axis=1)
    cx, cy, d = np.linalg.lstsq(A, b, rcond=None)[0]
    r_fit = math.sqrt(d + cx**2 + cy**2)
    radius_err = abs(abs(r) - r_fit) / r_fit
    ok = nonzero and odd_defect < 1e-6 and radius_err < 0.05
    report(
        11,
        ok,
        f"theta(0.25) = {thetas[0.25]:.4f}, odd defect {odd_defect:.2e}, "
        f"turning radius vs circle fit {radius_err:.2%}",
    )
    assert ok


def test_criterion_12_batch_session_agreement(quad_model):
    gait = fiducial_trot(quad_model)
    config = SessionConfig(model=quad_model, gait=gait, samples_per_phase=256, rate=0.0)
    schedule = [
        (ControlInputs(1.0, 0.0), ControlInputs(1.0, 0.0)),
        (ControlInputs(0.7, 0.2), ControlInputs(0.7, -0.2)),
        (ControlInputs(0.4, -0.1), ControlInputs(0.4, 0.1)),
        (ControlInputs(0.9, 0.3), ControlInputs(0.9, -0.3)),
    ]
    batch = compose_two_beat(
        gait, samples_per_phase=256, schedule=schedule, record=False
    )
    events = []
    for c, (u13, u24) in enumerate(schedule):
        events.append(
            (
                c * TWO_PI,
                {"type": "set_inputs", "u13": [u13.u1, u13.u2], "u24": [u24.u1, u24.u2]},
            )
        )
    s1 = replay(config, events, len(schedule) * TWO_PI)
    s2 = replay(config, events, len(schedule) * TWO_PI)
    bit_identical = s1.pose == s2.pose and [r.z for r in s1.history] == [
        r.z for r in s2.history
    ]
    worst = max(
        abs(s1.pose.x - batch.net_displacement.x),
        abs(s1.pose.y - batch.net_displacement.y),
        abs(s1.pose.theta - batch.net_displacement.theta),
    )
    for rec, z in zip(s1.history, batch.per_cycle):
        worst = max(
            worst, abs(rec.z.x - z.x), abs(rec.z.y - z.y), abs(rec.z.theta - z.theta)
        )
    ok = bit_identical and worst < 1e-9
    report(12, ok, f"replay bit-identical: {bit_identical}, batch delta {worst:.2e}")
    assert ok
