"""Subgait construction, body reconstruction, stratified panels, two-beat gaits.

A subgait is one stance-swing cycle of a shared-stance leg pair: a forward
flow along the level-set basis field while pinned, then the reversed flow
while lifted. Scaling (u1) and sliding (u2) inputs move the stance endpoints
along the level set around a reference shape, modulating per-cycle
translation and rotation. Two subgaits with disjoint stance pairs compose,
phase-offset by half a cycle, into a two-beat gait whose net displacement is
the group product of the subgait displacements.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import se2
from .model import PINV_RCOND, ModelSpec
from .se2 import IDENTITY, SE2Element
from .shapefield import (
    DEFAULT_FLOW_STEP,
    SINGULAR_TOL,
    ReducedShapeSubspace,
    SingularShape,
    flow,
)

#: default integration steps per half cycle (matches the pi/2000 phase step)
DEFAULT_SAMPLES_PER_PHASE = 2000

#: |net rotation| below which a displacement counts as straight
STRAIGHT_TOL = 1e-9

PAIRINGS = ("trot", "bound", "pace")


@dataclass(frozen=True)
class ControlInputs:
    """Per-subgait flow inputs: u1 scales the path, u2 slides it."""

    u1: float = 1.0
    u2: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.u1) and math.isfinite(self.u2)):
            raise ValueError("control inputs must be finite")

    @property
    def out_of_range(self) -> bool:
        """Outside the demonstrated [-1, 1] range; allowed, but flagged."""
        return abs(self.u1) > 1.0 or abs(self.u2) > 1.0


@dataclass(frozen=True)
class SubgaitSpec:
    """Stance-swing cycle of one leg pair around a reference shape."""

    subspace: ReducedShapeSubspace
    alpha_star: tuple[float, float]
    t0: float
    t_pi: float
    inputs: ControlInputs = field(default_factory=ControlInputs)

    def with_inputs(self, inputs: ControlInputs) -> "SubgaitSpec":
        return replace(self, inputs=inputs)

    @property
    def flow_params(self) -> tuple[float, float]:
        """Signed arc positions of the stance endpoints relative to alpha*."""
        u1, u2 = self.inputs.u1, self.inputs.u2
        return (u1 * self.t0 + u2, -u1 * self.t_pi + u2)

    @property
    def pacing(self) -> float:
        """Arc length per unit phase during stance (signed)."""
        s0, s_pi = self.flow_params
        return (s_pi - s0) / math.pi


@dataclass(frozen=True)
class TwoBeatGaitSpec:
    """Two subgaits with disjoint stance pairs, offset by half a cycle."""

    first: SubgaitSpec
    second: SubgaitSpec
    pairing: str = "trot"

    def __post_init__(self):
        if self.pairing not in PAIRINGS:
            raise ValueError(f"pairing must be one of {PAIRINGS}")
        p1, p2 = set(self.first.subspace.leg_pair), set(self.second.subspace.leg_pair)
        if p1 & p2:
            raise StanceOverlap(f"stance pairs {p1} and {p2} overlap")
        if self.first.subspace.model is not self.second.subspace.model:
            raise ValueError("both subgaits must reference the same model")

    @property
    def model(self) -> ModelSpec:
        return self.first.subspace.model

    def with_inputs(self, u_first: ControlInputs, u_second: ControlInputs) -> "TwoBeatGaitSpec":
        return replace(
            self,
            first=self.first.with_inputs(u_first),
            second=self.second.with_inputs(u_second),
        )


class StanceOverlap(ValueError):
    """Both subgaits claim a common stance leg."""


@dataclass
class TrajectorySample:
    tau: float
    pose: SE2Element
    shape: np.ndarray
    contact: np.ndarray


@dataclass
class Trajectory:
    """Sampled gait run plus its per-cycle net displacements."""

    samples: list[TrajectorySample]
    net_displacement: SE2Element
    per_cycle: list[SE2Element]
    bounds_exceeded: bool = False


# --- stratified panel ------------------------------------------------------

@dataclass
class StratifiedPanelGrid:
    """Per-shape effective body velocity of an infinitesimal stance-swing
    cycle, sampled over the reduced shape plane.

    orientation +1 means the panel is signed for shape paths aligned with the
    level-set basis field; reversed paths negate the estimates.
    """

    subspace: ReducedShapeSubspace
    alpha1: np.ndarray
    alpha2: np.ndarray
    dz: np.ndarray        # (n, n, 3), NaN on flagged cells
    flag: np.ndarray      # (n, n) bool, singular cells
    orientation: int = 1


def _panel_batch(
    subspace: ReducedShapeSubspace,
    pts: np.ndarray,
    rcond: float = PINV_RCOND,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized dz = -A @ basis over (m, 2) shape points.

    Returns (dz (m, 3), singular mask). Singular rows are NaN. The stacked
    constraint rows here mirror model.pfaffian restricted to the pair, and a
    regression test keeps the two routes equal.
    """
    geom = subspace._geom
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    m = pts.shape[0]
    a, b = pts[:, 0], pts[:, 1]

    tha, thb = geom.ti + a, geom.tj + b
    ca, sa = np.cos(tha), np.sin(tha)
    cb, sb = np.cos(thb), np.sin(thb)
    pix, piy = geom.hxi + geom.li * ca, geom.hyi + geom.li * sa
    pjx, pjy = geom.hxj + geom.lj * cb, geom.hyj + geom.lj * sb

    w_g = np.zeros((m, 4, 3))
    w_a = np.zeros((m, 4, 2))
    # translational rows of the first stance foot's Jacobian
    w_g[:, 0, 0], w_g[:, 0, 1] = ca, sa
    w_g[:, 1, 0], w_g[:, 1, 1] = -sa, ca
    w_g[:, 0, 2] = sa * pix - ca * piy
    w_g[:, 1, 2] = ca * pix + sa * piy
    w_a[:, 1, 0] = geom.li
    # and of the second
    w_g[:, 2, 0], w_g[:, 2, 1] = cb, sb
    w_g[:, 3, 0], w_g[:, 3, 1] = -sb, cb
    w_g[:, 2, 2] = sb * pjx - cb * pjy
    w_g[:, 3, 2] = cb * pjx + sb * pjy
    w_a[:, 3, 1] = geom.lj

    dx, dy = pjx - pix, pjy - piy
    g1 = -2.0 * (dx * (-geom.li * sa) + dy * (geom.li * ca))
    g2 = 2.0 * (dx * (-geom.lj * sb) + dy * (geom.lj * cb))
    norm = np.hypot(g1, g2)
    singular = norm <= SINGULAR_TOL
    safe = np.where(singular, 1.0, norm)
    basis = np.stack([g2 / safe, -g1 / safe], axis=-1)

    A = np.linalg.pinv(w_g, rcond=rcond) @ w_a
    dz = -np.einsum("mij,mj->mi", A, basis)
    dz[singular] = np.nan
    return dz, singular


def stratified_panel_at(subspace: ReducedShapeSubspace, point: Sequence[float]) -> np.ndarray:
    """Panel value dz(alpha) at one shape; raises SingularShape when locked."""
    dz, singular = _panel_batch(subspace, np.asarray(point, dtype=float))
    if singular[0]:
        g = np.linalg.norm(
            np.array(subspace._geom.grad(float(point[0]), float(point[1])))
        )
        raise SingularShape(point, float(g))
    return dz[0]


def stratified_panel(subspace: ReducedShapeSubspace, grid_n: int = 101) -> StratifiedPanelGrid:
    """Sample the stratified panel on a grid over the subspace bounds.

    Singular cells are flagged and left NaN, never interpolated.
    """
    if grid_n < 32:
        raise ValueError("grid_n must be at least 32")
    (lo1, hi1), (lo2, hi2) = subspace.axis_bounds
    a1 = np.linspace(lo1, hi1, grid_n)
    a2 = np.linspace(lo2, hi2, grid_n)
    A, B = np.meshgrid(a1, a2, indexing="ij")
    pts = np.column_stack([A.ravel(), B.ravel()])
    dz, singular = _panel_batch(subspace, pts)
    return StratifiedPanelGrid(
        subspace=subspace,
        alpha1=a1,
        alpha2=a2,
        dz=dz.reshape(grid_n, grid_n, 3),
        flag=singular.reshape(grid_n, grid_n),
    )


# --- stance machinery ------------------------------------------------------

@dataclass
class _StanceRun:
    """Precomputed stance of one subgait: shape path, body velocity samples
    and pose increments relative to the stance start."""

    spec: SubgaitSpec
    n_steps: int
    s0: float
    s_pi: float
    path: np.ndarray      # (2N+1, 2) shapes at half-step resolution
    xi: np.ndarray        # (2N+1, 3) body velocity at those shapes
    rel_poses: list[SE2Element]  # (N+1) poses from identity
    bounds_exceeded: bool

    @property
    def alpha0(self) -> np.ndarray:
        return self.path[0]

    @property
    def alpha_pi(self) -> np.ndarray:
        return self.path[-1]

    @property
    def displacement(self) -> SE2Element:
        return self.rel_poses[-1]

    def stance_shape(self, k: int) -> np.ndarray:
        """Shape at integration step k of the stance (0..N)."""
        return self.path[2 * k]

    def swing_shape(self, k: int) -> np.ndarray:
        """Shape at step k of the reversed (swing) return (0..N)."""
        return self.path[2 * (self.n_steps - k)]


def _run_stance(
    spec: SubgaitSpec,
    n_steps: int,
    flow_step: float = DEFAULT_FLOW_STEP,
) -> _StanceRun:
    """Build the stance of a subgait at its latched inputs.

    The stance shape path is sampled at half-step resolution so the group
    integrator's midpoint stages land exactly on flow samples.
    """
    if n_steps < 16:
        raise ValueError("samples_per_phase must be at least 16")
    s0, s_pi = spec.flow_params
    sub = spec.subspace
    bounds_exceeded = False

    if s0 != 0.0:
        res0 = flow(sub, spec.alpha_star, s0, step=flow_step)
        a0 = res0.end
        bounds_exceeded |= res0.bounds_exceeded
    else:
        a0 = np.asarray(spec.alpha_star, dtype=float)
        bounds_exceeded |= not sub.contains(a0)

    span = s_pi - s0
    m = 2 * n_steps
    if span == 0.0:
        path = np.tile(a0, (m + 1, 1))
        xi = np.zeros((m + 1, 3))
    else:
        res = flow(sub, a0, span, step=abs(span) / m)
        path = res.points
        bounds_exceeded |= res.bounds_exceeded
        dz, singular = _panel_batch(sub, path)
        if singular.any():
            k = int(np.argmax(singular))
            g = np.linalg.norm(np.array(sub._geom.grad(*path[k])))
            raise SingularShape(path[k], float(g))
        xi = dz * (span / math.pi)

    g = IDENTITY
    rel = [g]
    h = math.pi / n_steps
    samples = [(float(v[0]), float(v[1]), float(v[2])) for v in xi]
    for k in range(n_steps):
        g = se2._rkmk4_step(g, h, samples[2 * k], samples[2 * k + 1], samples[2 * k + 2])
        rel.append(g)
    return _StanceRun(
        spec=spec,
        n_steps=n_steps,
        s0=s0,
        s_pi=s_pi,
        path=path,
        xi=xi,
        rel_poses=rel,
        bounds_exceeded=bounds_exceeded,
    )


def stance_endpoints(spec: SubgaitSpec, flow_step: float = DEFAULT_FLOW_STEP):
    """Stance start and end shapes from flows of the scaled/slid arc lengths.

    alpha0 sits at u1*t0 + u2 along the basis field from alpha*, alpha_pi at
    -u1*t_pi + u2; u1 = 0 collapses the stance onto the slid reference point.
    """
    s0, s_pi = spec.flow_params
    star = np.asarray(spec.alpha_star, dtype=float)
    a0 = flow(spec.subspace, star, s0, step=flow_step).end if s0 != 0.0 else star.copy()
    a_pi = flow(spec.subspace, star, s_pi, step=flow_step).end if s_pi != 0.0 else star.copy()
    return a0, a_pi


def subgait_shape_trajectory(
    spec: SubgaitSpec,
    tau: float,
    flow_step: float = DEFAULT_FLOW_STEP,
):
    """Shape and contact of the pair at gait phase tau.

    Stance (contacts on) covers tau in [0, pi] with the forward flow from
    alpha0; the swing reverses it, returning to alpha0 as tau -> 2*pi.
    """
    tau = float(tau) % (2.0 * math.pi)
    s0, s_pi = spec.flow_params
    if tau <= math.pi:
        s = s0 + (s_pi - s0) * (tau / math.pi)
        contact = np.array([True, True])
    else:
        s = s_pi + (s0 - s_pi) * ((tau - math.pi) / math.pi)
        contact = np.array([False, False])
    star = np.asarray(spec.alpha_star, dtype=float)
    alpha = flow(spec.subspace, star, s, step=flow_step).end if s != 0.0 else star.copy()
    return alpha, contact


def reconstruct_body_trajectory(
    spec: SubgaitSpec,
    g0: SE2Element = IDENTITY,
    samples_per_phase: int = DEFAULT_SAMPLES_PER_PHASE,
    flow_step: float = DEFAULT_FLOW_STEP,
) -> Trajectory:
    """Integrate the body along one stance-swing cycle of a single subgait.

    During stance the pose flows along the body velocity -A(alpha) @ dalpha;
    during swing it is frozen. Legs outside the pair idle at zero. The net
    displacement is the body-frame displacement inverse(g0) * g(2*pi).
    """
    run = _run_stance(spec, samples_per_phase, flow_step)
    model = spec.subspace.model
    pair = spec.subspace.leg_pair
    n = model.n_legs
    h = math.pi / samples_per_phase

    samples: list[TrajectorySample] = []

    def emit(tau, pose, pair_shape, in_stance):
        shape = np.zeros(n)
        shape[pair[0]], shape[pair[1]] = pair_shape
        contact = np.zeros(n, dtype=bool)
        if in_stance:
            contact[list(pair)] = True
        samples.append(TrajectorySample(tau=tau, pose=pose, shape=shape, contact=contact))

    emit(0.0, g0, run.stance_shape(0), True)
    for k in range(1, samples_per_phase + 1):
        pose = se2.compose(g0, run.rel_poses[k])
        emit(k * h, pose, run.stance_shape(k), k < samples_per_phase)
    g_end = se2.compose(g0, run.displacement)
    for k in range(1, samples_per_phase + 1):
        emit(math.pi + k * h, g_end, run.swing_shape(k), False)

    z = se2.compose(se2.inverse(g0), g_end)
    return Trajectory(
        samples=samples,
        net_displacement=z,
        per_cycle=[z],
        bounds_exceeded=run.bounds_exceeded,
    )


def compose_two_beat(
    gait: TwoBeatGaitSpec,
    g0: SE2Element = IDENTITY,
    samples_per_phase: int = DEFAULT_SAMPLES_PER_PHASE,
    cycles: int = 1,
    schedule: Sequence[tuple[ControlInputs, ControlInputs]] | None = None,
    flow_step: float = DEFAULT_FLOW_STEP,
    record: bool = True,
) -> Trajectory:
    """Run a two-beat gait: first pair stancing on [0, pi], second on [pi, 2*pi].

    While one pair stances the other executes its reversed swing return.
    Inputs latch at each stance onset; an optional schedule supplies per-cycle
    (first, second) inputs. Net displacement composes in the group, which
    reduces to componentwise addition when the subgaits generate no rotation.
    """
    if schedule is not None:
        cycles = len(schedule)
    model = gait.model
    n = model.n_legs
    pair1 = gait.first.subspace.leg_pair
    pair2 = gait.second.subspace.leg_pair
    h = math.pi / samples_per_phase

    samples: list[TrajectorySample] = []
    per_cycle: list[SE2Element] = []
    bounds_exceeded = False
    pose = g0

    if cycles == 0:
        a1, _ = stance_endpoints(gait.first, flow_step)
        a2pi = stance_endpoints(gait.second, flow_step)[1]
        shape = np.zeros(n)
        shape[pair1[0]], shape[pair1[1]] = a1
        shape[pair2[0]], shape[pair2[1]] = a2pi
        contact = np.zeros(n, dtype=bool)
        contact[list(pair1)] = True
        if record:
            samples.append(TrajectorySample(tau=0.0, pose=g0, shape=shape, contact=contact))
        return Trajectory(
            samples=samples,
            net_displacement=IDENTITY,
            per_cycle=[],
            bounds_exceeded=False,
        )

    def emit(tau, pose, s1, s2, stance_of):
        if not record:
            return
        shape = np.zeros(n)
        shape[pair1[0]], shape[pair1[1]] = s1
        shape[pair2[0]], shape[pair2[1]] = s2
        contact = np.zeros(n, dtype=bool)
        if stance_of == 1:
            contact[list(pair1)] = True
        elif stance_of == 2:
            contact[list(pair2)] = True
        samples.append(TrajectorySample(tau=tau, pose=pose, shape=shape, contact=contact))

    for c in range(cycles):
        u1, u2 = schedule[c] if schedule is not None else (gait.first.inputs, gait.second.inputs)
        run1 = _run_stance(gait.first.with_inputs(u1), samples_per_phase, flow_step)
        run2 = _run_stance(gait.second.with_inputs(u2), samples_per_phase, flow_step)
        bounds_exceeded |= run1.bounds_exceeded or run2.bounds_exceeded
        cycle_start = pose
        base = c * 2.0 * math.pi

        if c == 0:
            emit(0.0, pose, run1.stance_shape(0), run2.swing_shape(0), 1)
        for k in range(1, samples_per_phase + 1):
            p = se2.compose(cycle_start, run1.rel_poses[k])
            emit(base + k * h, p, run1.stance_shape(k),
                 run2.swing_shape(k), 1 if k < samples_per_phase else 2)
        half = se2.compose(cycle_start, run1.displacement)
        for k in range(1, samples_per_phase + 1):
            p = se2.compose(half, run2.rel_poses[k])
            emit(base + math.pi + k * h, p, run1.swing_shape(k),
                 run2.stance_shape(k), 2 if k < samples_per_phase else 1)
        pose = se2.compose(half, run2.displacement)
        per_cycle.append(se2.compose(se2.inverse(cycle_start), pose))

    return Trajectory(
        samples=samples,
        net_displacement=se2.compose(se2.inverse(g0), pose),
        per_cycle=per_cycle,
        bounds_exceeded=bounds_exceeded,
    )


# --- two-beat panel --------------------------------------------------------

@dataclass
class TwoBeatPanel:
    """Phase-indexed sum of the two subpanels along their stance paths.

    At phase tau the first subpanel is evaluated on its stance path and the
    second at phase -tau, which the reversed-swing construction places on the
    second stance path at matching progression.
    """

    tau: np.ndarray
    total: np.ndarray        # (m, 3) first + second
    first: np.ndarray        # (m, 3)
    second: np.ndarray       # (m, 3)
    points_first: np.ndarray   # (m, 2)
    points_second: np.ndarray  # (m, 2)
    pacing_first: float
    pacing_second: float

    def net_estimate(self) -> np.ndarray:
        """Componentwise integral over [0, pi] with each subgait's pacing.

        For pure-translation gaits this estimates the per-cycle net
        displacement; the estimate converges to the true net as the stance
        amplitude shrinks.
        """
        f = self.first * self.pacing_first + self.second * self.pacing_second
        try:
            trapz = np.trapezoid
        except AttributeError:  # numpy < 2
            trapz = np.trapz
        return trapz(f, self.tau, axis=0)


def _stance_path_on_phase_grid(spec: SubgaitSpec, m: int, flow_step: float) -> np.ndarray:
    s0, s_pi = spec.flow_params
    star = np.asarray(spec.alpha_star, dtype=float)
    a0 = flow(spec.subspace, star, s0, step=flow_step).end if s0 != 0.0 else star
    span = s_pi - s0
    if span == 0.0:
        return np.tile(a0, (m, 1))
    return flow(spec.subspace, a0, span, step=abs(span) / (m - 1)).points


def two_beat_panel(
    gait: TwoBeatGaitSpec,
    grid_n: int = 181,
    flow_step: float = DEFAULT_FLOW_STEP,
) -> TwoBeatPanel:
    """Sample the two-beat panel dz(tau) = dz_1(alpha_1(tau)) + dz_2(alpha_2(-tau))."""
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    tau = np.linspace(0.0, math.pi, grid_n)
    p1 = _stance_path_on_phase_grid(gait.first, grid_n, flow_step)
    p2 = _stance_path_on_phase_grid(gait.second, grid_n, flow_step)
    dz1, s1 = _panel_batch(gait.first.subspace, p1)
    dz2, s2 = _panel_batch(gait.second.subspace, p2)
    if s1.any() or s2.any():
        raise SingularShape(p1[np.argmax(s1)] if s1.any() else p2[np.argmax(s2)], 0.0)
    return TwoBeatPanel(
        tau=tau,
        total=dz1 + dz2,
        first=dz1,
        second=dz2,
        points_first=p1,
        points_second=p2,
        pacing_first=gait.first.pacing,
        pacing_second=gait.second.pacing,
    )


# --- input-space sweeps ----------------------------------------------------

@dataclass
class DisplacementField:
    """Net per-cycle displacement z(u) over a 2-D control-input grid."""

    vary: str                 # "scaling" | "sliding"
    u_first: np.ndarray       # (n,)
    u_second: np.ndarray      # (n,)
    z: np.ndarray             # (n, n, 3), [i, j] = inputs (u_first[i], u_second[j])
    flag: np.ndarray          # (n, n) bool, flows left bounds or hit a singularity


def displacement_field(
    gait: TwoBeatGaitSpec,
    vary: str = "scaling",
    grid_n: int = 41,
    u_range: tuple[float, float] = (-1.0, 1.0),
    samples_per_phase: int = 512,
    flow_step: float = DEFAULT_FLOW_STEP,
) -> DisplacementField:
    """Sweep one input pair over a grid, holding the template's other pair.

    Each subgait's stance depends only on its own input, so the field is
    assembled from one stance integration per input value per pair and the
    group product of the two displacements (the half-phase offset makes the
    stances disjoint; the composition equals the full simulation).
    """
    if vary not in ("scaling", "sliding"):
        raise ValueError("vary must be 'scaling' or 'sliding'")
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    u = np.linspace(u_range[0], u_range[1], grid_n)

    def inputs_for(spec: SubgaitSpec, v: float) -> ControlInputs:
        if vary == "scaling":
            return ControlInputs(u1=float(v), u2=spec.inputs.u2)
        return ControlInputs(u1=spec.inputs.u1, u2=float(v))

    def sweep(spec: SubgaitSpec):
        zs = np.zeros((grid_n, 3))
        bad = np.zeros(grid_n, dtype=bool)
        for i, v in enumerate(u):
            try:
                run = _run_stance(spec.with_inputs(inputs_for(spec, v)),
                                  samples_per_phase, flow_step)
            except SingularShape:
                bad[i] = True
                zs[i] = np.nan
                continue
            if run.bounds_exceeded:
                bad[i] = True
            zs[i] = run.displacement.as_tuple()
        return zs, bad

    z1, bad1 = sweep(gait.first)
    z2, bad2 = sweep(gait.second)

    z = np.zeros((grid_n, grid_n, 3))
    for i in range(grid_n):
        a = SE2Element(*z1[i])
        for j in range(grid_n):
            z[i, j] = se2.compose(a, SE2Element(*z2[j])).as_tuple()
    flag = bad1[:, None] | bad2[None, :]
    z[flag] = np.nan
    return DisplacementField(vary=vary, u_first=u, u_second=u.copy(), z=z, flag=flag)


def direction_gain_circle(a: float, n: int) -> np.ndarray:
    """Scaling-gain pairs on a circle of radius a: a*(cos d, sin d)."""
    if a <= 0.0:
        raise ValueError("radius must be positive")
    delta = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return np.column_stack([a * np.cos(delta), a * np.sin(delta)])


def turning_radius(z: SE2Element) -> float | None:
    """Radius of the circle traced by repeating displacement z each cycle.

    Chord length over twice the half-rotation sine; None marks a straight
    (rotation-free) displacement. The sign follows the rotation sense.
    """
    th = z.theta_wrapped
    if abs(th) < STRAIGHT_TOL:
        return None
    return math.hypot(z.x, z.y) / (2.0 * math.sin(0.5 * th))


# --- gait construction helpers ---------------------------------------------

#: leg pairs (0-based) of the standard two-beat pairings for 4-leg models
PAIRING_LEGS = {
    "trot": ((0, 2), (1, 3)),
    "bound": ((0, 1), (2, 3)),
    "pace": ((1, 2), (3, 0)),
}


def two_beat_gait(
    model: ModelSpec,
    pairing: str = "trot",
    alpha_star: tuple[float, float] = (0.0, 0.0),
    t0: float = -0.8,
    t_pi: float = -0.8,
    inputs_first: ControlInputs | None = None,
    inputs_second: ControlInputs | None = None,
) -> TwoBeatGaitSpec:
    """Standard two-beat gait on a 4-leg model with a shared subgait shape."""
    if pairing not in PAIRING_LEGS:
        raise ValueError(f"pairing must be one of {tuple(PAIRING_LEGS)}")
    pf, ps = PAIRING_LEGS[pairing]
    return TwoBeatGaitSpec(
        first=SubgaitSpec(
            subspace=ReducedShapeSubspace(model, pf),
            alpha_star=alpha_star,
            t0=t0,
            t_pi=t_pi,
            inputs=inputs_first or ControlInputs(),
        ),
        second=SubgaitSpec(
            subspace=ReducedShapeSubspace(model, ps),
            alpha_star=alpha_star,
            t0=t0,
            t_pi=t_pi,
            inputs=inputs_second or ControlInputs(),
        ),
        pairing=pairing,
    )


def fiducial_trot(model: ModelSpec) -> TwoBeatGaitSpec:
    """Forward-displacing trot: subgait origins as references, flow times -0.8."""
    return two_beat_gait(model, "trot", (0.0, 0.0), -0.8, -0.8)
