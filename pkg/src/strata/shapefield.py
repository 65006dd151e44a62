"""Squared inter-foot distance field and its level-set machinery.

For a two-leg stance the pin constraint conserves the distance between the
feet. The scalar field F (that distance squared) therefore organizes the
reduced shape plane: its level sets carry every slip-free shape path, its
unit tangent field is the basis for stance trajectories, and its critical
extrema are locked configurations where every limb motion slips.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import se2
from .model import ModelSpec, foot_pose

#: gradient norm below which a shape counts as singular
SINGULAR_TOL = 1e-6

#: default arc-length step for flows
DEFAULT_FLOW_STEP = 1e-3

#: level drift beyond which a flow step is projected back onto its level set
LEVEL_DRIFT_TOL = 1e-10


class SingularShape(RuntimeError):
    """Raised when an operation lands in the singular neighborhood of F."""

    def __init__(self, point, grad_norm: float):
        self.point = (float(point[0]), float(point[1]))
        self.grad_norm = float(grad_norm)
        super().__init__(
            f"shape {self.point} is within the singular neighborhood "
            f"(|grad F| = {grad_norm:.3e})"
        )


class _PairGeometry:
    """Scalar fast path for one stance pair: F, its gradient and Hessian.

    Foot positions are taken in the body frame; F is frame invariant so the
    choice of frame is immaterial.
    """

    __slots__ = ("hxi", "hyi", "ti", "li", "hxj", "hyj", "tj", "lj")

    def __init__(self, model: ModelSpec, pair: tuple[int, int]):
        i, j = pair
        li, lj = model.legs[i], model.legs[j]
        self.hxi, self.hyi, self.ti, self.li = li.hip.x, li.hip.y, li.hip.theta, li.length
        self.hxj, self.hyj, self.tj, self.lj = lj.hip.x, lj.hip.y, lj.hip.theta, lj.length

    def feet(self, a: float, b: float):
        ca, sa = math.cos(self.ti + a), math.sin(self.ti + a)
        cb, sb = math.cos(self.tj + b), math.sin(self.tj + b)
        return (
            self.hxi + self.li * ca,
            self.hyi + self.li * sa,
            self.hxj + self.lj * cb,
            self.hyj + self.lj * sb,
        )

    def f(self, a: float, b: float) -> float:
        pix, piy, pjx, pjy = self.feet(a, b)
        dx, dy = pjx - pix, pjy - piy
        return dx * dx + dy * dy

    def grad(self, a: float, b: float):
        ca, sa = math.cos(self.ti + a), math.sin(self.ti + a)
        cb, sb = math.cos(self.tj + b), math.sin(self.tj + b)
        dx = (self.hxj + self.lj * cb) - (self.hxi + self.li * ca)
        dy = (self.hyj + self.lj * sb) - (self.hyi + self.li * sa)
        # d(foot)/d(alpha) is the limb vector rotated a quarter turn
        g1 = -2.0 * (dx * (-self.li * sa) + dy * (self.li * ca))
        g2 = 2.0 * (dx * (-self.lj * sb) + dy * (self.lj * cb))
        return g1, g2

    def hessian(self, a: float, b: float):
        ca, sa = math.cos(self.ti + a), math.sin(self.ti + a)
        cb, sb = math.cos(self.tj + b), math.sin(self.tj + b)
        uix, uiy = self.li * ca, self.li * sa    # limb vectors
        ujx, ujy = self.lj * cb, self.lj * sb
        dix, diy = -self.li * sa, self.li * ca   # their derivatives
        djx, djy = -self.lj * sb, self.lj * cb
        dx = (self.hxj + ujx) - (self.hxi + uix)
        dy = (self.hyj + ujy) - (self.hyi + uiy)
        h11 = 2.0 * (dix * dix + diy * diy) + 2.0 * (dx * uix + dy * uiy)
        h22 = 2.0 * (djx * djx + djy * djy) - 2.0 * (dx * ujx + dy * ujy)
        h12 = -2.0 * (dix * djx + diy * djy)
        return h11, h12, h22


@dataclass(frozen=True)
class ReducedShapeSubspace:
    """Two shape coordinates of a stance pair, with sampling bounds."""

    model: ModelSpec
    leg_pair: tuple[int, int]
    bounds: tuple[tuple[float, float], tuple[float, float]] | None = None

    def __post_init__(self):
        i, j = self.leg_pair
        if i == j:
            raise ValueError("leg pair indices must differ")
        n = self.model.n_legs
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"leg pair {self.leg_pair} out of range for {n} legs")

    @property
    def axis_bounds(self) -> tuple[tuple[float, float], tuple[float, float]]:
        if self.bounds is not None:
            return self.bounds
        i, j = self.leg_pair
        return (self.model.legs[i].swing, self.model.legs[j].swing)

    def contains(self, point: Sequence[float]) -> bool:
        (lo1, hi1), (lo2, hi2) = self.axis_bounds
        return lo1 <= point[0] <= hi1 and lo2 <= point[1] <= hi2

    def embed(self, point: Sequence[float], base: Sequence[float] | None = None) -> np.ndarray:
        """Full shape vector with the pair set and other legs at base (zeros)."""
        alpha = np.zeros(self.model.n_legs) if base is None else np.asarray(base, float).copy()
        alpha[self.leg_pair[0]] = point[0]
        alpha[self.leg_pair[1]] = point[1]
        return alpha

    def stance_vector(self) -> np.ndarray:
        st = np.zeros(self.model.n_legs, dtype=bool)
        st[list(self.leg_pair)] = True
        return st

    @cached_property
    def _geom(self) -> _PairGeometry:
        return _PairGeometry(self.model, self.leg_pair)


@dataclass(frozen=True)
class FieldSample:
    point: np.ndarray
    f_value: float
    grad: np.ndarray
    basis: np.ndarray | None  # None inside the singular neighborhood


@dataclass(frozen=True)
class Singularity:
    point: np.ndarray
    f_value: float
    kind: str  # "max" | "min"


@dataclass
class FlowResult:
    """Sampled level-set flow, start and endpoint included."""

    points: np.ndarray           # (m, 2)
    f_start: float
    bounds_exceeded: bool

    @property
    def end(self) -> np.ndarray:
        return self.points[-1]


def inter_foot_f(subspace: ReducedShapeSubspace, point: Sequence[float]) -> float:
    """Squared inter-foot distance via the relative SE(2) foot transform."""
    alpha = subspace.embed(point)
    gi = foot_pose(subspace.model, alpha, subspace.leg_pair[0])
    gj = foot_pose(subspace.model, alpha, subspace.leg_pair[1])
    rel = se2.compose(se2.inverse(gi), gj)
    return rel.x * rel.x + rel.y * rel.y


def grad_f(subspace: ReducedShapeSubspace, point: Sequence[float]) -> np.ndarray:
    g1, g2 = subspace._geom.grad(float(point[0]), float(point[1]))
    return np.array([g1, g2])


def f_hessian(subspace: ReducedShapeSubspace, point: Sequence[float]) -> np.ndarray:
    h11, h12, h22 = subspace._geom.hessian(float(point[0]), float(point[1]))
    return np.array([[h11, h12], [h12, h22]])


def nonslip_field(
    subspace: ReducedShapeSubspace,
    point: Sequence[float],
    singular_tol: float = SINGULAR_TOL,
) -> np.ndarray:
    """Unit field tangent to level sets: the F gradient rotated clockwise."""
    g1, g2 = subspace._geom.grad(float(point[0]), float(point[1]))
    norm = math.hypot(g1, g2)
    if norm <= singular_tol:
        raise SingularShape(point, norm)
    return np.array([g2 / norm, -g1 / norm])


def field_sample(subspace: ReducedShapeSubspace, point: Sequence[float]) -> FieldSample:
    p = np.asarray(point, dtype=float)
    geom = subspace._geom
    fval = geom.f(p[0], p[1])
    g1, g2 = geom.grad(p[0], p[1])
    norm = math.hypot(g1, g2)
    basis = None
    if norm > SINGULAR_TOL:
        basis = np.array([g2 / norm, -g1 / norm])
    return FieldSample(point=p, f_value=fval, grad=np.array([g1, g2]), basis=basis)


def flow(
    subspace: ReducedShapeSubspace,
    start: Sequence[float],
    length: float,
    step: float = DEFAULT_FLOW_STEP,
    singular_tol: float = SINGULAR_TOL,
) -> FlowResult:
    """Flow along the unit level-set field for a signed arc length.

    Fixed-step RK4; after each step the point is projected back onto the
    starting level set whenever the drift exceeds LEVEL_DRIFT_TOL, so long
    flows conserve F. Raises SingularShape if the path enters the singular
    neighborhood; leaving the subspace bounds only sets a flag.
    """
    if step <= 0.0:
        raise ValueError("step must be positive")
    geom = subspace._geom
    a, b = float(start[0]), float(start[1])
    f0 = geom.f(a, b)
    pts = [(a, b)]
    out_of_bounds = not subspace.contains((a, b))
    if length == 0.0:
        return FlowResult(np.array(pts), f0, out_of_bounds)

    n = max(1, math.ceil(abs(length) / step - 1e-12))
    h = length / n

    def fld(x: float, y: float):
        g1, g2 = geom.grad(x, y)
        norm = math.hypot(g1, g2)
        if norm <= singular_tol:
            raise SingularShape((x, y), norm)
        return g2 / norm, -g1 / norm

    for _ in range(n):
        k1x, k1y = fld(a, b)
        k2x, k2y = fld(a + 0.5 * h * k1x, b + 0.5 * h * k1y)
        k3x, k3y = fld(a + 0.5 * h * k2x, b + 0.5 * h * k2y)
        k4x, k4y = fld(a + h * k3x, b + h * k3y)
        a += h / 6.0 * (k1x + 2.0 * (k2x + k3x) + k4x)
        b += h / 6.0 * (k1y + 2.0 * (k2y + k3y) + k4y)
        # pull back onto the starting level set along grad F
        for _ in range(3):
            drift = geom.f(a, b) - f0
            if abs(drift) <= LEVEL_DRIFT_TOL:
                break
            g1, g2 = geom.grad(a, b)
            gg = g1 * g1 + g2 * g2
            a -= drift * g1 / gg
            b -= drift * g2 / gg
        pts.append((a, b))
        if not subspace.contains((a, b)):
            out_of_bounds = True
    return FlowResult(np.array(pts), f0, out_of_bounds)


def closed_contour(
    subspace: ReducedShapeSubspace,
    start: Sequence[float],
    step: float = DEFAULT_FLOW_STEP,
    max_length: float = 50.0,
) -> FlowResult:
    """Trace one full circuit of the level set through start.

    Integrates the unit field until the path re-crosses the section through
    the start point (positive side of the initial direction), interpolating
    the final partial step so the path closes. Raises RuntimeError if no
    closure occurs within max_length.
    """
    geom = subspace._geom
    b0 = nonslip_field(subspace, start)
    x0 = np.asarray(start, dtype=float)
    res = flow(subspace, start, step, step=step)
    pts = [tuple(x0), tuple(res.end)]
    prev = res.end
    prev_side = float((prev - x0) @ b0)
    travelled = step
    while travelled < max_length:
        cur = flow(subspace, prev, step, step=step).end
        travelled += step
        side = float((cur - x0) @ b0)
        if (
            travelled > 10.0 * step
            and np.hypot(*(cur - x0)) < 4.0 * step
            and prev_side < 0.0 <= side
        ):
            frac = -prev_side / (side - prev_side)
            last = flow(subspace, prev, frac * step, step=step).end
            pts.append(tuple(last))
            out = not all(subspace.contains(p) for p in pts)
            return FlowResult(np.array(pts), geom.f(*x0), out)
        pts.append(tuple(cur))
        prev, prev_side = cur, side
    raise RuntimeError("level set did not close within max_length")


def _grid_axes(subspace: ReducedShapeSubspace, grid_n: int):
    (lo1, hi1), (lo2, hi2) = subspace.axis_bounds
    return np.linspace(lo1, hi1, grid_n), np.linspace(lo2, hi2, grid_n)


def field_grid(subspace: ReducedShapeSubspace, grid_n: int) -> dict:
    """Sample F, grad F and the basis field on a grid (vectorized).

    Returns axes plus (n, n) arrays; basis entries are NaN and the singular
    flag set where |grad F| <= SINGULAR_TOL.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    geom = subspace._geom
    a1, a2 = _grid_axes(subspace, grid_n)
    A, B = np.meshgrid(a1, a2, indexing="ij")
    ca, sa = np.cos(geom.ti + A), np.sin(geom.ti + A)
    cb, sb = np.cos(geom.tj + B), np.sin(geom.tj + B)
    dx = (geom.hxj + geom.lj * cb) - (geom.hxi + geom.li * ca)
    dy = (geom.hyj + geom.lj * sb) - (geom.hyi + geom.li * sa)
    F = dx * dx + dy * dy
    g1 = -2.0 * (dx * (-geom.li * sa) + dy * (geom.li * ca))
    g2 = 2.0 * (dx * (-geom.lj * sb) + dy * (geom.lj * cb))
    norm = np.hypot(g1, g2)
    singular = norm <= SINGULAR_TOL
    safe = np.where(singular, 1.0, norm)
    b1 = np.where(singular, np.nan, g2 / safe)
    b2 = np.where(singular, np.nan, -g1 / safe)
    return {
        "alpha1": a1,
        "alpha2": a2,
        "F": F,
        "dF1": g1,
        "dF2": g2,
        "b1": b1,
        "b2": b2,
        "singular": singular,
    }


def find_singularities(subspace: ReducedShapeSubspace, grid_n: int = 128) -> list[Singularity]:
    """Locate the locked shapes: extremal critical points of F.

    Grid-scans |grad F|, Newton-refines each local minimum onto grad F = 0
    and classifies by the Hessian eigenvalues. Saddle points of F are not
    returned: the level set through a saddle still carries slip-free
    directions, so only extrema lock the mechanism.
    """
    if grid_n < 64:
        raise ValueError("grid_n must be at least 64")
    geom = subspace._geom
    grid = field_grid(subspace, grid_n)
    gnorm2 = grid["dF1"] ** 2 + grid["dF2"] ** 2
    a1, a2 = grid["alpha1"], grid["alpha2"]
    (lo1, hi1), (lo2, hi2) = subspace.axis_bounds

    padded = np.pad(gnorm2, 1, mode="constant", constant_values=np.inf)
    local_min = np.ones_like(gnorm2, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            local_min &= gnorm2 <= padded[1 + di : 1 + di + grid_n, 1 + dj : 1 + dj + grid_n]

    found: list[Singularity] = []
    margin = 1e-9
    for i, j in zip(*np.nonzero(local_min)):
        x = np.array([a1[i], a2[j]])
        for _ in range(60):
            g = np.array(geom.grad(x[0], x[1]))
            if math.hypot(g[0], g[1]) < 1e-12:
                break
            h11, h12, h22 = geom.hessian(x[0], x[1])
            H = np.array([[h11, h12], [h12, h22]])
            dx = np.linalg.lstsq(H, -g, rcond=None)[0]
            # keep refinement inside one grid cell scale to avoid hopping
            stepn = np.hypot(dx[0], dx[1])
            cell = max(a1[1] - a1[0], a2[1] - a2[0])
            if stepn > cell:
                dx *= cell / stepn
            x = x + dx
        g = np.array(geom.grad(x[0], x[1]))
        if math.hypot(g[0], g[1]) >= 1e-8:
            continue
        if not (lo1 - margin <= x[0] <= hi1 + margin and lo2 - margin <= x[1] <= hi2 + margin):
            continue
        h11, h12, h22 = geom.hessian(x[0], x[1])
        lam = np.linalg.eigvalsh(np.array([[h11, h12], [h12, h22]]))
        scale = max(abs(lam[0]), abs(lam[1]), 1.0)
        tol = 1e-7 * scale
        if lam[0] < -tol and lam[1] > tol:
            continue  # saddle: the contour continues through it
        kind = "max" if lam[1] < tol else "min"
        if any(np.hypot(*(x - s.point)) < 1e-4 for s in found):
            continue
        found.append(Singularity(point=x, f_value=geom.f(x[0], x[1]), kind=kind))
    found.sort(key=lambda s: -s.f_value)
    return found
