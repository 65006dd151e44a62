"""Planar rigid-body transforms (SE(2)) and body-frame velocity integration.

Group elements are stored as (x, y, theta) with theta unwrapped, so net
rotation accumulated over many gait cycles stays meaningful; wrap only for
display. Velocities are left-trivialized (body-frame) twists.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple

#: default phase step for fixed-step integration
DEFAULT_STEP = math.pi / 2000

#: below this |omega * dt| the exponential map switches to its series form
EXP_SERIES_TOL = 1e-6


class IntegrationError(RuntimeError):
    """Raised when a velocity sample is non-finite during integration."""


@dataclass(frozen=True)
class SE2Element:
    """Rigid transform of the plane: rotation by theta then translation."""

    x: float = 0.0
    y: float = 0.0
    theta: float = 0.0

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.theta)

    @property
    def theta_wrapped(self) -> float:
        """theta folded into (-pi, pi] for display and turning-radius use."""
        t = math.fmod(self.theta, 2.0 * math.pi)
        if t > math.pi:
            t -= 2.0 * math.pi
        elif t <= -math.pi:
            t += 2.0 * math.pi
        return t


@dataclass(frozen=True)
class SE2Velocity:
    """Body-frame velocity (vx, vy, omega) in length/phase and angle/phase."""

    vx: float = 0.0
    vy: float = 0.0
    omega: float = 0.0

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.vx, self.vy, self.omega)

    def is_finite(self) -> bool:
        return math.isfinite(self.vx) and math.isfinite(self.vy) and math.isfinite(self.omega)


IDENTITY = SE2Element()


def compose(a: SE2Element, b: SE2Element) -> SE2Element:
    """Group product: apply b in the frame of a."""
    c, s = math.cos(a.theta), math.sin(a.theta)
    return SE2Element(
        a.x + c * b.x - s * b.y,
        a.y + s * b.x + c * b.y,
        a.theta + b.theta,
    )


def inverse(g: SE2Element) -> SE2Element:
    c, s = math.cos(g.theta), math.sin(g.theta)
    return SE2Element(-(c * g.x + s * g.y), s * g.x - c * g.y, -g.theta)


def act(g: SE2Element, px: float, py: float) -> Tuple[float, float]:
    """Apply g to a point of the plane."""
    c, s = math.cos(g.theta), math.sin(g.theta)
    return (g.x + c * px - s * py, g.y + s * px + c * py)


def _exp_xyw(vx: float, vy: float, w: float) -> Tuple[float, float, float]:
    # closed-form SE(2) exponential; series branch avoids the 0/0 at w -> 0
    if abs(w) < EXP_SERIES_TOL:
        w2 = w * w
        a = 1.0 - w2 / 6.0 + w2 * w2 / 120.0          # sin(w)/w
        b = w * (0.5 - w2 / 24.0 + w2 * w2 / 720.0)   # (1-cos(w))/w
    else:
        a = math.sin(w) / w
        b = (1.0 - math.cos(w)) / w
    return (a * vx - b * vy, b * vx + a * vy, w)


def exp(vel: SE2Velocity, dt: float = 1.0) -> SE2Element:
    """Exponential map: displacement of a constant body velocity held for dt."""
    return SE2Element(*_exp_xyw(vel.vx * dt, vel.vy * dt, vel.omega * dt))


def _bracket(a, b):
    # se(2) Lie bracket as (vx, vy, w) tuples; the w component vanishes
    return (
        -a[2] * b[1] + b[2] * a[1],
        a[2] * b[0] - b[2] * a[0],
        0.0,
    )


def _dexpinv(u, w):
    # truncated inverse right-trivialized tangent, enough for 4th order:
    # dexpinv_{-u}(w) = w + 1/2 [u, w] + 1/12 [u, [u, w]]
    b1 = _bracket(u, w)
    b2 = _bracket(u, b1)
    return (
        w[0] + 0.5 * b1[0] + b2[0] / 12.0,
        w[1] + 0.5 * b1[1] + b2[1] / 12.0,
        w[2],
    )


def _rkmk4_step(g: SE2Element, h: float, f0, fm, f1) -> SE2Element:
    """One Runge-Kutta-Munthe-Kaas step for dg = g * xi(t).

    f0, fm, f1 are xi at the step start, midpoint and end as tuples. Constant
    fields reduce to g * exp(h * xi) exactly, independent of step count.
    """
    k1 = f0
    u2 = (0.5 * h * k1[0], 0.5 * h * k1[1], 0.5 * h * k1[2])
    k2 = _dexpinv(u2, fm)
    u3 = (0.5 * h * k2[0], 0.5 * h * k2[1], 0.5 * h * k2[2])
    k3 = _dexpinv(u3, fm)
    u4 = (h * k3[0], h * k3[1], h * k3[2])
    k4 = _dexpinv(u4, f1)
    s = h / 6.0
    ux = s * (k1[0] + 2.0 * (k2[0] + k3[0]) + k4[0])
    uy = s * (k1[1] + 2.0 * (k2[1] + k3[1]) + k4[1])
    uw = s * (k1[2] + 2.0 * (k2[2] + k3[2]) + k4[2])
    return compose(g, SE2Element(*_exp_xyw(ux, uy, uw)))


def integrate_body_velocity(
    g0: SE2Element,
    xi: Callable[[float], SE2Velocity],
    span: Tuple[float, float],
    step: float = DEFAULT_STEP,
) -> SE2Element:
    """Integrate dg = g * xi(tau) over span with fixed-step RK4 on the group.

    Each substep applies the closed-form SE(2) exponential, so constant
    velocities integrate exactly. Raises IntegrationError naming tau if a
    sample is non-finite.
    """
    if step <= 0.0:
        raise ValueError("step must be positive")
    t0, t1 = span
    length = t1 - t0
    if length == 0.0:
        return g0
    n = max(1, math.ceil(abs(length) / step - 1e-12))
    h = length / n

    def sample(t: float):
        v = xi(t)
        if not v.is_finite():
            raise IntegrationError(f"non-finite body velocity at tau={t!r}: {v}")
        return v.as_tuple()

    g = g0
    for k in range(n):
        a = t0 + k * h
        f0 = sample(a)
        fm = sample(a + 0.5 * h)
        f1 = sample(a + h)
        g = _rkmk4_step(g, h, f0, fm, f1)
    return g
