"""Planar multi-leg system description and no-slip constraint algebra.

A model is a body frame with rigidly attached hip frames, one revolute limb
per hip, and point feet. Pinned feet may rotate but not translate; stacking
the translational rows of each stance foot's Jacobian yields the constraint
matrix from which the local connection is extracted by pseudoinverse.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from . import se2
from .se2 import SE2Element

#: relative singular-value cutoff for the constraint pseudoinverse
PINV_RCOND = 1e-10


@dataclass(frozen=True)
class LegModule:
    """One leg: hip frame relative to the body, limb length, swing limits."""

    hip: SE2Element
    length: float
    swing: tuple[float, float]

    def __post_init__(self):
        if not self.length > 0.0:
            raise ValueError(f"leg length must be positive, got {self.length}")
        lo, hi = self.swing
        if not lo < hi:
            raise ValueError(f"swing limits must be ordered, got {self.swing}")


@dataclass(frozen=True)
class ModelSpec:
    """Immutable system geometry. body_length is documentation only."""

    name: str
    legs: tuple[LegModule, ...]
    body_length: float | None = None

    def __post_init__(self):
        if not 2 <= len(self.legs) <= 8:
            raise ValueError(f"model needs 2..8 legs, got {len(self.legs)}")
        for leg in self.legs:
            for v in leg.hip.as_tuple():
                if not math.isfinite(v):
                    raise ValueError("hip offsets must be finite")

    @property
    def n_legs(self) -> int:
        return len(self.legs)

    def within_limits(self, alpha: Sequence[float]) -> bool:
        """Soft swing-limit check; callers flag rather than reject."""
        return all(
            leg.swing[0] <= a <= leg.swing[1] for leg, a in zip(self.legs, alpha)
        )


def foot_pose(model: ModelSpec, alpha: Sequence[float], leg: int) -> SE2Element:
    """Foot frame in body coordinates: hip, rotate by alpha_i, advance l_i."""
    lm = model.legs[leg]
    return se2.compose(
        lm.hip,
        se2.compose(SE2Element(0.0, 0.0, alpha[leg]), SE2Element(lm.length, 0.0, 0.0)),
    )


def foot_jacobian(model: ModelSpec, alpha: Sequence[float], leg: int) -> np.ndarray:
    """Map stacked (body velocity; shape velocities) to foot-frame velocity.

    Returns a 3x(3+n) matrix. The body block is the inverse adjoint of the
    body-to-foot transform; the only nonzero shape column is the leg's own
    (swinging another limb does not move this foot).
    """
    n = model.n_legs
    if not 0 <= leg < n:
        raise IndexError(f"leg index {leg} out of range for {n} legs")
    g = foot_pose(model, alpha, leg)
    c, s = math.cos(g.theta), math.sin(g.theta)
    J = np.zeros((3, 3 + n))
    # inverse adjoint: columns are body unit twists seen from the foot frame
    J[0, 0], J[0, 1] = c, s
    J[1, 0], J[1, 1] = -s, c
    qx = -(c * g.x + s * g.y)
    qy = s * g.x - c * g.y
    J[0, 2] = qy
    J[1, 2] = -qx
    J[2, 2] = 1.0
    # own swing column: unit rotation about the hip seen from the foot
    J[1, 3 + leg] = model.legs[leg].length
    J[2, 3 + leg] = 1.0
    return J


def pfaffian(model: ModelSpec, alpha: Sequence[float], stance: Sequence[bool]) -> np.ndarray:
    """Stack translational foot-velocity rows over all stance legs.

    The no-slip constraint is pfaffian(...) @ (body velocity; alpha_dot) = 0.
    """
    idx = [i for i, b in enumerate(stance) if b]
    if not idx:
        raise ValueError("pfaffian requires at least one stance leg")
    return np.vstack([foot_jacobian(model, alpha, i)[:2, :] for i in idx])


@dataclass
class LocalConnection:
    """Shape-to-body velocity map for one stance set.

    ``a`` holds only the stance legs' columns (3 x k); ``a_full`` is padded
    with zero columns for swing legs (3 x n). Body velocity for a shape
    velocity ``da`` is -a_full @ da. ``residual`` is the smallest achievable
    stance-foot speed over unit shape velocities; away from singular shapes
    there is a slip-free direction and it vanishes.
    """

    a: np.ndarray
    a_full: np.ndarray
    shape_point: np.ndarray
    stance: np.ndarray
    residual: float
    rank_deficient: bool

    def body_velocity(self, alpha_dot: Sequence[float]) -> se2.SE2Velocity:
        v = -self.a_full @ np.asarray(alpha_dot, dtype=float)
        return se2.SE2Velocity(float(v[0]), float(v[1]), float(v[2]))


def local_connection(
    model: ModelSpec,
    alpha: Sequence[float],
    stance: Sequence[bool],
    rcond: float = PINV_RCOND,
) -> LocalConnection:
    """Extract the local connection for the given stance set.

    Splits the stacked constraint into body and shape blocks and solves the
    body block by SVD pseudoinverse. An empty stance returns the uniformly
    zero connection (no contact, no body motion). Stances of more than two
    legs are outside this release's two-beat scope.
    """
    alpha = np.asarray(alpha, dtype=float)
    st = np.asarray(stance, dtype=bool)
    n = model.n_legs
    idx = np.flatnonzero(st)
    if len(idx) > 2:
        raise ValueError("stances with more than two legs are not supported")
    if len(idx) == 0:
        a_full = np.zeros((3, n))
        return LocalConnection(
            a=np.zeros((3, 0)),
            a_full=a_full,
            shape_point=alpha,
            stance=st,
            residual=0.0,
            rank_deficient=True,
        )
    omega = pfaffian(model, alpha, st)
    w_g, w_a = omega[:, :3], omega[:, 3:]
    a_full = np.linalg.pinv(w_g, rcond=rcond) @ w_a
    rank = np.linalg.matrix_rank(w_g, tol=rcond * np.linalg.norm(w_g, 2))
    # least-squares residual map: foot speed left over after the body does
    # its best; its smallest singular value over the stance shape directions
    # measures whether any slip-free shape velocity exists at this shape
    proj = w_a - w_g @ a_full
    svals = np.linalg.svd(proj[:, idx], compute_uv=False)
    residual = float(svals[-1]) if svals.size else 0.0
    return LocalConnection(
        a=a_full[:, idx],
        a_full=a_full,
        shape_point=alpha,
        stance=st,
        residual=residual,
        rank_deficient=bool(rank < 3),
    )


# --- model files -----------------------------------------------------------

def model_from_dict(data: dict) -> ModelSpec:
    legs = tuple(
        LegModule(
            hip=SE2Element(float(d["hip"]["x"]), float(d["hip"]["y"]), float(d["hip"]["theta"])),
            length=float(d["length"]),
            swing=(float(d["swing"][0]), float(d["swing"][1])),
        )
        for d in data["legs"]
    )
    return ModelSpec(
        name=str(data["name"]),
        legs=legs,
        body_length=float(data["body_length"]) if data.get("body_length") is not None else None,
    )


def model_to_dict(model: ModelSpec) -> dict:
    return {
        "name": model.name,
        "body_length": model.body_length,
        "legs": [
            {
                "hip": {"x": leg.hip.x, "y": leg.hip.y, "theta": leg.hip.theta},
                "length": leg.length,
                "swing": [leg.swing[0], leg.swing[1]],
            }
            for leg in model.legs
        ],
    }


def load_model(path: str | Path) -> ModelSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return model_from_dict(json.load(fh))


def _bundled(name: str) -> ModelSpec:
    text = resources.files("strata.data").joinpath(name).read_text(encoding="utf-8")
    return model_from_dict(json.loads(text))


def fourbar() -> ModelSpec:
    """Fiducial three-link system: body of two units, unit limbs at its ends."""
    return _bundled("fourbar.json")


def quad() -> ModelSpec:
    """Fiducial sprawled quadruped: hips at unit offsets, outward unit limbs.

    Legs are numbered so that {1,3} and {2,4} are the diagonal (trot) pairs,
    {1,2}/{3,4} the contralateral (bound) pairs and {2,3}/{4,1} the
    ipsilateral (pace) pairs. Hip frames on the -x side point outward
    (rotated by pi) so the system is mirror-symmetric about both body axes.
    """
    return _bundled("quad.json")


def bundled_model_path(name: str) -> Path:
    """Filesystem path of a bundled model file (fourbar.json / quad.json)."""
    with resources.as_file(resources.files("strata.data").joinpath(name)) as p:
        return Path(p)
