"""File formats: gait specs, trajectory exports, field/panel CSV writers.

Leg pairs are 1-based in JSON files (matching the usual gait names like
"13" / "24"); everything in-memory is 0-based. All angles in files are
radians. Floats are written with repr so reruns are byte-identical.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Sequence

from .gait import (
    ControlInputs,
    DisplacementField,
    StratifiedPanelGrid,
    SubgaitSpec,
    Trajectory,
    TwoBeatGaitSpec,
    TwoBeatPanel,
    turning_radius,
)
from .model import ModelSpec
from .shapefield import ReducedShapeSubspace, Singularity


def _fmt(v: float) -> str:
    return repr(float(v))


# --- gait spec JSON ---------------------------------------------------------

def subgait_to_dict(spec: SubgaitSpec) -> dict:
    i, j = spec.subspace.leg_pair
    return {
        "pair": [i + 1, j + 1],
        "alpha_star": [spec.alpha_star[0], spec.alpha_star[1]],
        "t0": spec.t0,
        "t_pi": spec.t_pi,
        "u1": spec.inputs.u1,
        "u2": spec.inputs.u2,
    }


def subgait_from_dict(model: ModelSpec, data: dict) -> SubgaitSpec:
    i, j = (int(v) - 1 for v in data["pair"])
    return SubgaitSpec(
        subspace=ReducedShapeSubspace(model, (i, j)),
        alpha_star=(float(data["alpha_star"][0]), float(data["alpha_star"][1])),
        t0=float(data["t0"]),
        t_pi=float(data["t_pi"]),
        inputs=ControlInputs(u1=float(data.get("u1", 1.0)), u2=float(data.get("u2", 0.0))),
    )


def gait_to_dict(gait: TwoBeatGaitSpec) -> dict:
    return {
        "pairing": gait.pairing,
        "first": subgait_to_dict(gait.first),
        "second": subgait_to_dict(gait.second),
    }


def gait_from_dict(model: ModelSpec, data: dict) -> TwoBeatGaitSpec:
    return TwoBeatGaitSpec(
        first=subgait_from_dict(model, data["first"]),
        second=subgait_from_dict(model, data["second"]),
        pairing=str(data.get("pairing", "trot")),
    )


def load_gait(model: ModelSpec, path: str | Path) -> TwoBeatGaitSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return gait_from_dict(model, json.load(fh))


def schedule_from_json(data: Sequence[dict]) -> list[tuple[ControlInputs, ControlInputs]]:
    """Per-cycle inputs: [{"u13": [u1, u2], "u24": [u1, u2]}, ...]."""
    out = []
    for row in data:
        a = row["u13"]
        b = row["u24"]
        out.append(
            (ControlInputs(float(a[0]), float(a[1])), ControlInputs(float(b[0]), float(b[1])))
        )
    return out


# --- trajectory JSON --------------------------------------------------------

def trajectory_to_dict(
    traj: Trajectory,
    model: ModelSpec,
    gait: dict | None,
    stride: int = 1,
) -> dict:
    samples = traj.samples[::stride] if stride > 1 else traj.samples
    if stride > 1 and traj.samples and samples[-1] is not traj.samples[-1]:
        samples = list(samples) + [traj.samples[-1]]
    r = turning_radius(traj.net_displacement)
    return {
        "model": model.name,
        "gait": gait,
        "samples": [
            {
                "tau": float(s.tau),
                "pose": [float(s.pose.x), float(s.pose.y), float(s.pose.theta)],
                "alpha": [float(a) for a in s.shape],
                "beta": [bool(b) for b in s.contact],
            }
            for s in samples
        ],
        "net": [float(v) for v in traj.net_displacement.as_tuple()],
        "turning_radius": float(r) if r is not None else None,
        "per_cycle": [[float(v) for v in z.as_tuple()] for z in traj.per_cycle],
        "bounds_exceeded": bool(traj.bounds_exceeded),
    }


# --- CSV writers ------------------------------------------------------------

FIELD_CSV_HEADER = "alpha1,alpha2,F,dF1,dF2,b1,b2,singular_flag"
PANEL_CSV_HEADER = "alpha_i,alpha_j,dzx,dzy,dzth,flag"
DISPLACEMENT_CSV_HEADER = "u13,u24,zx,zy,zth,flag"
TWO_BEAT_CSV_HEADER = "tau,dzx,dzy,dzth,flag"


def write_field_csv(fh: IO[str], grid: dict) -> int:
    """Grid dump of F, its gradient and the basis field; returns row count."""
    fh.write(FIELD_CSV_HEADER + "\n")
    a1, a2 = grid["alpha1"], grid["alpha2"]
    rows = 0
    for i in range(len(a1)):
        for j in range(len(a2)):
            sing = bool(grid["singular"][i, j])
            b1 = "" if sing else _fmt(grid["b1"][i, j])
            b2 = "" if sing else _fmt(grid["b2"][i, j])
            fh.write(
                f"{_fmt(a1[i])},{_fmt(a2[j])},{_fmt(grid['F'][i, j])},"
                f"{_fmt(grid['dF1'][i, j])},{_fmt(grid['dF2'][i, j])},"
                f"{b1},{b2},{int(sing)}\n"
            )
            rows += 1
    return rows


def write_panel_csv(fh: IO[str], panel: StratifiedPanelGrid) -> int:
    fh.write(PANEL_CSV_HEADER + "\n")
    rows = 0
    n = len(panel.alpha1)
    for i in range(n):
        for j in range(n):
            if panel.flag[i, j]:
                vals = ",,"
            else:
                dz = panel.dz[i, j]
                vals = f"{_fmt(dz[0])},{_fmt(dz[1])},{_fmt(dz[2])}"
            fh.write(f"{_fmt(panel.alpha1[i])},{_fmt(panel.alpha2[j])},{vals},{int(panel.flag[i, j])}\n")
            rows += 1
    return rows


def write_two_beat_csv(fh: IO[str], panel: TwoBeatPanel) -> int:
    fh.write(TWO_BEAT_CSV_HEADER + "\n")
    for k in range(len(panel.tau)):
        dz = panel.total[k]
        fh.write(f"{_fmt(panel.tau[k])},{_fmt(dz[0])},{_fmt(dz[1])},{_fmt(dz[2])},0\n")
    return len(panel.tau)


def write_displacement_csv(fh: IO[str], fld: DisplacementField) -> int:
    fh.write(DISPLACEMENT_CSV_HEADER + "\n")
    rows = 0
    n = len(fld.u_first)
    for i in range(n):
        for j in range(n):
            if fld.flag[i, j]:
                vals = ",,"
            else:
                z = fld.z[i, j]
                vals = f"{_fmt(z[0])},{_fmt(z[1])},{_fmt(z[2])}"
            fh.write(f"{_fmt(fld.u_first[i])},{_fmt(fld.u_second[j])},{vals},{int(fld.flag[i, j])}\n")
            rows += 1
    return rows


def displacement_to_dict(fld: DisplacementField) -> dict:
    def cell(i, j):
        if fld.flag[i, j]:
            return None
        return [float(v) for v in fld.z[i, j]]

    n = len(fld.u_first)
    return {
        "vary": fld.vary,
        "u13": [float(v) for v in fld.u_first],
        "u24": [float(v) for v in fld.u_second],
        "z": [[cell(i, j) for j in range(n)] for i in range(n)],
    }


def singularities_to_json(sings: Sequence[Singularity]) -> list[dict]:
    return [
        {
            "point": [float(s.point[0]), float(s.point[1])],
            "f_value": float(s.f_value),
            "kind": s.kind,
        }
        for s in sings
    ]


def dump_json(path: str | Path, data) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
