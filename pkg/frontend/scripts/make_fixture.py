"""Regenerate the scripted-session fixture from the batch gait runner.

The vitest integration test replays this schedule against a live server and
must land on the same per-cycle displacements and final pose.

Run from the repository root:  python frontend/scripts/make_fixture.py
"""
import json
import pathlib

from strata import ControlInputs, compose_two_beat, fiducial_trot, quad

SAMPLES_PER_PHASE = 256

SCHEDULE = [
    ((1.0, 0.0), (1.0, 0.0)),
    ((0.7, 0.2), (0.7, -0.2)),
    ((0.4, -0.1), (0.4, 0.1)),
    ((0.9, 0.3), (0.9, -0.3)),
]


def main() -> None:
    model = quad()
    gait = fiducial_trot(model)
    schedule = [
        (ControlInputs(*u13), ControlInputs(*u24)) for u13, u24 in SCHEDULE
    ]
    traj = compose_two_beat(
        gait, samples_per_phase=SAMPLES_PER_PHASE, schedule=schedule, record=False
    )
    out = {
        "samples_per_phase": SAMPLES_PER_PHASE,
        "schedule": [{"u13": list(a), "u24": list(b)} for a, b in SCHEDULE],
        "per_cycle": [[z.x, z.y, z.theta] for z in traj.per_cycle],
        "net": [
            traj.net_displacement.x,
            traj.net_displacement.y,
            traj.net_displacement.theta,
        ],
    }
    path = pathlib.Path(__file__).parent.parent / "test" / "fixtures" / "steer_fixture.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(out, fh, indent=2)
        fh.write("\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
