"""Batch front-end: fields, panels, trajectories, input sweeps, and serving.

Every computation here is a pure function of the model file and flags, so
reruns are byte-identical. Exit codes: 0 success, 2 bad configuration,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats, gait, model as model_mod, shapefield
from .se2 import IDENTITY

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


class ConfigError(Exception):
    pass


def _load_model(spec: str) -> model_mod.ModelSpec:
    if spec in ("fourbar", "quad"):
        return getattr(model_mod, spec)()
    path = Path(spec)
    if not path.exists():
        raise ConfigError(f"model file not found: {spec}")
    try:
        return model_mod.load_model(path)
    except (KeyError, ValueError, json.JSONDecodeError) as e:
        raise ConfigError(f"bad model file {spec}: {e}") from e


def _parse_pair(text: str, m: model_mod.ModelSpec) -> tuple[int, int]:
    try:
        parts = [int(p) for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError
    except ValueError:
        raise ConfigError(f"--pair expects 'i,j' (1-based legs), got {text!r}")
    i, j = parts[0] - 1, parts[1] - 1
    if not (0 <= i < m.n_legs and 0 <= j < m.n_legs) or i == j:
        raise ConfigError(f"leg pair {text} invalid for model with {m.n_legs} legs")
    return (i, j)


def _parse_floats(text: str, n: int, flag: str) -> list[float]:
    try:
        vals = [float(p) for p in text.split(",")]
    except ValueError:
        vals = []
    if len(vals) != n:
        raise ConfigError(f"{flag} expects {n} comma-separated numbers, got {text!r}")
    return vals


def _check_grid(n: int) -> int:
    if n < 32:
        raise ConfigError(f"--grid must be at least 32, got {n}")
    return n


def _gait_from_args(args, m: model_mod.ModelSpec) -> gait.TwoBeatGaitSpec:
    if args.gait:
        path = Path(args.gait)
        if not path.exists():
            raise ConfigError(f"gait file not found: {args.gait}")
        try:
            g = formats.load_gait(m, path)
        except (KeyError, ValueError, IndexError) as e:
            raise ConfigError(f"bad gait file {args.gait}: {e}")
    else:
        star = _parse_floats(args.alpha_star, 2, "--alpha-star")
        g = gait.two_beat_gait(
            m,
            pairing=args.pairing,
            alpha_star=(star[0], star[1]),
            t0=args.t0,
            t_pi=args.t_pi,
        )
    u13 = _parse_floats(args.u13, 2, "--u13")
    u24 = _parse_floats(args.u24, 2, "--u24")
    return g.with_inputs(
        gait.ControlInputs(u13[0], u13[1]), gait.ControlInputs(u24[0], u24[1])
    )


def _add_gait_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gait", help="gait spec JSON file (overrides inline flags)")
    p.add_argument("--pairing", choices=sorted(gait.PAIRING_LEGS), default="trot")
    p.add_argument("--alpha-star", default="0,0", help="reference shape 'a,b'")
    p.add_argument("--t0", type=float, default=-0.8)
    p.add_argument("--t-pi", dest="t_pi", type=float, default=-0.8)
    p.add_argument("--u13", default="1,0", help="first subgait inputs 'u1,u2'")
    p.add_argument("--u24", default="1,0", help="second subgait inputs 'u1,u2'")
    p.add_argument("--step", type=float, default=shapefield.DEFAULT_FLOW_STEP,
                   help="arc-length step for level-set flows")


# --- subcommands -------------------------------------------------------------

def cmd_field_dump(args) -> int:
    m = _load_model(args.model)
    sub = shapefield.ReducedShapeSubspace(m, _parse_pair(args.pair, m))
    grid = shapefield.field_grid(sub, _check_grid(args.grid))
    if grid["singular"].all():
        print("error: singular region covers the whole grid", file=sys.stderr)
        return EXIT_NUMERICAL
    out = Path(args.out)
    with open(out, "w", encoding="utf-8") as fh:
        rows = formats.write_field_csv(fh, grid)
    sings = shapefield.find_singularities(sub, max(args.grid, 64))
    formats.dump_json(out.with_suffix(".singularities.json"), formats.singularities_to_json(sings))
    print(f"wrote {rows} rows to {out}; {len(sings)} singularity records")
    return EXIT_OK


def cmd_panel(args) -> int:
    m = _load_model(args.model)
    n = _check_grid(args.grid)
    out = Path(args.out)
    if args.two_beat:
        g = _gait_from_args(args, m)
        try:
            panel = gait.two_beat_panel(g, grid_n=n, flow_step=args.step)
        except shapefield.SingularShape as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_NUMERICAL
        with open(out, "w", encoding="utf-8") as fh:
            rows = formats.write_two_beat_csv(fh, panel)
    else:
        sub = shapefield.ReducedShapeSubspace(m, _parse_pair(args.pair, m))
        panel = gait.stratified_panel(sub, grid_n=n)
        with open(out, "w", encoding="utf-8") as fh:
            rows = formats.write_panel_csv(fh, panel)
    print(f"wrote {rows} rows to {out}")
    return EXIT_OK


def cmd_trajectory(args) -> int:
    m = _load_model(args.model)
    g = _gait_from_args(args, m)
    schedule = None
    if args.schedule:
        path = Path(args.schedule)
        if not path.exists():
            raise ConfigError(f"schedule file not found: {args.schedule}")
        with open(path, "r", encoding="utf-8") as fh:
            try:
                schedule = formats.schedule_from_json(json.load(fh))
            except (KeyError, ValueError, TypeError) as e:
                raise ConfigError(f"bad schedule file: {e}")
    try:
        traj = gait.compose_two_beat(
            g,
            g0=IDENTITY,
            samples_per_phase=args.samples,
            cycles=args.cycles,
            schedule=schedule,
            flow_step=args.step,
        )
    except shapefield.SingularShape as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    data = formats.trajectory_to_dict(traj, m, formats.gait_to_dict(g), stride=args.stride)
    formats.dump_json(args.out, data)
    print(
        f"wrote {len(data['samples'])} samples to {args.out}; "
        f"net = {data['net']}, turning_radius = {data['turning_radius']}"
    )
    return EXIT_OK


def cmd_displacement_field(args) -> int:
    m = _load_model(args.model)
    g = _gait_from_args(args, m)
    try:
        fld = gait.displacement_field(
            g,
            vary=args.vary,
            grid_n=_check_grid(args.grid),
            samples_per_phase=args.samples,
            flow_step=args.step,
        )
    except shapefield.SingularShape as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    if fld.flag.all():
        print("error: every cell of the sweep failed", file=sys.stderr)
        return EXIT_NUMERICAL
    out = Path(args.out)
    if args.format == "csv":
        with open(out, "w", encoding="utf-8") as fh:
            rows = formats.write_displacement_csv(fh, fld)
        print(f"wrote {rows} rows to {out}")
    else:
        formats.dump_json(out, formats.displacement_to_dict(fld))
        print(f"wrote {args.vary} field to {out}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import SessionConfig, create_app

    m = _load_model(args.model)
    g = _gait_from_args(args, m)
    config = SessionConfig(
        model=m,
        gait=g,
        samples_per_phase=args.samples,
        rate=args.rate,
        flow_step=args.step,
    )
    app = create_app(config)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except OSError as e:  # port in use and friends
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strata",
        description="Geometric gait toolkit for planar no-slip legged systems.",
    )
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized subcommands (current commands are deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-dump", help="sample F, grad F and the nonslip basis on a grid")
    p.add_argument("--model", required=True, help="model JSON path, or 'fourbar' / 'quad'")
    p.add_argument("--pair", default="1,2", help="stance legs 'i,j' (1-based)")
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_field_dump)

    p = sub.add_parser("panel", help="stratified panel grid (or two-beat panel with --two-beat)")
    p.add_argument("--model", required=True)
    p.add_argument("--pair", default="1,2")
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--out", required=True)
    p.add_argument("--two-beat", action="store_true", help="phase-indexed two-beat panel")
    _add_gait_flags(p)
    p.set_defaults(func=cmd_panel)

    p = sub.add_parser("trajectory", help="run a two-beat gait and export the trajectory")
    p.add_argument("--model", required=True)
    p.add_argument("--cycles", type=int, default=1)
    p.add_argument("--samples", type=int, default=gait.DEFAULT_SAMPLES_PER_PHASE,
                   help="integration steps per half cycle")
    p.add_argument("--stride", type=int, default=10, help="sample decimation in the export")
    p.add_argument("--schedule", help="JSON file with per-cycle inputs")
    p.add_argument("--out", required=True)
    _add_gait_flags(p)
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("displacement-field", help="net displacement over an input subspace")
    p.add_argument("--model", required=True)
    p.add_argument("--vary", choices=("scaling", "sliding"), default="scaling")
    p.add_argument("--grid", type=int, default=41)
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", required=True)
    _add_gait_flags(p)
    p.set_defaults(func=cmd_displacement_field)

    p = sub.add_parser("serve", help="run the live steering session service")
    p.add_argument("--model", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8710)
    p.add_argument("--rate", type=float, default=0.5, help="phase per wall-clock second")
    p.add_argument("--samples", type=int, default=512)
    _add_gait_flags(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
