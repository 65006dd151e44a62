"""Live steering sessions: advance a two-beat gait cycle by cycle, latch
operator inputs at stance boundaries, and stream state to clients.

The Session core is synchronous and phase-domain, so a recorded message log
with phase timestamps replays to bit-identical trajectories; wall-clock
pacing is layered on top by the server and never enters the math.
"""
from __future__ import annotations

import asyncio
import contextlib
import json
import math
from collections import deque
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

import numpy as np
from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from . import se2
from .gait import ControlInputs, TwoBeatGaitSpec, _StanceRun, _run_stance, turning_radius
from .model import ModelSpec, model_to_dict
from .se2 import IDENTITY, SE2Element
from .shapefield import DEFAULT_FLOW_STEP, SingularShape

TWO_PI = 2.0 * math.pi


@dataclass
class SessionConfig:
    model: ModelSpec
    gait: TwoBeatGaitSpec
    samples_per_phase: int = 512
    history_size: int = 256
    rate: float = 0.5               # phase per wall-clock second; 0 pauses
    broadcast_decimation: int = 2   # pacer ticks per broadcast
    flow_step: float = DEFAULT_FLOW_STEP


@dataclass
class CycleRecord:
    cycle: int
    z: SE2Element
    turning_radius: float | None


class Session:
    """Single-owner simulation session; all mutation through step()/handle()."""

    def __init__(self, config: SessionConfig, g0: SE2Element = IDENTITY):
        self.config = config
        self.gait = config.gait
        self.n = config.model.n_legs
        self.rate = float(config.rate)
        self.pending: dict[str, ControlInputs] = {
            "u13": config.gait.first.inputs,
            "u24": config.gait.second.inputs,
        }
        self.latched: dict[str, ControlInputs] = dict(self.pending)
        self.history: deque[CycleRecord] = deque(maxlen=config.history_size)
        self.fault: str | None = None
        self._g0 = g0
        self._reset_state()

    # -- state machine -------------------------------------------------------

    def _reset_state(self) -> None:
        self.pose = self._g0
        self.tau = 0.0
        self.cycle = 0
        self.fault = None
        self._half = 0          # 0: first pair stancing, 1: second pair
        self._k = 0             # completed substeps within the half
        self._cycle_start = self.pose
        self._half_start = self.pose
        # previous stance of the off pair doubles as its swing return path
        self.latched["u13"] = self.pending["u13"]
        run1 = self._build(self.gait.first.with_inputs(self.latched["u13"]))
        run2 = self._build(self.gait.second.with_inputs(self.latched["u24"]))
        self._active: _StanceRun | None = run1
        self._swing: _StanceRun | None = run2

    def _build(self, spec) -> _StanceRun | None:
        try:
            return _run_stance(spec, self.config.samples_per_phase, self.config.flow_step)
        except SingularShape as e:
            self.fault = str(e)
            return None

    @property
    def _n_steps(self) -> int:
        return self.config.samples_per_phase

    def step(self, dtau: float) -> None:
        """Advance the session by a phase increment (deterministic).

        Cycle statistics are recorded the moment tau reaches 2*pi; pending
        inputs latch lazily, at the first advance past a stance boundary, so
        messages delivered while parked on a boundary still apply to the
        stance about to begin.
        """
        if dtau <= 0.0 or self.fault:
            return
        target = self.tau + dtau
        h = math.pi / self._n_steps
        while not self.fault:
            if self._k == self._n_steps:
                boundary = math.pi * (self._half + 1)
                if target <= boundary + 1e-12:
                    return  # parked on the boundary; latch on the next advance
                wrapped = self._half == 1
                self._cross_boundary()
                if wrapped and not self.fault:
                    target -= TWO_PI
                continue
            next_tau = math.pi * self._half + (self._k + 1) * h
            if next_tau > target + 1e-12:
                break
            self._k += 1
            self.pose = se2.compose(self._half_start, self._active.rel_poses[self._k])
            self.tau = next_tau
            if self._k == self._n_steps and self._half == 1:
                self._record_cycle()
        if not self.fault:
            self.tau = max(self.tau, min(target, TWO_PI))

    def _record_cycle(self) -> None:
        z = se2.compose(se2.inverse(self._cycle_start), self.pose)
        self.history.append(
            CycleRecord(cycle=self.cycle, z=z, turning_radius=turning_radius(z))
        )
        self.cycle += 1

    def _cross_boundary(self) -> None:
        if self._half == 0:
            # tau = pi: second pair latches and begins its stance
            self.latched["u24"] = self.pending["u24"]
            nxt = self._build(self.gait.second.with_inputs(self.latched["u24"]))
            if nxt is None:
                return
            self._swing, self._active = self._active, nxt
            self._half = 1
            self._k = 0
            self._half_start = self.pose
        else:
            # tau = 2*pi: first pair latches for the next cycle
            self.latched["u13"] = self.pending["u13"]
            nxt = self._build(self.gait.first.with_inputs(self.latched["u13"]))
            if nxt is None:
                return
            self._swing, self._active = self._active, nxt
            self._half = 0
            self._k = 0
            self.tau = 0.0
            self._cycle_start = self.pose
            self._half_start = self.pose

    # -- views ----------------------------------------------------------------

    def shape(self):
        """Full shape vector and contact vector at the current substep."""
        alpha = np.zeros(self.n)
        beta = np.zeros(self.n, dtype=bool)
        if self._active is None or self._swing is None:
            return alpha, beta
        stance_spec = self.gait.first if self._half == 0 else self.gait.second
        swing_spec = self.gait.second if self._half == 0 else self.gait.first
        sp = stance_spec.subspace.leg_pair
        wp = swing_spec.subspace.leg_pair
        a_st = self._active.stance_shape(self._k)
        a_sw = self._swing.swing_shape(self._k)
        alpha[sp[0]], alpha[sp[1]] = a_st
        alpha[wp[0]], alpha[wp[1]] = a_sw
        beta[list(sp)] = True
        return alpha, beta

    def snapshot(self) -> dict:
        alpha, beta = self.shape()
        last = self.history[-1] if self.history else None
        return {
            "type": "state",
            "tau": float(self.tau),
            "pose": [float(self.pose.x), float(self.pose.y), float(self.pose.theta)],
            "alpha": [float(a) for a in alpha],
            "beta": [bool(b) for b in beta],
            "latched": {k: [v.u1, v.u2] for k, v in self.latched.items()},
            "pending": {k: [v.u1, v.u2] for k, v in self.pending.items()},
            "cycle": self.cycle,
            "last_z": list(last.z.as_tuple()) if last else None,
            "turning_radius": last.turning_radius if last else None,
            "rate": self.rate,
            "fault": self.fault,
        }

    def history_json(self) -> list[dict]:
        return [
            {
                "cycle": rec.cycle,
                "z": list(rec.z.as_tuple()),
                "turning_radius": rec.turning_radius,
            }
            for rec in self.history
        ]

    # -- message protocol ------------------------------------------------------

    def handle(self, msg) -> dict:
        """Apply one client message; malformed input leaves the session as is."""
        if not isinstance(msg, dict) or "type" not in msg:
            return {"type": "error", "message": "message must be an object with a 'type'"}
        kind = msg["type"]
        try:
            if kind == "set_inputs":
                pending = dict(self.pending)
                for key in ("u13", "u24"):
                    if key in msg:
                        u = msg[key]
                        if not (isinstance(u, (list, tuple)) and len(u) == 2):
                            raise ValueError(f"{key} must be [u1, u2]")
                        pending[key] = ControlInputs(float(u[0]), float(u[1]))
                self.pending = pending
                return self.snapshot()
            if kind == "set_rate":
                rate = float(msg["phase_per_sec"])
                if not (math.isfinite(rate) and rate >= 0.0):
                    raise ValueError("phase_per_sec must be finite and >= 0")
                self.rate = rate
                return self.snapshot()
            if kind == "reset":
                self.history.clear()
                self._reset_state()
                return self.snapshot()
            if kind == "snapshot":
                return self.snapshot()
            if kind == "advance":
                dtau = float(msg["dtau"])
                if not (math.isfinite(dtau) and dtau > 0.0):
                    raise ValueError("dtau must be finite and > 0")
                self.step(dtau)
                return self.snapshot()
        except (KeyError, TypeError, ValueError) as e:
            return {"type": "error", "message": str(e)}
        return {"type": "error", "message": f"unknown message type {kind!r}"}


def replay(
    config: SessionConfig,
    events: Iterable[tuple[float, dict]],
    total_phase: float,
    g0: SE2Element = IDENTITY,
) -> Session:
    """Re-run a phase-stamped message log; deterministic by construction."""
    session = Session(config, g0=g0)
    t = 0.0
    for when, msg in sorted(events, key=lambda e: e[0]):
        if when > t:
            session.step(when - t)
            t = when
        session.handle(msg)
    if total_phase > t:
        session.step(total_phase - t)
    return session


def protocol_schema() -> dict:
    """The published JSON schema of the wire protocol."""
    text = resources.files("strata.data").joinpath("protocol.schema.json").read_text("utf-8")
    return json.loads(text)


def create_app(config: SessionConfig) -> FastAPI:
    """FastAPI app exposing the session over WebSocket + HTTP."""
    session = Session(config)
    clients: list = []
    lock = asyncio.Lock()

    @contextlib.asynccontextmanager
    async def lifespan(app):
        task = asyncio.create_task(_pacer())
        try:
            yield
        finally:
            task.cancel()
            with contextlib.suppress(asyncio.CancelledError):
                await task

    app = FastAPI(title="strata steering service", lifespan=lifespan)
    app.state.session = session

    async def _broadcast(state: dict) -> None:
        for ws in list(clients):
            try:
                await ws.send_json(state)
            except Exception:
                with contextlib.suppress(ValueError):
                    clients.remove(ws)

    async def _pacer() -> None:
        dt = 1.0 / 30.0
        tick = 0
        while True:
            await asyncio.sleep(dt)
            if session.rate > 0.0 and not session.fault:
                async with lock:
                    session.step(session.rate * dt)
                tick += 1
                if tick % max(1, config.broadcast_decimation) == 0:
                    await _broadcast(session.snapshot())

    @app.get("/model")
    async def get_model():
        return model_to_dict(config.model)

    @app.get("/history")
    async def get_history():
        return session.history_json()

    @app.get("/protocol")
    async def get_protocol():
        return protocol_schema()

    @app.websocket("/ws")
    async def ws_endpoint(ws: WebSocket):
        await ws.accept()
        clients.append(ws)
        await ws.send_json(session.snapshot())
        try:
            while True:
                try:
                    msg = await ws.receive_json()
                except json.JSONDecodeError:
                    await ws.send_json({"type": "error", "message": "invalid JSON"})
                    continue
                async with lock:
                    reply = session.handle(msg)
                if reply.get("type") == "error" or msg.get("type") == "snapshot":
                    await ws.send_json(reply)
                else:
                    await _broadcast(session.snapshot())
        except WebSocketDisconnect:
            with contextlib.suppress(ValueError):
                clients.remove(ws)

    return app
