// Top-down scene rendering: grid, trail, body rectangle, legs with stance
// feet filled, and a heading arrow. All geometry comes from the model file
// served at /model plus the latest state message.

import { FollowCamera } from "./camera.js";
import { ModelInfo, StateMessage } from "./protocol.js";
import { TrailPoint } from "./trail.js";

export interface Scene {
  state: StateMessage | null;
  model: ModelInfo | null;
  trail: TrailPoint[];
  camera: FollowCamera;
}

function rot(theta: number, x: number, y: number): [number, number] {
  const c = Math.cos(theta);
  const s = Math.sin(theta);
  return [c * x - s * y, s * x + c * y];
}

export function renderScene(
  ctx: CanvasRenderingContext2D,
  width: number,
  height: number,
  scene: Scene,
): void {
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = "#10141a";
  ctx.fillRect(0, 0, width, height);

  if (!scene.state || !scene.model) {
    ctx.fillStyle = "#8899aa";
    ctx.font = "16px system-ui, sans-serif";
    ctx.textAlign = "center";
    ctx.fillText("waiting for server state...", width / 2, height / 2);
    return;
  }

  const cam = scene.camera;
  const [bx, by, bth] = scene.state.pose;
  cam.follow(bx, by);
  const w2s = (x: number, y: number) => cam.worldToScreen(x, y, width, height);

  drawGrid(ctx, width, height, cam);
  drawTrail(ctx, scene.trail, w2s);
  drawRobot(ctx, scene.model, scene.state, bx, by, bth, w2s);

  if (scene.state.fault) {
    ctx.fillStyle = "#ff6b6b";
    ctx.font = "14px system-ui, sans-serif";
    ctx.textAlign = "center";
    ctx.fillText(`session paused: ${scene.state.fault}`, width / 2, 24);
  }
}

function drawGrid(
  ctx: CanvasRenderingContext2D,
  width: number,
  height: number,
  cam: FollowCamera,
): void {
  const span = 1.0; // world units between grid lines
  const left = cam.cx - width / 2 / cam.scale;
  const right = cam.cx + width / 2 / cam.scale;
  const bottom = cam.cy - height / 2 / cam.scale;
  const top = cam.cy + height / 2 / cam.scale;
  ctx.strokeStyle = "#1d2633";
  ctx.lineWidth = 1;
  ctx.beginPath();
  for (let x = Math.floor(left / span) * span; x <= right; x += span) {
    const [sx] = cam.worldToScreen(x, 0, width, height);
    ctx.moveTo(sx, 0);
    ctx.lineTo(sx, height);
  }
  for (let y = Math.floor(bottom / span) * span; y <= top; y += span) {
    const [, sy] = cam.worldToScreen(0, y, width, height);
    ctx.moveTo(0, sy);
    ctx.lineTo(width, sy);
  }
  ctx.stroke();
}

function drawTrail(
  ctx: CanvasRenderingContext2D,
  trail: TrailPoint[],
  w2s: (x: number, y: number) => [number, number],
): void {
  if (trail.length < 2) return;
  ctx.strokeStyle = "#3aa5ff";
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  const [x0, y0] = w2s(trail[0].x, trail[0].y);
  ctx.moveTo(x0, y0);
  for (let i = 1; i < trail.length; i++) {
    const [sx, sy] = w2s(trail[i].x, trail[i].y);
    ctx.lineTo(sx, sy);
  }
  ctx.stroke();
}

function drawRobot(
  ctx: CanvasRenderingContext2D,
  model: ModelInfo,
  state: StateMessage,
  bx: number,
  by: number,
  bth: number,
  w2s: (x: number, y: number) => [number, number],
): void {
  const toWorld = (px: number, py: number): [number, number] => {
    const [rx, ry] = rot(bth, px, py);
    return [bx + rx, by + ry];
  };

  // body rectangle: hips set the width, body_length the longitudinal extent
  const halfW = Math.max(...model.legs.map((l) => Math.abs(l.hip.x)));
  const halfL = model.body_length
    ? model.body_length / 2
    : Math.max(...model.legs.map((l) => Math.abs(l.hip.y))) + 1;
  const corners: [number, number][] = [
    [halfW, halfL],
    [-halfW, halfL],
    [-halfW, -halfL],
    [halfW, -halfL],
  ];
  ctx.fillStyle = "rgba(120, 144, 176, 0.25)";
  ctx.strokeStyle = "#a8b8cc";
  ctx.lineWidth = 2;
  ctx.beginPath();
  corners.forEach(([px, py], i) => {
    const [sx, sy] = w2s(...toWorld(px, py));
    if (i === 0) ctx.moveTo(sx, sy);
    else ctx.lineTo(sx, sy);
  });
  ctx.closePath();
  ctx.fill();
  ctx.stroke();

  // legs and feet: stance feet filled, swing feet hollow
  model.legs.forEach((leg, i) => {
    const alpha = state.alpha[i] ?? 0;
    const hip = toWorld(leg.hip.x, leg.hip.y);
    const [fx, fy] = rot(leg.hip.theta + alpha, leg.length, 0);
    const foot = toWorld(leg.hip.x + fx, leg.hip.y + fy);
    const stance = state.beta[i] ?? false;
    ctx.strokeStyle = stance ? "#ffd166" : "#667788";
    ctx.lineWidth = 3;
    ctx.beginPath();
    ctx.moveTo(...w2s(...hip));
    ctx.lineTo(...w2s(...foot));
    ctx.stroke();
    const [sx, sy] = w2s(...foot);
    ctx.beginPath();
    ctx.arc(sx, sy, 5, 0, 2 * Math.PI);
    if (stance) {
      ctx.fillStyle = "#ffd166";
      ctx.fill();
    } else {
      ctx.strokeStyle = "#99aabb";
      ctx.lineWidth = 1.5;
      ctx.stroke();
    }
  });

  // heading arrow along the longitudinal (+y) body axis
  const tail = w2s(...toWorld(0, 0));
  const tip = w2s(...toWorld(0, halfL + 0.6));
  const angle = Math.atan2(tip[1] - tail[1], tip[0] - tail[0]);
  ctx.strokeStyle = "#6ee7a0";
  ctx.fillStyle = "#6ee7a0";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(...tail);
  ctx.lineTo(...tip);
  ctx.stroke();
  ctx.beginPath();
  ctx.moveTo(...tip);
  ctx.lineTo(tip[0] - 9 * Math.cos(angle - 0.4), tip[1] - 9 * Math.sin(angle - 0.4));
  ctx.lineTo(tip[0] - 9 * Math.cos(angle + 0.4), tip[1] - 9 * Math.sin(angle + 0.4));
  ctx.closePath();
  ctx.fill();
}
