// Console wiring: widgets -> input mappings -> throttled sends; the render
// loop draws the latest state snapshot, fully decoupled from message
// arrival. All simulation math lives server-side.

import { FollowCamera } from "./camera.js";
import { ConsoleClient } from "./client.js";
import {
  clampInputs,
  courseMode,
  InputVector,
  isOutOfRange,
  rawMode,
  speedMode,
  steerMode,
} from "./mappings.js";
import { ModelInfo } from "./protocol.js";
import { renderScene } from "./render.js";
import { Trail } from "./trail.js";

const $ = (id: string) => document.getElementById(id) as HTMLElement;
const input = (id: string) => document.getElementById(id) as HTMLInputElement;

const client = new ConsoleClient();
const trail = new Trail(0.02, 5000);
const camera = new FollowCamera();
let model: ModelInfo | null = null;
let mode: "speed" | "course" | "steer" | "raw" = "speed";

function wsToHttp(wsUrl: string): string {
  return wsUrl.replace(/^ws/, "http").replace(/\/ws\/?$/, "");
}

async function connect(): Promise<void> {
  const url = input("server-url").value.trim();
  client.connect(url);
  try {
    const res = await fetch(`${wsToHttp(url)}/model`);
    model = (await res.json()) as ModelInfo;
  } catch {
    model = null;
  }
}

function currentInputs(): InputVector {
  let v: InputVector;
  if (mode === "speed") {
    v = speedMode(parseFloat(input("speed").value));
  } else if (mode === "course") {
    v = courseMode(parseFloat(input("course-a").value), parseFloat(input("course-delta").value));
  } else if (mode === "steer") {
    v = steerMode(parseFloat(input("steer-c").value), parseFloat(input("steer-scale").value));
  } else {
    v = rawMode(
      [parseFloat(input("raw-u13-1").value), parseFloat(input("raw-u13-2").value)],
      [parseFloat(input("raw-u24-1").value), parseFloat(input("raw-u24-2").value)],
    );
  }
  return clampInputs(v, input("override").checked);
}

function pushInputs(): void {
  const v = currentInputs();
  $("range-warning").style.display = isOutOfRange(v) ? "inline" : "none";
  $("inputs-readout").textContent =
    `u13 = [${v.u13.map((x) => x.toFixed(2)).join(", ")}]  ` +
    `u24 = [${v.u24.map((x) => x.toFixed(2)).join(", ")}]`;
  client.sendInputs(v);
}

function selectMode(next: typeof mode): void {
  mode = next;
  document.querySelectorAll<HTMLElement>(".mode-panel").forEach((el) => {
    el.style.display = el.dataset.mode === next ? "block" : "none";
  });
  document.querySelectorAll<HTMLElement>(".mode-tab").forEach((el) => {
    el.classList.toggle("active", el.dataset.mode === next);
  });
  pushInputs();
}

function fmt(v: number): string {
  return v.toFixed(3);
}

function updateReadouts(): void {
  const st = client.lastState;
  $("status-dot").className = `dot ${client.status}`;
  $("status-label").textContent =
    client.status + (client.queuedStale ? " (inputs queued, stale)" : "");
  if (!st) return;
  $("readout-cycle").textContent = String(st.cycle);
  $("readout-tau").textContent = st.tau.toFixed(2);
  $("readout-pose").textContent = st.pose.map(fmt).join(", ");
  $("readout-z").textContent = st.last_z ? st.last_z.map(fmt).join(", ") : "-";
  $("readout-radius").textContent =
    st.turning_radius === null ? "straight" : fmt(st.turning_radius);
}

function frame(): void {
  const canvas = document.getElementById("scene") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d");
  if (ctx) {
    const st = client.lastState;
    if (st) trail.push(st.pose[0], st.pose[1]);
    renderScene(ctx, canvas.width, canvas.height, {
      state: st,
      model,
      trail: trail.points,
      camera,
    });
  }
  updateReadouts();
  requestAnimationFrame(frame);
}

function init(): void {
  $("connect").addEventListener("click", () => void connect());
  $("reset").addEventListener("click", () => {
    client.reset();
    trail.clear();
  });
  input("rate").addEventListener("input", () => {
    const r = parseFloat(input("rate").value);
    $("rate-label").textContent = r.toFixed(2);
    client.setRate(r);
  });
  document.querySelectorAll<HTMLElement>(".mode-tab").forEach((el) => {
    el.addEventListener("click", () => selectMode(el.dataset.mode as typeof mode));
  });
  for (const id of [
    "speed", "course-a", "course-delta", "steer-c", "steer-scale",
    "raw-u13-1", "raw-u13-2", "raw-u24-1", "raw-u24-2", "override",
  ]) {
    input(id).addEventListener("input", pushInputs);
  }
  selectMode("speed");
  requestAnimationFrame(frame);
}

init();
