// Pure input-mode mappings from ergonomic widgets to raw (u1, u2) pairs per
// subgait. These never touch simulation state; the server owns all dynamics.

export interface InputVector {
  u13: [number, number];
  u24: [number, number];
}

/** Forward-speed mode: equal scaling gains, no sliding. */
export function speedMode(s: number): InputVector {
  return { u13: [s, 0], u24: [s, 0] };
}

/** Course mode: scaling gains on a circle of radius a at dial angle delta. */
export function courseMode(a: number, delta: number): InputVector {
  return { u13: [a * Math.cos(delta), 0], u24: [a * Math.sin(delta), 0] };
}

/** Steer mode: antisymmetric sliding around fixed scaling gains. */
export function steerMode(c: number, scale = 1): InputVector {
  return { u13: [scale, c], u24: [scale, -c] };
}

/** Raw mode: the four sliders straight through. */
export function rawMode(
  u13: [number, number],
  u24: [number, number],
): InputVector {
  return { u13: [u13[0], u13[1]], u24: [u24[0], u24[1]] };
}

function clamp(v: number): number {
  return Math.max(-1, Math.min(1, v));
}

/**
 * Widget values are kept inside [-1, 1] unless the override toggle is on;
 * out-of-range inputs are meaningful to the server but flagged in the UI.
 */
export function clampInputs(v: InputVector, allowOverride: boolean): InputVector {
  if (allowOverride) {
    return { u13: [v.u13[0], v.u13[1]], u24: [v.u24[0], v.u24[1]] };
  }
  return {
    u13: [clamp(v.u13[0]), clamp(v.u13[1])],
    u24: [clamp(v.u24[0]), clamp(v.u24[1])],
  };
}

export function isOutOfRange(v: InputVector): boolean {
  return [...v.u13, ...v.u24].some((x) => Math.abs(x) > 1);
}
