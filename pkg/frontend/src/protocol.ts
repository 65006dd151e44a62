// Wire protocol of the steering service. Mirrors the JSON schema the server
// publishes at GET /protocol; the vitest suite cross-checks the two.
import { z } from "zod";

export const inputPair = z.tuple([z.number(), z.number()]);

export const setInputsMessage = z
  .object({
    type: z.literal("set_inputs"),
    u13: inputPair.optional(),
    u24: inputPair.optional(),
  })
  .strict();

export const setRateMessage = z
  .object({
    type: z.literal("set_rate"),
    phase_per_sec: z.number().min(0),
  })
  .strict();

export const resetMessage = z.object({ type: z.literal("reset") }).strict();
export const snapshotMessage = z.object({ type: z.literal("snapshot") }).strict();

export const advanceMessage = z
  .object({
    type: z.literal("advance"),
    dtau: z.number().positive(),
  })
  .strict();

export const clientMessage = z.union([
  setInputsMessage,
  setRateMessage,
  resetMessage,
  snapshotMessage,
  advanceMessage,
]);

export const pose = z.tuple([z.number(), z.number(), z.number()]);

export const inputDict = z.object({ u13: inputPair, u24: inputPair });

export const stateMessage = z.object({
  type: z.literal("state"),
  tau: z.number(),
  pose: pose,
  alpha: z.array(z.number()),
  beta: z.array(z.boolean()),
  latched: inputDict,
  pending: inputDict,
  cycle: z.number().int().nonnegative(),
  last_z: pose.nullable(),
  turning_radius: z.number().nullable(),
  rate: z.number().optional(),
  fault: z.string().nullable().optional(),
});

export const errorMessage = z.object({
  type: z.literal("error"),
  message: z.string(),
});

export const serverMessage = z.union([stateMessage, errorMessage]);

export type ClientMessage = z.infer<typeof clientMessage>;
export type StateMessage = z.infer<typeof stateMessage>;
export type ServerMessage = z.infer<typeof serverMessage>;

export interface ModelLeg {
  hip: { x: number; y: number; theta: number };
  length: number;
  swing: [number, number];
}

export interface ModelInfo {
  name: string;
  body_length: number | null;
  legs: ModelLeg[];
}

export function parseServerMessage(raw: string): ServerMessage | null {
  try {
    return serverMessage.parse(JSON.parse(raw));
  } catch {
    return null;
  }
}
