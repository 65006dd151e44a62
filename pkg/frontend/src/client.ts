// WebSocket client for the steering service: keeps the latest server state,
// throttles input sends to at most 30 messages per second, and queues the
// newest desired inputs while disconnected (marked stale until delivered).

import { InputVector } from "./mappings.js";
import { parseServerMessage, StateMessage } from "./protocol.js";

export type Status = "disconnected" | "connecting" | "connected";

const MIN_SEND_INTERVAL_MS = 1000 / 30;

export class ConsoleClient {
  status: Status = "disconnected";
  lastState: StateMessage | null = null;
  lastError: string | null = null;
  queuedStale = false;

  onState: ((st: StateMessage) => void) | null = null;
  onStatus: ((s: Status) => void) | null = null;

  private ws: WebSocket | null = null;
  private lastSendMs = 0;
  private pendingInputs: InputVector | null = null;
  private sendTimer: ReturnType<typeof setTimeout> | null = null;

  connect(url: string): void {
    this.disconnect();
    this.setStatus("connecting");
    const ws = new WebSocket(url);
    this.ws = ws;
    ws.onopen = () => {
      this.setStatus("connected");
      // deliver anything queued while offline
      if (this.pendingInputs) {
        this.queuedStale = false;
        this.flushInputs();
      }
    };
    ws.onmessage = (ev: MessageEvent) => {
      const msg = parseServerMessage(String(ev.data));
      if (!msg) return;
      if (msg.type === "error") {
        this.lastError = msg.message;
        return;
      }
      this.lastState = msg;
      this.onState?.(msg);
    };
    ws.onclose = () => this.setStatus("disconnected");
    ws.onerror = () => {
      this.lastError = "websocket error";
      this.setStatus("disconnected");
    };
  }

  disconnect(): void {
    if (this.sendTimer) {
      clearTimeout(this.sendTimer);
      this.sendTimer = null;
    }
    this.ws?.close();
    this.ws = null;
    this.setStatus("disconnected");
  }

  /** Queue the newest inputs; actual sends are rate limited. */
  sendInputs(v: InputVector): void {
    this.pendingInputs = v;
    if (this.status !== "connected") {
      this.queuedStale = true;
      return;
    }
    const now = Date.now();
    const wait = this.lastSendMs + MIN_SEND_INTERVAL_MS - now;
    if (wait <= 0) {
      this.flushInputs();
    } else if (!this.sendTimer) {
      this.sendTimer = setTimeout(() => {
        this.sendTimer = null;
        this.flushInputs();
      }, wait);
    }
  }

  private flushInputs(): void {
    if (!this.pendingInputs || this.status !== "connected" || !this.ws) return;
    const v = this.pendingInputs;
    this.pendingInputs = null;
    this.queuedStale = false;
    this.lastSendMs = Date.now();
    this.ws.send(JSON.stringify({ type: "set_inputs", u13: v.u13, u24: v.u24 }));
  }

  setRate(phasePerSec: number): void {
    this.sendRaw({ type: "set_rate", phase_per_sec: phasePerSec });
  }

  reset(): void {
    this.sendRaw({ type: "reset" });
  }

  snapshot(): void {
    this.sendRaw({ type: "snapshot" });
  }

  private sendRaw(msg: object): void {
    if (this.status === "connected" && this.ws) {
      this.ws.send(JSON.stringify(msg));
    }
  }

  private setStatus(s: Status): void {
    this.status = s;
    this.onStatus?.(s);
  }
}
