// Pose trail with distance decimation: slow gaits must not flood memory,
// so points are kept only after the robot has moved a minimum distance.

export interface TrailPoint {
  x: number;
  y: number;
}

export class Trail {
  readonly points: TrailPoint[] = [];

  constructor(
    private minDistance = 0.02,
    private capacity = 5000,
  ) {}

  push(x: number, y: number): void {
    const last = this.points[this.points.length - 1];
    if (last) {
      const d = Math.hypot(x - last.x, y - last.y);
      if (d < this.minDistance) return;
    }
    this.points.push({ x, y });
    if (this.points.length > this.capacity) {
      this.points.splice(0, this.points.length - this.capacity);
    }
  }

  clear(): void {
    this.points.length = 0;
  }
}
