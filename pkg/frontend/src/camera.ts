// Follow camera: world coordinates (body lengths) to canvas pixels, easing
// toward the robot so it stays in view without hard snapping.

export class FollowCamera {
  cx = 0;
  cy = 0;
  scale = 42; // pixels per world unit

  constructor(private smoothing = 0.08) {}

  follow(x: number, y: number): void {
    this.cx += (x - this.cx) * this.smoothing;
    this.cy += (y - this.cy) * this.smoothing;
  }

  jumpTo(x: number, y: number): void {
    this.cx = x;
    this.cy = y;
  }

  worldToScreen(
    x: number,
    y: number,
    width: number,
    height: number,
  ): [number, number] {
    // +y world is up on screen
    return [
      width / 2 + (x - this.cx) * this.scale,
      height / 2 - (y - this.cy) * this.scale,
    ];
  }
}
