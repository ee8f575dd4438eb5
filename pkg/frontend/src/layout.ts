// Deterministic geometry.  Quiver vertices sit on a circle in label
// order; polygon vertices 0..m-1 run counterclockwise starting at the
// top.  Same input, same pixels, so renders are comparable across runs.

export type Point = { x: number; y: number };

export function circlePositions(
  count: number,
  cx: number,
  cy: number,
  radius: number,
): Point[] {
  const pts: Point[] = [];
  for (let i = 0; i < count; i++) {
    // start at 12 o'clock, proceed counterclockwise on screen
    const angle = -Math.PI / 2 - (2 * Math.PI * i) / count;
    pts.push({
      x: Math.round((cx + radius * Math.cos(angle)) * 100) / 100,
      y: Math.round((cy + radius * Math.sin(angle)) * 100) / 100,
    });
  }
  return pts;
}

// Trim an arrow so it starts and ends on the node circles, not centers.
export function trimSegment(from: Point, to: Point, margin: number): [Point, Point] {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  const ux = dx / len;
  const uy = dy / len;
  return [
    { x: from.x + ux * margin, y: from.y + uy * margin },
    { x: to.x - ux * margin, y: to.y - uy * margin },
  ];
}

export function midpoint(a: Point, b: Point): Point {
  return { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 };
}
