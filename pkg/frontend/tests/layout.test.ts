import { describe, expect, it } from "vitest";
import { circlePositions, midpoint, trimSegment } from "../src/layout";

describe("circlePositions", () => {
  it("is deterministic", () => {
    expect(circlePositions(5, 160, 140, 100)).toEqual(circlePositions(5, 160, 140, 100));
  });

  it("starts at 12 o'clock", () => {
    const [first] = circlePositions(4, 100, 100, 50);
    expect(first).toEqual({ x: 100, y: 50 });
  });

  it("keeps every point on the circle", () => {
    for (const p of circlePositions(7, 0, 0, 80)) {
      expect(Math.hypot(p.x, p.y)).toBeCloseTo(80, 1);
    }
  });

  it("places distinct points for distinct indices", () => {
    const pts = circlePositions(9, 0, 0, 80).map((p) => `${p.x},${p.y}`);
    expect(new Set(pts).size).toBe(9);
  });
});

describe("trimSegment", () => {
  it("shortens both ends along the segment", () => {
    const [a, b] = trimSegment({ x: 0, y: 0 }, { x: 10, y: 0 }, 2);
    expect(a).toEqual({ x: 2, y: 0 });
    expect(b).toEqual({ x: 8, y: 0 });
  });
});

describe("midpoint", () => {
  it("averages coordinates", () => {
    expect(midpoint({ x: 0, y: 4 }, { x: 6, y: 0 })).toEqual({ x: 3, y: 2 });
  });
});
