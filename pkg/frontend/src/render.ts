// SVG rendering for quivers and polygon triangulations.  Pure DOM
// construction; all interactivity is injected via callbacks.

import type { QuiverObj, TriangulationObj } from "./api";
import { circlePositions, midpoint, trimSegment, type Point } from "./layout";

const SVG_NS = "http://www.w3.org/2000/svg";
const VERTEX_RADIUS = 15;

function svgEl(
  doc: Document,
  tag: string,
  attrs: Record<string, string>,
  text?: string,
): SVGElement {
  const el = doc.createElementNS(SVG_NS, tag) as SVGElement;
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  if (text !== undefined) el.textContent = text;
  return el;
}

function clear(el: SVGElement): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

function addArrowheadDef(doc: Document, svg: SVGElement, id: string): void {
  const defs = svgEl(doc, "defs", {});
  const marker = svgEl(doc, "marker", {
    id,
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgEl(doc, "path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#333" }));
  defs.appendChild(marker);
  svg.appendChild(defs);
}

export function renderQuiver(
  svg: SVGElement,
  quiver: QuiverObj,
  onVertex: (k: number) => void,
): void {
  const doc = svg.ownerDocument;
  clear(svg);
  addArrowheadDef(doc, svg, "arrowhead");
  const n = quiver.vertices.length;
  const positions = circlePositions(n, 160, 140, 105);
  const at = new Map<string, Point>(quiver.vertices.map((v, i) => [v, positions[i]]));

  for (const [src, tgt, mult] of quiver.arrows) {
    const [a, b] = trimSegment(at.get(src)!, at.get(tgt)!, VERTEX_RADIUS + 3);
    svg.appendChild(
      svgEl(doc, "line", {
        x1: String(a.x),
        y1: String(a.y),
        x2: String(b.x),
        y2: String(b.y),
        stroke: "#333",
        "stroke-width": "1.5",
        "marker-end": "url(#arrowhead)",
        class: "arrow",
        "data-arrow": `${src}->${tgt}`,
      }),
    );
    if (String(mult) !== "1") {
      const mid = midpoint(a, b);
      svg.appendChild(
        svgEl(
          doc,
          "text",
          {
            x: String(mid.x + 6),
            y: String(mid.y - 6),
            class: "arrow-label",
            "font-size": "12",
          },
          `(${mult})`,
        ),
      );
    }
  }

  quiver.vertices.forEach((label, i) => {
    const p = positions[i];
    const group = svgEl(doc, "g", {
      class: "vertex",
      "data-vertex": String(i),
      cursor: "pointer",
    });
    group.appendChild(
      svgEl(doc, "circle", {
        cx: String(p.x),
        cy: String(p.y),
        r: String(VERTEX_RADIUS),
        fill: "#e8f0fe",
        stroke: "#1a56b0",
        "stroke-width": "1.5",
      }),
    );
    group.appendChild(
      svgEl(
        doc,
        "text",
        {
          x: String(p.x),
          y: String(p.y + 4),
          "text-anchor": "middle",
          "font-size": "11",
        },
        label,
      ),
    );
    group.addEventListener("click", () => onVertex(i));
    svg.appendChild(group);
  });
}

export function renderPolygon(
  svg: SVGElement,
  tri: TriangulationObj,
  onDiagonal: (d: [number, number]) => void,
): void {
  const doc = svg.ownerDocument;
  clear(svg);
  const positions = circlePositions(tri.m, 160, 140, 115);

  for (let i = 0; i < tri.m; i++) {
    const a = positions[i];
    const b = positions[(i + 1) % tri.m];
    svg.appendChild(
      svgEl(doc, "line", {
        x1: String(a.x),
        y1: String(a.y),
        x2: String(b.x),
        y2: String(b.y),
        stroke: "#bbb",
        "stroke-width": "1.5",
        class: "side",
      }),
    );
  }

  for (const [a, b] of tri.diagonals) {
    const line = svgEl(doc, "line", {
      x1: String(positions[a].x),
      y1: String(positions[a].y),
      x2: String(positions[b].x),
      y2: String(positions[b].y),
      stroke: "#b03030",
      "stroke-width": "2.5",
      cursor: "pointer",
      class: "diagonal",
      "data-diagonal": `${a}-${b}`,
    });
    line.addEventListener("click", () => onDiagonal([a, b]));
    svg.appendChild(line);
  }

  positions.forEach((p, i) => {
    svg.appendChild(
      svgEl(doc, "circle", {
        cx: String(p.x),
        cy: String(p.y),
        r: "4",
        fill: "#444",
      }),
    );
    svg.appendChild(
      svgEl(
        doc,
        "text",
        {
          x: String(p.x + (p.x >= 160 ? 8 : -8)),
          y: String(p.y + (p.y >= 140 ? 12 : -6)),
          "text-anchor": p.x >= 160 ? "start" : "end",
          "font-size": "11",
        },
        String(i),
      ),
    );
  });
}
