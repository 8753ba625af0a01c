/** Pure 2-D layout of an HDA document for one panel.
 *
 * Vertices take their `pos` hints when present; the rest are placed on a
 * breadth-first grid from the initial vertex.  All coordinates are then
 * scaled into the panel.  Edges connect their endpoint vertices, squares
 * become shaded quadrilaterals over their four corners, and cubes of
 * dimension three or more are listed textually instead of drawn.
 */

import type { HdaDocument, WireCube } from "./types.js";

export interface VertexShape {
  id: string;
  x: number;
  y: number;
}

export interface EdgeShape {
  id: string;
  from: string;
  to: string;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  mx: number;
  my: number;
  label: string | null;
}

export interface SquareShape {
  id: string;
  corners: [string, string, string, string];
  points: Array<[number, number]>;
  cx: number;
  cy: number;
}

export interface PanelLayout {
  width: number;
  height: number;
  vertices: VertexShape[];
  edges: EdgeShape[];
  squares: SquareShape[];
  /** ids of cubes with dim >= 3, shown as text */
  higher: string[];
}

function byId(doc: HdaDocument): Map<string, WireCube> {
  return new Map(doc.cubes.map((c) => [c.id, c]));
}

function source(cubes: Map<string, WireCube>, edgeId: string): string {
  return cubes.get(edgeId)?.d0[0] ?? edgeId;
}

function target(cubes: Map<string, WireCube>, edgeId: string): string {
  return cubes.get(edgeId)?.d1[0] ?? edgeId;
}

/** Raw vertex coordinates: pos hints, else BFS layers from the initial. */
function rawVertexCoords(doc: HdaDocument): Map<string, [number, number]> {
  const cubes = byId(doc);
  const coords = new Map<string, [number, number]>();
  const vertices = doc.cubes.filter((c) => c.dim === 0);
  for (const v of vertices) {
    if (v.pos && v.pos.length >= 2) {
      coords.set(v.id, [Number(v.pos[0]), Number(v.pos[1])]);
    }
  }
  const missing = vertices.filter((v) => !coords.has(v.id));
  if (missing.length === 0) return coords;

  // layer = shortest edge distance from the initial vertex
  const adjacency = new Map<string, string[]>();
  for (const c of doc.cubes) {
    if (c.dim !== 1) continue;
    const s = source(cubes, c.id);
    adjacency.set(s, [...(adjacency.get(s) ?? []), target(cubes, c.id)]);
  }
  const layer = new Map<string, number>([[doc.initial, 0]]);
  const queue = [doc.initial];
  while (queue.length > 0) {
    const v = queue.shift()!;
    for (const w of adjacency.get(v) ?? []) {
      if (!layer.has(w)) {
        layer.set(w, layer.get(v)! + 1);
        queue.push(w);
      }
    }
  }
  const perLayer = new Map<number, number>();
  for (const v of missing) {
    const l = layer.get(v.id) ?? 0;
    const row = perLayer.get(l) ?? 0;
    perLayer.set(l, row + 1);
    coords.set(v.id, [l, row]);
  }
  return coords;
}

export function layoutPanel(
  doc: HdaDocument,
  width = 360,
  height = 300,
): PanelLayout {
  const cubes = byId(doc);
  const raw = rawVertexCoords(doc);

  const xs = [...raw.values()].map(([x]) => x);
  const ys = [...raw.values()].map(([, y]) => y);
  const minX = Math.min(0, ...xs);
  const maxX = Math.max(1, ...xs);
  const minY = Math.min(0, ...ys);
  const maxY = Math.max(1, ...ys);
  const margin = 30;
  const scale = (v: number, lo: number, hi: number, size: number) =>
    margin + ((v - lo) / Math.max(hi - lo, 1e-9)) * (size - 2 * margin);
  const place = ([x, y]: [number, number]): [number, number] => [
    scale(x, minX, maxX, width),
    scale(y, minY, maxY, height),
  ];

  const at = new Map<string, [number, number]>();
  for (const [id, xy] of raw) at.set(id, place(xy));
  const point = (id: string): [number, number] => at.get(id) ?? [margin, margin];

  const vertices: VertexShape[] = doc.cubes
    .filter((c) => c.dim === 0)
    .map((c) => ({ id: c.id, x: point(c.id)[0], y: point(c.id)[1] }));

  const edges: EdgeShape[] = doc.cubes
    .filter((c) => c.dim === 1)
    .map((c) => {
      const from = source(cubes, c.id);
      const to = target(cubes, c.id);
      const [x1, y1] = point(from);
      const [x2, y2] = point(to);
      return {
        id: c.id,
        from,
        to,
        x1,
        y1,
        x2,
        y2,
        mx: (x1 + x2) / 2,
        my: (y1 + y2) / 2,
        label: doc.labels?.[c.id] ?? null,
      };
    });

  const squares: SquareShape[] = doc.cubes
    .filter((c) => c.dim === 2)
    .map((c) => {
      // perimeter order: base corner, along one lower edge, the far corner,
      // back along the other lower edge
      const [low1, low2] = [c.d0[0]!, c.d0[1]!];
      const up1 = c.d1[0]!;
      const corners: [string, string, string, string] = [
        source(cubes, low1),
        target(cubes, low2),
        target(cubes, up1),
        target(cubes, low1),
      ];
      const points = corners.map(point);
      const cx = points.reduce((a, [x]) => a + x, 0) / 4;
      const cy = points.reduce((a, [, y]) => a + y, 0) / 4;
      return { id: c.id, corners, points, cx, cy };
    });

  const higher = doc.cubes.filter((c) => c.dim >= 3).map((c) => c.id);

  return { width, height, vertices, edges, squares, higher };
}

/** Every cube id the layout accounts for, in document order. */
export function renderedIds(layout: PanelLayout): string[] {
  return [
    ...layout.vertices.map((v) => v.id),
    ...layout.edges.map((e) => e.id),
    ...layout.squares.map((s) => s.id),
    ...layout.higher,
  ];
}
