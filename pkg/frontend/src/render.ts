/** String-level rendering of the board view.  Every function here returns
 * markup text and touches no DOM, so the output can be asserted directly in
 * tests and injected with innerHTML by the page glue.
 */

import type { EdgeShape, PanelLayout, SquareShape, VertexShape } from "./layout.js";
import type { BoardView, MoveItem } from "./viewstate.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function squareSvg(s: SquareShape, highlightId: string | null): string {
  const pts = s.points.map(([x, y]) => `${x},${y}`).join(" ");
  const cls = s.id === highlightId ? "square current" : "square";
  return (
    `<polygon class="${cls}" data-id="${escapeHtml(s.id)}" points="${pts}" />` +
    `<text class="square-label" x="${s.cx}" y="${s.cy}">${escapeHtml(s.id)}</text>`
  );
}

function edgeSvg(e: EdgeShape, highlightId: string | null): string {
  const cls = e.id === highlightId ? "edge current" : "edge";
  const label = e.label ? `${e.label}` : e.id;
  return (
    `<line class="${cls}" data-id="${escapeHtml(e.id)}" x1="${e.x1}" y1="${e.y1}"` +
    ` x2="${e.x2}" y2="${e.y2}" marker-end="url(#arrow)" />` +
    `<text class="edge-label" x="${e.mx}" y="${e.my}">${escapeHtml(label)}</text>`
  );
}

function vertexSvg(v: VertexShape, highlightId: string | null): string {
  const cls = v.id === highlightId ? "vertex current" : "vertex";
  return (
    `<circle class="${cls}" data-id="${escapeHtml(v.id)}" cx="${v.x}" cy="${v.y}" r="6" />` +
    `<text class="vertex-label" x="${v.x}" y="${v.y - 10}">${escapeHtml(v.id)}</text>`
  );
}

/** One automaton as an SVG document; `highlightId` marks the current cube. */
export function renderPanelSvg(
  layout: PanelLayout,
  highlightId: string | null = null,
): string {
  const parts: string[] = [];
  parts.push(
    `<svg class="board" viewBox="0 0 ${layout.width} ${layout.height}"` +
      ` width="${layout.width}" height="${layout.height}"` +
      ` xmlns="http://www.w3.org/2000/svg">`,
  );
  parts.push(
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5"` +
      ` markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z" /></marker></defs>`,
  );
  for (const s of layout.squares) parts.push(squareSvg(s, highlightId));
  for (const e of layout.edges) parts.push(edgeSvg(e, highlightId));
  for (const v of layout.vertices) parts.push(vertexSvg(v, highlightId));
  parts.push("</svg>");
  if (layout.higher.length > 0) {
    const ids = layout.higher.map(escapeHtml).join(", ");
    parts.push(`<p class="higher-cubes">higher cubes: ${ids}</p>`);
  }
  return parts.join("");
}

function moveButton(item: MoveItem): string {
  return (
    `<button class="move" data-key="${escapeHtml(item.key)}">` +
    `${escapeHtml(item.label)}</button>`
  );
}

/** The full board: two panels, status, offered moves, history, banner. */
export function renderView(view: BoardView): string {
  const [cubeA, cubeB] = view.pair;
  const parts: string[] = [];

  if (view.banner !== null) {
    parts.push(`<div class="banner">${escapeHtml(view.banner)}</div>`);
  }

  parts.push(`<div class="panels">`);
  parts.push(
    `<section class="panel"><h2>A &mdash; at ${escapeHtml(cubeA)}</h2>` +
      renderPanelSvg(view.panelA, cubeA) +
      `</section>`,
  );
  parts.push(
    `<section class="panel"><h2>B &mdash; at ${escapeHtml(cubeB)}</h2>` +
      renderPanelSvg(view.panelB, cubeB) +
      `</section>`,
  );
  parts.push(`</div>`);

  const turn = view.toMove === null ? "game over" : `${view.toMove} to move`;
  parts.push(
    `<div class="status">status: ${escapeHtml(view.status)} &middot; ` +
      `${escapeHtml(turn)} &middot; round ${view.rounds}/${view.roundLimit} ` +
      `&middot; you are the ${escapeHtml(view.humanRole)}</div>`,
  );
  if (view.pendingText !== null) {
    parts.push(
      `<div class="pending">challenge to answer: ` +
        `${escapeHtml(view.pendingText)}</div>`,
    );
  }

  parts.push(`<div class="moves">`);
  if (view.moves.length === 0) {
    parts.push(`<span class="no-moves">no moves to offer</span>`);
  } else {
    for (const item of view.moves) parts.push(moveButton(item));
  }
  parts.push(`</div>`);

  parts.push(`<ol class="history">`);
  for (const line of view.history) {
    parts.push(`<li>${escapeHtml(line.text)}</li>`);
  }
  parts.push(`</ol>`);

  return parts.join("");
}
