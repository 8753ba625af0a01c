/** Page glue: owns the single game session for this tab, keeps the last
 * fetched legal-move list, and redraws the whole board from scratch after
 * every server round trip.  All rendering goes through the pure view model,
 * and only moves present in the latest fetched list can be submitted.
 */

import { GameClient } from "./client.js";
import { renderView } from "./render.js";
import { buildView, clickable, type BoardView } from "./viewstate.js";
import type { HdaDocument, Move, Role } from "./types.js";

interface Session {
  client: GameClient;
  gameId: string;
  docA: HdaDocument;
  docB: HdaDocument;
}

let session: Session | null = null;
let lastError: string | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

function readDocument(id: string, label: string): HdaDocument {
  const raw = el<HTMLTextAreaElement>(id).value;
  let parsed: unknown;
  try {
    parsed = JSON.parse(raw);
  } catch {
    throw new Error(`${label}: not valid JSON`);
  }
  if (typeof parsed !== "object" || parsed === null || Array.isArray(parsed)) {
    throw new Error(`${label}: expected a JSON object`);
  }
  return parsed as HdaDocument;
}

function showFatal(message: string): void {
  el<HTMLDivElement>("board").innerHTML =
    `<div class="banner">${message.replace(/</g, "&lt;")}</div>`;
}

async function redraw(): Promise<void> {
  if (session === null) return;
  const { client, gameId, docA, docB } = session;
  const state = await client.state(gameId);
  const moves =
    state.position.status === "running" ? (await client.moves(gameId)).moves : [];
  const view = buildView(
    docA,
    docB,
    state.position,
    moves,
    state.history,
    lastError,
  );
  paint(view, moves);
}

function paint(view: BoardView, legalMoves: Move[]): void {
  const board = el<HTMLDivElement>("board");
  board.innerHTML = renderView(view);
  for (const button of board.querySelectorAll<HTMLButtonElement>("button.move")) {
    button.addEventListener("click", () => {
      const key = button.dataset["key"];
      if (key === undefined) return;
      const move = clickable(view, key);
      if (move === null) return; // not an offered move: ignore the click
      void submit(move, legalMoves);
    });
  }
}

async function submit(move: Move, legalMoves: Move[]): Promise<void> {
  if (session === null) return;
  // Defense in depth: the button list is already built from the fetched
  // legal moves, but never let anything else reach the server.
  if (!legalMoves.some((m) => JSON.stringify(m) === JSON.stringify(move))) {
    return;
  }
  lastError = null;
  try {
    await session.client.move(session.gameId, move);
  } catch (err) {
    lastError = err instanceof Error ? err.message : String(err);
  }
  await redraw();
}

async function startGame(): Promise<void> {
  lastError = null;
  try {
    const base = el<HTMLInputElement>("server-url").value.trim();
    const role = el<HTMLSelectElement>("role").value as Role;
    const labeled = el<HTMLInputElement>("labeled").checked;
    const roundLimit = Number(el<HTMLInputElement>("round-limit").value);
    const docA = readDocument("doc-a", "automaton A");
    const docB = readDocument("doc-b", "automaton B");

    const client = new GameClient(base);
    if (session !== null) {
      // one session per tab: drop the previous game before starting anew
      await session.client.drop(session.gameId).catch(() => undefined);
    }
    const created = await client.newGame(docA, docB, role, labeled, roundLimit);
    session = { client, gameId: created.gameId, docA, docB };
    await redraw();
  } catch (err) {
    showFatal(err instanceof Error ? err.message : String(err));
  }
}

export function init(): void {
  el<HTMLButtonElement>("start").addEventListener("click", () => {
    void startGame();
  });
}

init();
