/** The board view model: a pure function of the documents, the server
 * position, the legal moves, and the history.  Rendering and event wiring
 * consume this model; nothing else feeds the screen, so replaying the same
 * inputs reproduces the identical view.
 */

import { layoutPanel, type PanelLayout } from "./layout.js";
import {
  describeMove,
  moveKey,
  type HdaDocument,
  type Move,
  type Position,
} from "./types.js";

export interface MoveItem {
  move: Move;
  /** stable identity used by the click handler and the DOM */
  key: string;
  label: string;
}

export interface HistoryLine {
  index: number;
  text: string;
}

export interface BoardView {
  panelA: PanelLayout;
  panelB: PanelLayout;
  /** current configuration: [cube in A, cube in B] */
  pair: [string, string];
  status: Position["status"];
  toMove: Position["toMove"];
  humanRole: Position["humanRole"];
  pending: Move | null;
  pendingText: string | null;
  rounds: number;
  roundLimit: number;
  /** exactly the server's legal moves, in the server's order */
  moves: MoveItem[];
  history: HistoryLine[];
  /** terminal or error message, null while the game runs cleanly */
  banner: string | null;
}

function bannerFor(position: Position, error: string | null): string | null {
  if (error) return error;
  switch (position.status) {
    case "spoiler_won":
      return "spoiler wins";
    case "duplicator_won":
      return "duplicator wins";
    default:
      return null;
  }
}

/** Build the complete view model.  `legalMoves` must be the latest list
 * fetched from the server; the view offers exactly these and nothing else. */
export function buildView(
  docA: HdaDocument,
  docB: HdaDocument,
  position: Position,
  legalMoves: Move[],
  history: Move[],
  error: string | null = null,
): BoardView {
  const finished = position.status !== "running";
  return {
    panelA: layoutPanel(docA),
    panelB: layoutPanel(docB),
    pair: position.pair,
    status: position.status,
    toMove: position.toMove,
    humanRole: position.humanRole,
    pending: position.pendingChallenge,
    pendingText: position.pendingChallenge
      ? describeMove(position.pendingChallenge)
      : null,
    rounds: position.rounds,
    roundLimit: position.roundLimit,
    moves: finished
      ? []
      : legalMoves.map((m) => ({
          move: m,
          key: moveKey(m),
          label: describeMove(m),
        })),
    history: history.map((m, i) => ({ index: i + 1, text: describeMove(m) })),
    banner: bannerFor(position, error),
  };
}

/** The move behind a clicked item, or null when the click is not on an
 * offered move (stale key, finished game): such clicks are no-ops. */
export function clickable(view: BoardView, key: string): Move | null {
  const item = view.moves.find((m) => m.key === key);
  return item ? item.move : null;
}
