/** Wire types shared with the game server, plus move helpers. */

export interface WireCube {
  id: string;
  dim: number;
  d0: string[];
  d1: string[];
  pos?: number[];
}

export interface HdaDocument {
  cubes: WireCube[];
  initial: string;
  labels?: Record<string, string>;
}

export type Side = "A" | "B";

export interface ExtendMove {
  kind: "extend";
  side: Side;
  k: number;
  target: string;
}

export interface RetreatMove {
  kind: "retreat";
  k: number;
  nu: 0 | 1;
}

export type Move = ExtendMove | RetreatMove;

export type Status = "running" | "spoiler_won" | "duplicator_won";
export type Role = "spoiler" | "duplicator";

export interface Position {
  pair: [string, string];
  status: Status;
  toMove: Role | null;
  pendingChallenge: Move | null;
  rounds: number;
  roundLimit: number;
  humanRole: Role;
}

export interface NewGameResponse {
  gameId: string;
  position: Position;
}

export interface StateResponse {
  position: Position;
  status: Status;
  history: Move[];
}

export interface MovesResponse {
  moves: Move[];
}

export interface MoveResponse {
  engineReply: Move | null;
  position: Position;
  status: Status;
}

/** Canonical key for comparing moves structurally. */
export function moveKey(m: Move): string {
  return m.kind === "extend"
    ? `extend:${m.side}:${m.k}:${m.target}`
    : `retreat:${m.k}:${m.nu}`;
}

export function sameMove(a: Move, b: Move): boolean {
  return moveKey(a) === moveKey(b);
}

/** Short human-readable form used in the move list and the history log. */
export function describeMove(m: Move): string {
  return m.kind === "extend"
    ? `extend ${m.side} k=${m.k} → ${m.target}`
    : `retreat k=${m.k} ν=${m.nu}`;
}
