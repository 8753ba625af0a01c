/** Thin fetch wrapper around the game server's JSON API. */

import type {
  HdaDocument,
  Move,
  MoveResponse,
  MovesResponse,
  NewGameResponse,
  Role,
  StateResponse,
} from "./types.js";

/** A non-2xx response; carries the server's legal alternatives when given. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly legalMoves: Move[] = [],
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseBody(res: Response): Promise<unknown> {
  const text = await res.text();
  if (!text) return null;
  try {
    return JSON.parse(text);
  } catch {
    return { error: text };
  }
}

export class GameClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const res = await fetch(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data = (await parseBody(res)) as Record<string, unknown> | null;
    if (!res.ok) {
      const message =
        data && typeof data.error === "string"
          ? data.error
          : `request failed with status ${res.status}`;
      const legal = data && Array.isArray(data.legalMoves)
        ? (data.legalMoves as Move[])
        : [];
      throw new ApiError(res.status, message, legal);
    }
    return data as T;
  }

  newGame(
    hdaA: HdaDocument,
    hdaB: HdaDocument,
    role: Role,
    labeled: boolean,
    roundLimit?: number,
  ): Promise<NewGameResponse> {
    const body: Record<string, unknown> = { hdaA, hdaB, role, labeled };
    if (roundLimit !== undefined) body.roundLimit = roundLimit;
    return this.request("POST", "/game/new", body);
  }

  state(gameId: string): Promise<StateResponse> {
    return this.request("GET", `/game/${gameId}`);
  }

  moves(gameId: string): Promise<MovesResponse> {
    return this.request("GET", `/game/${gameId}/moves`);
  }

  move(gameId: string, move: Move): Promise<MoveResponse> {
    return this.request("POST", `/game/${gameId}/move`, { move });
  }

  async drop(gameId: string): Promise<void> {
    await this.request("DELETE", `/game/${gameId}`);
  }
}
