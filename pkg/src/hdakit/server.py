"""HTTP interface for the bisimulation game.

Endpoints (JSON bodies, exact field names):

    POST   /game/new    {hdaA, hdaB, role, labeled, roundLimit} -> {gameId, position}
    GET    /game/{id}                 -> {position, status, history}
    GET    /game/{id}/moves           -> {moves}
    POST   /game/{id}/move   {move}   -> {engineReply, position, status}
    DELETE /game/{id}                 -> 204

``hdaA``/``hdaB`` are documents in the ``.hda`` JSON format; ``role`` is the
side the caller plays ("spoiler" or "duplicator"); ``roundLimit`` (default
64) caps the number of spoiler moves.  Moves are encoded as
``{"kind":"extend","side":"A"|"B","k":int,"target":id}`` or
``{"kind":"retreat","k":int,"nu":0|1}``.  An illegal or malformed move gets
a 400 with ``{error, legalMoves}``; unknown game ids get a 404.

A ``position`` object carries ``pair`` ([cube in A, cube in B]), ``status``,
``toMove``, ``pendingChallenge`` (the unanswered extend, if any), ``rounds``,
``roundLimit`` and ``humanRole``.  Sessions live in process memory; requests
to one session are serialized, distinct sessions are independent.
"""

from __future__ import annotations

import itertools
import json
import threading

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .docio import parse_hda
from .errors import HdaError, InputError, MoveError, ResourceError, StateError
from .game import (
    Game,
    RUNNING,
    apply_move,
    legal_moves,
    move_from_wire,
    move_to_wire,
    new_game,
)

__all__ = ["create_app", "position_wire"]


def position_wire(game: Game) -> dict:
    """The JSON object for the current configuration."""
    return {
        "pair": list(game.pair),
        "status": game.status,
        "toMove": game.to_move,
        "pendingChallenge": move_to_wire(game.pending) if game.pending else None,
        "rounds": game.rounds,
        "roundLimit": game.round_limit,
        "humanRole": game.human_role,
    }


def _moves_wire(game: Game) -> list[dict]:
    if game.status != RUNNING:
        return []
    return [move_to_wire(m) for m in legal_moves(game)]


def _bad_request(message: str, legal: list[dict] | None = None) -> JSONResponse:
    body: dict = {"error": message}
    if legal is not None:
        body["legalMoves"] = legal
    return JSONResponse(status_code=400, content=body)


def _parse_document(body: dict, key: str):
    if key not in body:
        raise InputError(f"missing key {key!r}")
    return parse_hda(json.dumps(body[key]))


def create_app() -> FastAPI:
    """A fresh application with its own in-memory session store."""
    app = FastAPI(title="hdakit bisimulation game server")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    games: dict[str, Game] = {}
    locks: dict[str, threading.Lock] = {}
    registry_lock = threading.Lock()
    ids = itertools.count(1)

    def _get(game_id: str) -> Game | None:
        with registry_lock:
            return games.get(game_id)

    @app.post("/game/new")
    def game_new(body: dict):
        try:
            doca = _parse_document(body, "hdaA")
            docb = _parse_document(body, "hdaB")
            role = body.get("role")
            if role not in ("spoiler", "duplicator"):
                raise InputError("'role' must be \"spoiler\" or \"duplicator\"")
            labeled = body.get("labeled", False)
            if not isinstance(labeled, bool):
                raise InputError("'labeled' must be a boolean")
            limit = body.get("roundLimit", 64)
            if not isinstance(limit, int) or isinstance(limit, bool) or limit < 1:
                raise InputError("'roundLimit' must be a positive integer")
            if labeled and (doca.labels is None or docb.labels is None):
                raise InputError("a labeled game needs labels on both documents")
            game = new_game(
                doca.to_hda(),
                docb.to_hda(),
                human_role=role,
                labeled=labeled,
                x_labels=doca.labeling() if labeled else None,
                y_labels=docb.labeling() if labeled else None,
                round_limit=limit,
            )
        except ResourceError as exc:
            return JSONResponse(status_code=422, content={"error": str(exc)})
        except HdaError as exc:
            return _bad_request(str(exc))
        game_id = f"g{next(ids)}"
        with registry_lock:
            games[game_id] = game
            locks[game_id] = threading.Lock()
        return {"gameId": game_id, "position": position_wire(game)}

    @app.get("/game/{game_id}")
    def game_get(game_id: str):
        game = _get(game_id)
        if game is None:
            return JSONResponse(status_code=404, content={"error": "no such game"})
        with locks[game_id]:
            return {
                "position": position_wire(game),
                "status": game.status,
                "history": [move_to_wire(m) for m in game.history],
            }

    @app.get("/game/{game_id}/moves")
    def game_moves(game_id: str):
        game = _get(game_id)
        if game is None:
            return JSONResponse(status_code=404, content={"error": "no such game"})
        with locks[game_id]:
            return {"moves": _moves_wire(game)}

    @app.post("/game/{game_id}/move")
    def game_move(game_id: str, body: dict):
        game = _get(game_id)
        if game is None:
            return JSONResponse(status_code=404, content={"error": "no such game"})
        with locks[game_id]:
            try:
                move = move_from_wire(body.get("move"))
                reply = apply_move(game, move)
            except StateError as exc:
                return _bad_request(str(exc), [])
            except MoveError as exc:
                return _bad_request(str(exc), [move_to_wire(m) for m in exc.legal_moves])
            except InputError as exc:
                return _bad_request(str(exc), _moves_wire(game))
            return {
                "engineReply": move_to_wire(reply) if reply is not None else None,
                "position": position_wire(game),
                "status": game.status,
            }

    @app.delete("/game/{game_id}")
    def game_delete(game_id: str):
        with registry_lock:
            if game_id not in games:
                return JSONResponse(status_code=404, content={"error": "no such game"})
            del games[game_id]
            del locks[game_id]
        return Response(status_code=204)

    return app
