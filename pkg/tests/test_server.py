"""The HTTP game server, exercised through an in-process test client."""

from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

import hdakit as hk
from hdakit.server import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


@pytest.fixture(scope="session")
def doc_json(docs):
    """Bundled documents as plain JSON objects, keyed by name."""
    return {name: json.loads(hk.serialize(doc)) for name, doc in docs.items()}


def new_game(client, doc_json, left, right, **overrides):
    body = {
        "hdaA": doc_json[left],
        "hdaB": doc_json[right],
        "role": "spoiler",
        "labeled": True,
    }
    body.update(overrides)
    return client.post("/game/new", json=body)


WINGS_SCRIPT = [
    {"kind": "extend", "side": "A", "k": 1, "target": "y16"},
    {"kind": "extend", "side": "A", "k": 1, "target": "z5"},
    {"kind": "retreat", "k": 2, "nu": 0},
    {"kind": "extend", "side": "B", "k": 2, "target": "z3"},
]


def test_new_game_reports_the_starting_position(client, doc_json):
    res = new_game(client, doc_json, "wings_left", "wings_right")
    assert res.status_code == 200
    data = res.json()
    assert data["gameId"].startswith("g")
    pos = data["position"]
    assert pos["pair"] == ["x0", "x0"]
    assert pos["status"] == "running"
    assert pos["toMove"] == "spoiler"
    assert pos["pendingChallenge"] is None
    assert pos["rounds"] == 0
    assert pos["roundLimit"] == 64
    assert pos["humanRole"] == "spoiler"


def test_wings_script_over_http(client, doc_json):
    gid = new_game(client, doc_json, "wings_left", "wings_right").json()["gameId"]

    replies = []
    for move in WINGS_SCRIPT:
        res = client.post(f"/game/{gid}/move", json={"move": move})
        assert res.status_code == 200
        replies.append(res.json()["engineReply"])
    assert replies[0] == {"kind": "extend", "side": "B", "k": 1, "target": "y10"}
    assert replies[1] == {"kind": "extend", "side": "B", "k": 1, "target": "z4"}
    assert replies[2] is None
    assert replies[3] is None
    assert res.json()["status"] == "spoiler_won"
    pos = res.json()["position"]
    assert pos["toMove"] is None and pos["rounds"] == 4

    state = client.get(f"/game/{gid}").json()
    assert state["status"] == "spoiler_won"
    assert len(state["history"]) == 6
    assert client.get(f"/game/{gid}/moves").json() == {"moves": []}


def test_moves_endpoint_matches_the_game_rules(client, doc_json):
    gid = new_game(client, doc_json, "wings_left", "wings_right").json()["gameId"]
    moves = client.get(f"/game/{gid}/moves").json()["moves"]
    assert moves, "the spoiler can move at the start"
    assert all(m["kind"] in ("extend", "retreat") for m in moves)
    assert {"kind": "extend", "side": "A", "k": 1, "target": "y16"} in moves


def test_illegal_move_gets_400_with_the_alternatives(client, doc_json):
    gid = new_game(client, doc_json, "wings_left", "wings_right").json()["gameId"]
    legal = client.get(f"/game/{gid}/moves").json()["moves"]
    res = client.post(
        f"/game/{gid}/move",
        json={"move": {"kind": "extend", "side": "A", "k": 1, "target": "nope"}},
    )
    assert res.status_code == 400
    assert res.json()["legalMoves"] == legal
    assert "error" in res.json()


def test_malformed_move_gets_400(client, doc_json):
    gid = new_game(client, doc_json, "wings_left", "wings_right").json()["gameId"]
    legal = client.get(f"/game/{gid}/moves").json()["moves"]
    for body in ({}, {"move": {"kind": "leap"}}, {"move": {"kind": "retreat", "k": 1, "nu": True}}):
        res = client.post(f"/game/{gid}/move", json=body)
        assert res.status_code == 400
        assert res.json()["legalMoves"] == legal


def test_moves_after_the_end_get_400_with_no_alternatives(client, doc_json):
    gid = new_game(client, doc_json, "wings_left", "wings_right").json()["gameId"]
    for move in WINGS_SCRIPT:
        client.post(f"/game/{gid}/move", json={"move": move})
    res = client.post(f"/game/{gid}/move", json={"move": WINGS_SCRIPT[0]})
    assert res.status_code == 400
    assert res.json()["legalMoves"] == []


def test_new_game_validation_errors(client, doc_json):
    ok = {"hdaA": doc_json["wings_left"], "hdaB": doc_json["wings_right"]}

    assert client.post("/game/new", json=ok).status_code == 400, "role is required"
    assert new_game(client, doc_json, "wings_left", "wings_right",
                    role="referee").status_code == 400
    assert new_game(client, doc_json, "wings_left", "wings_right",
                    labeled="yes").status_code == 400
    assert new_game(client, doc_json, "wings_left", "wings_right",
                    roundLimit=0).status_code == 400
    assert new_game(client, doc_json, "wings_left", "wings_right",
                    roundLimit=True).status_code == 400

    unlabeled = dict(doc_json["wings_left"])
    unlabeled.pop("labels", None)
    res = client.post("/game/new", json={
        "hdaA": unlabeled, "hdaB": doc_json["wings_right"],
        "role": "spoiler", "labeled": True,
    })
    assert res.status_code == 400 and "labels" in res.json()["error"]

    res = client.post("/game/new", json={
        "hdaA": {"cubes": []}, "hdaB": doc_json["wings_right"], "role": "spoiler",
    })
    assert res.status_code == 400

    res = client.post("/game/new", json={"hdaB": doc_json["wings_right"], "role": "spoiler"})
    assert res.status_code == 400 and "hdaA" in res.json()["error"]


def test_unknown_games_get_404(client):
    assert client.get("/game/g999").status_code == 404
    assert client.get("/game/g999/moves").status_code == 404
    assert client.post(
        "/game/g999/move", json={"move": WINGS_SCRIPT[0]}
    ).status_code == 404
    assert client.delete("/game/g999").status_code == 404


def test_delete_removes_the_session(client, doc_json):
    gid = new_game(client, doc_json, "wings_left", "wings_right").json()["gameId"]
    assert client.delete(f"/game/{gid}").status_code == 204
    assert client.get(f"/game/{gid}").status_code == 404
    assert client.delete(f"/game/{gid}").status_code == 404


def test_duplicator_role_sees_the_engine_challenge(client, doc_json):
    res = new_game(client, doc_json, "wings_left", "wings_right", role="duplicator")
    gid, pos = res.json()["gameId"], res.json()["position"]
    assert pos["humanRole"] == "duplicator"
    assert pos["toMove"] == "duplicator"
    assert pos["pendingChallenge"]["kind"] == "extend"

    status = pos["status"]
    rounds = 0
    while status == "running":
        moves = client.get(f"/game/{gid}/moves").json()["moves"]
        assert moves and all(m["kind"] == "extend" for m in moves)
        res = client.post(f"/game/{gid}/move", json={"move": moves[0]})
        assert res.status_code == 200
        status = res.json()["status"]
        rounds = res.json()["position"]["rounds"]
    assert status == "spoiler_won"
    assert rounds <= 4, "the engine wins within the removal rank of the start"


def test_sessions_are_independent(client, doc_json):
    g1 = new_game(client, doc_json, "wings_left", "wings_right").json()["gameId"]
    g2 = new_game(client, doc_json, "diamond_fork_left",
                  "diamond_fork_right").json()["gameId"]
    assert g1 != g2
    client.post(f"/game/{g1}/move", json={"move": WINGS_SCRIPT[0]})
    assert client.get(f"/game/{g2}").json()["position"]["rounds"] == 0
    assert client.get(f"/game/{g1}").json()["position"]["rounds"] == 1


def test_round_limit_is_enforced_over_the_wire(client, doc_json):
    res = new_game(client, doc_json, "wings_left", "wings_right", roundLimit=1)
    gid = res.json()["gameId"]
    assert res.json()["position"]["roundLimit"] == 1
    res = client.post(f"/game/{gid}/move", json={"move": WINGS_SCRIPT[0]})
    assert res.json()["status"] == "duplicator_won"


def test_unlabeled_games_are_supported(client, doc_json):
    res = new_game(client, doc_json, "cycle_two", "cycle_three", labeled=False)
    assert res.status_code == 200
    gid = res.json()["gameId"]
    moves = client.get(f"/game/{gid}/moves").json()["moves"]
    res = client.post(f"/game/{gid}/move", json={"move": moves[0]})
    assert res.status_code == 200
    assert res.json()["status"] == "running"
