"""Interactive bisimulation game between two pointed HDAs.

The game is played on a configuration, a pair of cubes of equal dimension
(equal label word in labeled mode).  The spoiler moves by extending one side
upward into a co-face (``extend``) or by stepping both sides down to the same
face (``retreat``); an extend must be answered by the duplicator with an
extend on the other side in the same direction, carrying the same label word
when labeled.  An unanswerable extend wins the game for the spoiler; the
spoiler running out of moves, or the round limit, wins it for the duplicator.

One side is played by a human (through :func:`apply_move`), the other by the
engine, which consults a precomputed fixed-point run: as duplicator it
answers inside the surviving relation when possible and otherwise picks the
answer of maximal rank; as spoiler it plays the violating move recorded for
the current pair, so from a pair of rank ``r`` it wins within ``r`` of its
moves against any play.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bisim import BisimResult, Move, extension_answers, hd_bisim
from .core import Hda
from .errors import InputError, MoveError, StateError
from .labels import Labeling

__all__ = [
    "Game",
    "new_game",
    "legal_moves",
    "apply_move",
    "engine_answer",
    "move_to_wire",
    "move_from_wire",
    "RUNNING",
    "SPOILER_WON",
    "DUPLICATOR_WON",
]

RUNNING = "running"
SPOILER_WON = "spoiler_won"
DUPLICATOR_WON = "duplicator_won"
ROLES = ("spoiler", "duplicator")


@dataclass
class Game:
    """Full game state; mutate only through :func:`apply_move`."""

    result: BisimResult
    human_role: str
    round_limit: int
    pair: tuple[str, str]
    status: str = RUNNING
    history: list[Move] = field(default_factory=list)
    pending: Move | None = None
    rounds: int = 0

    @property
    def x(self) -> Hda:
        return self.result.x

    @property
    def y(self) -> Hda:
        return self.result.y

    @property
    def to_move(self) -> str | None:
        """The role that moves next, or None when the game is over."""
        if self.status != RUNNING:
            return None
        return "duplicator" if self.pending is not None else "spoiler"


def new_game(
    x: Hda,
    y: Hda,
    human_role: str = "spoiler",
    labeled: bool = False,
    x_labels: Labeling | None = None,
    y_labels: Labeling | None = None,
    round_limit: int = 64,
    result: BisimResult | None = None,
) -> Game:
    """Start a game at the pair of initial cubes.

    The fixed point is computed here (or reuse a ``result`` from
    :func:`~hdakit.bisim.hd_bisim` on the same automata).  When the human
    plays duplicator, the engine opens immediately, so the returned game
    already carries the first challenge (or is even decided).
    """
    if human_role not in ROLES:
        raise InputError(f"human role must be one of {ROLES}, got {human_role!r}")
    if not isinstance(round_limit, int) or round_limit < 1:
        raise InputError(f"round limit must be a positive integer, got {round_limit!r}")
    if result is None:
        result = hd_bisim(x, y, labeled, x_labels, y_labels)
    elif result.x is not x or result.y is not y:
        raise InputError("the precomputed result belongs to different automata")
    game = Game(result, human_role, round_limit, (x.initial, y.initial))
    if not _compatible(game, game.pair):
        # A start pair outside the universe is an immediately lost position.
        game.status = SPOILER_WON
        return game
    _settle(game)
    _run_engine(game)
    return game


def _compatible(game: Game, pair) -> bool:
    r = game.result
    if r.labeled:
        return r.x_labels.word_of(pair[0]) == r.y_labels.word_of(pair[1])
    return r.x.dim(pair[0]) == r.y.dim(pair[1])


def _answers(game: Game, challenge: Move) -> list[Move]:
    """Legal duplicator answers to an extend challenge, in file order."""
    r = game.result
    if challenge.side == "A":
        h, labels, cur, side = r.y, r.y_labels, game.pair[1], "B"
        want = r.x_labels.word_of(challenge.target) if r.labeled else None
    else:
        h, labels, cur, side = r.x, r.x_labels, game.pair[0], "A"
        want = r.y_labels.word_of(challenge.target) if r.labeled else None
    return [
        Move("extend", side=side, k=challenge.k, target=d)
        for d in extension_answers(h, cur, challenge.k, want, labels)
    ]


def legal_moves(game: Game) -> list[Move]:
    """All moves available to whoever is to move; deterministic order.

    Spoiler: extends on side A then B (direction ascending, targets in file
    order), then retreats (direction ascending, lower before upper face).
    Duplicator: the answers to the pending challenge.
    """
    if game.status != RUNNING:
        raise StateError(f"game is over ({game.status}), no moves available")
    if game.pending is not None:
        return _answers(game, game.pending)
    a, b = game.pair
    x, y = game.x, game.y
    moves = []
    for side, h, cur in (("A", x, a), ("B", y, b)):
        for k in range(1, h.max_dim() + 1):
            for target in h.cofaces(cur, k):
                moves.append(Move("extend", side=side, k=k, target=target))
    for k in range(1, x.dim(a) + 1):
        for nu in (0, 1):
            moves.append(Move("retreat", k=k, nu=nu))
    return moves


def _settle(game: Game) -> None:
    """Decide positions that need no further play: the round limit and a
    spoiler without legal moves both hand the game to the duplicator."""
    if game.status != RUNNING or game.pending is not None:
        return
    if game.rounds >= game.round_limit or not legal_moves(game):
        game.status = DUPLICATOR_WON


def _apply(game: Game, move: Move) -> None:
    """Apply one legal move for whoever is to move."""
    if game.pending is None:
        game.history.append(move)
        game.rounds += 1
        if move.kind == "retreat":
            a, b = game.pair
            game.pair = (
                game.x.face(a, move.k, move.nu),
                game.y.face(b, move.k, move.nu),
            )
            _settle(game)
        else:
            game.pending = move
            if not _answers(game, move):
                game.status = SPOILER_WON
                game.pending = None
    else:
        challenge = game.pending
        game.history.append(move)
        game.pending = None
        if challenge.side == "A":
            game.pair = (challenge.target, move.target)
        else:
            game.pair = (move.target, challenge.target)
        _settle(game)


def engine_answer(game: Game) -> Move:
    """The engine's answer to the pending challenge.

    Prefers answers that keep the pair inside the surviving relation (first
    in file order); otherwise the answer of maximal rank, i.e. the one that
    survives the longest against optimal play.
    """
    if game.pending is None:
        raise StateError("no challenge is pending")
    options = _answers(game, game.pending)
    if not options:
        raise StateError("the pending challenge has no answers")
    rank = game.result.relation.rank

    def pair_of(ans: Move) -> tuple[str, str]:
        if game.pending.side == "A":
            return (game.pending.target, ans.target)
        return (ans.target, game.pending.target)

    surviving = [m for m in options if pair_of(m) not in rank]
    if surviving:
        return surviving[0]
    return max(options, key=lambda m: rank[pair_of(m)])


def _engine_challenge(game: Game) -> Move | None:
    """The engine's spoiler move: the recorded violation, else the first
    legal move, else None when stuck."""
    recorded = game.result.strategy.get(game.pair)
    if recorded is not None:
        return recorded
    moves = legal_moves(game)
    return moves[0] if moves else None


def _run_engine(game: Game) -> Move | None:
    """Let the engine move while it is its turn; returns its last move."""
    last = None
    while game.status == RUNNING and game.to_move != game.human_role:
        if game.to_move == "duplicator":
            last = engine_answer(game)
            _apply(game, last)
        else:
            challenge = _engine_challenge(game)
            if challenge is None:
                game.status = DUPLICATOR_WON
                break
            last = challenge
            _apply(game, challenge)
    return last


def apply_move(game: Game, move: Move) -> Move | None:
    """Apply the human's move; the engine then plays until it is the human's
    turn again (or the game ends).  Returns the engine's final reply move.

    Errors: :class:`~hdakit.errors.StateError` on a finished game,
    :class:`~hdakit.errors.MoveError` (carrying the legal alternatives) on an
    illegal move.
    """
    legal = legal_moves(game)
    if move not in legal:
        raise MoveError(f"illegal move {move!r}", legal)
    _apply(game, move)
    return _run_engine(game)


def move_to_wire(move: Move) -> dict:
    """The JSON object for a move."""
    if move.kind == "extend":
        return {"kind": "extend", "side": move.side, "k": move.k, "target": move.target}
    return {"kind": "retreat", "k": move.k, "nu": move.nu}


def move_from_wire(data) -> Move:
    """Parse a JSON move object; malformed input raises
    :class:`~hdakit.errors.InputError`."""
    if not isinstance(data, dict):
        raise InputError("a move must be a JSON object")
    kind = data.get("kind")
    if kind == "extend":
        expected = {"kind", "side", "k", "target"}
        side, k, target = data.get("side"), data.get("k"), data.get("target")
        if set(data) != expected or side not in ("A", "B") \
                or not isinstance(k, int) or isinstance(k, bool) or k < 1 \
                or not isinstance(target, str):
            raise InputError(
                'an extend move is {"kind":"extend","side":"A"|"B","k":int,"target":id}'
            )
        return Move("extend", side=side, k=k, target=target)
    if kind == "retreat":
        expected = {"kind", "k", "nu"}
        k, nu = data.get("k"), data.get("nu")
        if set(data) != expected or not isinstance(k, int) or isinstance(k, bool) \
                or k < 1 or nu not in (0, 1) or isinstance(nu, bool):
            raise InputError('a retreat move is {"kind":"retreat","k":int,"nu":0|1}')
        return Move("retreat", k=k, nu=nu)
    raise InputError(f"unknown move kind {kind!r}; use 'extend' or 'retreat'")
