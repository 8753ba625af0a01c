"""Bisimilarity of higher-dimensional automata.

Two pointed HDAs are bisimilar when some face-closed relation contains the
pair of initial cubes and satisfies the forth and back clauses: every upward
extension on one side is matched by an extension on the other side in the
same direction ``k`` (and with the same label word, in labeled mode).  The
union of such relations is again one, so there is a greatest witness; it is
computed here as a greatest fixed point by round-synchronous removal.  The
round in which a pair is removed is its rank, and the recorded violating move
of each removed pair yields a winning challenge strategy.

A second, independent decision route enumerates candidate witness subsets
exhaustively; it is deliberately kept free of the fixed-point machinery so the
two can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Cube, Hda, Morphism, product_id, reachable, validate_morphism
from .errors import InputError, PreconditionError, ResourceError
from .labels import Labeling
from .paths import CubePath, validate_path
from .unfolding import TruncatedUnfolding, unfold

__all__ = [
    "Move",
    "PairRelation",
    "BisimResult",
    "Span",
    "hd_bisim",
    "exhaustive_bisim_oracle",
    "is_open",
    "lift_cube_path",
    "witness_span",
    "homotopy_bisim_check",
    "extension_answers",
    "lift_labeling",
]

ORACLE_MASK_CAP = 24


@dataclass(frozen=True)
class Move:
    """A game move: extend one side upward, or retreat both sides to a face.

    ``extend``: on ``side`` ("A" or "B"), go up into ``target`` which has the
    current cube as lower face in direction ``k``.  ``retreat``: replace the
    current pair by its faces ``d(k, nu)`` on both sides at once.
    """

    kind: str
    side: str | None = None
    k: int | None = None
    target: str | None = None
    nu: int | None = None

    def __repr__(self):
        if self.kind == "extend":
            return f"extend({self.side},{self.k},{self.target})"
        return f"retreat({self.k},{self.nu})"


@dataclass
class PairRelation:
    """The pair universe of a fixed-point run, with removal ranks.

    ``pairs`` lists every equal-dimension (or equal-word) pair in a fixed
    deterministic order; ``rank`` maps removed pairs to their removal round,
    starting at 1.  Pairs absent from ``rank`` survive.
    """

    pairs: list[tuple[str, str]]
    rank: dict[tuple[str, str], int]

    def survivors(self) -> set[tuple[str, str]]:
        return {p for p in self.pairs if p not in self.rank}

    def alive(self, pair: tuple[str, str]) -> bool:
        return pair in self._universe and pair not in self.rank

    def __post_init__(self):
        self._universe = set(self.pairs)


@dataclass
class BisimResult:
    """Outcome of a bisimilarity check.

    ``strategy`` records, for every removed pair, the violating move found in
    its removal round; following it from any removed pair wins the game for
    the challenger, with the rank strictly decreasing along the way.
    """

    bisimilar: bool
    relation: PairRelation
    strategy: dict[tuple[str, str], Move]
    x: Hda
    y: Hda
    labeled: bool
    x_labels: Labeling | None = None
    y_labels: Labeling | None = None


def _word_fn(h: Hda, labels: Labeling | None, labeled: bool, side: str):
    if not labeled:
        return None
    if labels is None:
        raise InputError(f"labeled comparison needs a labeling for side {side}")
    if labels.hda is not h:
        raise InputError(f"labeling for side {side} belongs to a different HDA")
    return labels.word_of


def extension_answers(h: Hda, current: str, k: int, want_word=None, labels: Labeling | None = None):
    """Cubes one can extend into from ``current`` in direction ``k``.

    With ``want_word`` given, only extensions carrying that label word count
    (their labeling must be supplied).  Results are in file order.
    """
    out = []
    for d in h.cofaces(current, k):
        if want_word is not None and labels.word_of(d) != want_word:
            continue
        out.append(d)
    return out


def _universe(x, y, labeled, wx, wy):
    pairs = []
    for a in x.ids():
        for b in y.ids():
            if labeled:
                if wx(a) == wy(b):
                    pairs.append((a, b))
            elif x.dim(a) == y.dim(b):
                pairs.append((a, b))
    return pairs


def hd_bisim(
    x: Hda,
    y: Hda,
    labeled: bool = False,
    x_labels: Labeling | None = None,
    y_labels: Labeling | None = None,
) -> BisimResult:
    """Greatest face-closed forth-and-back relation; bisimilar iff it keeps
    the initial pair.

    Starts from all equal-dimension pairs (equal-word pairs in labeled mode)
    and removes, round by round, every pair with a removed face pair or an
    unanswerable extension on either side.  Removal is synchronous per round,
    so ranks are well-defined.
    """
    wx = _word_fn(x, x_labels, labeled, "A")
    wy = _word_fn(y, y_labels, labeled, "B")
    pairs = _universe(x, y, labeled, wx, wy)
    alive = set(pairs)
    rank: dict[tuple[str, str], int] = {}
    strategy: dict[tuple[str, str], Move] = {}

    def violation(a, b):
        for k in range(1, x.dim(a) + 1):
            for nu in (0, 1):
                if (x.face(a, k, nu), y.face(b, k, nu)) not in alive:
                    return Move("retreat", k=k, nu=nu)
        for k in range(1, x.max_dim() + 1):
            for c in x.cofaces(a, k):
                want = wx(c) if labeled else None
                if not any(
                    (c, d) in alive
                    for d in extension_answers(y, b, k, want, y_labels)
                ):
                    return Move("extend", side="A", k=k, target=c)
        for k in range(1, y.max_dim() + 1):
            for d in y.cofaces(b, k):
                want = wy(d) if labeled else None
                if not any(
                    (c, d) in alive
                    for c in extension_answers(x, a, k, want, x_labels)
                ):
                    return Move("extend", side="B", k=k, target=d)
        return None

    rnd = 0
    while True:
        rnd += 1
        doomed = []
        for pair in pairs:
            if pair not in alive:
                continue
            move = violation(*pair)
            if move is not None:
                doomed.append((pair, move))
        if not doomed:
            break
        for pair, move in doomed:
            rank[pair] = rnd
            strategy[pair] = move
            alive.discard(pair)

    initial = (x.initial, y.initial)
    relation = PairRelation(pairs, rank)
    return BisimResult(
        bisimilar=initial in alive,
        relation=relation,
        strategy=strategy,
        x=x,
        y=y,
        labeled=labeled,
        x_labels=x_labels,
        y_labels=y_labels,
    )


def exhaustive_bisim_oracle(
    x: Hda,
    y: Hda,
    labeled: bool = False,
    x_labels: Labeling | None = None,
    y_labels: Labeling | None = None,
    bound: int = 30,
) -> bool:
    """Decide bisimilarity by enumerating candidate witness subsets.

    Independent of :func:`hd_bisim`: candidate relations containing the
    initial pair are checked directly against face-closure and the forth and
    back clauses.  Only pairs in the closure of the initial pair under
    simultaneous extensions and faces can occur in a minimal witness, so
    enumeration is restricted to them.  The product of the total cube counts
    must stay within ``bound``, and the closure within a hard cap, otherwise
    a :class:`~hdakit.errors.ResourceError` is raised.
    """
    if len(x) * len(y) > bound:
        raise ResourceError(
            f"exhaustive search needs |X| * |Y| <= {bound}, got {len(x)} * {len(y)}"
        )
    wx = _word_fn(x, x_labels, labeled, "A")
    wy = _word_fn(y, y_labels, labeled, "B")

    def compatible(a, b):
        return (wx(a) == wy(b)) if labeled else (x.dim(a) == y.dim(b))

    initial = (x.initial, y.initial)
    if not compatible(*initial):
        return False
    relevant = [initial]
    seen = {initial}
    queue = [initial]
    while queue:
        a, b = queue.pop()
        nxt = []
        for k in range(1, x.dim(a) + 1):
            for nu in (0, 1):
                nxt.append((x.face(a, k, nu), y.face(b, k, nu)))
        for k in range(1, x.max_dim() + 1):
            for c in x.cofaces(a, k):
                for d in y.cofaces(b, k):
                    if compatible(c, d):
                        nxt.append((c, d))
        for pair in nxt:
            if pair not in seen:
                seen.add(pair)
                relevant.append(pair)
                queue.append(pair)
    if len(relevant) > ORACLE_MASK_CAP:
        raise ResourceError(
            f"candidate subset space has {len(relevant)} pairs, cap is {ORACLE_MASK_CAP}"
        )

    index = {pair: i for i, pair in enumerate(relevant)}
    face_masks = []
    challenge_masks = []
    for a, b in relevant:
        fmask = 0
        for k in range(1, x.dim(a) + 1):
            for nu in (0, 1):
                fmask |= 1 << index[(x.face(a, k, nu), y.face(b, k, nu))]
        challenges = []
        for k in range(1, x.max_dim() + 1):
            for c in x.cofaces(a, k):
                amask = 0
                for d in y.cofaces(b, k):
                    if compatible(c, d):
                        amask |= 1 << index[(c, d)]
                challenges.append(amask)
        for k in range(1, y.max_dim() + 1):
            for d in y.cofaces(b, k):
                amask = 0
                for c in x.cofaces(a, k):
                    if compatible(c, d):
                        amask |= 1 << index[(c, d)]
                challenges.append(amask)
        face_masks.append(fmask)
        challenge_masks.append(challenges)

    n = len(relevant)
    for half in range(1 << (n - 1)):
        mask = (half << 1) | 1
        good = True
        rest = mask
        while rest and good:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if face_masks[i] & mask != face_masks[i]:
                good = False
                break
            for amask in challenge_masks[i]:
                if amask & mask == 0:
                    good = False
                    break
        if good:
            return True
    return False


def is_open(f: Morphism) -> bool:
    """Whether a pointed morphism lifts upward extensions from every
    reachable cube.

    For each reachable ``x1`` and each extension ``f(x1) -> y2`` in direction
    ``k`` on the target side there must be an extension ``x1 -> x2`` with
    ``f(x2) = y2``.  The morphism itself must be valid and pointed.
    """
    problems = validate_morphism(f, pointed=True)
    if problems:
        raise InputError("is_open needs a valid pointed morphism: " + "; ".join(problems))
    src: Hda = f.source
    tgt: Hda = f.target
    for x1 in sorted(reachable(src), key=src.order):
        fx = f(x1)
        for k in range(1, tgt.max_dim() + 1):
            for y2 in tgt.cofaces(fx, k):
                if not any(f(x2) == y2 for x2 in src.cofaces(x1, k)):
                    return False
    return True


def lift_cube_path(f: Morphism, start: str, target_path: CubePath) -> CubePath:
    """Lift a path on the target side to one on the source side.

    ``target_path`` must start at ``f(start)``.  Up steps are lifted by
    searching the extensions of the current source cube (first match in file
    order); down steps are forced by taking the same upper face.  Raises when
    no lift exists, which cannot happen along maps passing :func:`is_open`.
    """
    src = f.source
    tgt = f.target
    if f(start) != target_path.cubes[0]:
        raise InputError(
            f"path starts at {target_path.cubes[0]!r} but f({start!r}) = {f(start)!r}"
        )
    lifted = [start]
    for step, y2 in zip(target_path.steps, target_path.cubes[1:]):
        x1 = lifted[-1]
        if step.kind == "up":
            cands = [x2 for x2 in src.cofaces(x1, step.k) if f(x2) == y2]
            if not cands:
                raise InputError(
                    f"no lift of extension {f(x1)!r} -> {y2!r} in direction {step.k} "
                    f"above {x1!r}"
                )
            lifted.append(cands[0])
        else:
            x2 = src.face(x1, step.k, 1)
            if f(x2) != y2:
                raise InputError(
                    f"face mismatch while lifting: f({x2!r}) = {f(x2)!r}, expected {y2!r}"
                )
            lifted.append(x2)
    return validate_path(src, lifted)


@dataclass
class Span:
    """A witness relation as an HDA with its two projections."""

    relation: Hda
    left: Morphism
    right: Morphism


def witness_span(
    x: Hda,
    y: Hda,
    labeled: bool = False,
    x_labels: Labeling | None = None,
    y_labels: Labeling | None = None,
    result: BisimResult | None = None,
) -> Span:
    """The surviving relation of :func:`hd_bisim` as a span over both HDAs.

    The relation is the face-closed sub-HDA of the product spanned by the
    surviving pairs, pointed at the initial pair; both projections are open
    maps.  Requires the pair to be bisimilar.
    """
    if result is None:
        result = hd_bisim(x, y, labeled, x_labels, y_labels)
    if not result.bisimilar:
        raise PreconditionError("witness_span needs a bisimilar pair")
    survivors = result.relation.survivors()
    cubes = []
    for a, b in result.relation.pairs:
        if (a, b) not in survivors:
            continue
        n = x.dim(a)
        d0 = tuple(product_id(x.face(a, k, 0), y.face(b, k, 0)) for k in range(1, n + 1))
        d1 = tuple(product_id(x.face(a, k, 1), y.face(b, k, 1)) for k in range(1, n + 1))
        cubes.append(Cube(product_id(a, b), n, d0, d1))
    relation = Hda(cubes, product_id(x.initial, y.initial))
    pairs_in = [p for p in result.relation.pairs if p in survivors]
    left = Morphism(relation, x, {product_id(a, b): a for a, b in pairs_in})
    right = Morphism(relation, y, {product_id(a, b): b for a, b in pairs_in})
    return Span(relation, left, right)


def lift_labeling(u: TruncatedUnfolding, labels: Labeling) -> Labeling:
    """Carry a labeling of the source over to the non-truncated unfolding part."""
    if labels.hda is not u.source:
        raise InputError("labeling belongs to a different HDA than the unfolding source")
    words = {nid: labels.word_of(u.projection(nid)) for nid in u.hda.ids()}
    return Labeling(u.hda, words)


def homotopy_bisim_check(
    x: Hda,
    y: Hda,
    depth: int,
    labeled: bool = False,
    x_labels: Labeling | None = None,
    y_labels: Labeling | None = None,
) -> bool:
    """Compare the two HDAs through their unfoldings at the given depth.

    Both are unfolded, labels are carried over, and the non-truncated parts
    are compared with :func:`hd_bisim`.  When the depth covers all pointed
    paths of both sides, this agrees with comparing the HDAs directly.
    """
    ux = unfold(x, depth)
    uy = unfold(y, depth)
    lx = lift_labeling(ux, x_labels) if labeled else None
    ly = lift_labeling(uy, y_labels) if labeled else None
    return hd_bisim(ux.hda, uy.hda, labeled, lx, ly).bisimilar
