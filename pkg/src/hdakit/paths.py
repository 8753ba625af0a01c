"""Cube paths, adjacency, homotopy, and fan normalization.

A cube path is a sequence of cubes in which each step either goes up into a
cube that has the current one as a lower face (``Up(k)``) or comes down to an
upper face of the current cube (``Down(k)``).  Two paths of the same length
are adjacent when they differ in exactly one interior position and the
replacement is one of the four exchange shapes licensed by the precubical
identity; homotopy is the reflexive-transitive closure of adjacency.

Every path from a vertex is homotopic to a fan-shaped one: an alternating
vertex/edge prefix followed by a strictly rising tail.  The T-measure (sum of
dimensions along the path) is minimized exactly by fan-shaped paths, at
``(n^2 + m - 1) / 2`` for length ``m`` ending in dimension ``n``, and
:func:`normalize_fan` reaches that minimum by rewrites that each lower T by 2.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .core import PrecubicalSet
from .errors import (
    AmbiguousStepError,
    ConcatError,
    InputError,
    PathError,
    PreconditionError,
    ResourceError,
)

__all__ = [
    "Step",
    "CubePath",
    "HomotopyClass",
    "validate_path",
    "concat",
    "is_prefix",
    "t_measure",
    "is_fan_shaped",
    "adjacent",
    "homotopy_class",
    "homotopic",
    "normalize_fan",
    "normalize_fan_trace",
    "default_class_bound",
]


@dataclass(frozen=True)
class Step:
    """One step of a cube path: direction ``up`` or ``down`` and a face index."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in ("up", "down"):
            raise InputError(f"step kind must be 'up' or 'down', got {self.kind!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise InputError(f"step index must be a positive integer, got {self.k!r}")

    def __repr__(self):
        return f"{'Up' if self.kind == 'up' else 'Down'}({self.k})"


@dataclass(frozen=True, eq=False)
class CubePath:
    """A validated cube path in a fixed precubical set.

    Equality compares the carrier set by identity and the cube sequence by
    value.  Construct through :func:`validate_path`.
    """

    pcs: PrecubicalSet = field(repr=False)
    cubes: tuple[str, ...]
    steps: tuple[Step, ...]

    def __len__(self):
        return len(self.cubes)

    def __eq__(self, other):
        return (
            isinstance(other, CubePath)
            and self.pcs is other.pcs
            and self.cubes == other.cubes
        )

    def __hash__(self):
        return hash((id(self.pcs), self.cubes))


@dataclass(frozen=True, eq=False)
class HomotopyClass:
    """A homotopy class of cube paths: all members plus a canonical one.

    The canonical representative is the member whose cube-id sequence is
    lexicographically least when ids are compared by their file order.
    Members are stored as cube-id tuples.
    """

    pcs: PrecubicalSet = field(repr=False)
    members: frozenset[tuple[str, ...]]
    canonical: tuple[str, ...]

    def __len__(self):
        return len(self.members)

    def __contains__(self, path) -> bool:
        cubes = path.cubes if isinstance(path, CubePath) else tuple(path)
        return cubes in self.members

    def __eq__(self, other):
        return (
            isinstance(other, HomotopyClass)
            and self.pcs is other.pcs
            and self.canonical == other.canonical
        )

    def __hash__(self):
        return hash((id(self.pcs), self.canonical))

    def length(self) -> int:
        return len(self.canonical)


def validate_path(x: PrecubicalSet, cubes) -> CubePath:
    """Check a cube sequence and infer its steps; errors carry the position.

    Each step must be up or down by exactly one dimension and match exactly
    one face index; several matching indices raise
    :class:`~hdakit.errors.AmbiguousStepError`.
    """
    cubes = tuple(cubes)
    if not cubes:
        raise PathError("a cube path must contain at least one cube")
    for cid in cubes:
        x.cube(cid)
    steps = []
    for j in range(len(cubes) - 1):
        cur, nxt = cubes[j], cubes[j + 1]
        dc, dn = x.dim(cur), x.dim(nxt)
        if dn == dc + 1:
            ks = [k for k in range(1, dn + 1) if x.face(nxt, k, 0) == cur]
            kind = "up"
        elif dn == dc - 1:
            ks = [k for k in range(1, dc + 1) if x.face(cur, k, 1) == nxt]
            kind = "down"
        else:
            raise PathError(
                f"step {j + 1}: dimension must change by 1, goes {dc} -> {dn} "
                f"({cur!r} -> {nxt!r})",
                position=j + 1,
            )
        if not ks:
            raise PathError(
                f"step {j + 1}: {cur!r} -> {nxt!r} matches no {kind} face index",
                position=j + 1,
            )
        if len(ks) > 1:
            raise AmbiguousStepError(
                f"step {j + 1}: {cur!r} -> {nxt!r} matches face indices {ks}",
                position=j + 1,
            )
        steps.append(Step(kind, ks[0]))
    return CubePath(x, cubes, tuple(steps))


def concat(a: CubePath, b: CubePath) -> CubePath:
    """Concatenate two paths; the junction must itself be a valid step."""
    if a.pcs is not b.pcs:
        raise InputError("cannot concatenate paths over different precubical sets")
    try:
        return validate_path(a.pcs, a.cubes + b.cubes)
    except AmbiguousStepError:
        raise
    except PathError as exc:
        if exc.position == len(a.cubes):
            raise ConcatError(
                f"paths cannot be joined: {a.cubes[-1]!r} -> {b.cubes[0]!r} is not a step"
            ) from None
        raise


def is_prefix(a: CubePath, b: CubePath) -> bool:
    """True when ``a`` is an initial segment of ``b``; every path prefixes itself."""
    if a.pcs is not b.pcs:
        return False
    return a.cubes == b.cubes[: len(a.cubes)]


def t_measure(path: CubePath) -> int:
    """Sum of the dimensions of all cubes along the path."""
    return sum(path.pcs.dim(c) for c in path.cubes)


def is_fan_shaped(path: CubePath) -> bool:
    """Alternating vertex/edge prefix followed by a strictly rising tail.

    Length ``m`` ending in dimension ``n``: positions up to ``m - n`` hold
    vertices at odd and edges at even indices, after that the dimension is
    ``n + j - m``.  Fan-shaped paths realize the minimal T-measure
    ``(n^2 + m - 1) / 2``.
    """
    m = len(path.cubes)
    n = path.pcs.dim(path.cubes[-1])
    if m - n < 1:
        return False
    for j, cid in enumerate(path.cubes, start=1):
        if j <= m - n:
            expect = 0 if j % 2 == 1 else 1
        else:
            expect = n + j - m
        if path.pcs.dim(cid) != expect:
            return False
    return True


def _in_up_indices(x, cubes, p):
    return [k for k in range(1, x.dim(cubes[p]) + 1) if x.face(cubes[p], k, 0) == cubes[p - 1]]


def _out_up_indices(x, cubes, p):
    return [k for k in range(1, x.dim(cubes[p + 1]) + 1) if x.face(cubes[p + 1], k, 0) == cubes[p]]


def _in_down_indices(x, cubes, p):
    return [k for k in range(1, x.dim(cubes[p - 1]) + 1) if x.face(cubes[p - 1], k, 1) == cubes[p]]


def _out_down_indices(x, cubes, p):
    return [k for k in range(1, x.dim(cubes[p]) + 1) if x.face(cubes[p], k, 1) == cubes[p + 1]]


def _middle_rewrites(x: PrecubicalSet, cubes: tuple[str, ...], p: int) -> list[str]:
    """Replacement cubes for position ``p`` (0-based, interior) under adjacency.

    The four shapes are decided by the dimensions at ``p - 1, p, p + 1``; the
    replacement is computed from the precubical identity.  Exchanging the two
    up steps around an up-up position or the two down steps around a down-down
    position keeps the middle dimension; a rising-falling position can be cut
    down by 2, and a falling-rising position filled up by 2.
    """
    dl, dm, dr = (x.dim(cubes[p - 1]), x.dim(cubes[p]), x.dim(cubes[p + 1]))
    out: list[str] = []
    if dl == dm - 1 and dr == dm + 1:
        for a in _in_up_indices(x, cubes, p):
            for b in _out_up_indices(x, cubes, p):
                if a < b:
                    out.append(x.face(cubes[p + 1], a, 0))
                else:
                    out.append(x.face(cubes[p + 1], a + 1, 0))
    elif dl == dm + 1 and dr == dm - 1:
        for a in _in_down_indices(x, cubes, p):
            for b in _out_down_indices(x, cubes, p):
                if a <= b:
                    out.append(x.face(cubes[p - 1], b + 1, 1))
                else:
                    out.append(x.face(cubes[p - 1], b, 1))
    elif dl == dm - 1 and dr == dm - 1:
        if dm >= 2:
            for a in _in_up_indices(x, cubes, p):
                for b in _out_down_indices(x, cubes, p):
                    if a < b:
                        out.append(x.face(cubes[p + 1], a, 0))
                    elif a > b:
                        out.append(x.face(cubes[p - 1], b, 1))
    elif dl == dm + 1 and dr == dm + 1:
        for c in _in_down_indices(x, cubes, p):
            for d in _out_up_indices(x, cubes, p):
                if d <= c:
                    for w in x.cofaces(cubes[p - 1], d):
                        if x.face(w, c + 1, 1) == cubes[p + 1]:
                            out.append(w)
                if d >= c:
                    for w in x.cofaces(cubes[p - 1], d + 1):
                        if x.face(w, c, 1) == cubes[p + 1]:
                            out.append(w)
    result = []
    for w in out:
        if w != cubes[p] and w not in result:
            result.append(w)
    return result


def _neighbors(x: PrecubicalSet, cubes: tuple[str, ...]):
    for p in range(1, len(cubes) - 1):
        for w in _middle_rewrites(x, cubes, p):
            yield cubes[:p] + (w,) + cubes[p + 1 :]


def adjacent(a: CubePath, b: CubePath) -> bool:
    """True when the two paths differ by one licensed interior replacement."""
    if a.pcs is not b.pcs or len(a.cubes) != len(b.cubes):
        return False
    diff = [i for i in range(len(a.cubes)) if a.cubes[i] != b.cubes[i]]
    if len(diff) != 1:
        return False
    p = diff[0]
    if p == 0 or p == len(a.cubes) - 1:
        return False
    return b.cubes[p] in _middle_rewrites(a.pcs, a.cubes, p)


def default_class_bound() -> int:
    """Size cap for homotopy-class closures; override with HDA_MAX_CLASS."""
    value = os.environ.get("HDA_MAX_CLASS")
    if value is None:
        return 10**6
    try:
        bound = int(value)
    except ValueError:
        raise InputError(f"HDA_MAX_CLASS must be an integer, got {value!r}") from None
    if bound < 1:
        raise InputError(f"HDA_MAX_CLASS must be positive, got {bound}")
    return bound


def _class_members(x, start: tuple[str, ...], stop_at=None, max_size=None):
    bound = max_size if max_size is not None else default_class_bound()
    members = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for nxt in _neighbors(x, cur):
            if nxt in members:
                continue
            if stop_at is not None and nxt == stop_at:
                return members, True
            members.add(nxt)
            stack.append(nxt)
            if len(members) > bound:
                raise ResourceError(
                    f"homotopy class exceeds {bound} members; raise HDA_MAX_CLASS to continue"
                )
    return members, (stop_at in members if stop_at is not None else False)


def homotopy_class(path: CubePath, max_size: int | None = None) -> HomotopyClass:
    """The full homotopy class of a path, with its canonical representative."""
    members, _ = _class_members(path.pcs, path.cubes, max_size=max_size)
    key = lambda seq: tuple(path.pcs.order(c) for c in seq)
    canonical = min(members, key=key)
    return HomotopyClass(path.pcs, frozenset(members), canonical)


def homotopic(a: CubePath, b: CubePath, max_size: int | None = None) -> bool:
    """True when some chain of adjacencies links the two paths."""
    if a.pcs is not b.pcs or len(a.cubes) != len(b.cubes):
        return False
    if a.cubes == b.cubes:
        return True
    _, found = _class_members(a.pcs, a.cubes, stop_at=b.cubes, max_size=max_size)
    return found


def _fan_witness(x, cubes) -> int | None:
    """Least 0-based position with dimension >= 2 followed by a down step."""
    for p in range(len(cubes) - 1):
        if x.dim(cubes[p]) >= 2 and x.dim(cubes[p + 1]) == x.dim(cubes[p]) - 1:
            return p
    return None


def normalize_fan_trace(path: CubePath):
    """Rewrite a path from a vertex into fan shape; keep the adjacency chain.

    Returns ``(result, rewrites, chain)``: the fan-shaped path, the number of
    T-lowering rewrite steps, and the full list of cube sequences visited,
    consecutive ones adjacent.  Ambiguous face indices are resolved by always
    taking the least matching index.
    """
    x = path.pcs
    if x.dim(path.cubes[0]) != 0:
        raise PreconditionError(
            f"fan normalization needs a path starting at a vertex, starts at "
            f"{path.cubes[0]!r} of dimension {x.dim(path.cubes[0])}"
        )
    cubes = path.cubes
    chain = [cubes]
    rewrites = 0
    while True:
        p = _fan_witness(x, cubes)
        if p is None:
            break
        t_before = sum(x.dim(c) for c in cubes)
        assert p >= 2, "a witness position under dimension 2 cannot follow a vertex start"
        assert x.dim(cubes[p - 1]) == x.dim(cubes[p]) - 1, "entry into the least witness is up"
        k2 = min(_in_up_indices(x, cubes, p))
        k3 = min(_out_down_indices(x, cubes, p))
        if k2 == k3:
            assert x.dim(cubes[p - 2]) == x.dim(cubes[p - 1]) - 1, (
                "entry into the predecessor of the least witness is up"
            )
            k1 = min(_in_up_indices(x, cubes, p - 1))
            if k1 < k2:
                swapped = x.face(cubes[p], k1, 0)
            else:
                swapped = x.face(cubes[p], k1 + 1, 0)
            cubes = cubes[: p - 1] + (swapped,) + cubes[p:]
            chain.append(cubes)
            k2 = min(_in_up_indices(x, cubes, p))
            k3 = min(_out_down_indices(x, cubes, p))
            assert k2 != k3, "exchanging the entry steps must separate the indices"
        if k2 < k3:
            w = x.face(cubes[p + 1], k2, 0)
        else:
            w = x.face(cubes[p - 1], k3, 1)
        cubes = cubes[:p] + (w,) + cubes[p + 1 :]
        chain.append(cubes)
        rewrites += 1
        t_after = sum(x.dim(c) for c in cubes)
        assert t_after == t_before - 2, "each rewrite lowers the T-measure by exactly 2"
    result = CubePath(x, cubes, _steps_of(x, cubes))
    assert is_fan_shaped(result), "normalization must end fan-shaped"
    return result, rewrites, chain


def _steps_of(x, cubes):
    steps = []
    for j in range(len(cubes) - 1):
        cur, nxt = cubes[j], cubes[j + 1]
        if x.dim(nxt) == x.dim(cur) + 1:
            steps.append(Step("up", min(k for k in range(1, x.dim(nxt) + 1) if x.face(nxt, k, 0) == cur)))
        else:
            steps.append(Step("down", min(k for k in range(1, x.dim(cur) + 1) if x.face(cur, k, 1) == nxt)))
    return tuple(steps)


def normalize_fan(path: CubePath) -> CubePath:
    """The fan-shaped path homotopic to a path starting at a vertex."""
    result, _, _ = normalize_fan_trace(path)
    return result
