"""Unfoldings of higher-dimensional automata into higher-dimensional trees.

The unfolding of an HDA has one node per homotopy class of pointed cube paths.
An upper face appends the corresponding upper face of the last cube; a lower
face ``d(k, 0)`` truncates those members whose last step is ``Up(k)`` - all
their truncations land in one class.  The projection sends a class to the last
cube of its paths.

Computing to ``depth`` keeps the classes of paths with at most ``depth``
cubes.  A node of length ``m`` and dimension ``n`` has all faces present
exactly when ``m + n <= depth``; the nodes satisfying this bound form a
face-closed sub-HDA, the non-truncated part, and nodes beyond it carry a
truncation mark.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hda, Cube, Morphism, validate_morphism
from .errors import InputError, PreconditionError, ResourceError
from .paths import HomotopyClass, _class_members, _in_up_indices

__all__ = [
    "UnfoldingNode",
    "TruncatedUnfolding",
    "unfold",
    "is_acyclic",
    "is_hd_tree",
    "class_prefix",
    "lift_morphism",
    "node_id",
]

_NODE_CAP = 10**6


def node_id(rep: tuple[str, ...]) -> str:
    """The id of an unfolding node: its canonical member in brackets."""
    return "[" + ",".join(rep) + "]"


@dataclass(frozen=True)
class UnfoldingNode:
    """One homotopy class of pointed cube paths in the unfolded HDA.

    ``rep`` is the canonical member (least cube-id sequence in file order),
    ``length`` the number of cubes of its paths, ``dim`` the dimension of
    their last cube.  ``truncated`` marks nodes whose faces would need paths
    beyond the computed depth, i.e. ``length + dim > depth``.
    """

    id: str
    rep: tuple[str, ...]
    length: int
    dim: int
    truncated: bool


@dataclass
class TruncatedUnfolding:
    """An unfolding computed to a finite depth.

    ``nodes`` holds every class of length up to the depth, keyed by node id in
    discovery order; ``hda`` is the non-truncated part, and ``projection``
    maps it back to the source by taking last cubes.
    """

    source: Hda
    depth: int
    nodes: dict[str, UnfoldingNode]
    hda: Hda
    projection: Morphism

    def node_of(self, rep: tuple[str, ...]) -> UnfoldingNode:
        try:
            return self.nodes[node_id(tuple(rep))]
        except KeyError:
            raise InputError(f"no unfolding node with representative {tuple(rep)!r}") from None


def unfold(h: Hda, depth: int) -> TruncatedUnfolding:
    """Unfold an HDA to the classes of pointed paths of at most ``depth`` cubes."""
    if depth < 1:
        raise InputError(f"unfolding depth must be >= 1, got {depth}")
    order_key = lambda seq: tuple(h.order(c) for c in seq)

    canon_of: dict[tuple[str, ...], tuple[str, ...]] = {}
    nodes: dict[str, UnfoldingNode] = {}
    by_length: dict[int, list[UnfoldingNode]] = {}

    def register(seq: tuple[str, ...]) -> UnfoldingNode:
        canon = canon_of.get(seq)
        if canon is None:
            members, _ = _class_members(h, seq)
            canon = min(members, key=order_key)
            for m in members:
                canon_of[m] = canon
        nid = node_id(canon)
        node = nodes.get(nid)
        if node is None:
            n = h.dim(canon[-1])
            node = UnfoldingNode(nid, canon, len(canon), n, len(canon) + n > depth)
            nodes[nid] = node
            by_length.setdefault(len(canon), []).append(node)
            if len(nodes) > _NODE_CAP:
                raise ResourceError(f"unfolding exceeds {_NODE_CAP} nodes")
        return node

    register((h.initial,))
    for length in range(1, depth):
        for node in list(by_length.get(length, ())):
            last = node.rep[-1]
            extensions = list(h.cofaces(last))
            for k in range(1, h.dim(last) + 1):
                w = h.face(last, k, 1)
                if w not in extensions:
                    extensions.append(w)
            for w in extensions:
                register(node.rep + (w,))

    cubes = []
    kept = [node for node in nodes.values() if not node.truncated]
    for node in kept:
        last = node.rep[-1]
        d1 = []
        d0 = []
        for k in range(1, node.dim + 1):
            up = canon_of[node.rep + (h.face(last, k, 1),)]
            d1.append(node_id(up))
        if node.dim >= 1:
            members, _ = _class_members(h, node.rep)
            for k in range(1, node.dim + 1):
                truncs = {
                    m[:-1] for m in members if k in _in_up_indices(h, m, len(m) - 1)
                }
                assert truncs, f"no member of {node.id} ends with an up step in direction {k}"
                classes = {node_id(canon_of[t]) for t in truncs}
                assert len(classes) == 1, (
                    f"truncations of {node.id} in direction {k} fall into several classes"
                )
                d0.append(classes.pop())
        cubes.append(Cube(node.id, node.dim, tuple(d0), tuple(d1)))
    part = Hda(cubes, node_id((h.initial,)))
    projection = Morphism(part, h, {node.id: node.rep[-1] for node in kept})
    return TruncatedUnfolding(h, depth, nodes, part, projection)


def is_acyclic(x) -> bool:
    """No cycle in the step digraph (up into a coface, down to an upper face)."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {cid: WHITE for cid in x.ids()}

    def successors(cid):
        return list(x.cube(cid).d1) + x.cofaces(cid)

    for root in x.ids():
        if color[root] != WHITE:
            continue
        stack = [(root, iter(successors(root)))]
        color[root] = GRAY
        while stack:
            cid, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == GRAY:
                    return False
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, iter(successors(nxt))))
                    advanced = True
                    break
            if not advanced:
                color[cid] = BLACK
                stack.pop()
    return True


def _pointed_paths(h: Hda):
    """All pointed cube paths of an acyclic HDA, by depth-first search."""
    out = []
    stack = [(h.initial,)]
    while stack:
        path = stack.pop()
        out.append(path)
        last = path[-1]
        for nxt in list(h.cube(last).d1) + h.cofaces(last):
            stack.append(path + (nxt,))
    return out


def is_hd_tree(h: Hda) -> bool:
    """Every cube has exactly one homotopy class of pointed paths to it.

    Precondition: the HDA is acyclic, so that paths can be enumerated.
    """
    if not is_acyclic(h):
        raise PreconditionError("is_hd_tree needs an acyclic HDA")
    by_end: dict[str, list[tuple[str, ...]]] = {cid: [] for cid in h.ids()}
    for path in _pointed_paths(h):
        by_end[path[-1]].append(path)
    for cid, paths in by_end.items():
        if not paths:
            return False
        members, _ = _class_members(h, paths[0])
        for other in paths[1:]:
            if other not in members:
                return False
    return True


def class_prefix(a: HomotopyClass, b: HomotopyClass) -> bool:
    """Whether ``a`` is the class of an initial segment of some member of ``b``."""
    if a.pcs is not b.pcs:
        return False
    la = a.length()
    if la > b.length():
        return False
    return any(m[:la] in a.members for m in b.members)


def lift_morphism(f: Morphism, ua: TruncatedUnfolding, ub: TruncatedUnfolding) -> Morphism:
    """Lift a pointed morphism to the non-truncated parts of two unfoldings.

    The image of a class is the class of the imagewise path.  Requires equal
    depths and that ``f`` maps ``ua``'s source to ``ub``'s source.
    """
    problems = validate_morphism(f, pointed=True)
    if problems:
        raise InputError("cannot lift an invalid morphism: " + "; ".join(problems))
    if f.source is not ua.source or f.target is not ub.source:
        raise InputError("morphism endpoints do not match the two unfoldings")
    if ua.depth != ub.depth:
        raise InputError(f"depths differ: {ua.depth} != {ub.depth}")
    g = f.target
    order_key = lambda seq: tuple(g.order(c) for c in seq)
    mapping = {}
    for nid, node in ua.nodes.items():
        if node.truncated or nid not in ua.hda:
            continue
        image = tuple(f(c) for c in node.rep)
        members, _ = _class_members(g, image)
        canon = min(members, key=order_key)
        target_id = node_id(canon)
        if target_id not in ub.hda:
            raise InputError(
                f"image class {target_id} of node {nid} is missing or truncated"
            )
        mapping[nid] = target_id
    return Morphism(ua.hda, ub.hda, mapping)
