"""Built-in example complexes, shipped as ``.hda`` documents.

Every entry is transcribed from a corner/edge drawing: edges are listed as
``id: (source, target)`` or ``(source, target, symbol)``, and each square as

    (dir1_bottom, dir1_top, dir2_bottom, dir2_top)

where direction 1 carries the alphabetically first symbol of the square's
label word, "bottom" edges start at the square's base corner, and the face
tables follow from the geometry:

    d(1,0) = dir2_bottom   d(1,1) = dir2_top
    d(2,0) = dir1_bottom   d(2,1) = dir1_top

``pos`` hints mirror the source drawings; edge hints default to the midpoint
of their endpoints.  ``documents()`` returns all examples, ``write_corpus``
serializes them into a directory (``python -m hdakit.corpus [DIR]``).

The highlights:

* ``independence_filled`` / ``independence_hollow``: one filled and one empty
  ``ab``-square -- concurrent execution versus mere interleaving.
* ``square_cells``: the standard 2-cube with all faces, ids spelling the
  face coordinates.
* ``path_single_edge`` / ``path_filled_diamond``: two path objects with the
  same interleavings but different lengths.
* ``square_corridor``: a filled square entered and left through edges; the
  smallest complex with homotopic but distinct cube paths.
* ``cycle_two`` / ``cycle_three``: cyclic complexes whose unfoldings are
  infinite chains.
* ``diamond_fork_left`` / ``diamond_fork_right``: a bisimilar pair in which
  the left side forks into an extra branch.
* ``wings_left`` / ``wings_right``: a non-bisimilar pair; the left side has
  an extra lower diamond that the right cannot mimic.
* ``grid_swap_left`` / ``grid_swap_right``: a non-bisimilar pair of deep
  grids that differ only in a ``d``/``e`` swap far from the start.
"""

from __future__ import annotations

from pathlib import Path

from .core import standard_cube
from .docio import CubeSpec, HdaDocument, serialize
from .errors import InputError
from .labels import infer_labeling

__all__ = ["CORPUS_NAMES", "build", "documents", "write_corpus"]


def _midpoint(a, b):
    return ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)


def _doc(vertices, edges, squares, initial, pos):
    """Assemble a document from an edge/square description (see module doc)."""
    letters = {e: spec[2] for e, spec in edges.items() if len(spec) > 2}
    if letters and len(letters) != len(edges):
        raise ValueError("either all edges carry a symbol or none does")
    pos = dict(pos or {})
    for eid, spec in edges.items():
        if eid not in pos and spec[0] in pos and spec[1] in pos:
            pos[eid] = _midpoint(pos[spec[0]], pos[spec[1]])
    specs = [CubeSpec(v, 0, (), (), pos.get(v)) for v in vertices]
    specs += [
        CubeSpec(eid, 1, (spec[0],), (spec[1],), pos.get(eid))
        for eid, spec in edges.items()
    ]
    for zid, (d1b, d1t, d2b, d2t) in squares.items():
        specs.append(CubeSpec(zid, 2, (d2b, d1b), (d2t, d1t), pos.get(zid)))
    return HdaDocument(specs, initial, letters or None)


def _independence(filled):
    return _doc(
        ["s0", "s1", "s2", "s3"],
        {"a1": ("s0", "s1", "a"), "b1": ("s1", "s3", "b"),
         "b2": ("s0", "s2", "b"), "a2": ("s2", "s3", "a")},
        {"q": ("a1", "a2", "b2", "b1")} if filled else {},
        "s0",
        {"s0": (0, 0), "s1": (2, 2), "s2": (2, -2), "s3": (4, 0), "q": (2, 0)},
    )


def _square_cells():
    h = standard_cube(2)
    coord = {"0": 0, "1": 2, "*": 1}
    pos = {c.id: (coord[c.id[0]], coord[c.id[1]]) for c in h.cubes() if c.id != "pt"}
    lab = infer_labeling(h, {"*0": "a", "*1": "a", "0*": "b", "1*": "b"})
    specs = [CubeSpec(c.id, c.dim, c.d0, c.d1, pos.get(c.id)) for c in h.cubes()]
    return HdaDocument(specs, h.initial, lab.edge_labels())


def _path_single_edge():
    return _doc(
        ["v0", "v1"], {"e": ("v0", "v1")}, {}, "v0",
        {"v0": (0, 0), "v1": (4, 0)},
    )


def _path_filled_diamond():
    return _doc(
        ["s0", "s1", "s2", "s3"],
        {"e1": ("s0", "s1"), "e2": ("s1", "s3"),
         "e3": ("s0", "s2"), "e4": ("s2", "s3")},
        {"q": ("e1", "e4", "e3", "e2")},
        "s0",
        {"s0": (0, 0), "s1": (2, 2), "s2": (2, -2), "s3": (4, 0), "q": (2, 0)},
    )


def _square_corridor():
    return _doc(
        ["i", "x", "xb", "y", "z", "w"],
        {"a": ("i", "x", "a"), "b": ("x", "xb", "b"), "c": ("xb", "z", "c"),
         "c2": ("x", "y", "c"), "b2": ("y", "z", "b"), "d": ("z", "w", "d")},
        {"bc": ("b", "b2", "c2", "c")},
        "i",
        {"i": (0, 0), "x": (2, 0), "xb": (4, 0), "y": (2, 2), "z": (4, 2),
         "w": (6, 2), "bc": (3, 1)},
    )


def _cycle_two():
    return _doc(
        ["va", "vb"],
        {"e1": ("va", "vb", "a"), "e2": ("vb", "va", "b")},
        {}, "va",
        {"va": (0, 0), "vb": (2, 0), "e1": (1, 0.3), "e2": (1, -0.3)},
    )


def _cycle_three():
    return _doc(
        ["u0", "u1", "u2"],
        {"f1": ("u0", "u1", "a"), "f2": ("u1", "u2", "b"), "f3": ("u2", "u0", "c")},
        {}, "u0",
        {"u0": (0, 0), "u1": (4, 0), "u2": (2, 1)},
    )


_FORK_POS = {"x0": (0, 0), "x1": (-1, -1), "x2": (1, -1), "x3": (-2, -2),
             "x4": (0, -2), "z1": (0, -1)}


def _fork(left):
    edges = {"y1": ("x0", "x1", "a"), "y2": ("x0", "x2", "b"),
             "y3": ("x1", "x3", "b"), "y4": ("x1", "x4", "b"),
             "y5": ("x2", "x4", "a")}
    vertices = ["x0", "x1", "x2", "x3", "x4"]
    if not left:
        vertices.remove("x3")
        del edges["y3"]
    return _doc(
        vertices, edges, {"z1": ("y1", "y5", "y2", "y4")}, "x0", _FORK_POS,
    )


_WINGS_EDGES = {
    "y1": ("x0", "x1", "c"), "y2": ("x0", "x2", "b"), "y3": ("x0", "x3", "a"),
    "y4": ("x1", "x4", "b"), "y5": ("x2", "x4", "c"), "y6": ("x2", "x5", "a"),
    "y7": ("x3", "x5", "b"), "y8": ("x0", "x6", "c"), "y9": ("x0", "x7", "a"),
    "y10": ("x0", "x8", "b"), "y11": ("x6", "x9", "a"), "y12": ("x7", "x9", "c"),
    "y13": ("x7", "x10", "b"), "y14": ("x8", "x10", "a"),
    "y15": ("x0", "x11", "a"), "y16": ("x0", "x12", "b"),
    "y17": ("x11", "x13", "b"), "y18": ("x12", "x13", "a"),
}
_WINGS_SQUARES = {
    "z1": ("y2", "y4", "y1", "y5"),
    "z2": ("y3", "y6", "y2", "y7"),
    "z3": ("y9", "y11", "y8", "y12"),
    "z4": ("y9", "y14", "y10", "y13"),
    "z5": ("y15", "y18", "y16", "y17"),
}
_WINGS_POS = {
    "x0": (0, 0), "x1": (-1, 1), "x2": (-2, 0), "x3": (-1, -1), "x4": (-3, 1),
    "x5": (-3, -1), "x6": (1, 1), "x7": (2, 0), "x8": (1, -1), "x9": (3, 1),
    "x10": (3, -1), "x11": (-0.8, -2), "x12": (0.8, -2), "x13": (0, -3),
    "z1": (-1.5, 0.5), "z2": (-1.5, -0.5), "z3": (1.5, 0.5), "z4": (1.5, -0.5),
    "z5": (0, -2),
}


def _wings(left):
    edges, squares = _WINGS_EDGES, _WINGS_SQUARES
    n = 14
    if not left:
        edges = {e: v for e, v in edges.items()
                 if e not in ("y15", "y16", "y17", "y18")}
        squares = {z: v for z, v in squares.items() if z != "z5"}
        n = 11
    return _doc([f"x{i}" for i in range(n)], edges, squares, "x0", _WINGS_POS)


_GRID_SRC_TGT = {
    "y1": ("x0", "x1"), "y2": ("x0", "x2"), "y3": ("x1", "x3"), "y4": ("x1", "x4"),
    "y5": ("x2", "x4"), "y6": ("x2", "x5"), "y7": ("x3", "x6"), "y8": ("x4", "x6"),
    "y9": ("x4", "x7"), "y10": ("x5", "x7"), "y11": ("x6", "x8"), "y12": ("x6", "x9"),
    "y13": ("x7", "x9"), "y14": ("x7", "x10"), "y15": ("x8", "x11"), "y16": ("x9", "x11"),
    "y17": ("x9", "x12"), "y18": ("x10", "x12"), "y19": ("x11", "x13"), "y20": ("x12", "x13"),
    "y21": ("x6", "x14"), "y22": ("x6", "x15"), "y23": ("x14", "x16"), "y24": ("x15", "x16"),
    "y25": ("x15", "x17"), "y26": ("x16", "x18"), "y27": ("x17", "x18"),
    "y28": ("x7", "x19"), "y29": ("x7", "x20"), "y30": ("x19", "x21"), "y31": ("x20", "x21"),
    "y32": ("x20", "x22"), "y33": ("x21", "x23"), "y34": ("x22", "x23"),
}
_GRID_LABELS_LEFT = {
    "y1": "a", "y2": "b", "y3": "c", "y4": "b", "y5": "a", "y6": "c", "y7": "b",
    "y8": "c", "y9": "c", "y10": "a", "y11": "d", "y12": "c", "y13": "c", "y14": "e",
    "y15": "c", "y16": "d", "y17": "e", "y18": "c", "y19": "e", "y20": "d",
    "y21": "e", "y22": "c", "y23": "c", "y24": "e", "y25": "d", "y26": "d", "y27": "e",
    "y28": "d", "y29": "c", "y30": "c", "y31": "d", "y32": "e", "y33": "e", "y34": "d",
}
# The right side swaps the d/e roles in the two side lobes and the lower half.
_GRID_LABELS_RIGHT = dict(
    _GRID_LABELS_LEFT,
    **{"y11": "e", "y14": "d", "y16": "e", "y17": "d", "y19": "d", "y20": "e",
       "y21": "d", "y24": "d", "y25": "e", "y26": "e", "y27": "d",
       "y28": "e", "y31": "e", "y32": "d", "y33": "d", "y34": "e"},
)
_GRID_QUADS = {
    "z1": ("y1", "y5", "y2", "y4"),
    "z2": ("y4", "y7", "y3", "y8"),
    "z3": ("y5", "y10", "y6", "y9"),
    "z4": ("y8", "y13", "y9", "y12"),
    "z5": ("y12", "y15", "y11", "y16"),
    "z6": ("y13", "y18", "y14", "y17"),
    "z7": ("y16", "y20", "y17", "y19"),
    "z8": ("y22", "y23", "y21", "y24"),
    "z9": ("y24", "y27", "y25", "y26"),
    "z10": ("y29", "y30", "y28", "y31"),
    "z11": ("y31", "y34", "y32", "y33"),
}
_GRID_POS = {
    "x0": (0, 0), "x1": (-1, -1), "x2": (1, -1), "x3": (-2, -2), "x4": (0, -2),
    "x5": (2, -2), "x6": (-1, -3), "x7": (1, -3), "x8": (-2, -4), "x9": (0, -4),
    "x10": (2, -4), "x11": (-1, -5), "x12": (1, -5), "x13": (0, -6),
    "x14": (-3, -2.2), "x15": (-3, -3.8), "x16": (-4, -3), "x17": (-4, -4.6),
    "x18": (-5, -3.8), "x19": (3, -2.2), "x20": (3, -3.8), "x21": (4, -3),
    "x22": (4, -4.6), "x23": (5, -3.8),
    "z1": (0, -1), "z2": (-1, -2), "z3": (1, -2), "z4": (0, -3), "z5": (-1, -4),
    "z6": (1, -4), "z7": (0, -5), "z8": (-2.8, -3), "z9": (-4, -3.8),
    "z10": (2.8, -3), "z11": (4, -3.8),
}


def _grid(left):
    labels = _GRID_LABELS_LEFT if left else _GRID_LABELS_RIGHT
    squares = {}
    for zid, (d1b, d1t, d2b, d2t) in _GRID_QUADS.items():
        if labels[d1b] > labels[d2b]:
            d1b, d1t, d2b, d2t = d2b, d2t, d1b, d1t
        squares[zid] = (d1b, d1t, d2b, d2t)
    return _doc(
        [f"x{i}" for i in range(24)],
        {e: (*_GRID_SRC_TGT[e], labels[e]) for e in _GRID_SRC_TGT},
        squares, "x0", _GRID_POS,
    )


_BUILDERS = {
    "independence_filled": lambda: _independence(True),
    "independence_hollow": lambda: _independence(False),
    "square_cells": _square_cells,
    "path_single_edge": _path_single_edge,
    "path_filled_diamond": _path_filled_diamond,
    "square_corridor": _square_corridor,
    "cycle_two": _cycle_two,
    "cycle_three": _cycle_three,
    "diamond_fork_left": lambda: _fork(True),
    "diamond_fork_right": lambda: _fork(False),
    "wings_left": lambda: _wings(True),
    "wings_right": lambda: _wings(False),
    "grid_swap_left": lambda: _grid(True),
    "grid_swap_right": lambda: _grid(False),
}
CORPUS_NAMES = tuple(_BUILDERS)


def build(name: str) -> HdaDocument:
    """The named example document, built fresh."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise InputError(f"unknown corpus document {name!r}; "
                         f"known: {', '.join(CORPUS_NAMES)}") from None
    return builder()


def documents() -> dict[str, HdaDocument]:
    """All example documents by name."""
    return {name: build(name) for name in CORPUS_NAMES}


def write_corpus(directory) -> list[Path]:
    """Write every example as ``<name>.hda`` into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in documents().items():
        path = directory / f"{name}.hda"
        path.write_text(serialize(doc))
        written.append(path)
    return written


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    for p in write_corpus(target):
        print(p)
