"""Graphviz export of precubical sets and HDAs.

Vertices become circle nodes (the initial cube a double circle), edges become
arrows labeled with their symbol and id, and cubes of dimension two and up
become shaded note nodes listing their faces.  Output ordering is
deterministic: ids sorted within each dimension.
"""

from __future__ import annotations

from .core import Hda, PrecubicalSet
from .labels import Labeling

__all__ = ["emit_dot"]


def _q(s: str) -> str:
    """Quote a string for DOT."""
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _lines(x: PrecubicalSet, labeling: Labeling | None, name: str):
    initial = x.initial if isinstance(x, Hda) else None
    yield f"digraph {_q(name)} {{"
    yield "  rankdir=LR;"
    yield "  node [shape=circle, fontsize=11];"
    for vid in sorted(x.by_dim(0)):
        shape = ", shape=doublecircle" if vid == initial else ""
        yield f"  {_q(vid)} [label={_q(vid)}{shape}];"
    for eid in sorted(x.by_dim(1)):
        cube = x.cube(eid)
        text = eid
        if labeling is not None:
            text = f"{labeling.word_of(eid)[0]} {eid}"
        yield f"  {_q(cube.d0[0])} -> {_q(cube.d1[0])} [label={_q(text)}];"
    for n in range(2, x.max_dim() + 1):
        for cid in sorted(x.by_dim(n)):
            cube = x.cube(cid)
            head = cid
            if labeling is not None:
                head = f"{cid}: {''.join(labeling.word_of(cid))}"
            parts = [head, "d0: " + ", ".join(cube.d0), "d1: " + ", ".join(cube.d1)]
            quoted = '"' + "\\n".join(
                p.replace("\\", "\\\\").replace('"', '\\"') for p in parts
            ) + '"'
            yield (
                f"  {_q(cid)} [shape=note, style=filled, fillcolor=gray90, "
                f"label={quoted}];"
            )
    yield "}"


def emit_dot(x: PrecubicalSet, labeling: Labeling | None = None, name: str = "hda") -> str:
    """The DOT text for a complex, one construct per line, newline-terminated."""
    return "\n".join(_lines(x, labeling, name)) + "\n"
