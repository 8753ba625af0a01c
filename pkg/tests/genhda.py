"""Random acyclic labeled HDAs and random pointed cube paths for tests.

Vertices are totally ordered and edges only run forward, so every generated
HDA is acyclic.  Squares are filled into label-compatible diamonds (the two
parallel edge pairs carry equal letters, direction 1 the alphabetically first
one), so the inferred labeling always exists.
"""

from __future__ import annotations

import random

from hdakit import Cube, CubePath, Hda, Labeling, infer_labeling, validate_path


def random_hda(
    rng: random.Random,
    n_vertices: int = 6,
    edge_p: float = 0.45,
    fill_p: float = 0.7,
    alphabet: str = "ab",
) -> tuple[Hda, Labeling]:
    """A random acyclic HDA of dimension at most 2, with its labeling."""
    cubes = [Cube(f"v{i}", 0, (), ()) for i in range(n_vertices)]
    letter: dict[str, str] = {}
    out: dict[int, list[tuple[str, int]]] = {}
    n_edges = 0
    for i in range(n_vertices):
        for j in range(i + 1, n_vertices):
            if rng.random() < edge_p:
                eid = f"e{n_edges}"
                n_edges += 1
                cubes.append(Cube(eid, 1, (f"v{i}",), (f"v{j}",)))
                letter[eid] = rng.choice(alphabet)
                out.setdefault(i, []).append((eid, j))
    filled: set[tuple[str, str, str, str]] = set()
    n_squares = 0
    for i in range(n_vertices):
        for d1b, mid_a in out.get(i, ()):
            for d2b, mid_b in out.get(i, ()):
                if d2b == d1b or letter[d1b] > letter[d2b]:
                    continue
                for d1t, top_a in out.get(mid_b, ()):
                    if letter[d1t] != letter[d1b]:
                        continue
                    for d2t, top_b in out.get(mid_a, ()):
                        if top_b != top_a or d2t == d1t:
                            continue
                        if letter[d2t] != letter[d2b]:
                            continue
                        quad = (d1b, d1t, d2b, d2t)
                        if quad in filled or rng.random() >= fill_p:
                            continue
                        filled.add(quad)
                        filled.add((d2b, d2t, d1b, d1t))
                        sid = f"q{n_squares}"
                        n_squares += 1
                        cubes.append(Cube(sid, 2, (d2b, d1b), (d2t, d1t)))
    h = Hda(cubes, "v0")
    return h, infer_labeling(h, letter)


def renamed(h: Hda, labels: Labeling, prefix: str) -> tuple[Hda, Labeling]:
    """An isomorphic copy with every cube id prefixed."""
    fresh = [
        Cube(
            prefix + c.id,
            c.dim,
            tuple(prefix + f for f in c.d0),
            tuple(prefix + f for f in c.d1),
        )
        for c in h.cubes()
    ]
    out = Hda(fresh, prefix + h.initial)
    return out, Labeling(out, {prefix + cid: labels.word_of(cid) for cid in h.ids()})


def random_path(rng: random.Random, h: Hda, max_len: int = 8) -> CubePath:
    """A random pointed cube path from the initial cube."""
    cubes = [h.initial]
    cur = h.initial
    for _ in range(max_len - 1):
        moves = list(h.cofaces(cur))
        moves += [h.face(cur, k, 1) for k in range(1, h.dim(cur) + 1)]
        if not moves:
            break
        cur = rng.choice(moves)
        cubes.append(cur)
    return validate_path(h, tuple(cubes))
