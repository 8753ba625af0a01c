"""Standalone oracle for cube-path measures and homotopy on the corridor complex.

The corridor is the complex with one filled square reached by an edge and
leaving by an edge:

    vertices  i, x, xb, y, z, w
    edges     a: i->x   b: x->xb   c: xb->z   c2: x->y   b2: y->z   d: z->w
    square    bc with faces d(1,0)=c2  d(1,1)=c  d(2,0)=b  d(2,1)=b2

Everything here is computed from hand-entered face tables and the four
textbook adjacency clauses, with no package imports:

* step tags and T-measure (sum of dimensions) of the two quoted paths,
* the fan-shape lower bound (n^2 + m - 1) / 2 and the rewrite-count formula,
* the three-link homotopy chain between the two paths.

Run:  python tests/oracles/oracle_corridor_paths.py
"""

DIM = {"i": 0, "x": 0, "xb": 0, "y": 0, "z": 0, "w": 0,
       "a": 1, "b": 1, "c": 1, "c2": 1, "b2": 1, "d": 1, "bc": 2}
# FACES[(cube, k, nu)] = face
FACES = {
    ("a", 1, 0): "i", ("a", 1, 1): "x",
    ("b", 1, 0): "x", ("b", 1, 1): "xb",
    ("c", 1, 0): "xb", ("c", 1, 1): "z",
    ("c2", 1, 0): "x", ("c2", 1, 1): "y",
    ("b2", 1, 0): "y", ("b2", 1, 1): "z",
    ("d", 1, 0): "z", ("d", 1, 1): "w",
    ("bc", 1, 0): "c2", ("bc", 1, 1): "c",
    ("bc", 2, 0): "b", ("bc", 2, 1): "b2",
}

PATH_UPPER = ("i", "a", "x", "b", "bc", "c", "z", "d")
PATH_FAN = ("i", "a", "x", "c2", "y", "b2", "z", "d")


def step_tags(path):
    """Up(k)/Down(k) tag per step, derived from the face tables."""
    tags = []
    for u, v in zip(path, path[1:]):
        if DIM[v] == DIM[u] + 1:
            ks = [k for k in range(1, DIM[v] + 1) if FACES[(v, k, 0)] == u]
            assert len(ks) == 1, (u, v, ks)
            tags.append(("up", ks[0]))
        elif DIM[v] == DIM[u] - 1:
            ks = [k for k in range(1, DIM[u] + 1) if FACES[(u, k, 1)] == v]
            assert len(ks) == 1, (u, v, ks)
            tags.append(("down", ks[0]))
        else:
            raise AssertionError((u, v))
    return tags


def t_measure(path):
    return sum(DIM[c] for c in path)


def adjacent(p, q):
    """One-position adjacency from the four clauses, coded directly."""
    if len(p) != len(q):
        return False
    diff = [i for i in range(len(p)) if p[i] != q[i]]
    if len(diff) != 1 or diff[0] in (0, len(p) - 1):
        return False
    i = diff[0]
    tp, tq = step_tags(p), step_tags(q)
    sl, sr = tp[i - 1], tp[i]
    ol, orr = tq[i - 1], tq[i]
    if sl[0] == "up" and sr[0] == "up":
        a, b = sl[1], sr[1]
        want = (b - 1, a) if a < b else (b, a + 1)
        return (ol[1], orr[1]) == want and ol[0] == orr[0] == "up"
    if sl[0] == "down" and sr[0] == "down":
        a, b = sl[1], sr[1]
        want = (b + 1, a) if a <= b else (b, a - 1)
        return (ol[1], orr[1]) == want and ol[0] == orr[0] == "down"
    if sl[0] == "up" and sr[0] == "down":
        # other route must be down-then-up with the matching indices
        a, b = sl[1], sr[1]
        if ol[0] != "down" or orr[0] != "up" or a == b:
            return False
        want = (b - 1, a) if a < b else (b, a - 1)
        return (ol[1], orr[1]) == want
    if sl[0] == "down" and sr[0] == "up":
        if ol[0] == "up" and orr[0] == "down":
            return adjacent(q, p)
        return False
    return False


def main():
    tags = step_tags(PATH_UPPER)
    print(f"upper path tags: {[f'{d.capitalize()}({k})' for d, k in tags]}")
    t_in, t_out = t_measure(PATH_UPPER), t_measure(PATH_FAN)
    print(f"T(upper) = {t_in}, T(fan) = {t_out}")
    m, n = len(PATH_FAN), DIM[PATH_FAN[-1]]
    bound = (n * n + m - 1) / 2
    print(f"fan bound (n^2+m-1)/2 for m={m}, n={n}: {bound}")
    assert t_out == bound
    print(f"rewrites needed to normalize the upper path: {(t_in - t_out) // 2}")
    chain = [
        PATH_UPPER,
        ("i", "a", "x", "c2", "bc", "c", "z", "d"),
        ("i", "a", "x", "c2", "bc", "b2", "z", "d"),
        PATH_FAN,
    ]
    for p, q in zip(chain, chain[1:]):
        assert adjacent(p, q), (p, q)
    print(f"homotopy chain upper -> fan verified, {len(chain) - 1} adjacencies")


if __name__ == "__main__":
    main()
