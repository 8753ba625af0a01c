"""Precubical sets, higher-dimensional automata, and morphisms.

A precubical set is a graded collection of cubes together with face maps.  A
cube of dimension ``n`` has, for every coordinate ``k`` in ``1..n``, a lower
face (``nu = 0``) and an upper face (``nu = 1``) of dimension ``n - 1``.  Face
maps must satisfy the precubical identity

    ``d(k, nu) . d(l, mu) == d(l - 1, mu) . d(k, nu)``  whenever ``k < l``

where ``.`` is function composition (the right map applied first).  A
higher-dimensional automaton (HDA) is a precubical set with a distinguished
initial cube of dimension 0.

Cubes are referred to by their string ids everywhere; all structures preserve
the order in which cubes were supplied ("file order"), which is used for
deterministic tie-breaking by the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iter_product

from .errors import InputError, SemanticError

__all__ = [
    "Cube",
    "PrecubicalSet",
    "Hda",
    "Morphism",
    "validate_precubical",
    "validate_morphism",
    "standard_cube",
    "product",
    "is_precubical_subset",
    "reachable",
    "compose",
    "identity_morphism",
    "is_isomorphism",
]


@dataclass(frozen=True)
class Cube:
    """A single cube: an id, a dimension, and its lower/upper face ids.

    ``d0[k-1]`` is the lower face in coordinate ``k`` and ``d1[k-1]`` the
    upper face; both tuples have exactly ``dim`` entries.
    """

    id: str
    dim: int
    d0: tuple[str, ...] = ()
    d1: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "d0", tuple(self.d0))
        object.__setattr__(self, "d1", tuple(self.d1))


class PrecubicalSet:
    """An ordered collection of cubes closed under taking faces.

    Construction checks that the data is usable: ids are unique and nonempty,
    face tuples have the right arity, and every face id resolves to a cube of
    the dimension one below.  The precubical identity itself is checked by
    :func:`validate_precubical`, which reports violations instead of raising,
    so that defective gluings can be examined.

    Instances are treated as immutable once constructed.
    """

    def __init__(self, cubes):
        self._cubes: dict[str, Cube] = {}
        for cube in cubes:
            if not isinstance(cube, Cube):
                raise InputError(f"expected a Cube, got {type(cube).__name__}")
            if not cube.id or not isinstance(cube.id, str):
                raise SemanticError(f"cube id must be a nonempty string, got {cube.id!r}")
            if cube.id in self._cubes:
                raise SemanticError(f"duplicate cube id {cube.id!r}")
            if not isinstance(cube.dim, int) or cube.dim < 0:
                raise SemanticError(f"cube {cube.id!r} has invalid dimension {cube.dim!r}")
            if len(cube.d0) != cube.dim or len(cube.d1) != cube.dim:
                raise SemanticError(
                    f"cube {cube.id!r} of dimension {cube.dim} must list exactly "
                    f"{cube.dim} lower and upper faces"
                )
            self._cubes[cube.id] = cube
        self._order = {cid: i for i, cid in enumerate(self._cubes)}
        for cube in self._cubes.values():
            for faces in (cube.d0, cube.d1):
                for fid in faces:
                    other = self._cubes.get(fid)
                    if other is None:
                        raise SemanticError(f"cube {cube.id!r} refers to unknown face {fid!r}")
                    if other.dim != cube.dim - 1:
                        raise SemanticError(
                            f"face {fid!r} of cube {cube.id!r} has dimension {other.dim}, "
                            f"expected {cube.dim - 1}"
                        )
        self._up_index: dict[tuple[str, int], tuple[str, ...]] | None = None

    # -- basic access -----------------------------------------------------

    def __contains__(self, cube_id: str) -> bool:
        return cube_id in self._cubes

    def __len__(self) -> int:
        return len(self._cubes)

    def __iter__(self):
        return iter(self._cubes)

    def cube(self, cube_id: str) -> Cube:
        try:
            return self._cubes[cube_id]
        except KeyError:
            raise InputError(f"unknown cube id {cube_id!r}") from None

    def cubes(self) -> list[Cube]:
        """All cubes in file order."""
        return list(self._cubes.values())

    def ids(self) -> list[str]:
        """All cube ids in file order."""
        return list(self._cubes)

    def dim(self, cube_id: str) -> int:
        return self.cube(cube_id).dim

    def order(self, cube_id: str) -> int:
        """Position of a cube in file order; used for deterministic choices."""
        try:
            return self._order[cube_id]
        except KeyError:
            raise InputError(f"unknown cube id {cube_id!r}") from None

    def by_dim(self, n: int) -> list[str]:
        """Ids of all cubes of dimension ``n``, in file order."""
        return [c.id for c in self._cubes.values() if c.dim == n]

    def max_dim(self) -> int:
        return max((c.dim for c in self._cubes.values()), default=-1)

    def face(self, cube_id: str, k: int, nu: int) -> str:
        """The face ``d(k, nu)`` of a cube; ``k`` is one-based."""
        cube = self.cube(cube_id)
        if not 1 <= k <= cube.dim:
            raise InputError(
                f"face index {k} out of range 1..{cube.dim} for cube {cube_id!r}"
            )
        if nu not in (0, 1):
            raise InputError(f"face direction must be 0 or 1, got {nu!r}")
        return (cube.d0 if nu == 0 else cube.d1)[k - 1]

    def cofaces(self, cube_id: str, k: int | None = None) -> list[str]:
        """Cubes one dimension up having this cube as lower face.

        With ``k`` given, only coordinate ``k`` is considered; otherwise all
        coordinates are, and a cube appearing for several ``k`` is listed once.
        Results are in file order.
        """
        if self._up_index is None:
            index: dict[tuple[str, int], list[str]] = {}
            for cube in self._cubes.values():
                for i, fid in enumerate(cube.d0):
                    index.setdefault((fid, i + 1), []).append(cube.id)
            self._up_index = {key: tuple(v) for key, v in index.items()}
        self.cube(cube_id)
        if k is not None:
            return list(self._up_index.get((cube_id, k), ()))
        seen: set[str] = set()
        for kk in range(1, self.max_dim() + 1):
            seen.update(self._up_index.get((cube_id, kk), ()))
        return sorted(seen, key=self.order)

    def __repr__(self):
        counts = {}
        for cube in self._cubes.values():
            counts[cube.dim] = counts.get(cube.dim, 0) + 1
        graded = ", ".join(f"{counts[n]}x{n}" for n in sorted(counts))
        return f"<{type(self).__name__} {graded or 'empty'}>"


class Hda(PrecubicalSet):
    """A precubical set with a distinguished initial cube of dimension 0."""

    def __init__(self, cubes, initial: str):
        super().__init__(cubes)
        if initial not in self:
            raise SemanticError(f"initial cube {initial!r} is not in the set")
        if self.dim(initial) != 0:
            raise SemanticError(
                f"initial cube {initial!r} must have dimension 0, has {self.dim(initial)}"
            )
        self.initial = initial


@dataclass
class Morphism:
    """A map of precubical sets: dimension-preserving and face-commuting.

    The mapping sends source cube ids to target cube ids.  Use
    :func:`validate_morphism` to check the defining conditions.
    """

    source: PrecubicalSet
    target: PrecubicalSet
    mapping: dict[str, str] = field(default_factory=dict)

    def __call__(self, cube_id: str) -> str:
        try:
            return self.mapping[cube_id]
        except KeyError:
            raise InputError(f"morphism undefined on cube {cube_id!r}") from None


def validate_precubical(x: PrecubicalSet) -> list[str]:
    """Check the precubical identity on every cube; return violations.

    Each reported violation names the cube and the ``(k, l, nu, mu)``
    quadruple for which ``d(k, nu) d(l, mu)`` and ``d(l - 1, mu) d(k, nu)``
    disagree.  An empty list means the set is a valid precubical set.
    """
    violations = []
    for cube in x.cubes():
        n = cube.dim
        for k in range(1, n + 1):
            for l in range(k + 1, n + 1):
                for nu, mu in iter_product((0, 1), repeat=2):
                    left = x.face(x.face(cube.id, l, mu), k, nu)
                    right = x.face(x.face(cube.id, k, nu), l - 1, mu)
                    if left != right:
                        violations.append(
                            f"cube {cube.id!r}: d({k},{nu}) d({l},{mu}) = {left!r} but "
                            f"d({l - 1},{mu}) d({k},{nu}) = {right!r}"
                        )
    return violations


def validate_morphism(m: Morphism, pointed: bool = False) -> list[str]:
    """Check that a morphism is total, dimension-preserving and face-commuting.

    With ``pointed=True`` both sides must be HDAs and the initial cube must map
    to the initial cube.  Returns a list of violations, empty when valid.
    """
    violations = []
    for cid in m.source.ids():
        if cid not in m.mapping:
            violations.append(f"no image for cube {cid!r}")
    for cid, image in m.mapping.items():
        if cid not in m.source:
            violations.append(f"mapping defined on unknown cube {cid!r}")
            continue
        if image not in m.target:
            violations.append(f"image {image!r} of cube {cid!r} is not in the target")
            continue
        n = m.source.dim(cid)
        if m.target.dim(image) != n:
            violations.append(
                f"cube {cid!r} has dimension {n} but its image {image!r} has "
                f"dimension {m.target.dim(image)}"
            )
            continue
        for k in range(1, n + 1):
            for nu in (0, 1):
                fid = m.source.face(cid, k, nu)
                want = m.mapping.get(fid)
                got = m.target.face(image, k, nu)
                if want != got:
                    violations.append(
                        f"cube {cid!r}: image of face d({k},{nu}) is {want!r} "
                        f"but face of image is {got!r}"
                    )
    if pointed:
        if not isinstance(m.source, Hda) or not isinstance(m.target, Hda):
            violations.append("pointed morphism requires HDAs on both sides")
        elif m.mapping.get(m.source.initial) != m.target.initial:
            violations.append(
                f"initial cube {m.source.initial!r} must map to {m.target.initial!r}, "
                f"maps to {m.mapping.get(m.source.initial)!r}"
            )
    return violations


def standard_cube(n: int) -> Hda:
    """The full ``n``-cube as an HDA, pointed at the all-zeros corner.

    Cells are named by words over ``0``, ``1``, ``*``: the dimension is the
    number of ``*`` letters, and the face ``d(k, nu)`` replaces the ``k``-th
    ``*`` by ``nu``.  For ``n = 0`` the unique cell is named ``"pt"``.
    """
    if n < 0:
        raise InputError(f"cube dimension must be >= 0, got {n}")
    if n == 0:
        return Hda([Cube("pt", 0)], "pt")

    def face_word(word: str, k: int, nu: int) -> str:
        stars = [i for i, ch in enumerate(word) if ch == "*"]
        i = stars[k - 1]
        return word[:i] + str(nu) + word[i + 1 :]

    words = ["".join(w) for w in iter_product("01*", repeat=n)]
    words.sort(key=lambda w: (w.count("*"), w))
    cubes = []
    for word in words:
        d = word.count("*")
        cubes.append(
            Cube(
                word,
                d,
                tuple(face_word(word, k, 0) for k in range(1, d + 1)),
                tuple(face_word(word, k, 1) for k in range(1, d + 1)),
            )
        )
    return Hda(cubes, "0" * n)


def product_id(a: str, b: str) -> str:
    """Id used for the pair of cubes ``a`` and ``b`` in a product."""
    return f"({a},{b})"


def product(x: PrecubicalSet, y: PrecubicalSet) -> PrecubicalSet:
    """The categorical product: equal-dimension pairs with componentwise faces.

    ``(X x Y)_n = X_n x Y_n`` and ``d(k, nu)(a, b) = (d(k, nu) a, d(k, nu) b)``.
    This is synchronization, not geometric product: two intervals multiply to
    four vertices and one edge, not to a filled square.  Pairs are listed with
    the first factor as the major key, both in file order.
    """
    cubes = []
    for a in x.cubes():
        for b in y.cubes():
            if a.dim != b.dim:
                continue
            d0 = tuple(product_id(fa, fb) for fa, fb in zip(a.d0, b.d0))
            d1 = tuple(product_id(fa, fb) for fa, fb in zip(a.d1, b.d1))
            cubes.append(Cube(product_id(a.id, b.id), a.dim, d0, d1))
    return PrecubicalSet(cubes)


def is_precubical_subset(a: PrecubicalSet, b: PrecubicalSet) -> bool:
    """True when every cube of ``a`` occurs in ``b`` with identical faces.

    Since ``a`` is itself a precubical set, its cubes are closed under taking
    faces, so this is the face-closed-subset relation.
    """
    for cube in a.cubes():
        if cube.id not in b:
            return False
        other = b.cube(cube.id)
        if cube.dim != other.dim or cube.d0 != other.d0 or cube.d1 != other.d1:
            return False
    return True


def reachable(h: Hda) -> set[str]:
    """Cubes reachable from the initial cube.

    Reachability is the closure under going up into a cube that has the
    current cube as one of its lower faces, and coming down to any of the
    current cube's upper faces.
    """
    seen = {h.initial}
    stack = [h.initial]
    while stack:
        cid = stack.pop()
        cube = h.cube(cid)
        nxt = list(cube.d1) + h.cofaces(cid)
        for other in nxt:
            if other not in seen:
                seen.add(other)
                stack.append(other)
    return seen


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """The composite morphism ``outer . inner``."""
    if outer.source is not inner.target:
        raise InputError("composition requires inner.target to be outer.source")
    return Morphism(
        inner.source, outer.target, {cid: outer.mapping[i] for cid, i in inner.mapping.items()}
    )


def identity_morphism(x: PrecubicalSet) -> Morphism:
    return Morphism(x, x, {cid: cid for cid in x.ids()})


def is_isomorphism(m: Morphism) -> bool:
    """True when the morphism is valid and bijective on cubes.

    The inverse of a bijective dimension-preserving face-commuting map is
    again one, so bijectivity suffices.
    """
    if validate_morphism(m):
        return False
    images = set(m.mapping.values())
    return len(images) == len(m.mapping) and images == set(m.target.ids())
