"""Label words and labelings of higher-dimensional automata.

Labels live in the "torus" complex over an alphabet: the cubes of dimension
``n`` are the sorted words of ``n`` symbols, and every face map, upper or
lower, deletes the ``k``-th letter.  A labeling of an HDA is a morphism into
this complex: vertices carry the empty word, edges one symbol, and an
``n``-cube a sorted word of ``n`` symbols whose faces are compatible with
letter deletion.  Words are compared lexicographically on their symbols.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hda
from .errors import InputError, SemanticError

__all__ = [
    "LabelWord",
    "Labeling",
    "word",
    "torus_face",
    "lift_function",
    "infer_labeling",
    "validate_labeling",
]

LabelWord = tuple[str, ...]


def word(letters) -> LabelWord:
    """The sorted label word made of the given symbols."""
    letters = tuple(letters)
    for sym in letters:
        if not isinstance(sym, str) or not sym:
            raise InputError(f"label symbol must be a nonempty string, got {sym!r}")
    return tuple(sorted(letters))


def torus_face(w: LabelWord, k: int, nu: int = 0) -> LabelWord:
    """The face ``d(k, nu)`` of a label word: delete the ``k``-th letter.

    Both values of ``nu`` give the same result; it is accepted only so that
    the signature matches the other face maps.
    """
    if nu not in (0, 1):
        raise InputError(f"face direction must be 0 or 1, got {nu!r}")
    if not 1 <= k <= len(w):
        raise InputError(f"face index {k} out of range 1..{len(w)} for word {w!r}")
    return w[: k - 1] + w[k:]


def lift_function(f, w: LabelWord) -> LabelWord:
    """Apply a symbol map to every letter and resort; a relabeling of words."""
    try:
        return word(f[sym] for sym in w)
    except KeyError as exc:
        raise InputError(f"symbol map undefined on {exc.args[0]!r}") from None


@dataclass
class Labeling:
    """A label word for every cube of an HDA.

    Use :func:`validate_labeling` to check that the assignment is a morphism
    into the label complex.
    """

    hda: Hda
    words: dict[str, LabelWord]

    def word_of(self, cube_id: str) -> LabelWord:
        try:
            return self.words[cube_id]
        except KeyError:
            raise InputError(f"no label word for cube {cube_id!r}") from None

    def edge_labels(self) -> dict[str, str]:
        """The single symbol of every 1-cube, the serialized form of a labeling."""
        return {cid: self.words[cid][0] for cid in self.hda.by_dim(1)}


def infer_labeling(h: Hda, edge_labels: dict[str, str]) -> Labeling:
    """Extend symbols on the 1-cubes to label words on all cubes.

    The ``k``-th letter of an ``n``-cube is the symbol of its direction-``k``
    edge through the base corner, found by taking lower faces in all other
    directions.  The result may violate the sortedness or compatibility rules
    when the edge symbols are inconsistent; :func:`validate_labeling` reports
    that instead of this function guessing a repair.
    """
    words: dict[str, LabelWord] = {}
    for cid in h.by_dim(0):
        words[cid] = ()
    for cid in h.by_dim(1):
        if cid not in edge_labels:
            raise SemanticError(f"no label for edge {cid!r}")
        sym = edge_labels[cid]
        if not isinstance(sym, str) or not sym:
            raise SemanticError(f"label of edge {cid!r} must be a nonempty string, got {sym!r}")
        words[cid] = (sym,)
    extra = sorted(set(edge_labels) - set(h.by_dim(1)))
    if extra:
        raise SemanticError(f"labels given for non-edge cubes: {', '.join(map(repr, extra))}")
    for n in range(2, h.max_dim() + 1):
        for cid in h.by_dim(n):
            letters = []
            for k in range(1, n + 1):
                edge = cid
                for _ in range(k - 1):
                    edge = h.face(edge, 1, 0)
                for _ in range(n - k):
                    edge = h.face(edge, 2, 0)
                letters.append(edge_labels[edge])
            words[cid] = tuple(letters)
    return Labeling(h, words)


def validate_labeling(lab: Labeling) -> list[str]:
    """Check that a labeling is a morphism into the label complex.

    Verifies that every cube has a word of its dimension, that words are
    sorted, and that every face's word arises by deleting the corresponding
    letter.  Returns a list of violations, empty when valid.
    """
    h = lab.hda
    violations = []
    for cid in h.ids():
        if cid not in lab.words:
            violations.append(f"no label word for cube {cid!r}")
    for cid, w in lab.words.items():
        if cid not in h:
            violations.append(f"label word for unknown cube {cid!r}")
            continue
        n = h.dim(cid)
        if len(w) != n:
            violations.append(f"cube {cid!r} of dimension {n} has word {w!r} of length {len(w)}")
            continue
        if tuple(sorted(w)) != w:
            violations.append(f"cube {cid!r} has unsorted word {w!r}")
        for k in range(1, n + 1):
            for nu in (0, 1):
                fid = h.face(cid, k, nu)
                expect = torus_face(w, k)
                got = lab.words.get(fid)
                if got != expect:
                    violations.append(
                        f"cube {cid!r} with word {w!r}: face d({k},{nu}) = {fid!r} "
                        f"has word {got!r}, expected {expect!r}"
                    )
    return violations
