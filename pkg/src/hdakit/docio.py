"""Reading and writing the JSON document format for HDAs.

A document is a JSON object::

    {
      "cubes": [
        {"id": "x0", "dim": 0, "d0": [], "d1": [], "pos": [0, 0]},
        {"id": "y1", "dim": 1, "d0": ["x0"], "d1": ["x1"]},
        ...
      ],
      "initial": "x0",
      "labels": {"y1": "a", ...}
    }

``pos`` is an optional layout hint (two numbers) used by graphical clients;
``labels`` is optional and, when present, must assign one symbol to every
1-cube.  Parsing validates eagerly: structure, the precubical identity, the
initial cube, and label consistency all fail fast with precise messages.
Serialization is canonical (sorted keys, two-space indent, preserved cube
order), so ``serialize`` after ``parse_hda`` is the identity on canonical
files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Cube, Hda, PrecubicalSet, validate_precubical
from .errors import ParseError, SemanticError
from .labels import Labeling, infer_labeling, validate_labeling

__all__ = ["CubeSpec", "HdaDocument", "parse_hda", "serialize", "document_from"]

_CUBE_KEYS = {"id", "dim", "d0", "d1", "pos"}
_TOP_KEYS = {"cubes", "initial", "labels"}


@dataclass
class CubeSpec:
    """One cube entry of a document."""

    id: str
    dim: int
    d0: tuple[str, ...] = ()
    d1: tuple[str, ...] = ()
    pos: tuple[float, float] | None = None

    def __post_init__(self):
        self.d0 = tuple(self.d0)
        self.d1 = tuple(self.d1)
        if self.pos is not None:
            self.pos = tuple(self.pos)


@dataclass
class HdaDocument:
    """A parsed document: cube list, initial cube, optional edge labels."""

    cubes: list[CubeSpec]
    initial: str
    labels: dict[str, str] | None = None
    _hda: Hda | None = field(default=None, repr=False, compare=False)
    _labeling: Labeling | None = field(default=None, repr=False, compare=False)

    def to_hda(self) -> Hda:
        """The document as an HDA; built once and cached."""
        if self._hda is None:
            self._hda = Hda(
                [Cube(c.id, c.dim, c.d0, c.d1) for c in self.cubes], self.initial
            )
        return self._hda

    def labeling(self) -> Labeling | None:
        """The labeling induced by the edge labels, or None when unlabeled."""
        if self.labels is None:
            return None
        if self._labeling is None:
            self._labeling = infer_labeling(self.to_hda(), self.labels)
        return self._labeling


def _check(cond, violations, message):
    if not cond:
        violations.append(message)
    return cond


def parse_hda(text: str) -> HdaDocument:
    """Parse and fully validate a document; errors carry positions or lists."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None

    violations: list[str] = []
    if not isinstance(raw, dict):
        raise SemanticError("document must be a JSON object", ["top level is not an object"])
    for key in raw:
        _check(key in _TOP_KEYS, violations, f"unknown top-level key {key!r}")
    _check("cubes" in raw, violations, "missing key 'cubes'")
    _check("initial" in raw, violations, "missing key 'initial'")
    if violations:
        raise SemanticError("invalid document structure", violations)

    cubes_raw = raw["cubes"]
    if not isinstance(cubes_raw, list):
        raise SemanticError("invalid document structure", ["'cubes' must be an array"])
    specs = []
    for i, entry in enumerate(cubes_raw):
        where = f"cubes[{i}]"
        if not isinstance(entry, dict):
            violations.append(f"{where} is not an object")
            continue
        for key in entry:
            _check(key in _CUBE_KEYS, violations, f"{where}: unknown key {key!r}")
        ok = True
        ok &= _check(
            isinstance(entry.get("id"), str) and bool(entry.get("id")),
            violations,
            f"{where}: 'id' must be a nonempty string",
        )
        ok &= _check(
            isinstance(entry.get("dim"), int) and not isinstance(entry.get("dim"), bool)
            and entry.get("dim") >= 0,
            violations,
            f"{where}: 'dim' must be a nonnegative integer",
        )
        for side in ("d0", "d1"):
            faces = entry.get(side)
            ok &= _check(
                isinstance(faces, list) and all(isinstance(f, str) for f in faces),
                violations,
                f"{where}: {side!r} must be an array of cube ids",
            )
        pos = entry.get("pos")
        if pos is not None:
            ok &= _check(
                isinstance(pos, list)
                and len(pos) == 2
                and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pos),
                violations,
                f"{where}: 'pos' must be an array of two numbers",
            )
        if ok:
            specs.append(
                CubeSpec(
                    entry["id"],
                    entry["dim"],
                    tuple(entry["d0"]),
                    tuple(entry["d1"]),
                    tuple(pos) if pos is not None else None,
                )
            )
    if not isinstance(raw["initial"], str):
        violations.append("'initial' must be a cube id string")
    labels = raw.get("labels")
    if labels is not None:
        if not isinstance(labels, dict) or not all(
            isinstance(k, str) and isinstance(v, str) and v for k, v in labels.items()
        ):
            violations.append("'labels' must map cube ids to nonempty symbol strings")
    if violations:
        raise SemanticError("invalid document structure", violations)

    doc = HdaDocument(specs, raw["initial"], dict(labels) if labels is not None else None)
    hda = doc.to_hda()  # raises SemanticError on structural face problems
    identity = validate_precubical(hda)
    if identity:
        raise SemanticError("precubical identity violated", identity)
    if labels is not None:
        label_problems = validate_labeling(doc.labeling())
        if label_problems:
            raise SemanticError("inconsistent labeling", label_problems)
    return doc


def _cube_json(spec: CubeSpec) -> dict:
    out = {"id": spec.id, "dim": spec.dim, "d0": list(spec.d0), "d1": list(spec.d1)}
    if spec.pos is not None:
        out["pos"] = list(spec.pos)
    return out


def serialize(doc: HdaDocument) -> str:
    """Canonical text of a document: sorted keys, two-space indent, newline end."""
    payload: dict = {
        "cubes": [_cube_json(c) for c in doc.cubes],
        "initial": doc.initial,
    }
    if doc.labels is not None:
        payload["labels"] = dict(sorted(doc.labels.items()))
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def document_from(
    x: PrecubicalSet,
    initial: str | None = None,
    labeling: Labeling | None = None,
    pos: dict[str, tuple[float, float]] | None = None,
) -> HdaDocument:
    """Build a document from an in-memory structure.

    ``initial`` defaults to the HDA's initial cube; a labeling contributes its
    edge symbols; ``pos`` supplies layout hints per cube id.
    """
    if initial is None:
        if not isinstance(x, Hda):
            raise SemanticError("an initial cube is required for a plain precubical set")
        initial = x.initial
    specs = [
        CubeSpec(c.id, c.dim, c.d0, c.d1, (pos or {}).get(c.id))
        for c in x.cubes()
    ]
    labels = labeling.edge_labels() if labeling is not None else None
    return HdaDocument(specs, initial, labels)
