"""Command-line interface.

Subcommands::

    validate FILE                          check a document, list violations
    bisim A B [--labeled] [--witness OUT] [--oracle]
                                           decide bisimilarity of two files
    unfold FILE --depth D [--dot OUT]      unfold and print the result
    paths FILE --to CUBE [--max-len L]     pointed cube paths to a cube
    homotopic FILE --path a,b,c --path d,e,f
                                           decide homotopy of two paths
    normalize FILE --path a,b,c            rewrite a path into fan shape
    product A B                            synchronized product of two files
    serve [--port N] [--host H]            run the game HTTP server

Exit codes: 0 = affirmative decision, 1 = negative decision, 2 = input or
usage error, 3 = resource bound exceeded.  The environment variable
``HDA_MAX_CLASS`` caps homotopy-class enumeration.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bisim import (
    exhaustive_bisim_oracle,
    hd_bisim,
    lift_labeling,
    witness_span,
)
from .core import Hda, product, product_id
from .docio import HdaDocument, document_from, parse_hda, serialize
from .dot import emit_dot
from .errors import (
    HdaError,
    InputError,
    ParseError,
    ResourceError,
    SemanticError,
)
from .game import RUNNING, apply_move, engine_answer, new_game
from .paths import homotopic, normalize_fan_trace, t_measure, validate_path
from .unfolding import is_acyclic, unfold

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

__all__ = ["main", "entry"]


def _load(path: str) -> HdaDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return parse_hda(text)
    except ParseError as exc:
        where = f" (line {exc.line}, column {exc.column})" if exc.line else ""
        raise InputError(f"{path}: {exc}{where}") from None
    except SemanticError as exc:
        lines = "".join(f"\n  - {v}" for v in exc.violations)
        raise InputError(f"{path}: {exc}{lines}") from None


def _labeled_pair(doc_a: HdaDocument, doc_b: HdaDocument, labeled: bool):
    if labeled and (doc_a.labels is None or doc_b.labels is None):
        raise InputError("--labeled needs label tables in both documents")
    la = doc_a.labeling() if labeled else None
    lb = doc_b.labeling() if labeled else None
    return doc_a.to_hda(), doc_b.to_hda(), la, lb


def cmd_validate(args) -> int:
    doc = _load(args.file)
    h = doc.to_hda()
    grading = ", ".join(
        f"{len(h.by_dim(n))}x dim {n}" for n in range(h.max_dim() + 1)
    )
    kind = "labeled" if doc.labels is not None else "unlabeled"
    print(f"ok: {len(h)} cubes ({grading}), {kind}, initial {h.initial!r}")
    return EXIT_YES


def _strategy_lines(x, y, labeled, la, lb, result) -> list[str]:
    """One concrete winning line of the spoiler, move by move."""
    limit = max(result.relation.rank.values(), default=1) + 1
    game = new_game(
        x, y, human_role="duplicator", labeled=labeled,
        x_labels=la, y_labels=lb, round_limit=limit, result=result,
    )
    while game.status == RUNNING:
        apply_move(game, engine_answer(game))
    lines = []
    pending = None
    for move in game.history:
        if pending is None:
            lines.append(f"  spoiler:    {move!r}")
            pending = move if move.kind == "extend" else None
        else:
            lines.append(f"  duplicator: {move!r}")
            pending = None
    lines.append("  duplicator: no answer")
    return lines


def cmd_bisim(args) -> int:
    doc_a, doc_b = _load(args.a), _load(args.b)
    x, y, la, lb = _labeled_pair(doc_a, doc_b, args.labeled)
    if args.oracle:
        if args.witness:
            raise InputError("--witness needs the fixed-point route, not --oracle")
        verdict = exhaustive_bisim_oracle(x, y, args.labeled, la, lb)
        print("bisimilar" if verdict else "not bisimilar")
        return EXIT_YES if verdict else EXIT_NO
    result = hd_bisim(x, y, args.labeled, la, lb)
    if result.bisimilar:
        print("bisimilar")
        if args.witness:
            span = witness_span(x, y, args.labeled, la, lb, result=result)
            Path(args.witness).write_text(serialize(document_from(span.relation)))
            print(f"witness relation written to {args.witness}")
        return EXIT_YES
    print("not bisimilar")
    rank = result.relation.rank.get((x.initial, y.initial))
    print(f"spoiler wins within {rank} rounds from ({x.initial}, {y.initial}):")
    for line in _strategy_lines(x, y, args.labeled, la, lb, result):
        print(line)
    return EXIT_NO


def cmd_unfold(args) -> int:
    doc = _load(args.file)
    h = doc.to_hda()
    u = unfold(h, args.depth)
    labeling = None
    if doc.labels is not None:
        labeling = lift_labeling(u, doc.labeling())
    sys.stdout.write(serialize(document_from(u.hda, labeling=labeling)))
    if args.dot:
        Path(args.dot).write_text(emit_dot(u.hda, labeling))
    return EXIT_YES


def cmd_paths(args) -> int:
    doc = _load(args.file)
    h = doc.to_hda()
    h.cube(args.to)
    limit = args.max_len
    if limit is None:
        if not is_acyclic(h):
            raise InputError(
                "the complex is cyclic; bound the search with --max-len"
            )
        limit = len(h)
    if limit < 1:
        raise InputError(f"--max-len must be >= 1, got {limit}")
    found = 0
    stack = [(h.initial,)]
    while stack:
        path = stack.pop()
        if path[-1] == args.to:
            print(",".join(path))
            found += 1
        if len(path) < limit:
            last = path[-1]
            for nxt in list(h.cube(last).d1) + h.cofaces(last):
                stack.append(path + (nxt,))
    return EXIT_YES if found else EXIT_NO


def _parse_path(h: Hda, spec: str):
    return validate_path(h, tuple(spec.split(",")))


def cmd_homotopic(args) -> int:
    doc = _load(args.file)
    h = doc.to_hda()
    if len(args.path) != 2:
        raise InputError("give exactly two --path options")
    p, q = (_parse_path(h, s) for s in args.path)
    verdict = homotopic(p, q)
    print("homotopic" if verdict else "not homotopic")
    return EXIT_YES if verdict else EXIT_NO


def cmd_normalize(args) -> int:
    doc = _load(args.file)
    h = doc.to_hda()
    path = _parse_path(h, args.path)
    result, rewrites, _ = normalize_fan_trace(path)
    print(",".join(result.cubes))
    print(f"rewrites: {rewrites}, T: {t_measure(path)} -> {t_measure(result)}")
    return EXIT_YES


def cmd_product(args) -> int:
    doc_a, doc_b = _load(args.a), _load(args.b)
    ha, hb = doc_a.to_hda(), doc_b.to_hda()
    prod = product(ha, hb)
    pointed = Hda(prod.cubes(), product_id(ha.initial, hb.initial))
    sys.stdout.write(serialize(document_from(pointed)))
    return EXIT_YES


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdakit",
        description="Higher-dimensional automata: validation, bisimilarity, "
        "paths, unfolding, and the bisimulation game server.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document and report violations")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bisim", help="decide bisimilarity of two documents")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--labeled", action="store_true", help="compare label words")
    p.add_argument("--witness", metavar="OUT", help="write the witness relation")
    p.add_argument(
        "--oracle", action="store_true",
        help="decide by exhaustive subset search instead of the fixed point",
    )
    p.set_defaults(func=cmd_bisim)

    p = sub.add_parser("unfold", help="unfold a document to given depth")
    p.add_argument("file")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--dot", metavar="OUT", help="also write a DOT drawing")
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("paths", help="list pointed cube paths to a cube")
    p.add_argument("file")
    p.add_argument("--to", required=True, metavar="CUBE")
    p.add_argument("--max-len", type=int, help="maximum path length")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("homotopic", help="decide homotopy of two cube paths")
    p.add_argument("file")
    p.add_argument(
        "--path", action="append", default=[], metavar="a,b,c",
        help="comma-separated cube ids (give twice)",
    )
    p.set_defaults(func=cmd_homotopic)

    p = sub.add_parser("normalize", help="rewrite a path into fan shape")
    p.add_argument("file")
    p.add_argument("--path", required=True, metavar="a,b,c")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("product", help="synchronized product of two documents")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("serve", help="run the game HTTP server")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except HdaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
