"""hdakit: higher-dimensional automata as precubical sets.

The package models concurrent systems as pointed, labeled precubical sets
and provides cube paths with homotopy, depth-bounded unfoldings, a
fixed-point decision procedure for higher-dimensional bisimilarity with an
independent exhaustive cross-check, a JSON document format with a command
line, and an HTTP server for the interactive bisimulation game.
"""

from .bisim import (
    BisimResult,
    Move,
    PairRelation,
    Span,
    exhaustive_bisim_oracle,
    extension_answers,
    hd_bisim,
    homotopy_bisim_check,
    is_open,
    lift_cube_path,
    lift_labeling,
    witness_span,
)
from .core import (
    Cube,
    Hda,
    Morphism,
    PrecubicalSet,
    compose,
    identity_morphism,
    is_isomorphism,
    is_precubical_subset,
    product,
    product_id,
    reachable,
    standard_cube,
    validate_morphism,
    validate_precubical,
)
from .corpus import CORPUS_NAMES, build as build_example, documents as example_documents
from .docio import CubeSpec, HdaDocument, document_from, parse_hda, serialize
from .dot import emit_dot
from .errors import (
    AmbiguousStepError,
    ConcatError,
    HdaError,
    InputError,
    MoveError,
    ParseError,
    PathError,
    PreconditionError,
    ResourceError,
    SemanticError,
    StateError,
)
from .game import (
    DUPLICATOR_WON,
    RUNNING,
    SPOILER_WON,
    Game,
    apply_move,
    engine_answer,
    legal_moves,
    move_from_wire,
    move_to_wire,
    new_game,
)
from .labels import (
    LabelWord,
    Labeling,
    infer_labeling,
    lift_function,
    torus_face,
    validate_labeling,
    word,
)
from .paths import (
    CubePath,
    HomotopyClass,
    Step,
    adjacent,
    concat,
    default_class_bound,
    homotopic,
    homotopy_class,
    is_fan_shaped,
    is_prefix,
    normalize_fan,
    normalize_fan_trace,
    t_measure,
    validate_path,
)
from .server import create_app
from .unfolding import (
    TruncatedUnfolding,
    UnfoldingNode,
    class_prefix,
    is_acyclic,
    is_hd_tree,
    lift_morphism,
    node_id,
    unfold,
)

__version__ = "0.1.0"
