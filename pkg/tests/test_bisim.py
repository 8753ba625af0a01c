"""Bisimilarity: fixed-point route, exhaustive oracle, open maps, witnesses."""

from __future__ import annotations

import pytest

import hdakit as hk
from conftest import pair_of
from frozen import (
    FORK_LABELED_BISIMILAR,
    FORK_WITNESS_PAIRS,
    GRID_LABELED_BISIMILAR,
    GRID_RANKS,
    INDEPENDENCE_LABELED_BISIMILAR,
    INDEPENDENCE_UNLABELED_BISIMILAR,
    WINGS_LABELED_BISIMILAR,
    WINGS_RANKS,
)


def assert_strategy_sound(result: hk.BisimResult) -> None:
    """Every recorded move either wins outright or forces a lower rank."""
    x, y = result.x, result.y
    rank = result.relation.rank
    assert set(result.strategy) == set(rank)
    for pair, move in result.strategy.items():
        rk = rank[pair]
        assert rk >= 1
        if move.kind == "retreat":
            nxt = (x.face(pair[0], move.k, move.nu), y.face(pair[1], move.k, move.nu))
            assert rank.get(nxt, float("inf")) < rk, (pair, move)
        else:
            if move.side == "A":
                answer_in, cur = y, pair[1]
                labels = result.y_labels
                want = result.x_labels.word_of(move.target) if result.labeled else None
            else:
                answer_in, cur = x, pair[0]
                labels = result.x_labels
                want = result.y_labels.word_of(move.target) if result.labeled else None
            for d in hk.extension_answers(answer_in, cur, move.k, want, labels):
                nxt = (move.target, d) if move.side == "A" else (d, move.target)
                assert rank.get(nxt, float("inf")) < rk, (pair, move, d)


# -- the worked example pairs ------------------------------------------------


def test_independence_pair_is_distinguished(docs):
    (x, lx), (y, ly) = pair_of(docs, "independence_filled", "independence_hollow")
    assert hk.hd_bisim(x, y, True, lx, ly).bisimilar is INDEPENDENCE_LABELED_BISIMILAR
    assert hk.hd_bisim(x, y).bisimilar is INDEPENDENCE_UNLABELED_BISIMILAR
    assert_strategy_sound(hk.hd_bisim(x, y, True, lx, ly))


def test_fork_pair_is_bisimilar_with_the_expected_witness(docs):
    (x, lx), (y, ly) = pair_of(docs, "diamond_fork_left", "diamond_fork_right")
    result = hk.hd_bisim(x, y, True, lx, ly)
    assert result.bisimilar is FORK_LABELED_BISIMILAR
    assert result.relation.survivors() == set(FORK_WITNESS_PAIRS)
    assert_strategy_sound(result)

    span = hk.witness_span(x, y, True, lx, ly, result=result)
    expected_ids = {hk.product_id(a, b) for a, b in FORK_WITNESS_PAIRS}
    assert set(span.relation.ids()) == expected_ids
    assert hk.is_precubical_subset(span.relation, hk.product(x, y))
    assert span.relation.initial == hk.product_id(x.initial, y.initial)
    assert hk.is_open(span.left)
    assert hk.is_open(span.right)


def test_wings_pair_ranks(docs):
    (x, lx), (y, ly) = pair_of(docs, "wings_left", "wings_right")
    result = hk.hd_bisim(x, y, True, lx, ly)
    assert result.bisimilar is WINGS_LABELED_BISIMILAR
    for pair, rank in WINGS_RANKS.items():
        assert result.relation.rank[pair] == rank, pair
    assert_strategy_sound(result)
    # in labeled mode a retreat from an equal-word pair lands on an equal-word
    # pair, so first-round removals can only be unanswerable extends
    for pair, rank in result.relation.rank.items():
        if rank == 1:
            assert result.strategy[pair].kind == "extend", pair


def test_grid_pair_ranks(docs):
    (x, lx), (y, ly) = pair_of(docs, "grid_swap_left", "grid_swap_right")
    result = hk.hd_bisim(x, y, True, lx, ly)
    assert result.bisimilar is GRID_LABELED_BISIMILAR
    for pair, rank in GRID_RANKS.items():
        assert result.relation.rank[pair] == rank, pair
    assert_strategy_sound(result)


def test_pair_relation_bookkeeping(docs):
    (x, lx), (y, ly) = pair_of(docs, "wings_left", "wings_right")
    result = hk.hd_bisim(x, y, True, lx, ly)
    rel = result.relation
    universe = set(rel.pairs)
    assert set(rel.rank) <= universe
    assert rel.survivors() == universe - set(rel.rank)
    for a, b in rel.pairs:
        assert lx.word_of(a) == ly.word_of(b), "labeled universe pairs equal words"
    some_removed = next(iter(rel.rank))
    assert not rel.alive(some_removed)
    assert not rel.alive(("ghost", "ghost"))
    survivor = next(iter(rel.survivors()), None)
    if survivor is not None:
        assert rel.alive(survivor)


def test_unlabeled_universe_pairs_equal_dimensions(docs):
    (x, _), (y, _) = pair_of(docs, "independence_filled", "independence_hollow")
    rel = hk.hd_bisim(x, y).relation
    for a, b in rel.pairs:
        assert x.dim(a) == y.dim(b)


# -- the exhaustive oracle ---------------------------------------------------


def test_oracle_agrees_on_the_small_examples(docs):
    (x, lx), (y, ly) = pair_of(docs, "independence_filled", "independence_hollow")
    assert hk.exhaustive_bisim_oracle(x, y, True, lx, ly, bound=100) is False
    assert hk.exhaustive_bisim_oracle(x, y, bound=100) is False

    (x, lx), (y, ly) = pair_of(docs, "diamond_fork_left", "diamond_fork_right")
    assert hk.exhaustive_bisim_oracle(x, y, True, lx, ly, bound=100) is True

    (x, lx), (y, ly) = pair_of(docs, "cycle_two", "cycle_three")
    assert hk.exhaustive_bisim_oracle(x, y, True, lx, ly, bound=100) is False
    assert hk.hd_bisim(x, y, True, lx, ly).bisimilar is False
    assert hk.exhaustive_bisim_oracle(x, y, bound=100) is True
    assert hk.hd_bisim(x, y).bisimilar is True


def test_oracle_enforces_its_bounds(docs):
    (x, lx), (y, ly) = pair_of(docs, "wings_left", "wings_right")
    with pytest.raises(hk.ResourceError, match="<= 30"):
        hk.exhaustive_bisim_oracle(x, y, True, lx, ly)
    with pytest.raises(hk.ResourceError):
        hk.exhaustive_bisim_oracle(x, y, True, lx, ly, bound=200)


def test_oracle_mask_cap():
    # two vertices joined by five parallel edges, squared against itself:
    # 25 compatible edge pairs push the relevant closure over the 24-pair cap
    cubes = [hk.Cube("v", 0), hk.Cube("w", 0)] + [
        hk.Cube(f"e{i}", 1, ("v",), ("w",)) for i in range(5)
    ]
    h = hk.Hda(cubes, "v")
    with pytest.raises(hk.ResourceError, match="cap"):
        hk.exhaustive_bisim_oracle(h, h, bound=100)


# -- preconditions -----------------------------------------------------------


def test_labeled_mode_requires_labelings(docs):
    (x, _), (y, _) = pair_of(docs, "cycle_two", "cycle_three")
    with pytest.raises(hk.InputError):
        hk.hd_bisim(x, y, True)
    with pytest.raises(hk.InputError):
        hk.exhaustive_bisim_oracle(x, y, True, bound=100)


def test_witness_span_requires_bisimilarity(docs):
    (x, lx), (y, ly) = pair_of(docs, "wings_left", "wings_right")
    with pytest.raises(hk.PreconditionError):
        hk.witness_span(x, y, True, lx, ly)


def test_extension_answers_filters_by_word(docs):
    doc = docs["diamond_fork_left"]
    h, lab = doc.to_hda(), doc.labeling()
    unfiltered = hk.extension_answers(h, h.initial, 1)
    assert unfiltered == h.cofaces(h.initial, 1)
    a_targets = hk.extension_answers(h, h.initial, 1, hk.word("a"), lab)
    b_targets = hk.extension_answers(h, h.initial, 1, hk.word("b"), lab)
    assert set(a_targets) | set(b_targets) == set(unfiltered)
    assert not set(a_targets) & set(b_targets)
    assert all(lab.word_of(t) == ("a",) for t in a_targets)


# -- open maps and path lifting ----------------------------------------------


def test_complete_unfolding_projections_are_open(docs):
    for h in (hk.standard_cube(2), docs["square_corridor"].to_hda()):
        u = hk.unfold(h, len(h))
        assert hk.is_open(u.projection)


def test_truncated_projections_are_not_open(docs):
    # the frontier node of a truncated unfolding has lost its extensions
    u = hk.unfold(docs["cycle_two"].to_hda(), 5)
    assert not hk.is_open(u.projection)


def test_vertex_inclusion_is_not_open():
    interval = hk.standard_cube(1)
    point = hk.Hda([hk.Cube("p", 0)], "p")
    inclusion = hk.Morphism(point, interval, {"p": "0"})
    assert hk.validate_morphism(inclusion, pointed=True) == []
    assert not hk.is_open(inclusion), "the interval extends, the point cannot"


def test_is_open_rejects_invalid_morphisms():
    interval = hk.standard_cube(1)
    with pytest.raises(hk.InputError):
        hk.is_open(hk.Morphism(interval, interval, {"0": "0"}))


def test_lifting_paths_along_the_square_projection():
    h = hk.standard_cube(2)
    u = hk.unfold(h, 5)
    f = u.projection
    start = u.hda.initial
    stack = [(h.initial,)]
    count = 0
    while stack:
        cur = stack.pop()
        path = hk.validate_path(h, cur)
        lifted = hk.lift_cube_path(f, start, path)
        assert [f(c) for c in lifted.cubes] == list(path.cubes)
        count += 1
        for nxt in list(h.cube(cur[-1]).d1) + h.cofaces(cur[-1]):
            stack.append(cur + (nxt,))
    assert count == 19


def test_lift_requires_a_matching_start():
    h = hk.standard_cube(2)
    u = hk.unfold(h, 5)
    path = hk.validate_path(h, ("01", "*1"))
    with pytest.raises(hk.InputError, match="starts at"):
        hk.lift_cube_path(u.projection, u.hda.initial, path)


def test_lifting_along_the_fork_witness(docs):
    (x, lx), (y, ly) = pair_of(docs, "diamond_fork_left", "diamond_fork_right")
    span = hk.witness_span(x, y, True, lx, ly)
    path = hk.validate_path(x, ("x0", "y1", "x1"))
    lifted = hk.lift_cube_path(span.left, span.relation.initial, path)
    assert [span.left(c) for c in lifted.cubes] == list(path.cubes)


# -- comparison through unfoldings -------------------------------------------


def test_unfolding_comparison_agrees_on_the_examples(docs):
    (x, lx), (y, ly) = pair_of(docs, "diamond_fork_left", "diamond_fork_right")
    depth = max(len(x), len(y))
    assert hk.homotopy_bisim_check(x, y, depth, True, lx, ly) is True

    (x, lx), (y, ly) = pair_of(docs, "independence_filled", "independence_hollow")
    depth = max(len(x), len(y))
    assert hk.homotopy_bisim_check(x, y, depth, True, lx, ly) is False
    assert hk.homotopy_bisim_check(x, y, depth) is False


def test_lift_labeling_carries_words_to_the_unfolding(docs):
    doc = docs["cycle_two"]
    h, lab = doc.to_hda(), doc.labeling()
    u = hk.unfold(h, 5)
    lifted = hk.lift_labeling(u, lab)
    assert hk.validate_labeling(lifted) == []
    for nid in u.hda.ids():
        assert lifted.word_of(nid) == lab.word_of(u.projection(nid))
    with pytest.raises(hk.InputError):
        hk.lift_labeling(u, docs["cycle_three"].labeling())
