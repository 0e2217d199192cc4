"""The two directions of the map, the relabelings, and their goldens."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from parkforest import (
    Forest,
    InvalidInversionValueError,
    MalformedInputError,
    NotParkingFunctionError,
    all_forests,
    apply_labeling,
    attach_super_root,
    canonical_order,
    forest_to_parking,
    inverse_relabel,
    inversion_counts,
    nearest_larger_right_tree,
    parking_to_forest,
    postorder,
    sample_forest,
    sample_parking_function,
    relabel_decreasing,
)
from parkforest.bijection import map_trace, unmap_trace

from test_forest import forests

P14 = (10, 2, 6, 5, 7, 1, 13, 10, 4, 1, 14, 9, 11, 5)
WORD14 = (6, 2, 10, 9, 4, 3, 5, 14, 12, 1, 8, 13, 7, 11, 15)
JUMPROW14 = (0, 0, 2, 0, 0, 0, 0, 3, 0, 0, 1, 1, 0, 0, 14)


def test_forward_tiny_by_hand():
    assert forest_to_parking(Forest((0, 0)))[0] == (2, 1)
    assert forest_to_parking(Forest((2, 0)))[0] == (1, 1)
    assert forest_to_parking(Forest((0, 1)))[0] == (1, 2)
    assert forest_to_parking(Forest(()))[0] == ()
    assert forest_to_parking(Forest((0,)))[0] == (1,)


def test_backward_tiny_by_hand():
    assert parking_to_forest((2, 1))[0].parent == (0, 0)
    assert parking_to_forest((1, 1))[0].parent == (2, 0)
    assert parking_to_forest((1, 2))[0].parent == (0, 1)
    assert parking_to_forest(())[0].parent == ()


def test_backward_rejects_non_parking():
    with pytest.raises(NotParkingFunctionError):
        parking_to_forest((2, 2))
    with pytest.raises(NotParkingFunctionError):
        parking_to_forest((4, 3, 3, 1, 5))


def test_label_map_shape():
    p, lmap = forest_to_parking(Forest((0, 1, 1)))
    assert sorted(lmap.to_car[1:]) == [1, 2, 3]
    for v in range(1, 4):
        assert lmap.vertex_of(lmap.car_of(v)) == v


def test_relabel_chain_by_hand():
    # chain 3 -> 1 -> 2 relabels to 3 -> 2 -> 1: the middle vertex takes
    # the larger of the two labels below the root
    f = Forest((3, 1, 0))
    t = attach_super_root(canonical_order(f))
    lab = relabel_decreasing(t)
    assert lab[3] == 3 and lab[1] == 2 and lab[2] == 1 and lab[4] == 4


def test_relabel_result_is_decreasing():
    for f in all_forests(5):
        t = attach_super_root(canonical_order(f))
        lab = relabel_decreasing(t)
        d = apply_labeling(t, lab)
        for v in range(1, d.root + 1):
            for c in d.children[v]:
                assert c < v
        assert sorted(lab[1:]) == list(range(1, t.root + 1))


def test_relabel_default_matches_explicit_preorder():
    from parkforest import preorder

    for f in all_forests(5):
        t = attach_super_root(canonical_order(f))
        assert relabel_decreasing(t) == relabel_decreasing(t, preorder(t))


def test_relabel_order_independent_small():
    rng = random.Random(42)
    for f in all_forests(4):
        t = attach_super_root(canonical_order(f))
        base = relabel_decreasing(t)
        order = list(range(1, t.root + 1))
        for _ in range(10):
            rng.shuffle(order)
            assert relabel_decreasing(t, order) == base


def test_relabel_rejects_bad_order():
    t = attach_super_root(canonical_order(Forest((0, 1))))
    with pytest.raises(MalformedInputError):
        relabel_decreasing(t, [1, 2])  # missing the root
    with pytest.raises(MalformedInputError):
        relabel_decreasing(t, [1, 1, 2, 3])


def test_inverse_relabel_chain_by_hand():
    # decreasing chain 3 -> 2 -> 1 with two inversions at the root and
    # none below recovers the chain 3 -> 1 -> 2
    t = nearest_larger_right_tree((1, 2, 3))
    orig = inverse_relabel(t, (0, 0, 0, 2))
    assert orig[3] == 3 and orig[2] == 1 and orig[1] == 2


def test_inverse_relabel_undoes_relabel():
    rng = random.Random(99)
    for f in all_forests(5):
        t = attach_super_root(canonical_order(f))
        lab = relabel_decreasing(t)
        d = apply_labeling(t, lab)
        # targets live on the renamed vertices: new label j needs the
        # inversion count of the vertex that became j
        from parkforest.forest_stats import inversion_counts
        from parkforest import postorder

        inv = inversion_counts(t.children, postorder(t))
        targets = [0] * (d.root + 1)
        for v in range(1, t.root + 1):
            targets[lab[v]] = inv[v]
        orig = inverse_relabel(d, targets)
        # applying the recovered labels to the renamed tree gives back t
        assert apply_labeling(d, orig) == t
        order = list(range(1, d.root + 1))
        rng.shuffle(order)
        assert inverse_relabel(d, targets, order) == orig


def test_inverse_relabel_rejects_bad_targets():
    t = nearest_larger_right_tree((1, 2, 3))
    with pytest.raises(InvalidInversionValueError):
        inverse_relabel(t, (0, 1, 0, 0))  # leaf cannot have an inversion
    with pytest.raises(InvalidInversionValueError):
        inverse_relabel(t, (0, 0, 0, 3))
    with pytest.raises(InvalidInversionValueError):
        inverse_relabel(t, (0, 2, 0, 2), order=[2, 1, 3])
    with pytest.raises(MalformedInputError):
        inverse_relabel(t, (0, 0, 0))


def test_nearest_larger_right_tree_n14_shape():
    t = nearest_larger_right_tree(WORD14)
    assert t.children[15] == (14, 13, 11)
    assert t.children[14] == (10, 9, 5)
    assert t.children[13] == (12, 8)
    assert t.children[10] == (6, 2)
    assert t.children[5] == (4, 3)
    assert t.children[8] == (1,)
    assert t.children[11] == (7,)
    assert t.parent[7] == 11 and t.parent[12] == 13


def test_nearest_larger_right_tree_rejects_bad_words():
    with pytest.raises(MalformedInputError):
        nearest_larger_right_tree((2, 1, 3, 3))
    with pytest.raises(MalformedInputError):
        nearest_larger_right_tree((3, 1, 2))  # must end in the maximum
    with pytest.raises(MalformedInputError):
        nearest_larger_right_tree((1, 2, 4))


def test_apply_labeling_identity():
    t = attach_super_root(canonical_order(Forest((0, 1, 1))))
    assert apply_labeling(t, tuple(range(t.root + 1))) == t


def test_golden_n14():
    f, lmap = parking_to_forest(P14)
    assert forest_to_parking(f)[0] == P14
    assert lmap.car_of(10) == 9
    assert lmap.car_of(8) == 13
    tr = unmap_trace(P14)
    assert tuple(tr["word"]) == WORD14
    assert tuple(tr["jumpRow"]) == JUMPROW14


def test_roundtrip_exhaustive_small():
    for n in range(6):
        seen = set()
        for f in all_forests(n):
            p, lmap = forest_to_parking(f)
            assert p not in seen
            seen.add(p)
            back, back_map = parking_to_forest(p)
            assert back.parent == f.parent
            assert back_map.to_car == lmap.to_car


@settings(deadline=None)
@given(forests(max_n=60))
def test_roundtrip_random(f):
    p, _ = forest_to_parking(f)
    assert parking_to_forest(p)[0].parent == f.parent


@settings(deadline=None)
@given(forests(max_n=60), st.randoms(use_true_random=False))
def test_relabel_order_independent_random(f, rng):
    t = attach_super_root(canonical_order(f))
    base = relabel_decreasing(t)
    order = list(range(1, t.root + 1))
    rng.shuffle(order)
    assert relabel_decreasing(t, order) == base


def test_map_trace_structure():
    tr = map_trace(Forest((0, 1, 1)))
    assert tr["parking"] == [2, 1, 3]
    assert tr["superRoot"] == 4
    cars = [row["car"] for row in tr["rows"]]
    assert cars == [1, 2, 3, 4]
    root_row = tr["rows"][-1]
    assert root_row["preference"] == 1  # super-root information is dropped


def test_ten_thousand_random_roundtrips_at_n500():
    # Volume check far beyond enumeration reach; half the budget starts
    # from a forest, half from a parking function.
    n = 500
    rng = random.Random(424242)
    for _ in range(5000):
        f = sample_forest(n, rng)
        p, lmap = forest_to_parking(f)
        back, back_map = parking_to_forest(p)
        assert back.parent == f.parent
        assert back_map.to_car == lmap.to_car
    for _ in range(5000):
        p = sample_parking_function(n, rng)
        f, _ = parking_to_forest(p)
        again, _ = forest_to_parking(f)
        assert again == p


def test_relabel_order_independent_on_large_random_trees():
    rng = random.Random(31)
    for _ in range(5):
        f = sample_forest(100, rng)
        t = attach_super_root(canonical_order(f))
        base = relabel_decreasing(t)
        for _ in range(20):
            order = list(range(1, t.root + 1))
            rng.shuffle(order)
            assert relabel_decreasing(t, order) == base


def _forward_overlay(f):
    """Recompute the forward map's intermediates for invariant checks."""
    t = attach_super_root(canonical_order(f))
    po = postorder(t)
    m = f.n + 1
    pos = [0] * (m + 1)
    for i, v in enumerate(po, start=1):
        pos[v] = i
    inv = inversion_counts(t.children, po)
    lab = relabel_decreasing(t)
    word = [0] * m
    for v in range(1, m + 1):
        word[pos[v] - 1] = lab[v]
    return t, pos, inv, lab, word


def test_forward_overlay_invariants():
    rng = random.Random(11)
    cases = [f for n in range(5) for f in all_forests(n)]
    cases += [sample_forest(60, rng) for _ in range(10)]
    for f in cases:
        t, pos, inv, lab, word = _forward_overlay(f)
        m = f.n + 1
        assert sorted(lab[1:]) == list(range(1, m + 1))
        assert word[-1] == m  # the top label closes the word
        for v in range(1, m + 1):
            p = t.parent[v]
            if p:
                assert lab[v] < lab[p]  # labels decrease away from the top
            assert pos[v] - inv[v] >= 1  # every emitted preference is positive
        # Reading the word back through the nearest-larger-to-the-right
        # rule recovers exactly the relabeled tree.
        rebuilt = nearest_larger_right_tree(word)
        for v in range(1, m + 1):
            p = t.parent[v]
            assert rebuilt.parent[lab[v]] == (lab[p] if p else 0)
