"""Forest construction, validation, canonical order, super-root."""

import pytest
from hypothesis import given, strategies as st

from parkforest import (
    CycleError,
    Forest,
    OutOfRangeError,
    SelfParentError,
    all_forests,
    attach_super_root,
    canonical_order,
    postorder,
    preorder,
    strip_super_root,
    validate_forest,
)
from parkforest.forest import bottom_up_order, children_lists, subtree_maxima


def forests(max_n=8):
    """Strategy: valid parent sequences drawn through attachment order."""

    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        parent = [0] * n
        # attach vertices in random order; each picks a parent among the
        # already-attached vertices or the ground, so no cycles can form
        order = draw(st.permutations(list(range(1, n + 1))))
        placed = []
        for v in order:
            choice = draw(st.integers(min_value=0, max_value=len(placed)))
            parent[v - 1] = 0 if choice == 0 else placed[choice - 1]
            placed.append(v)
        return Forest(tuple(parent))

    return st.composite(build)()


def test_validate_accepts_simple_cases():
    assert validate_forest([]).parent == ()
    assert validate_forest([0]).parent == (0,)
    assert validate_forest([0, 1, 1]).parent == (0, 1, 1)
    assert validate_forest([2, 0]).parent == (2, 0)


def test_validate_rejects_self_parent():
    with pytest.raises(SelfParentError):
        validate_forest([1])
    with pytest.raises(SelfParentError):
        validate_forest([0, 2])


def test_validate_rejects_out_of_range():
    with pytest.raises(OutOfRangeError):
        validate_forest([3])
    with pytest.raises(OutOfRangeError):
        validate_forest([-1])


def test_validate_rejects_cycles():
    with pytest.raises(CycleError):
        validate_forest([2, 1])
    with pytest.raises(CycleError):
        validate_forest([2, 3, 1])
    with pytest.raises(CycleError):
        validate_forest([0, 3, 4, 2])  # 2 -> 3 -> 4 -> 2


def test_children_lists_roots_under_zero():
    ch = children_lists((0, 1, 1, 0))
    assert ch[0] == [1, 4]
    assert ch[1] == [2, 3]
    assert ch[2] == [] and ch[3] == [] and ch[4] == []


def test_subtree_maxima_by_definition():
    # 5 -> 2 -> 1, 4 -> 3 rooted at 1 and 3
    f = validate_forest([0, 1, 0, 3, 2])
    assert subtree_maxima(f.parent)[1:] == [5, 5, 4, 4, 5]


def test_canonical_order_sorts_by_subtree_maximum():
    # two roots 1 and 2; 1 carries the larger subtree via child 3
    of = canonical_order(validate_forest([0, 0, 1]))
    assert of.roots == (1, 2)
    # root list flips when the large subtree hangs under 2 instead
    of = canonical_order(validate_forest([0, 0, 2]))
    assert of.roots == (2, 1)


def test_canonical_order_children():
    # children of 1: subtrees max(4)=4 via 2, max(3)=3
    of = canonical_order(validate_forest([0, 1, 1, 2]))
    assert of.children[1] == (2, 3)
    of = canonical_order(validate_forest([0, 1, 1, 3]))
    assert of.children[1] == (3, 2)


def test_attach_strip_roundtrip_small():
    for f in all_forests(4):
        of = canonical_order(f)
        t = attach_super_root(of)
        assert t.root == f.n + 1
        assert t.children[t.root] == of.roots
        back = strip_super_root(t)
        assert back.parent == of.parent
        assert back.children == of.children


def test_postorder_and_preorder_cover_once():
    f = validate_forest([0, 1, 1, 2, 0])
    t = attach_super_root(canonical_order(f))
    po, pre = postorder(t), preorder(t)
    assert sorted(po) == sorted(pre) == list(range(1, 7))
    assert po[-1] == t.root and pre[0] == t.root


def test_postorder_children_before_parents():
    for f in all_forests(4):
        t = attach_super_root(canonical_order(f))
        seen = set()
        for v in postorder(t):
            assert all(c in seen for c in t.children[v])
            seen.add(v)


def test_postorder_respects_drawing_order():
    # canonical drawing: the left subtree (larger maximum) comes first
    f = validate_forest([0, 0, 2])  # roots ordered 2, 1
    t = attach_super_root(canonical_order(f))
    assert postorder(t) == (3, 2, 1, 4)


@given(forests())
def test_validate_accepts_generated(f):
    assert validate_forest(f.parent).parent == f.parent


@given(forests())
def test_attach_strip_roundtrip(f):
    of = canonical_order(f)
    assert strip_super_root(attach_super_root(of)) == of


@given(forests())
def test_canonical_children_strictly_decreasing(f):
    of = canonical_order(f)
    submax = subtree_maxima(f.parent)
    for lst in of.children:
        maxima = [submax[c] for c in lst]
        assert maxima == sorted(maxima, reverse=True)
        assert len(set(maxima)) == len(maxima)


@given(forests())
def test_bottom_up_order_is_valid(f):
    seen = set()
    ch = children_lists(f.parent)
    order = bottom_up_order(f.parent)
    assert sorted(order) == list(range(1, f.n + 1))
    for v in order:
        assert all(c in seen for c in ch[v])
        seen.add(v)
