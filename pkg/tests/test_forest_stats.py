"""Inversion statistics against a naive quadratic oracle."""

import pytest
from hypothesis import given

from parkforest import (
    Forest,
    UnknownVertexError,
    all_forests,
    attach_super_root,
    canonical_order,
    forest_stats,
    lead,
    leaders,
    tinv_vector,
    tree_count,
)
from parkforest.forest import children_lists
from parkforest.forest_stats import inv_at, inv_total, inversion_counts

from test_forest import forests


def naive_inversions(parent):
    """Count smaller strict descendants by walking up from every vertex."""
    n = len(parent)
    inv = [0] * (n + 1)
    for v in range(1, n + 1):
        u = parent[v - 1]
        while u:
            if u > v:
                inv[u] += 1
            u = parent[u - 1]
    return inv[1:]


def test_inversions_tiny_by_hand():
    # 3 -> 1 -> 2 (root 3): vertex 3 sees 1 and 2 below, vertex 1 sees none
    fs = forest_stats(Forest((3, 1, 0)))
    assert fs.inv_at == (0, 0, 2)
    assert fs.inv_total == 2
    assert fs.leaders == (1, 2)
    assert fs.tree == 1
    assert fs.inv_type == (2, 0, 1, 0)


def test_stats_exhaustive_against_oracle():
    for n in range(6):
        for f in all_forests(n):
            fs = forest_stats(f)
            assert list(fs.inv_at) == naive_inversions(f.parent)
            assert fs.inv_total == sum(fs.inv_at)
            assert fs.tree == f.parent.count(0)
            assert fs.leaders == tuple(
                v for v in range(1, n + 1) if fs.inv_at[v - 1] == 0
            )
            assert sum(fs.inv_type) == n
            assert fs.inv_type[n] == 0 if n else fs.inv_type == (0,)


@given(forests(max_n=40))
def test_stats_random_against_oracle(f):
    fs = forest_stats(f)
    assert list(fs.inv_at) == naive_inversions(f.parent)


@given(forests(max_n=24))
def test_type_vector_counts(f):
    fs = forest_stats(f)
    for k, t in enumerate(fs.inv_type):
        assert t == sum(1 for x in fs.inv_at if x == k)


def test_single_vertex_helpers():
    f = Forest((3, 1, 0))
    assert inv_at(f, 3) == 2 and inv_at(f, 1) == 0
    assert inv_total(f) == 2


def test_inversion_counts_on_tree_children():
    # same engine drives tree overlays; index 0 stays untouched
    f = Forest((0, 1, 1))
    inv = inversion_counts(children_lists(f.parent), [2, 3, 1])
    assert inv[1:] == [0, 0, 0]


def test_report_keys():
    rep = forest_stats(Forest((2, 0))).as_report()
    assert set(rep) == {"n", "invAt", "invTotal", "leaders", "lead", "tree", "tinv"}
    assert rep["n"] == 2 and rep["tinv"] == [1, 1, 0]


def test_inv_at_rejects_unknown_vertices():
    f = Forest((0, 1))
    with pytest.raises(UnknownVertexError):
        inv_at(f, 0)
    with pytest.raises(UnknownVertexError):
        inv_at(f, 3)
    t = attach_super_root(canonical_order(f))
    assert inv_at(t, 3) == 2  # the attached top sees both vertices below
    with pytest.raises(UnknownVertexError):
        inv_at(t, 4)


def test_tree_counts_extend_forest_counts():
    # Attaching the top label never disturbs the counts below it, and the
    # top itself dominates all n vertices.
    for parent in [(0,), (0, 0), (2, 0), (0, 1), (3, 1, 0), (0, 1, 1, 2, 0)]:
        f = Forest(parent)
        t = attach_super_root(canonical_order(f))
        assert inv_at(t, f.n + 1) == f.n
        for v in range(1, f.n + 1):
            assert inv_at(t, v) == inv_at(f, v)
        assert inv_total(t) == inv_total(f) + f.n


def test_standalone_statistic_wrappers_match_bundle():
    for parent in [(), (0,), (2, 0), (0, 1, 1), (3, 1, 0, 0, 4)]:
        f = Forest(parent)
        fs = forest_stats(f)
        assert leaders(f) == fs.leaders
        assert lead(f) == fs.lead
        assert tree_count(f) == fs.tree
        assert tinv_vector(f) == fs.inv_type
        assert inv_total(f) == fs.inv_total


def test_every_leaf_is_a_leader():
    for n in range(6):
        for f in all_forests(n):
            fs = forest_stats(f)
            has_child = set(p for p in f.parent if p)
            leaves = {v for v in range(1, n + 1) if v not in has_child}
            assert leaves <= set(fs.leaders)
            assert fs.lead >= len(leaves)
