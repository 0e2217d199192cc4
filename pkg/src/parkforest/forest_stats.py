"""Inversion statistics of rooted labeled forests.

An inversion of a forest at vertex v counts the strict descendants of v
carrying a smaller label.  Derived from that single notion:

  inv_total   sum of the counts over all vertices
  leaders     vertices with no inversions at all
  tree_count  number of components (equivalently, roots)
  inv_type    vector t where t[k] = number of vertices with exactly k
              inversions; always reported with n+1 entries so it lines
              up index by index with the jump type of a preference
              sequence of length n (the top entry is always 0)

Counts are gathered in one bottom-up sweep that keeps, per vertex, the
sorted list of labels in its subtree; merging children lists and one
bisection give the count without quadratic rescans.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Sequence

from .errors import UnknownVertexError
from .forest import Forest, OrderedTree, bottom_up_order, children_lists


@dataclass(frozen=True)
class ForestStats:
    n: int
    inv_at: tuple[int, ...]  # inv_at[v-1] is the count at vertex v
    inv_total: int
    leaders: tuple[int, ...]
    lead: int
    tree: int
    inv_type: tuple[int, ...]

    def as_report(self) -> dict:
        return {
            "n": self.n,
            "invAt": list(self.inv_at),
            "invTotal": self.inv_total,
            "leaders": list(self.leaders),
            "lead": self.lead,
            "tree": self.tree,
            "tinv": list(self.inv_type),
        }


def inversion_counts(
    children: Sequence[Sequence[int]], order: Sequence[int]
) -> list[int]:
    """Smaller-strict-descendant count per vertex (index 0 unused).

    children may cover a forest (children[0] = roots, ignored here) or a
    single tree; order must visit every vertex after all its children.
    """
    m = len(children) - 1
    inv = [0] * (m + 1)
    labels: list = [None] * (m + 1)  # sorted subtree label lists, freed as used
    for v in order:
        ch = children[v]
        if ch:
            merged = labels[ch[0]]
            labels[ch[0]] = None
            for c in ch[1:]:
                merged += labels[c]
                labels[c] = None
            merged.sort()
            inv[v] = bisect_left(merged, v)
            insort(merged, v)
        else:
            merged = [v]
        labels[v] = merged
    return inv


def subtree_label_lists(
    children: Sequence[Sequence[int]], order: Sequence[int]
) -> list:
    """Per vertex, the sorted list of labels in its subtree (self included).

    Unlike inversion_counts this keeps every list alive, which is what the
    relabeling procedures need.
    """
    m = len(children) - 1
    labels: list = [None] * (m + 1)
    for v in order:
        merged = [v]
        for c in children[v]:
            merged += labels[c]
        merged.sort()
        labels[v] = merged
    return labels


def forest_stats(f: Forest) -> ForestStats:
    """All inversion statistics of a forest in one pass."""
    n = f.n
    ch = children_lists(f.parent)
    inv = inversion_counts(ch, bottom_up_order(f.parent))
    inv_at = tuple(inv[1:])
    inv_type = [0] * (n + 1)
    for k in inv_at:
        inv_type[k] += 1
    assert n == 0 or inv_type[n] == 0, "a vertex has at most n-1 inversions"
    leaders = tuple(v for v in range(1, n + 1) if inv[v] == 0)
    return ForestStats(
        n=n,
        inv_at=inv_at,
        inv_total=sum(inv_at),
        leaders=leaders,
        lead=len(leaders),
        tree=f.parent.count(0),
        inv_type=tuple(inv_type),
    )


def _counts_of(g: Forest | OrderedTree) -> list[int]:
    """Inversion counts for a forest or an attached tree (super-root included)."""
    if isinstance(g, OrderedTree):
        return inversion_counts(g.children, bottom_up_order(g.parent[1:]))
    return inversion_counts(children_lists(g.parent), bottom_up_order(g.parent))


def inv_at(g: Forest | OrderedTree, v: int) -> int:
    """Inversion count at one vertex; prefer forest_stats for many.

    On a Forest the vertices are 1..n; on an OrderedTree the top label
    (the super-root) counts too, with its full descendant set.
    """
    top = g.root if isinstance(g, OrderedTree) else g.n
    if not 1 <= v <= top:
        raise UnknownVertexError(f"vertex {v} is not among 1..{top}")
    return _counts_of(g)[v]


def inv_total(g: Forest | OrderedTree) -> int:
    return sum(_counts_of(g)[1:])


def leaders(g: Forest | OrderedTree) -> tuple[int, ...]:
    """Vertices whose strict descendants all carry larger labels."""
    top = g.root if isinstance(g, OrderedTree) else g.n
    counts = _counts_of(g)
    return tuple(v for v in range(1, top + 1) if counts[v] == 0)


def lead(g: Forest | OrderedTree) -> int:
    return len(leaders(g))


def tree_count(f: Forest) -> int:
    """Number of components, i.e. of root vertices."""
    return f.parent.count(0)


def tinv_vector(f: Forest) -> tuple[int, ...]:
    """inv_type alone: entry k counts vertices with exactly k inversions."""
    return forest_stats(f).inv_type
