"""The bijection between labeled forests and parking functions.

Forward direction, forest to parking function:

  1. draw the forest canonically and attach the super-root n+1;
  2. overlay postorder positions and inversion counts on the tree;
  3. relabel decreasingly (every label beats all labels below it) with
     relabel_decreasing, remembering which vertex became which label;
  4. the car j = new label of v prefers position(v) - inversions(v).
     The super-root always yields preference 1 and is dropped.

Backward direction, parking function to forest:

  1. append a final car preferring space 1 and park all n+1 cars;
  2. read off the space word and each car's jump;
  3. rebuild the decreasingly labeled tree: each car's parent is the
     nearest larger car to its right in the word;
  4. undo the relabeling with inverse_relabel, which makes each vertex
     take the (jump+1)-th smallest label of its subtree;
  5. strip the super-root.

Both relabeling procedures process each vertex exactly once, in any
order, with the same result; the default is preorder.  When the order is
left unspecified a faster equivalent path is used: along a preorder
sweep, the current labels of the strict descendants of the vertex in
hand always appear in the same relative order as their original labels,
so the order-preserving reassignment can reuse precomputed sorted
subtree lists instead of re-sorting current labels at every step.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    InvalidInversionValueError,
    MalformedInputError,
    NotParkingFunctionError,
    OutOfRangeError,
)
from .forest import (
    Forest,
    OrderedTree,
    attach_super_root,
    canonical_order,
    postorder,
    preorder,
    strip_super_root,
)
from .forest_stats import inversion_counts, subtree_label_lists
from .parking import is_parking_function, park


@dataclass(frozen=True)
class LabelMap:
    """Which car index corresponds to which forest vertex label.

    to_car[v] is the car matching vertex v; slot 0 is an unused sentinel.
    """

    to_car: tuple[int, ...]
    to_vertex: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.to_car) - 1

    def car_of(self, v: int) -> int:
        return self.to_car[v]

    def vertex_of(self, c: int) -> int:
        return self.to_vertex[c]

    def as_report(self) -> dict:
        return {
            "vertexToCar": list(self.to_car[1:]),
            "carToVertex": list(self.to_vertex[1:]),
        }


def _check_processing_order(order: Sequence[int], m: int) -> list[int]:
    order = [int(v) for v in order]
    if sorted(order) != list(range(1, m + 1)):
        raise MalformedInputError(
            f"processing order must visit each of 1..{m} exactly once"
        )
    return order


def relabel_decreasing(
    t: OrderedTree, order: Sequence[int] | None = None
) -> tuple[int, ...]:
    """New label per vertex making every subtree top-heavy.

    Processing a vertex v hands v the largest current label in its
    subtree and redistributes the remaining subtree labels over the
    strict descendants without disturbing their relative order.  The
    result does not depend on the processing order.

    Returns labels with labels[v] the new label of vertex v (labels[0]
    is a sentinel 0).
    """
    m = t.root
    cur = list(range(m + 1))
    if order is None:
        labels = subtree_label_lists(t.children, postorder(t))
        for v in preorder(t):
            sub = labels[v]
            if len(sub) == 1:
                continue
            i = bisect_left(sub, v)
            desc = sub[:i] + sub[i + 1 :]  # strict descendants, label order
            vals = [cur[u] for u in desc]  # ascending, see module docstring
            top = vals[-1]
            mine = cur[v]
            if mine < top:
                vals.pop()
                insort(vals, mine)
                cur[v] = top
                for u, val in zip(desc, vals):
                    cur[u] = val
        return tuple(cur)
    # Reference path: literal order-preserving reassignment at each step.
    labels = subtree_label_lists(t.children, postorder(t))
    for v in _check_processing_order(order, m):
        sub = labels[v]
        i = bisect_left(sub, v)
        desc = sub[:i] + sub[i + 1 :]
        pool = sorted(cur[u] for u in sub)
        by_current = sorted(desc, key=cur.__getitem__)
        cur[v] = pool[-1]
        for u, val in zip(by_current, pool):
            cur[u] = val
    return tuple(cur)


def inverse_relabel(
    t: OrderedTree, targets: Sequence[int], order: Sequence[int] | None = None
) -> tuple[int, ...]:
    """Undo relabel_decreasing given each vertex's inversion count.

    Processing vertex v hands it the (targets[v]+1)-th smallest current
    label in its subtree, so exactly targets[v] strict descendants of v
    end up below it; the remaining labels are redistributed over the
    strict descendants order-preservingly.  Order independent, preorder
    by default.

    Returns labels with labels[v] the recovered label of vertex v.
    """
    m = t.root
    if len(targets) != m + 1:
        raise MalformedInputError(
            f"need one target per vertex plus sentinel, got {len(targets)} for {m}"
        )
    cur = list(range(m + 1))
    if order is None:
        labels = subtree_label_lists(t.children, postorder(t))
        for v in preorder(t):
            sub = labels[v]
            k = len(sub)
            want = targets[v]
            if not 0 <= want < k:
                raise InvalidInversionValueError(
                    f"vertex {v} wants rank {want} in a subtree of size {k}"
                )
            if k == 1:
                continue
            i = bisect_left(sub, v)
            desc = sub[:i] + sub[i + 1 :]
            vals = [cur[u] for u in desc]  # ascending, see module docstring
            mine = cur[v]
            j = bisect_left(vals, mine)
            if want == j:
                continue  # v already holds the wanted rank
            if want > j:
                # mine enters at j, the (want+1)-th smallest leaves
                taken = vals[want - 1]
                vals[j + 1 : want] = vals[j : want - 1]
                vals[j] = mine
            else:
                taken = vals[want]
                vals[want : j - 1] = vals[want + 1 : j]
                vals[j - 1] = mine
            cur[v] = taken
            for u, val in zip(desc, vals):
                cur[u] = val
        return tuple(cur)
    labels = subtree_label_lists(t.children, postorder(t))
    for v in _check_processing_order(order, m):
        sub = labels[v]
        want = targets[v]
        if not 0 <= want < len(sub):
            raise InvalidInversionValueError(
                f"vertex {v} wants rank {want} in a subtree of size {len(sub)}"
            )
        i = bisect_left(sub, v)
        desc = sub[:i] + sub[i + 1 :]
        pool = sorted(cur[u] for u in sub)
        by_current = sorted(desc, key=cur.__getitem__)
        cur[v] = pool.pop(want)
        for u, val in zip(by_current, pool):
            cur[u] = val
    return tuple(cur)


def apply_labeling(t: OrderedTree, labels: Sequence[int]) -> OrderedTree:
    """Rename the vertices of a plane tree, keeping the drawing order."""
    m = t.root
    parent = [0] * (m + 1)
    children: list[tuple[int, ...]] = [()] * (m + 1)
    for v in range(1, m + 1):
        nv = labels[v]
        p = t.parent[v]
        parent[nv] = labels[p] if p else 0
        children[nv] = tuple(labels[c] for c in t.children[v])
    root = labels[m]
    if root != m:
        raise OutOfRangeError("renaming must keep the top label on the root")
    return OrderedTree(root, tuple(parent), tuple(children))


def forest_to_parking(f: Forest) -> tuple[tuple[int, ...], LabelMap]:
    """Map a forest to its parking function and the label correspondence."""
    n = f.n
    t = attach_super_root(canonical_order(f))
    po = postorder(t)
    pos = [0] * (n + 2)
    for i, v in enumerate(po, start=1):
        pos[v] = i
    inv = inversion_counts(t.children, po)
    newlab = relabel_decreasing(t)
    prefs = [0] * n
    to_vertex = [0] * (n + 1)
    for v in range(1, n + 1):
        j = newlab[v]
        if j <= n:
            prefs[j - 1] = pos[v] - inv[v]
            to_vertex[j] = v
    # The super-root always sits last in postorder with n inversions,
    # so its car would prefer space 1; that entry carries no information.
    to_car = [0] * (n + 1)
    for c in range(1, n + 1):
        to_car[to_vertex[c]] = c
    return tuple(prefs), LabelMap(tuple(to_car), tuple(to_vertex))


def nearest_larger_right_tree(word: Sequence[int]) -> OrderedTree:
    """Tree on a permutation word: each entry hangs on the nearest larger
    entry to its right, so the last entry must be the maximum.

    Children are drawn left to right by decreasing label, which is the
    canonical order for a decreasingly labeled tree.
    """
    m = len(word)
    word = [int(x) for x in word]
    if sorted(word) != list(range(1, m + 1)) or (m and word[-1] != m):
        raise MalformedInputError(
            "word must be a permutation of 1..m ending in its maximum"
        )
    parent = [0] * (m + 1)
    children: list[list[int]] = [[] for _ in range(m + 1)]
    stack: list[int] = []
    for car in word:
        while stack and stack[-1] < car:
            c = stack.pop()
            parent[c] = car
            children[car].append(c)
        stack.append(car)
    # Each pop run collects a vertex's children right to left.
    for lst in children:
        lst.reverse()
    return OrderedTree(m, tuple(parent), tuple(tuple(lst) for lst in children))


def parking_to_forest(p: Sequence[int]) -> tuple[Forest, LabelMap]:
    """Map a parking function back to its forest; inverse of forest_to_parking."""
    p = tuple(int(x) for x in p)
    n = len(p)
    if not is_parking_function(p):
        raise NotParkingFunctionError(f"{p} is not a parking function")
    m = n + 1
    prefs = p + (1,)
    slots = park(prefs).slots
    word = [0] * m
    for c, s in enumerate(slots, start=1):
        word[s - 1] = c
    jumps = [0] + [s - q for s, q in zip(slots, prefs)]
    t = nearest_larger_right_tree(word)
    orig = inverse_relabel(t, jumps)
    parent = [0] * n
    tp = t.parent
    for c in range(1, m):
        pc = tp[c]
        parent[orig[c] - 1] = orig[pc] if pc != m else 0
    to_car = [0] * (n + 1)
    to_vertex = [0] * (n + 1)
    for c in range(1, n + 1):
        v = orig[c]
        to_car[v] = c
        to_vertex[c] = v
    return Forest(tuple(parent)), LabelMap(tuple(to_car), tuple(to_vertex))


# ---------------------------------------------------------------------------
# Step-by-step traces for the command line


def map_trace(f: Forest) -> dict:
    """Every intermediate quantity of the forward map, JSON-ready."""
    n = f.n
    of = canonical_order(f)
    t = attach_super_root(of)
    po = postorder(t)
    pos = [0] * (n + 2)
    for i, v in enumerate(po, start=1):
        pos[v] = i
    inv = inversion_counts(t.children, po)
    newlab = relabel_decreasing(t)
    prefs, lmap = forest_to_parking(f)
    rows = [
        {
            "vertex": v,
            "position": pos[v],
            "inversions": inv[v],
            "car": newlab[v],
            "preference": pos[v] - inv[v],
        }
        for v in sorted(range(1, n + 2), key=lambda v: newlab[v])
    ]
    return {
        "n": n,
        "parent": list(f.parent),
        "canonicalRoots": list(of.roots),
        "canonicalChildren": {str(v): list(of.children[v]) for v in range(1, n + 1)},
        "superRoot": n + 1,
        "postorder": list(po),
        "rows": rows,
        "parking": list(prefs),
        "labelMap": lmap.as_report(),
    }


def unmap_trace(p: Sequence[int]) -> dict:
    """Every intermediate quantity of the backward map, JSON-ready."""
    p = tuple(int(x) for x in p)
    n = len(p)
    if not is_parking_function(p):
        raise NotParkingFunctionError(f"{p} is not a parking function")
    m = n + 1
    prefs = p + (1,)
    slots = park(prefs).slots
    word = [0] * m
    for c, s in enumerate(slots, start=1):
        word[s - 1] = c
    jumps = [0] + [s - q for s, q in zip(slots, prefs)]
    t = nearest_larger_right_tree(word)
    orig = inverse_relabel(t, jumps)
    f, lmap = parking_to_forest(p)
    rows = [
        {
            "car": c,
            "preference": prefs[c - 1],
            "slot": slots[c - 1],
            "jump": jumps[c],
            "parentCar": t.parent[c],
            "vertex": orig[c],
        }
        for c in range(1, m + 1)
    ]
    return {
        "n": n,
        "parking": list(p),
        "appendedCar": m,
        "slots": list(slots),
        "word": list(word),
        "jumpRow": [jumps[c] for c in word],  # by space, under the word
        "rows": rows,
        "parent": list(f.parent),
        "labelMap": lmap.as_report(),
    }
