"""Brute-force enumeration and verification of the bijection.

The enumerators are deliberately independent of the bijection machinery:
forests come from filtering raw parent sequences for acyclicity, parking
functions from filtering raw preference sequences through the parking
algorithm.  Both therefore serve as oracles: the map must hit every
parking function exactly once, the inverse must return every forest, and
every statistic must transport.  verify_bijection checks all of it for
one n; the checks per forest are

  image       the produced preference sequence is a parking function
  roundtrip   mapping back returns the very same parent sequence
  statistics  vertex inversions match car jumps under the label
              correspondence, and the derived aggregates agree
              (total, leaders vs lucky, components vs critical cars,
              inversion type vs jump type, and the sum identity
              inv_total = C(n+1,2) - sum of preferences)

plus, across the whole run, that no two forests map to the same parking
function and that the image count equals the independent enumeration.
The reverse-direction sweep (every parking function maps back and forth
to itself) is run explicitly as well.

Parallel runs split the work by the parent of vertex 1; each worker
enumerates its share of parent sequences.  With the roughly uniform
spread of valid forests over that first coordinate the split is even.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .bijection import forest_to_parking, parking_to_forest
from .errors import BudgetExceededError
from .forest import Forest
from .forest_stats import forest_stats
from .parking import is_parking_function, parking_stats

# Sweeping all (n+1)^(n-1) objects stops being a desk-scale job right
# after these sizes; anything larger must go through the random checks.
MAX_ENUMERATION_N = 8
MAX_VERIFICATION_N = 7


@dataclass(frozen=True)
class VerificationReport:
    n: int
    forest_count: int
    parking_function_count: int
    roundtrip_failures: int
    stat_mismatches: int
    elapsed_millis: int

    @property
    def ok(self) -> bool:
        return self.roundtrip_failures == 0 and self.stat_mismatches == 0

    def as_report(self) -> dict:
        return {
            "n": self.n,
            "forestCount": self.forest_count,
            "parkingFunctionCount": self.parking_function_count,
            "roundtripFailures": self.roundtrip_failures,
            "statMismatches": self.stat_mismatches,
            "elapsedMillis": self.elapsed_millis,
        }


def forest_count(n: int) -> int:
    """Number of rooted labeled forests on n vertices, (n+1)^(n-1)."""
    return (n + 1) ** (n - 1) if n > 0 else 1


def _parent_choices(n: int) -> list[tuple[int, ...]]:
    return [tuple(p for p in range(n + 1) if p != v) for v in range(1, n + 1)]


def _acyclic(cand: tuple[int, ...], n: int) -> bool:
    # Chase parents from each vertex; every vertex already shown to reach
    # a root is marked so the whole check stays linear in n.
    safe = bytearray(n + 1)
    safe[0] = 1
    for v0 in range(1, n + 1):
        v = v0
        steps = 0
        while not safe[v]:
            v = cand[v - 1]
            steps += 1
            if steps > n:
                return False
        v = v0
        while not safe[v]:
            safe[v] = 1
            v = cand[v - 1]
    return True


def all_forests(n: int, first_parent: int | None = None) -> Iterator[Forest]:
    """Every forest on n vertices, as filtered parent sequences.

    first_parent restricts to forests where vertex 1 has that parent,
    which is how parallel verification splits the work.
    """
    if n > MAX_ENUMERATION_N:
        raise BudgetExceededError(
            f"full forest sweeps stop at n = {MAX_ENUMERATION_N}, got {n}"
        )
    if n == 0:
        if first_parent is None:
            yield Forest(())
        return
    choices = _parent_choices(n)
    if first_parent is not None:
        if first_parent == 1:
            return
        choices[0] = (first_parent,)
    acyclic = _acyclic
    for cand in itertools.product(*choices):
        if acyclic(cand, n):
            yield Forest(cand)


def all_parking_functions(n: int) -> Iterator[tuple[int, ...]]:
    """Every parking function of length n, by filtering all sequences."""
    if n > MAX_ENUMERATION_N:
        raise BudgetExceededError(
            f"full parking-function sweeps stop at n = {MAX_ENUMERATION_N}, got {n}"
        )
    ok = is_parking_function
    for cand in itertools.product(range(1, n + 1), repeat=n):
        if ok(cand):
            yield cand


def _check_forest(f: Forest) -> tuple[tuple[int, ...] | None, int, int]:
    """One forest through the full gauntlet.

    Returns (image or None, roundtrip failures, stat mismatches); the
    image is None when it is not even a parking function.
    """
    n = f.n
    p, lmap = forest_to_parking(f)
    if not is_parking_function(p):
        return None, 1, 0
    bad_round = 0
    back, back_map = parking_to_forest(p)
    if back.parent != f.parent or back_map.to_car != lmap.to_car:
        bad_round = 1
    bad_stats = 0
    fs = forest_stats(f)
    ps = parking_stats(p)
    to_car = lmap.to_car
    jump = ps.jump_at
    for v in range(1, n + 1):
        if fs.inv_at[v - 1] != jump[to_car[v] - 1]:
            bad_stats += 1
    if fs.inv_total != ps.jump_total:
        bad_stats += 1
    if fs.lead != ps.lucky:
        bad_stats += 1
    if fs.tree != ps.critic:
        bad_stats += 1
    if fs.inv_type != ps.jump_type:
        bad_stats += 1
    if fs.inv_total != comb(n + 1, 2) - sum(p):
        bad_stats += 1
    # The roots themselves must land on the critical cars, not merely
    # match them in number.
    roots = {to_car[v] for v in range(1, n + 1) if f.parent[v - 1] == 0}
    if roots != set(ps.critical_cars):
        bad_stats += 1
    # Inversion-free forests and permutation images single each other out.
    if (fs.inv_total == 0) != (sorted(p) == list(range(1, n + 1))):
        bad_stats += 1
    return p, bad_round, bad_stats


def _verify_slice(args: tuple[int, int | None]) -> tuple[int, int, int, set]:
    n, first_parent = args
    forests = 0
    bad_round = 0
    bad_stats = 0
    images = set()
    for f in all_forests(n, first_parent):
        forests += 1
        p, br, bs = _check_forest(f)
        bad_round += br
        bad_stats += bs
        if p is None:
            bad_round += 1
        else:
            images.add(p)
    return forests, bad_round, bad_stats, images


def verify_bijection(n: int, jobs: int | None = None) -> VerificationReport:
    """Exhaustively verify the bijection and statistics for one n."""
    if n > MAX_VERIFICATION_N:
        raise BudgetExceededError(
            f"exhaustive verification stops at n = {MAX_VERIFICATION_N}, got {n};"
            " use the random spot checks beyond that"
        )
    start = time.perf_counter()
    if jobs and jobs > 1 and n >= 2:
        slices = [(n, fp) for fp in range(n + 1) if fp != 1]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_verify_slice, slices))
        forests = sum(p[0] for p in parts)
        bad_round = sum(p[1] for p in parts)
        bad_stats = sum(p[2] for p in parts)
        images: set = set()
        for part in parts:
            images |= part[3]
    else:
        forests, bad_round, bad_stats, images = _verify_slice((n, None))
    # Distinctness and coverage: injectivity plus an image count matching
    # the independent enumeration makes the map onto.
    bad_round += forests - len(images)
    pf_count = 0
    for p in all_parking_functions(n):
        pf_count += 1
        if p not in images:
            bad_round += 1
        else:
            back, _ = parking_to_forest(p)
            again, _ = forest_to_parking(back)
            if again != p:
                bad_round += 1
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return VerificationReport(
        n=n,
        forest_count=forests,
        parking_function_count=pf_count,
        roundtrip_failures=bad_round,
        stat_mismatches=bad_stats,
        elapsed_millis=elapsed,
    )


def sample_forest(n: int, rng: random.Random) -> Forest:
    """Draw a forest on n vertices uniformly at random.

    Uniform forests correspond to uniform trees on n+1 vertices, and
    those to uniform code sequences in {1..n+1}^(n-1): decode one, root
    the tree at n+1, drop that root.
    """
    if n == 0:
        return Forest(())
    if n == 1:
        return Forest((0,))
    m = n + 1
    seq = [rng.randint(1, m) for _ in range(n - 1)]
    deg = [1] * (m + 1)
    deg[0] = 0
    for x in seq:
        deg[x] += 1
    adj: list[list[int]] = [[] for _ in range(m + 1)]
    ptr = 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        adj[leaf].append(x)
        adj[x].append(leaf)
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    adj[leaf].append(m)
    adj[m].append(leaf)
    # Orient everything toward the root m, then forget it.
    parent = [0] * (m + 1)
    seen = bytearray(m + 1)
    seen[m] = 1
    stack = [m]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                parent[u] = v
                stack.append(u)
    return Forest(tuple(0 if parent[v] == m else parent[v] for v in range(1, n + 1)))


def verify_random(n: int, count: int, seed: int | None = None) -> VerificationReport:
    """Spot-check the bijection on random forests at sizes too big to sweep."""
    start = time.perf_counter()
    rng = random.Random(seed)
    bad_round = 0
    bad_stats = 0
    pf_hits = 0
    for _ in range(count):
        f = sample_forest(n, rng)
        p, br, bs = _check_forest(f)
        bad_round += br
        bad_stats += bs
        if p is None:
            bad_round += 1
        else:
            pf_hits += 1
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return VerificationReport(
        n=n,
        forest_count=count,
        parking_function_count=pf_hits,
        roundtrip_failures=bad_round,
        stat_mismatches=bad_stats,
        elapsed_millis=elapsed,
    )
