"""Enumerators, the verification loop, and the forest sampler."""

import itertools
import random

import pytest

from parkforest import (
    BudgetExceededError,
    Forest,
    all_forests,
    all_parking_functions,
    forest_count,
    is_parking_function,
    sample_forest,
    validate_forest,
    verify_bijection,
    verify_random,
)


def test_counts_match_formula():
    want = [1, 1, 3, 16, 125, 1296]
    for n, w in enumerate(want):
        assert forest_count(n) == w
        assert sum(1 for _ in all_forests(n)) == w
        assert sum(1 for _ in all_parking_functions(n)) == w


def test_all_forests_yields_valid_distinct():
    seen = set()
    for f in all_forests(4):
        assert validate_forest(f.parent).parent == f.parent
        assert f.parent not in seen
        seen.add(f.parent)


def test_all_forests_against_code_decoder():
    # Independent enumeration: decoding every code sequence in
    # {1..n+1}^(n-1) through the sampler's decoder must yield exactly
    # the forests the parent-sequence filter finds.
    class FixedSeq:
        def __init__(self, seq):
            self.seq = list(seq)
            self.i = 0

        def randint(self, a, b):
            v = self.seq[self.i]
            self.i += 1
            assert a <= v <= b
            return v

    for n in (3, 4):
        via_filter = {f.parent for f in all_forests(n)}
        via_codes = set()
        for seq in itertools.product(range(1, n + 2), repeat=n - 1):
            via_codes.add(sample_forest(n, FixedSeq(seq)).parent)
        assert via_codes == via_filter


def test_all_parking_functions_members():
    for p in all_parking_functions(4):
        assert is_parking_function(p)
    assert (1, 1, 1) in set(all_parking_functions(3))
    assert (2, 3, 3) not in set(all_parking_functions(3))


def test_first_parent_partition_covers():
    whole = {f.parent for f in all_forests(4)}
    parts = [
        {f.parent for f in all_forests(4, first_parent=fp)}
        for fp in range(5)
    ]
    assert set().union(*parts) == whole
    assert sum(len(p) for p in parts) == len(whole)


def test_verify_small_all_pass():
    for n in range(5):
        rep = verify_bijection(n)
        assert rep.ok
        assert rep.forest_count == rep.parking_function_count == forest_count(n)


def test_verify_parallel_matches_serial():
    serial = verify_bijection(4)
    parallel = verify_bijection(4, jobs=2)
    for field in ("n", "forest_count", "parking_function_count",
                  "roundtrip_failures", "stat_mismatches"):
        assert getattr(serial, field) == getattr(parallel, field)


def test_verify_random_clean_and_seeded():
    a = verify_random(30, 50, seed=11)
    b = verify_random(30, 50, seed=11)
    assert a.ok and b.ok
    assert a.forest_count == 50 and a.parking_function_count == 50
    assert a.roundtrip_failures == b.roundtrip_failures == 0


def test_sample_forest_valid_and_exhaustive_reach():
    rng = random.Random(17)
    for _ in range(200):
        f = sample_forest(8, rng)
        assert validate_forest(f.parent).parent == f.parent
    seen = {sample_forest(3, rng).parent for _ in range(2000)}
    assert seen == {f.parent for f in all_forests(3)}
    assert sample_forest(0, rng) == Forest(())
    assert sample_forest(1, rng) == Forest((0,))


def test_report_keys():
    rep = verify_bijection(2).as_report()
    assert set(rep) == {
        "n", "forestCount", "parkingFunctionCount",
        "roundtripFailures", "statMismatches", "elapsedMillis",
    }


def test_budget_guards_reject_oversized_sweeps():
    with pytest.raises(BudgetExceededError):
        next(all_forests(9))
    with pytest.raises(BudgetExceededError):
        next(all_parking_functions(9))
    with pytest.raises(BudgetExceededError):
        verify_bijection(8)
