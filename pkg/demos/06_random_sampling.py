"""
Uniform random sampling at sizes no sweep can reach
====================================================

Exhaustive checks stop where the object counts explode, so the package
ships uniform samplers for both sides of the bijection.  Small-n
frequency counts confirm uniformity; large-n round trips confirm the
maps stay exact far beyond desk-check sizes.
"""

from collections import Counter
from random import Random

from parkforest import (
    forest_count,
    forest_to_parking,
    parking_to_forest,
    sample_forest,
    sample_parking_function,
)

# At n=3 there are (3+1)^(3-1) = 16 parking functions.  Drawing 16000
# samples should land each one close to 1000 times.
rng = Random(20240817)
n = 3
draws = 16_000
freq = Counter(sample_parking_function(n, rng) for _ in range(draws))
expected = draws // (n + 1) ** (n - 1)
print(f"{draws} draws over the {len(freq)} parking functions of length {n}")
print(f"expected about {expected} each; observed range "
      f"{min(freq.values())}..{max(freq.values())}")
assert len(freq) == (n + 1) ** (n - 1)
assert all(abs(c - expected) < 6 * expected ** 0.5 for c in freq.values())

# The forest sampler covers all forest_count(n) shapes the same way.
freq_f = Counter(sample_forest(n, rng).parent for _ in range(draws))
assert len(freq_f) == forest_count(n)
print(f"forest sampler hit all {forest_count(n)} forests on {n} vertices")

# At n = 2000 there are more forests than atoms in the universe, but a
# sampled forest still maps to a parking function and back exactly.
big = 2000
for trial in range(3):
    f = sample_forest(big, rng)
    p, car_of = forest_to_parking(f)
    g, car_of_back = parking_to_forest(p)
    assert g.parent == f.parent and car_of_back == car_of
print(f"3 round trips at n={big}: forest -> parking function -> same forest")

# The parking-side sampler feeds the inverse map just as well.
p = sample_parking_function(big, rng)
f, _ = parking_to_forest(p)
q, _ = forest_to_parking(f)
assert q == p
print(f"1 round trip at n={big}: parking function -> forest -> same sequence")
