"""
Checking every forest there is
===============================

Up to n = 7 the package can afford to enumerate all (n+1)^(n-1) forests
and all parking functions independently, push everything through both
directions of the map, and confirm each claimed equality on each object.
The enumerators share no code with the map, so they can referee it.
"""

from parkforest import forest_count, verify_bijection, verify_random

# The small sizes take well under a second each.
for n in range(6):
    report = verify_bijection(n)
    assert report.ok
    print(
        f"n={n}: {report.forest_count:>5} forests = "
        f"{report.parking_function_count:>5} parking functions, "
        f"0 violations ({report.elapsed_millis} ms)"
    )
    assert report.forest_count == forest_count(n)

# Past enumeration reach, uniform random forests keep the map honest.
report = verify_random(200, count=300, seed=7)
assert report.ok
print(
    f"n=200: {report.forest_count} random forests, all roundtrips clean "
    f"({report.elapsed_millis} ms)"
)
