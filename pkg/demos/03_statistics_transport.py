"""
Statistics ride along with the map
===================================

The map does not merely pair forests with parking functions; it pairs
their statistics.  Vertex inversions become car jumps, inversion-free
vertices (leaders) become lucky cars, and the trees of the forest land
exactly on the critical cars.
"""

import random

from parkforest import (
    forest_stats,
    forest_to_parking,
    parking_stats,
    sample_forest,
)

rng = random.Random(2024)
f = sample_forest(12, rng)
p, label_map = forest_to_parking(f)

fs = forest_stats(f)
ps = parking_stats(p)

print("forest parent sequence :", f.parent)
print("parking function       :", p)
print()

# Per vertex: inv(v) equals the jump of the car the vertex became.
print("vertex  inv   ->  car  jump")
for v in range(1, f.n + 1):
    c = label_map.car_of(v)
    print(f"{v:>6}  {fs.inv_at[v - 1]:>3}      {c:>4}  {ps.jump_at[c - 1]:>4}")
    assert fs.inv_at[v - 1] == ps.jump_at[c - 1]

# The aggregates follow suit.
print()
print(f"inversion total {fs.inv_total}  =  jump total {ps.jump_total}")
print(f"leaders {fs.lead}  =  lucky cars {ps.lucky}")
print(f"trees {fs.tree}  =  critical cars {ps.critic}")
assert (fs.inv_total, fs.lead, fs.tree) == (ps.jump_total, ps.lucky, ps.critic)

# Stronger than equal counts: the roots themselves map onto the critical
# cars, and the full inversion type matches the full jump type.
roots = sorted(label_map.car_of(v) for v, q in enumerate(f.parent, 1) if q == 0)
print()
print("roots as cars          :", roots)
print("critical cars          :", sorted(ps.critical_cars))
assert roots == sorted(ps.critical_cars)
print("inversion type         :", fs.inv_type)
print("jump type              :", ps.jump_type)
assert fs.inv_type == ps.jump_type
