"""
From a parking function back to its forest
===========================================

The inverse direction on a 14-car preference sequence: park the cars,
read the street, rebuild the tree, undo the relabeling.  The roundtrip
returns the forest the parking function came from, label for label.
"""

from parkforest import forest_to_parking, parking_to_forest
from parkforest.bijection import unmap_trace

p = (10, 2, 6, 5, 7, 1, 13, 10, 4, 1, 14, 9, 11, 5)
print("parking function:", p)

# One extra car preferring space 1 is appended; with it, all n+1 spaces
# fill and the street becomes a permutation worth reading.
trace = unmap_trace(p)
print("appended car:", trace["appendedCar"])

# The three-row table: each space, the car that took it, how far that
# car rolled past its preference.
n = trace["n"]
w = len(str(n + 1))
print("space:", " ".join(f"{s:>{w}}" for s in range(1, n + 2)))
print("car  :", " ".join(f"{c:>{w}}" for c in trace["word"]))
print("jump :", " ".join(f"{j:>{w}}" for j in trace["jumpRow"]))

# Tree rule: every car hangs on the nearest larger car to its right in
# the word.  The appended car, largest of all, closes the word and
# becomes the root.
print()
print("car  preference  slot  jump  parentCar  vertex")
for row in trace["rows"]:
    print(
        f"{row['car']:>3}  {row['preference']:>10}  {row['slot']:>4}"
        f"  {row['jump']:>4}  {row['parentCar']:>9}  {row['vertex']:>6}"
    )

# Each car's jump says how many of its subtree labels must sit below it:
# undoing the relabeling hands every car the (jump+1)-th smallest label
# of its subtree.  Dropping the root leaves the forest.
print()
print("parent sequence:", trace["parent"])

# And forward again: the very same preference sequence comes back.
f, _ = parking_to_forest(p)
again, _ = forest_to_parking(f)
assert again == p
print("roundtrip returns the same parking function:", again == p)
