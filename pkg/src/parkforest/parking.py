"""The parking algorithm, parking-function tests, and car statistics.

n cars drive past spaces 1, 2, 3, ... in car order; car c first tries its
preferred space p[c] and then rolls forward to the first free space.  On
a one-way street with unbounded overflow every car parks somewhere; the
preference sequence is a parking function exactly when nobody ends up
past space n.

Statistics of a parking function:

  jump at c     distance car c rolled past its preference
  jump total    sum of the jumps; always C(n+1, 2) - sum(p)
  lucky cars    cars that parked exactly where they wanted
  critical cars right-to-left maxima of the space word (the word listing,
                space by space, which car parked there)
  jump type     vector t with t[k] = number of cars that jumped exactly k,
                reported with n+1 entries (top entry always 0)

The uniform sampler walks the classic cyclic argument: park on a circle
of n+1 spaces, then rotate the labels so the empty space becomes n+1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import NotParkingFunctionError, OutOfRangeError


@dataclass(frozen=True)
class ParkOutcome:
    """Where each car ended up: slots[c-1] is the space taken by car c."""

    slots: tuple[int, ...]
    max_space: int

    @property
    def n(self) -> int:
        return len(self.slots)


@dataclass(frozen=True)
class ParkingStats:
    n: int
    slots: tuple[int, ...]
    jump_at: tuple[int, ...]  # jump_at[c-1] is the jump of car c
    jump_total: int
    lucky_cars: tuple[int, ...]
    lucky: int
    critical_cars: tuple[int, ...]
    critic: int
    jump_type: tuple[int, ...]

    def as_report(self) -> dict:
        return {
            "q": list(self.slots),
            "jumpAt": list(self.jump_at),
            "jumpTotal": self.jump_total,
            "lucky": self.lucky,
            "luckyCars": list(self.lucky_cars),
            "critic": self.critic,
            "criticalCars": list(self.critical_cars),
            "tjump": list(self.jump_type),
        }


def park(prefs: Sequence[int]) -> ParkOutcome:
    """Run the parking algorithm; spaces to the right never run out.

    Any positive preference is accepted, even one past the number of
    cars.  Letting the outcome spill past space n is deliberate: the
    spill is how a sequence fails the parking test.
    """
    n = len(prefs)
    # A car rolls past at most the n-1 cars ahead of it, so no slot
    # beyond max(prefs) + n - 1 is ever reached.
    top = max(max(prefs, default=0), 0) + n + 1
    occupied = bytearray(top)
    slots = []
    append = slots.append
    hi = 0
    for c, p in enumerate(prefs, start=1):
        if p < 1:
            raise OutOfRangeError(f"car {c} prefers space {p}; spaces start at 1")
        s = p
        while occupied[s]:
            s += 1
        occupied[s] = 1
        append(s)
        if s > hi:
            hi = s
    return ParkOutcome(tuple(slots), hi)


def is_parking_function(prefs: Sequence[int]) -> bool:
    """True when every car parks within spaces 1..n."""
    n = len(prefs)
    for p in prefs:
        if not 1 <= p <= n:
            return False
    return park(prefs).max_space <= n


def sorted_parking_test(prefs: Sequence[int]) -> bool:
    """Rearrangement test: sorted preferences b satisfy b[i] <= i+1.

    Agrees with is_parking_function on every input; kept as an
    independent recognizer so each can check the other.
    """
    b = sorted(prefs)
    return all(1 <= x <= i for i, x in enumerate(b, start=1))


def space_word(prefs: Sequence[int]) -> tuple[int, ...]:
    """Which car sits in each of spaces 1..n (word[s-1] = car at space s)."""
    outcome = park(prefs)
    n = len(prefs)
    if outcome.max_space > n:
        raise NotParkingFunctionError(f"{tuple(prefs)} is not a parking function")
    word = [0] * n
    for c, s in enumerate(outcome.slots, start=1):
        word[s - 1] = c
    return tuple(word)


def critical_cars(prefs: Sequence[int]) -> tuple[int, ...]:
    """Right-to-left maxima of the space word, listed by increasing space."""
    word = space_word(prefs)
    crit = []
    best = 0
    for car in reversed(word):
        if car > best:
            crit.append(car)
            best = car
    crit.reverse()
    return tuple(crit)


def parking_stats(prefs: Sequence[int]) -> ParkingStats:
    """All car statistics of a parking function in one pass."""
    prefs = tuple(prefs)
    n = len(prefs)
    outcome = park(prefs)
    if outcome.max_space > n:
        raise NotParkingFunctionError(f"{prefs} is not a parking function")
    slots = outcome.slots
    jump_at = tuple(s - p for s, p in zip(slots, prefs))
    jump_type = [0] * (n + 1)
    for j in jump_at:
        jump_type[j] += 1
    assert n == 0 or jump_type[n] == 0, "a car jumps at most n-1 spaces"
    lucky_cars = tuple(c for c, j in enumerate(jump_at, start=1) if j == 0)
    word = [0] * n
    for c, s in enumerate(slots, start=1):
        word[s - 1] = c
    crit = []
    best = 0
    for car in reversed(word):
        if car > best:
            crit.append(car)
            best = car
    crit.reverse()
    return ParkingStats(
        n=n,
        slots=slots,
        jump_at=jump_at,
        jump_total=sum(jump_at),
        lucky_cars=lucky_cars,
        lucky=len(lucky_cars),
        critical_cars=tuple(crit),
        critic=len(crit),
        jump_type=tuple(jump_type),
    )


def sample_parking_function(n: int, rng: random.Random) -> tuple[int, ...]:
    """Draw a parking function of length n uniformly at random.

    Park the cars on a circle of n+1 spaces (preferences uniform over the
    circle, probing cyclically); exactly one space stays empty.  Rotating
    labels so the empty space lands on n+1 yields a preference sequence
    that parks within 1..n, and every parking function arises from the
    same number of rotations, so the draw is uniform.
    """
    if n == 0:
        return ()
    m = n + 1
    a = [rng.randrange(m) for _ in range(n)]  # 0-indexed circle positions
    occupied = bytearray(m)
    for x in a:
        s = x
        while occupied[s]:
            s += 1
            if s == m:
                s = 0
        occupied[s] = 1
    empty = occupied.index(0)
    shift = (n - empty) % m
    return tuple((x + shift) % m + 1 for x in a)
