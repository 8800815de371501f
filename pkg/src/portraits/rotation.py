"""Degree-d rotation sets: classification, deployment, enumeration, generation.

A rotation set is a finite angle set that the d-fold covering map permutes
like a rigid rotation: in the increasing indexing, every element moves
forward by the same shift m.  The residue m/n is its rotation number; m and
n need not be coprime, so the pair (shift, cardinality) is kept verbatim
rather than reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from .angles import Angle, as_angle_tuple, check_degree, map_angle
from .errors import CapacityError, InvariantViolationError

# Largest d**p the orbit scan will walk before refusing; keeps an accidental
# huge max_period from silently consuming hours.
_SCAN_CEILING = 4_000_000


@dataclass(frozen=True)
class RotationSet:
    """A degree-d rotation set with its shift recorded.

    ``angles`` is strictly increasing in [0, 1) and ``map_angle`` sends
    angles[i] to angles[(i + shift) % n] for every i.
    """

    degree: int
    angles: tuple[Angle, ...]
    shift: int

    @classmethod
    def from_angles(cls, angles: Sequence[Angle], degree: int) -> Optional["RotationSet"]:
        """Classify an angle set; None when it is not a rotation set."""
        found = classify_rotation_set(angles, degree)
        if found is None:
            return None
        return cls(degree, tuple(angles), found[0])

    @property
    def cardinality(self) -> int:
        return len(self.angles)

    @property
    def rotation_number(self) -> Fraction:
        """The residue shift/cardinality as an exact value."""
        return Fraction(self.shift, self.cardinality)

    @property
    def is_fixed(self) -> bool:
        """True when the rotation number is zero, i.e. every angle is fixed."""
        return self.shift == 0

    @property
    def period(self) -> int:
        """Exact period of each element under the covering map."""
        return self.cardinality // gcd(self.shift, self.cardinality)


def classify_rotation_set(angles: Sequence[Angle], degree: int) -> Optional[tuple[int, int]]:
    """Find the unique shift m with f_d(theta_i) = theta_((i+m) mod n).

    Returns (m, n) with 0 <= m < n, or None when no shift works.  The input
    must be strictly increasing in [0, 1); anything else raises
    MalformedSetError.
    """
    d = check_degree(degree)
    th = as_angle_tuple(angles)
    n = len(th)
    index = {a: i for i, a in enumerate(th)}
    first = index.get(map_angle(th[0], d))
    if first is None:
        return None
    m = first
    for i, a in enumerate(th):
        j = index.get(map_angle(a, d))
        if j is None or j != (i + m) % n:
            return None
    return m, n


def deployment_vector(rs: RotationSet) -> tuple[int, ...]:
    """Counts of the set's angles in the d-1 half-open arcs between fixed angles.

    Entry i counts angles in [i/(d-1), (i+1)/(d-1)); for degree 2 the single
    entry counts everything.
    """
    counts = [0] * (rs.degree - 1)
    for a in rs.angles:
        counts[int(a * (rs.degree - 1))] += 1
    return tuple(counts)


def _orbit_classes(degree: int, max_period: int) -> dict[tuple[int, int], list[tuple[Angle, ...]]]:
    """Single covering-map orbits of each exact period p <= max_period that
    are rotation sets on their own, grouped by (period, shift).

    Elements of period p have denominator dividing d**p - 1, so scanning
    the grid k/(d**p - 1) is exhaustive.
    """
    classes: dict[tuple[int, int], list[tuple[Angle, ...]]] = {}
    for p in range(1, max_period + 1):
        if degree ** p > _SCAN_CEILING:
            raise CapacityError(
                f"orbit scan for degree {degree}, period {p} needs "
                f"{degree ** p - 1} grid points, above the ceiling {_SCAN_CEILING}")
        q = degree ** p - 1
        seen: set[Angle] = set()
        for k in range(q):
            a = Fraction(k, q)
            if a in seen:
                continue
            orbit = [a]
            seen.add(a)
            b = map_angle(a, degree)
            while b != a:
                orbit.append(b)
                seen.add(b)
                b = map_angle(b, degree)
            if len(orbit) != p:
                continue  # lower exact period; handled in its own pass
            th = tuple(sorted(orbit))
            found = classify_rotation_set(th, degree)
            if found is None:
                continue
            classes.setdefault((p, found[0]), []).append(th)
    for orbits in classes.values():
        orbits.sort()
    return classes


def enumerate_rotation_sets(degree: int, max_cardinality: int, max_period: int) -> list[RotationSet]:
    """Every degree-d rotation set with cardinality and element period bounded.

    Strategy: a rotation set splits under the covering map into g = gcd(m, n)
    orbits of equal exact period p = n/g, each of which is itself a rotation
    set with the same reduced rotation number.  So it suffices to collect the
    single-orbit rotation sets per (period, reduced shift) class and test
    unions of g of them for the rigid-shift condition.  g never exceeds d-1:
    around one orbit of gaps the d-fold stretch accumulates a whole number of
    extra turns, at least one per orbit, and there are d-1 extra turns in
    total around the circle.

    The result is deduplicated and sorted lexicographically by angle tuple.
    """
    d = check_degree(degree)
    if max_cardinality < 1:
        raise ValueError(f"max_cardinality must be >= 1, got {max_cardinality}")
    if max_period < 1:
        raise ValueError(f"max_period must be >= 1, got {max_period}")

    classes = _orbit_classes(d, max_period)
    found: list[RotationSet] = []
    for (p, _), orbits in sorted(classes.items()):
        g_max = min(d - 1, max_cardinality // p, len(orbits))
        for g in range(1, g_max + 1):
            for combo in combinations(orbits, g):
                merged = tuple(sorted(a for orbit in combo for a in orbit))
                result = classify_rotation_set(merged, d)
                if result is not None:
                    found.append(RotationSet(d, merged, result[0]))
    found.sort(key=lambda rs: rs.angles)
    return found


def generate_rotation_set(degree: int, cardinality: int, shift: int,
                          deployment: Sequence[int]) -> Optional[RotationSet]:
    """The unique rotation set with the given shift, cardinality and deployment.

    Returns None when no rotation set matches (in particular whenever the
    deployment does not sum to the cardinality).  A rotation set is uniquely
    determined by these three data; finding two matches would falsify that
    and raises InvariantViolationError.
    """
    d = check_degree(degree)
    n = cardinality
    if n < 1:
        raise ValueError(f"cardinality must be >= 1, got {n}")
    if not 0 <= shift < n:
        raise ValueError(f"shift must satisfy 0 <= shift < {n}, got {shift}")
    dep = tuple(int(c) for c in deployment)
    if len(dep) != d - 1:
        raise ValueError(f"deployment needs {d - 1} entries, got {len(dep)}")
    if any(c < 0 for c in dep):
        raise ValueError("deployment entries must be non-negative")
    if sum(dep) != n:
        return None

    period = n // gcd(shift, n)
    matches = [rs for rs in enumerate_rotation_sets(d, n, period)
               if rs.cardinality == n and rs.shift == shift
               and deployment_vector(rs) == dep]
    if len(matches) > 1:
        raise InvariantViolationError(
            f"distinct rotation sets share shift={shift} cardinality={n} "
            f"deployment={dep}: {matches[0].angles} and {matches[1].angles}")
    return matches[0] if matches else None
