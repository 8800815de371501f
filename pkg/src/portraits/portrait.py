"""Fixed point portraits and their validator.

A portrait is a degree d together with a family of angle sets.  A valid
portrait satisfies four conditions, reported under these codes:

* ``P1``              -- some member set is not a degree-d rotation set;
* ``P2-not-disjoint`` -- two member sets share an angle;
* ``P2-linked``       -- two member sets cross (neither fits inside a
                         single gap of the other);
* ``P3-missing`` / ``P3-extra`` -- the union of the fixed (rotation number
                         zero) sets is not exactly the d-1 fixed angles;
* ``P4``              -- two rotating sets lie in the same gap of every
                         fixed set.

The validator collects every violation it can still make sense of instead
of stopping at the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .angles import (Angle, as_angle_tuple, check_degree, fixed_angles,
                     format_angle, gap_index)
from .errors import InvalidPortraitError
from .rotation import RotationSet, enumerate_rotation_sets


def _angles_text(angles: Iterable[Angle]) -> str:
    return "{" + " ".join(format_angle(a) for a in angles) + "}"


@dataclass(frozen=True)
class Portrait:
    """A degree plus a family of candidate rotation sets (raw angle tuples).

    Sets are stored canonically: each set strictly increasing, the family
    sorted by its sets' angle tuples.  Equality is therefore structural.
    """

    degree: int
    sets: tuple[tuple[Angle, ...], ...]

    @classmethod
    def create(cls, degree: int, sets: Iterable[Iterable[Angle]]) -> "Portrait":
        d = check_degree(degree)
        family = [as_angle_tuple(sorted(s)) for s in sets]
        if not family:
            raise ValueError("a portrait needs at least one angle set")
        family.sort()
        return cls(d, tuple(family))

    @property
    def k(self) -> int:
        """Number of member sets."""
        return len(self.sets)


@dataclass(frozen=True)
class Violation:
    """One validator finding: a code, a re-checkable witness, and prose."""

    code: str
    witness: tuple
    message: str


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(v.code for v in self.violations)


def unlinked(first: Sequence[Angle], second: Sequence[Angle]) -> bool:
    """True iff the two angle sets are disjoint and neither crosses the other.

    Equivalently: ``second`` fits inside a single gap of ``first`` (their
    convex hulls in the disk are disjoint).  A singleton has one gap, the
    whole circle minus a point, so it is unlinked with anything disjoint
    from it.
    """
    a = as_angle_tuple(sorted(first))
    b = as_angle_tuple(sorted(second))
    if set(a) & set(b):
        return False
    if len(a) == 1:
        return True
    g = gap_index(a, b[0])
    return all(gap_index(a, x) == g for x in b[1:])


def separates(separator: Sequence[Angle], left: Sequence[Angle],
              right: Sequence[Angle]) -> bool:
    """True iff left and right lie in different gaps of the separator.

    Requires left != right and each of them unlinked with the separator, so
    that "the gap containing the set" is well defined.  A singleton
    separator has a connected complement and never separates anything.
    """
    sep = as_angle_tuple(sorted(separator))
    lt = as_angle_tuple(sorted(left))
    rt = as_angle_tuple(sorted(right))
    if lt == rt:
        raise ValueError("the two sets to separate must be distinct")
    if len(sep) == 1:
        return False
    gl = {gap_index(sep, x) for x in lt}
    gr = {gap_index(sep, x) for x in rt}
    if len(gl) != 1 or len(gr) != 1:
        raise ValueError("separates() needs each set inside a single gap "
                         "of the separator (sets must be unlinked with it)")
    return gl != gr


def validate_portrait(p: Portrait) -> ValidationResult:
    """Check the four portrait conditions, collecting all violations.

    Later conditions that cannot be evaluated after an earlier failure
    (rotation numbers while P1 fails, separation while P2 fails) are
    skipped and recorded in ``notes``.
    """
    d = p.degree
    violations: list[Violation] = []
    notes: list[str] = []

    classified: list[Optional[RotationSet]] = [
        RotationSet.from_angles(s, d) for s in p.sets]
    for idx, rs in enumerate(classified, start=1):
        if rs is None:
            violations.append(Violation(
                "P1", (idx, p.sets[idx - 1]),
                f"set {idx} {_angles_text(p.sets[idx - 1])} is not a "
                f"degree-{d} rotation set"))

    for (i, a), (j, b) in combinations(enumerate(p.sets, start=1), 2):
        shared = sorted(set(a) & set(b))
        if shared:
            violations.append(Violation(
                "P2-not-disjoint", (i, j, tuple(shared)),
                f"sets {i} and {j} share angles {_angles_text(shared)}"))
        elif not unlinked(a, b):
            violations.append(Violation(
                "P2-linked", (i, j),
                f"sets {i} and {j} cross (neither lies in one gap of the other)"))

    if any(rs is None for rs in classified):
        notes.append("P3 and P4 skipped: rotation numbers unavailable while P1 fails")
        return ValidationResult(tuple(violations), tuple(notes))

    fixed_members = [(i, rs) for i, rs in enumerate(classified, start=1)
                     if rs is not None and rs.is_fixed]
    union = set()
    for _, rs in fixed_members:
        union.update(rs.angles)
    target = set(fixed_angles(d))
    missing = tuple(sorted(target - union))
    extra = tuple(sorted(union - target))
    if missing:
        violations.append(Violation(
            "P3-missing", missing,
            f"fixed angles {_angles_text(missing)} belong to no "
            f"rotation-number-zero set"))
    if extra:
        violations.append(Violation(
            "P3-extra", extra,
            f"rotation-number-zero sets contain non-fixed angles "
            f"{_angles_text(extra)}"))

    if any(v.code.startswith("P2") for v in violations):
        notes.append("P4 skipped: separation is ill-defined while P2 fails")
    else:
        rotating = [(i, rs) for i, rs in enumerate(classified, start=1)
                    if rs is not None and not rs.is_fixed]
        for (i, ri), (j, rj) in combinations(rotating, 2):
            if not any(separates(rl.angles, ri.angles, rj.angles)
                       for _, rl in fixed_members):
                violations.append(Violation(
                    "P4", (i, j),
                    f"rotating sets {i} and {j} are separated by no "
                    f"rotation-number-zero set"))

    return ValidationResult(tuple(violations), tuple(notes))


def classified_sets(p: Portrait) -> tuple[RotationSet, ...]:
    """The portrait's sets as RotationSet values; requires a valid portrait."""
    result = validate_portrait(p)
    if not result.ok:
        raise InvalidPortraitError(
            "portrait fails validation: " + ", ".join(result.codes),
            result.violations)
    out = []
    for s in p.sets:
        rs = RotationSet.from_angles(s, p.degree)
        assert rs is not None
        out.append(rs)
    return tuple(out)


def _set_partitions(items: list) -> list[list[list]]:
    """All partitions of ``items`` into non-empty blocks."""
    if not items:
        return [[]]
    head, rest = items[0], items[1:]
    out = []
    for partial in _set_partitions(rest):
        out.append([[head]] + [list(b) for b in partial])
        for t in range(len(partial)):
            grown = [list(b) for b in partial]
            grown[t] = [head] + grown[t]
            out.append(grown)
    return out


def enumerate_portraits(degree: int, max_period: int) -> list[Portrait]:
    """Every valid portrait whose sets have element period <= max_period.

    The family of fixed sets is an exact, pairwise-unlinked cover of the
    fixed angles, i.e. an unlinked set partition of them; rotating sets are
    then added by backtracking under the disjoint/unlinked and separation
    constraints.  Output order is deterministic.
    """
    d = check_degree(degree)
    pool = enumerate_rotation_sets(d, (d - 1) * max_period, max_period)
    rotating_pool = [rs for rs in pool if not rs.is_fixed]

    covers: list[list[tuple[Angle, ...]]] = []
    for partition in _set_partitions(list(fixed_angles(d))):
        blocks = sorted(tuple(sorted(b)) for b in partition)
        if all(unlinked(x, y) for x, y in combinations(blocks, 2)):
            covers.append(blocks)
    covers.sort()

    portraits: list[Portrait] = []
    for cover in covers:
        chosen: list[RotationSet] = []

        def extend(start: int) -> None:
            portraits.append(Portrait.create(
                d, list(cover) + [rs.angles for rs in chosen]))
            for idx in range(start, len(rotating_pool)):
                cand = rotating_pool[idx]
                if not all(unlinked(cand.angles, b) for b in cover):
                    continue
                if not all(unlinked(cand.angles, c.angles) for c in chosen):
                    continue
                if not all(any(separates(b, cand.angles, c.angles) for b in cover)
                           for c in chosen):
                    continue
                chosen.append(cand)
                extend(idx + 1)
                chosen.pop()

        extend(0)

    portraits.sort(key=lambda q: (q.k, q.sets))
    return portraits
