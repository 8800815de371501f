from fractions import Fraction as F
from itertools import combinations

import pytest

from portraits import (MalformedSetError, RotationSet,
                       classify_rotation_set, deployment_vector,
                       enumerate_rotation_sets, fixed_angles,
                       generate_rotation_set, map_angle)


def brute_force_rotation_sets(degree, period, max_size):
    """Independent oracle: test every subset of the periodic-angle grid.

    Angles of period p lie on the k/(d**p - 1) grid, so the union over
    p <= period is scanned subset by subset.  Exhaustive by definition of a
    rotation set, with no orbit reasoning at all; only feasible tiny.
    """
    grid = sorted({F(k, degree ** p - 1)
                   for p in range(1, period + 1)
                   for k in range(degree ** p - 1)})
    found = []
    for size in range(1, max_size + 1):
        for combo in combinations(grid, size):
            result = classify_rotation_set(combo, degree)
            if result is not None:
                found.append((combo, result[0]))
    return sorted(found)


class TestClassify:
    def test_examples(self):
        assert classify_rotation_set((F(1, 8), F(5, 8)), 5) == (1, 2)
        assert classify_rotation_set((F(0), F(3, 4)), 5) == (0, 2)
        assert classify_rotation_set((F(1, 8), F(1, 4)), 5) is None

    def test_malformed_inputs(self):
        with pytest.raises(MalformedSetError):
            classify_rotation_set((F(1, 4), F(1, 8)), 5)
        with pytest.raises(MalformedSetError):
            classify_rotation_set((F(1, 8), F(1, 8)), 5)
        with pytest.raises(MalformedSetError):
            classify_rotation_set((), 5)

    def test_properties(self):
        rs = RotationSet.from_angles((F(1, 8), F(5, 8)), 5)
        assert rs.cardinality == 2
        assert rs.rotation_number == F(1, 2)
        assert rs.period == 2
        assert not rs.is_fixed

    def test_denominator_divides_power(self):
        # every element denominator divides d**period - 1
        for rs in enumerate_rotation_sets(3, 6, 3):
            q = rs.degree ** rs.period - 1
            assert all(q % a.denominator == 0 for a in rs.angles)


class TestDeployment:
    def test_examples(self):
        rs = RotationSet.from_angles((F(1, 8), F(5, 8)), 5)
        assert deployment_vector(rs) == (1, 0, 1, 0)
        rs = RotationSet.from_angles((F(0), F(1, 4), F(1, 2), F(3, 4)), 5)
        assert deployment_vector(rs) == (1, 1, 1, 1)
        rs = RotationSet.from_angles((F(1, 3), F(2, 3)), 2)
        assert deployment_vector(rs) == (2,)

    def test_entries_sum_to_cardinality(self):
        for rs in enumerate_rotation_sets(4, 9, 3):
            dep = deployment_vector(rs)
            assert len(dep) == 3
            assert sum(dep) == rs.cardinality


class TestEnumerate:
    def test_matches_brute_force_d2(self):
        oracle = brute_force_rotation_sets(2, 3, 4)
        ours = sorted((rs.angles, rs.shift)
                      for rs in enumerate_rotation_sets(2, 4, 3))
        assert ours == oracle

    def test_matches_brute_force_d3(self):
        oracle = brute_force_rotation_sets(3, 2, 5)
        ours = sorted((rs.angles, rs.shift)
                      for rs in enumerate_rotation_sets(3, 5, 2))
        assert ours == oracle

    def test_rotation_half_d2(self):
        sets = [rs for rs in enumerate_rotation_sets(2, 2, 2)
                if rs.rotation_number == F(1, 2)]
        assert [rs.angles for rs in sets] == [(F(1, 3), F(2, 3))]

    def test_rotation_third_d2(self):
        sets = [rs.angles for rs in enumerate_rotation_sets(2, 3, 3)
                if rs.rotation_number == F(1, 3)]
        assert (F(1, 7), F(2, 7), F(4, 7)) in sets

    def test_fixed_sets_are_subsets_of_fixed_angles(self):
        sets = [rs.angles for rs in enumerate_rotation_sets(3, 2, 2)
                if rs.is_fixed]
        expected = [(F(0),), (F(0), F(1, 2)), (F(1, 2),)]
        assert sorted(sets) == expected

    def test_zero_rotation_characterization(self):
        for d in (2, 3, 4):
            fixed = set(fixed_angles(d))
            for rs in enumerate_rotation_sets(d, (d - 1) * 3, 3):
                assert rs.is_fixed == set(rs.angles).issubset(fixed)

    def test_singletons_have_rotation_zero(self):
        for d in (2, 3, 4):
            for rs in enumerate_rotation_sets(d, (d - 1) * 3, 3):
                if rs.cardinality == 1:
                    assert rs.shift == 0

    def test_shift_condition_holds(self):
        for rs in enumerate_rotation_sets(4, 9, 3):
            n = rs.cardinality
            for i, a in enumerate(rs.angles):
                assert map_angle(a, 4) == rs.angles[(i + rs.shift) % n]

    def test_deterministic_order(self):
        a = enumerate_rotation_sets(3, 6, 3)
        b = enumerate_rotation_sets(3, 6, 3)
        assert a == b
        assert a == sorted(a, key=lambda rs: rs.angles)

    def test_bad_bounds_rejected(self):
        with pytest.raises(ValueError):
            enumerate_rotation_sets(2, 0, 3)
        with pytest.raises(ValueError):
            enumerate_rotation_sets(2, 3, 0)


class TestGenerate:
    def test_examples(self):
        rs = generate_rotation_set(5, 2, 1, (1, 0, 1, 0))
        assert rs is not None and rs.angles == (F(1, 8), F(5, 8))
        rs = generate_rotation_set(2, 2, 1, (2,))
        assert rs is not None and rs.angles == (F(1, 3), F(2, 3))
        assert generate_rotation_set(5, 2, 1, (3, 0, 0, 0)) is None

    def test_round_trip_through_determinants(self):
        # shift + cardinality + deployment pin down every enumerated set
        for d in (2, 3):
            for rs in enumerate_rotation_sets(d, (d - 1) * 3, 3):
                again = generate_rotation_set(
                    d, rs.cardinality, rs.shift, deployment_vector(rs))
                assert again == rs

    def test_uniqueness_no_collisions(self):
        for d in (2, 3, 4):
            seen = {}
            for rs in enumerate_rotation_sets(d, (d - 1) * 4, 4):
                key = (rs.shift, rs.cardinality, deployment_vector(rs))
                assert key not in seen, (
                    f"d={d}: {seen.get(key)} and {rs.angles} share {key}")
                seen[key] = rs.angles

    def test_input_validation(self):
        with pytest.raises(ValueError):
            generate_rotation_set(5, 2, 2, (1, 0, 1, 0))   # shift out of range
        with pytest.raises(ValueError):
            generate_rotation_set(5, 2, 1, (1, 0, 1))      # wrong length
        with pytest.raises(ValueError):
            generate_rotation_set(5, 2, 1, (-1, 1, 1, 1))  # negative entry
