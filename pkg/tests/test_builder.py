from fractions import Fraction as F

import pytest

from portraits import (InvalidPortraitError, Portrait, assemble_tree,
                       build_regions, classified_sets, construct_tree,
                       critical_capacities, elementary_arcs,
                       enumerate_portraits, vertex_dynamics)
from portraits.angles import arc_start_gap


def union_find_regions(p):
    """Independent oracle for the region partition.

    Pairwise union-find over elementary arcs with the literal predicate
    "same gap of every member set", no signature trick.
    """
    sets = classified_sets(p)
    arcs = elementary_arcs(p)
    parent = list(range(len(arcs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    splitters = [rs.angles for rs in sets if rs.cardinality >= 2]
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if all(arc_start_gap(s, arcs[i].start) == arc_start_gap(s, arcs[j].start)
                   for s in splitters):
                union(i, j)

    groups = {}
    for i in range(len(arcs)):
        groups.setdefault(find(i), []).append(i)
    return sorted(frozenset((arcs[i].start, arcs[i].end) for i in idxs)
                  for idxs in groups.values())


class TestElementaryArcs:
    def test_degree5(self, degree5_portrait):
        arcs = elementary_arcs(degree5_portrait)
        assert [(a.start, a.end) for a in arcs] == [
            (F(0), F(1, 8)), (F(1, 8), F(1, 4)), (F(1, 4), F(1, 2)),
            (F(1, 2), F(5, 8)), (F(5, 8), F(3, 4)), (F(3, 4), F(0))]

    def test_basilica(self, basilica):
        assert len(elementary_arcs(basilica)) == 3

    def test_single_angle_wraps(self):
        arcs = elementary_arcs(Portrait.create(2, [[F(0)]]))
        assert [(a.start, a.end) for a in arcs] == [(F(0), F(0))]

    def test_requires_valid_portrait(self):
        with pytest.raises(InvalidPortraitError):
            elementary_arcs(Portrait.create(5, [[F(1, 8), F(5, 8)]]))


class TestRegions:
    def test_degree5_partition(self, degree5_portrait):
        regions = build_regions(degree5_portrait)
        partition = sorted(frozenset((a.start, a.end) for a in r.arcs)
                           for r in regions)
        assert partition == [
            frozenset({(F(0), F(1, 8)), (F(5, 8), F(3, 4))}),
            frozenset({(F(1, 8), F(1, 4)), (F(1, 4), F(1, 2)), (F(1, 2), F(5, 8))}),
            frozenset({(F(3, 4), F(0))}),
        ]
        assert partition == union_find_regions(degree5_portrait)

    def test_degree5_counts(self, degree5_portrait):
        regions = build_regions(degree5_portrait)
        assert len(regions) == 3          # l + d - k = 2 + 5 - 4
        assert sorted(r.cc for r in regions) == [1, 1, 2]
        assert critical_capacities(regions, 5) == (1, 2, 1)

    def test_basilica(self, basilica):
        regions = build_regions(basilica)
        partition = sorted(frozenset((a.start, a.end) for a in r.arcs)
                           for r in regions)
        assert partition == [
            frozenset({(F(0), F(1, 3)), (F(2, 3), F(0))}),
            frozenset({(F(1, 3), F(2, 3))}),
        ]
        assert partition == union_find_regions(basilica)
        assert [r.cc for r in regions] == [1, 0]

    def test_single_angle(self):
        regions = build_regions(Portrait.create(2, [[F(0)]]))
        assert len(regions) == 1
        assert critical_capacities(regions, 2) == (1,)

    def test_oracle_agreement_over_census(self):
        for d in (2, 3):
            for p in enumerate_portraits(d, 3):
                regions = build_regions(p)
                assert union_find_regions(p) == sorted(
                    frozenset((a.start, a.end) for a in r.arcs) for r in regions)

    def test_count_formulas_over_census(self):
        for d in (2, 3):
            for p in enumerate_portraits(d, 3):
                sets = classified_sets(p)
                ell = sum(rs.cardinality for rs in sets if not rs.is_fixed)
                regions = build_regions(p)
                assert len(regions) == ell + d - p.k
                assert len(regions) == 1 + sum(rs.cardinality - 1 for rs in sets)
                assert sum(r.cc for r in regions) == d - 1

    def test_boundary_transitions_share_a_set(self):
        for p in enumerate_portraits(3, 3):
            sets = classified_sets(p)
            owner = {a: j for j, rs in enumerate(sets, 1) for a in rs.angles}
            for r in build_regions(p):
                for i, arc in enumerate(r.arcs):
                    nxt = r.arcs[(i + 1) % len(r.arcs)]
                    assert owner[arc.end] == owner[nxt.start] == r.boundary_cycle[i]

    def test_at_most_one_rotating_boundary_set(self):
        for p in enumerate_portraits(3, 3):
            sets = classified_sets(p)
            for r in build_regions(p):
                rotating = [j for j in r.boundary_sets if not sets[j - 1].is_fixed]
                assert len(rotating) <= 1


class TestAssembly:
    def test_degree5_shape(self, degree5_portrait):
        ct = assemble_tree(degree5_portrait)
        t = ct.tree
        assert len(t.vertices) == 7
        assert len(t.edges) == 6
        assert sorted(t.delta[v] for v in t.vertices if v.startswith("v")) == [1, 1, 1, 1]
        assert sorted(t.delta[v] for v in t.vertices if v.startswith("w")) == [2, 2, 3]
        assert t.total_degree() == 5

    def test_edge_count_matches_set_size(self):
        for d in (2, 3):
            for p in enumerate_portraits(d, 3):
                ct = assemble_tree(p)
                for j, s in enumerate(classified_sets(p), 1):
                    v = ct.julia_vertex_of_set[j]
                    assert ct.tree.degree_of(v) == s.cardinality

    def test_edges_at_region_vertices(self, degree5_portrait):
        ct = assemble_tree(degree5_portrait)
        regions = build_regions(degree5_portrait)
        for r in regions:
            w = ct.fatou_vertex_of_region[r.index]
            assert ct.tree.degree_of(w) == len(r.boundary_sets)

    def test_uniform_gap_angles(self, degree5_portrait):
        t = assemble_tree(degree5_portrait).tree
        for v in t.vertices:
            m = t.degree_of(v)
            assert t.gap_angles[v] == tuple([F(1, m)] * m)

    def test_marked_sector(self, degree5_portrait):
        ct = assemble_tree(degree5_portrait)
        v, k = ct.marked_sector
        assert ct.arc_anchor[v][k] == F(0)


class TestDynamics:
    def test_degree5_interchanges_one_pair(self, degree5_portrait):
        ct = construct_tree(degree5_portrait)
        tau = ct.tree.tau
        moved = {v: tau[v] for v in ct.tree.vertices if tau[v] != v}
        assert moved == {"w1": "w2", "w2": "w1"}

    def test_basilica_two_cycle(self, basilica):
        ct = construct_tree(basilica)
        tau = ct.tree.tau
        assert tau["w1"] == "w2" and tau["w2"] == "w1"
        assert tau["v1"] == "v1" and tau["v2"] == "v2"

    def test_all_fixed_when_no_rotating_set(self):
        p = Portrait.create(3, [[F(0), F(1, 2)]])
        ct = construct_tree(p)
        assert all(ct.tree.tau[v] == v for v in ct.tree.vertices)

    def test_moving_vertex_period_matches_angle_period(self):
        for p in enumerate_portraits(3, 3):
            ct = construct_tree(p)
            tau = ct.tree.tau
            sets = classified_sets(p)
            for j, rs in enumerate(sets, 1):
                if rs.is_fixed:
                    continue
                # the regions around the rotating vertex cycle with the
                # same period as its angles
                for w in ct.tree.circular_order[ct.julia_vertex_of_set[j]]:
                    steps, x = 1, tau[w]
                    while x != w:
                        x, steps = tau[x], steps + 1
                    assert steps == rs.period

    def test_tau_never_collapses_an_edge(self):
        for p in enumerate_portraits(3, 3):
            ct = construct_tree(p)
            for a, b in ct.tree.edges:
                assert ct.tree.tau[a] != ct.tree.tau[b]

    def test_dynamics_via_explicit_call(self, degree5_portrait):
        ct = assemble_tree(degree5_portrait)
        tau = vertex_dynamics(degree5_portrait, ct)
        assert tau["w1"] == "w2" and tau["w2"] == "w1" and tau["w3"] == "w3"
