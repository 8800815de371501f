"""Angled trees with vertex dynamics and local degrees, plus all axiom checks.

The angle function is stored as a circular edge order per vertex together
with the consecutive gap angles; the pairwise angle between two incident
edges is the sum of the gaps walked counterclockwise from one to the other.
Additivity then holds by construction, and skew-symmetry reduces to the gap
total being a whole number of turns.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvariantViolationError


@dataclass(frozen=True)
class AngledTree:
    """A finite tree with circular edge orders, gap angles, dynamics and degrees.

    ``circular_order[v]`` lists v's neighbors counterclockwise (the tree is
    simple, so a neighbor identifies an edge).  ``gap_angles[v][i]`` is the
    angle from edge i to edge i+1 (cyclically); a one-edge vertex carries the
    single full-turn gap 1.  ``tau`` is the vertex dynamics and ``delta`` the
    local degree function.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    circular_order: dict[str, tuple[str, ...]]
    gap_angles: dict[str, tuple[Fraction, ...]]
    tau: dict[str, str]
    delta: dict[str, int]

    def degree_of(self, v: str) -> int:
        return len(self.circular_order[v])

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self.circular_order[v]

    def angle_between(self, v: str, a: str, b: str) -> Fraction:
        """Angle at v from the edge toward a to the edge toward b, mod 1."""
        order = self.circular_order[v]
        i, j = order.index(a), order.index(b)
        total = Fraction(0)
        t = i
        while t != j:
            total += self.gap_angles[v][t]
            t = (t + 1) % len(order)
        return total % 1

    def total_degree(self) -> int:
        """1 + sum of (delta(v) - 1) over all vertices."""
        return 1 + sum(self.delta[v] - 1 for v in self.vertices)

    def critical_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.delta[v] > 1)


@dataclass(frozen=True)
class TreeViolation:
    code: str
    detail: str


@dataclass(frozen=True)
class VertexClass:
    """Orbit bookkeeping for one vertex under the vertex dynamics."""

    kind: str        # "fatou" | "julia"
    cycle_id: int
    preperiod: int
    period: int

    @property
    def is_periodic(self) -> bool:
        return self.preperiod == 0


def edge_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def _connected(t: AngledTree) -> bool:
    if not t.vertices:
        return False
    seen = {t.vertices[0]}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u in t.circular_order.get(v, ()):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(t.vertices)


def check_tree_axioms(t: AngledTree) -> tuple[TreeViolation, ...]:
    """Verify every structural axiom, reporting each failure with a witness.

    Checks: map domains agree with the vertex set, edges match the circular
    orders, the graph is a connected tree, every gap angle is positive with
    integral total and no proper partial sum integral (so the pairwise angle
    vanishes only on equal edges), tau never collapses an edge, the local
    degrees are >= 1 with total degree >= 2, and a critical vertex exists.
    """
    out: list[TreeViolation] = []
    vset = set(t.vertices)
    if len(vset) != len(t.vertices):
        out.append(TreeViolation("structure", "duplicate vertex labels"))
    for name, mapping in (("circular_order", t.circular_order),
                          ("gap_angles", t.gap_angles),
                          ("tau", t.tau), ("delta", t.delta)):
        if set(mapping) != vset:
            out.append(TreeViolation("structure", f"{name} keys differ from vertices"))
            return tuple(out)

    incident = {(a, b) for a, b in t.edges} | {(b, a) for a, b in t.edges}
    for v in t.vertices:
        order = t.circular_order[v]
        if len(set(order)) != len(order):
            out.append(TreeViolation("structure", f"repeated neighbor at {v}"))
        for u in order:
            if (v, u) not in incident:
                out.append(TreeViolation("structure", f"order at {v} lists non-edge {u}"))
        if len(t.gap_angles[v]) != len(order):
            out.append(TreeViolation("structure", f"gap count at {v} differs from degree"))
    for a, b in t.edges:
        if a == b:
            out.append(TreeViolation("structure", f"loop edge at {a}"))
        elif b not in t.circular_order.get(a, ()) or a not in t.circular_order.get(b, ()):
            out.append(TreeViolation("structure", f"edge {a}-{b} missing from an order"))
    if out:
        return tuple(out)

    if len(t.edges) != len(t.vertices) - 1:
        out.append(TreeViolation(
            "not-a-tree", f"{len(t.vertices)} vertices but {len(t.edges)} edges"))
    if not _connected(t):
        out.append(TreeViolation("not-connected", "the graph is disconnected"))

    for v in t.vertices:
        gaps = t.gap_angles[v]
        for i, g in enumerate(gaps):
            if g <= 0:
                out.append(TreeViolation("angle-gap", f"gap {i} at {v} is {g} <= 0"))
        total = sum(gaps)
        if total.denominator != 1 or total < 1:
            out.append(TreeViolation(
                "angle-total", f"gaps at {v} sum to {total}, not a positive whole turn"))
            continue
        # the angle between edges i and j is (prefix[j] - prefix[i]) mod 1,
        # so it vanishes on a distinct pair iff two prefixes agree mod 1
        prefix = Fraction(0)
        residues = {prefix: 0}
        for i, g in enumerate(gaps[:-1]):
            prefix = (prefix + g) % 1
            if prefix in residues:
                out.append(TreeViolation(
                    "angle-zero",
                    f"distinct edges {residues[prefix]} and {i + 1} at {v} "
                    f"subtend angle 0"))
            else:
                residues[prefix] = i + 1

    for a, b in t.edges:
        if t.tau[a] == t.tau[b]:
            out.append(TreeViolation(
                "tau-collapse", f"edge {a}-{b} has tau({a}) = tau({b}) = {t.tau[a]}"))
    for v in t.vertices:
        if t.tau[v] not in vset:
            out.append(TreeViolation("tau-range", f"tau({v}) = {t.tau[v]} not a vertex"))
        if t.delta[v] < 1:
            out.append(TreeViolation("delta-range", f"delta({v}) = {t.delta[v]} < 1"))

    if t.total_degree() < 2:
        out.append(TreeViolation("degree-too-small", f"total degree {t.total_degree()} < 2"))
    if not t.critical_vertices():
        out.append(TreeViolation("no-critical-vertex", "every vertex has delta 1"))
    return tuple(out)


def _tree_path(t: AngledTree, x: str, y: str) -> tuple[str, ...]:
    """The unique simple path from x to y (BFS; trees make it unique)."""
    if x == y:
        return (x,)
    parent: dict[str, Optional[str]] = {x: None}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for u in t.circular_order[v]:
            if u not in parent:
                parent[u] = v
                if u == y:
                    path = [y]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                queue.append(u)
    raise InvariantViolationError(f"no path from {x} to {y}; tree is disconnected")


def edge_image_path(t: AngledTree, edge: tuple[str, str]) -> tuple[str, ...]:
    """Vertex path the image of an edge runs along: tau(v) to tau(v')."""
    v, u = edge
    a, b = t.tau[v], t.tau[u]
    if a == b:
        raise InvariantViolationError(f"edge {v}-{u} collapses under tau")
    return _tree_path(t, a, b)


def initial_image_edge(t: AngledTree, v: str, u: str) -> str:
    """Neighbor of tau(v) along the image of edge v-u (the edge's germ)."""
    return edge_image_path(t, (v, u))[1]


def check_degree_angle(t: AngledTree) -> tuple[TreeViolation, ...]:
    """Verify that tau multiplies angles at v by delta(v).

    The angle between two image edges is measured at tau(v) between the
    initial edges of the image paths; distinct edges may share their initial
    image edge, in which case that angle is zero.
    """
    out: list[TreeViolation] = []
    for v in t.vertices:
        nbrs = t.circular_order[v]
        if len(nbrs) < 2:
            continue
        tv = t.tau[v]
        germs = [initial_image_edge(t, v, u) for u in nbrs]
        for i in range(len(nbrs)):
            for j in range(len(nbrs)):
                if i == j:
                    continue
                if germs[i] == germs[j]:
                    lhs = Fraction(0)
                else:
                    lhs = t.angle_between(tv, germs[i], germs[j])
                rhs = (t.delta[v] * t.angle_between(v, nbrs[i], nbrs[j])) % 1
                if lhs != rhs:
                    out.append(TreeViolation(
                        "degree-angle",
                        f"at {v}: edges to {nbrs[i]},{nbrs[j]} subtend "
                        f"{t.angle_between(v, nbrs[i], nbrs[j])}, images subtend "
                        f"{lhs} != delta*angle = {rhs}"))
    return tuple(out)


def classify_vertices(t: AngledTree) -> dict[str, VertexClass]:
    """Follow every orbit to its cycle; Fatou iff the cycle holds a critical vertex."""
    classes: dict[str, VertexClass] = {}
    cycles: list[tuple[str, ...]] = []
    cycle_of: dict[str, int] = {}

    for v in t.vertices:
        x = v
        for _ in range(len(t.vertices)):
            x = t.tau[x]
        if x not in cycle_of:
            cycle = [x]
            y = t.tau[x]
            while y != x:
                cycle.append(y)
                y = t.tau[y]
            cid = len(cycles)
            cycles.append(tuple(cycle))
            for c in cycle:
                cycle_of[c] = cid

    for v in t.vertices:
        preperiod = 0
        x = v
        while x not in cycle_of:
            preperiod += 1
            x = t.tau[x]
        cid = cycle_of[x]
        cycle = cycles[cid]
        kind = "fatou" if any(t.delta[c] > 1 for c in cycle) else "julia"
        classes[v] = VertexClass(kind, cid, preperiod, len(cycle))
    return classes


def check_expanding(t: AngledTree,
                    classes: Optional[dict[str, VertexClass]] = None
                    ) -> tuple[bool, Optional[tuple[str, str]]]:
    """Expansion check: every edge between Julia vertices must eventually
    have its endpoints pushed to tree distance > 1.

    The pair orbit lives among at most |V|^2 vertex pairs, so not separating
    within |V|^2 steps is conclusive.  Returns (True, None) or (False, edge).
    """
    if classes is None:
        classes = classify_vertices(t)

    def dist(x: str, y: str) -> int:
        return len(_tree_path(t, x, y)) - 1

    bound = len(t.vertices) ** 2
    for a, b in t.edges:
        if classes[a].kind != "julia" or classes[b].kind != "julia":
            continue
        x, y = a, b
        for _ in range(bound):
            x, y = t.tau[x], t.tau[y]
            if dist(x, y) > 1:
                break
        else:
            return False, (a, b)
    return True, None


def check_julia_normalization(t: AngledTree,
                              classes: Optional[dict[str, VertexClass]] = None
                              ) -> tuple[TreeViolation, ...]:
    """At periodic Julia vertices with m edges, angles must be multiples of 1/m.

    Angles at non-periodic Julia vertices are unconstrained.
    """
    if classes is None:
        classes = classify_vertices(t)
    out: list[TreeViolation] = []
    for v in t.vertices:
        if classes[v].kind != "julia" or not classes[v].is_periodic:
            continue
        nbrs = t.circular_order[v]
        m = len(nbrs)
        for i in range(m):
            for j in range(i + 1, m):
                ang = t.angle_between(v, nbrs[i], nbrs[j])
                if (ang * m).denominator != 1:
                    out.append(TreeViolation(
                        "julia-angle",
                        f"angle {ang} at {v} between edges to {nbrs[i]} and "
                        f"{nbrs[j]} is not a multiple of 1/{m}"))
    return tuple(out)


def count_fixed_points(t: AngledTree) -> int:
    """Number of vertices fixed by the vertex dynamics."""
    return sum(1 for v in t.vertices if t.tau[v] == v)
