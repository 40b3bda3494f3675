"""Face-stellation of a 2-connected plane map and its structural checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import NotTwoConnected, TheoremViolation
from .graph import Graph, build_graph, girth, vertex_connectivity
from .planemap import (
    PlaneMap,
    faces,
    insert_face_vertices,
    is_triangulation,
    separating_triangles,
)


@dataclass(frozen=True)
class StellatedMap:
    map: PlaneMap
    n_initial: int
    host_face: tuple[tuple[int, ...], ...]  # boundary of the face each stellating vertex sits in

    @property
    def initial(self) -> range:
        return range(self.n_initial)

    @property
    def stellating(self) -> range:
        return range(self.n_initial, self.map.n)

    def is_stellating(self, v: int) -> bool:
        return v >= self.n_initial

    def host_of(self, h: int) -> tuple[int, ...]:
        return self.host_face[h - self.n_initial]


def stellate(pm: PlaneMap, kappa: int | None = None) -> StellatedMap:
    """Insert a vertex in every face; new ids follow face-id order.

    Args:
        kappa: known vertex connectivity of ``pm``, to skip recomputation.
    """
    fs = faces(pm)
    if kappa is None:
        kappa = vertex_connectivity(pm.graph)
    if kappa < 2 or any(not f.is_cycle() for f in fs):
        raise NotTwoConnected(f"face-stellation needs a 2-connected map (kappa = {kappa})")
    out = insert_face_vertices(pm, range(len(fs)))
    return StellatedMap(out, pm.n, tuple(f.boundary for f in fs))


def stellating_independent(s: StellatedMap, g: Graph | None = None) -> bool:
    g = s.map.graph if g is None else g
    return all(u < s.n_initial for h in s.stellating for u in g.adjacency[h])


def check_wheel_property(s: StellatedMap, g: Graph | None = None) -> bool:
    """Each stellating vertex with its neighbors induces a wheel on its host cycle.

    ``g`` may be passed to check a mutated adjacency against the same
    stellation bookkeeping.
    """
    g = s.map.graph if g is None else g
    for h in s.stellating:
        rim = s.host_of(h)
        if set(g.adjacency[h]) != set(rim):
            return False
        k = len(rim)
        rim_edges = {frozenset((rim[i], rim[(i + 1) % k])) for i in range(k)}
        for u, v in combinations(rim, 2):
            if g.has_edge(u, v) != (frozenset((u, v)) in rim_edges):
                return False
    return True


def check_consecutive_property(s: StellatedMap, g: Graph | None = None) -> bool:
    """Consecutive host-cycle pairs close a triangular face with the hub;
    non-consecutive pairs induce a path through it."""
    pm = s.map
    g = pm.graph if g is None else g
    tri_faces = {f.key() for f in faces(pm) if f.length == 3}
    for h in s.stellating:
        rim = s.host_of(h)
        k = len(rim)
        for i, j in combinations(range(k), 2):
            y, z = rim[i], rim[j]
            induced = g.has_edge(h, y) + g.has_edge(h, z) + g.has_edge(y, z)
            if (j - i) % k in (1, k - 1):
                if induced != 3 or frozenset((h, y, z)) not in tri_faces:
                    return False
            elif induced != 2 or g.has_edge(y, z):
                return False
    return True


class Reason(enum.Enum):
    OK = "ok"
    NOT_THREE_CONNECTED = "NotThreeConnected"
    GIRTH_TOO_SMALL = "GirthTooSmall"


def stellation_four_connected(pm: PlaneMap) -> tuple[bool, Reason]:
    """Hypothesis check plus verification that the stellation is 4-connected.

    Returns ``(False, reason)`` when the map is not 3-connected or has a
    triangle. When both hypotheses hold, a stellation that is not a
    triangulation, has a separating triangle, or has connectivity below 4
    raises :class:`TheoremViolation`.
    """
    g = pm.graph
    kappa = vertex_connectivity(g)
    if kappa < 3:
        return False, Reason.NOT_THREE_CONNECTED
    if girth(g) < 4:
        return False, Reason.GIRTH_TOO_SMALL
    s = stellate(pm, kappa)
    if not is_triangulation(s.map):
        raise TheoremViolation("stellation is not a triangulation")
    if separating_triangles(s.map):
        raise TheoremViolation("stellation of a girth >= 4 map has a separating triangle")
    k4 = vertex_connectivity(s.map.graph)
    if k4 < 4:
        raise TheoremViolation(f"stellation has vertex connectivity {k4} < 4")
    return True, Reason.OK


def with_extra_edge(g: Graph, u: int, v: int) -> Graph:
    """Copy of ``g`` with edge ``uv`` added (mutation tests)."""
    return build_graph(g.n, g.edges() + [(u, v)])
