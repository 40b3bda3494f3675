"""Combinatorial plane embeddings as rotation systems.

``rotations[v]`` lists the neighbors of ``v`` in clockwise order. Faces are
the orbits of the dart permutation: from dart ``u -> v`` the next dart is
``v -> w`` where ``w`` follows ``u`` in ``rotations[v]`` (cyclically). With
clockwise rotations this traces bounded faces of a drawing counterclockwise
and the unbounded face clockwise.

Faces are numbered in discovery order, scanning darts ``(v, rotations[v][i])``
by ascending ``v`` then ``i``; a face's boundary starts at the tail of its
first-discovered dart. This numbering is what "face id" means throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import InvalidMap, NotThreeConnected
from .graph import Graph, build_graph, is_connected, vertex_connectivity


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.boundary)

    def is_cycle(self) -> bool:
        return len(set(self.boundary)) == len(self.boundary)

    def key(self) -> frozenset[int]:
        return frozenset(self.boundary)


@dataclass(frozen=True)
class PlaneMap:
    n: int
    rotations: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, ...] | None = field(default=None)

    @classmethod
    def from_rotations(
        cls, rotations: Sequence[Sequence[int]], outer_face: Sequence[int] | None = None
    ) -> PlaneMap:
        return cls(
            len(rotations),
            tuple(tuple(int(u) for u in r) for r in rotations),
            None if outer_face is None else tuple(outer_face),
        )

    @classmethod
    def from_coordinates(
        cls,
        coords: Sequence[tuple[float, float]],
        edges: Sequence[tuple[int, int]],
        outer_face: Sequence[int] | None = None,
    ) -> PlaneMap:
        """Rotation system of a straight-line drawing (neighbors sorted clockwise)."""
        n = len(coords)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)

        def angle(v: int, u: int) -> float:
            return math.atan2(coords[u][1] - coords[v][1], coords[u][0] - coords[v][0])

        rotations = [sorted(nbrs[v], key=lambda u: -angle(v, u)) for v in range(n)]
        return cls.from_rotations(rotations, outer_face)

    # cached derived data; only meaningful once validate_map passes
    @cached_property
    def _position(self) -> tuple[dict[int, int], ...]:
        return tuple({u: i for i, u in enumerate(r)} for r in self.rotations)

    def succ(self, v: int, u: int) -> int:
        """Neighbor following ``u`` in the rotation at ``v``."""
        r = self.rotations[v]
        return r[(self._position[v][u] + 1) % len(r)]

    def pred(self, v: int, u: int) -> int:
        r = self.rotations[v]
        return r[(self._position[v][u] - 1) % len(r)]

    @cached_property
    def graph(self) -> Graph:
        return build_graph(self.n, [(v, u) for v, r in enumerate(self.rotations) for u in r])

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    @cached_property
    def _faces(self) -> tuple[Face, ...]:
        seen: set[tuple[int, int]] = set()
        out = []
        for v, r in enumerate(self.rotations):
            for u in r:
                if (v, u) in seen:
                    continue
                walk = []
                a, b = v, u
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = b, self.succ(b, a)
                out.append(Face(tuple(walk)))
        return tuple(out)

    def face_index(self, boundary: Sequence[int]) -> int:
        """Face id whose boundary is ``boundary`` up to cyclic rotation."""
        target = tuple(boundary)
        k = len(target)
        for i, f in enumerate(self._faces):
            if f.length != k:
                continue
            b = f.boundary
            for s in range(k):
                if b[s:] + b[:s] == target:
                    return i
        raise KeyError(f"no face with boundary {list(boundary)}")

    def outer_face_index(self) -> int | None:
        return None if self.outer_face is None else self.face_index(self.outer_face)

    def mirrored(self) -> PlaneMap:
        """Mirror image: every rotation reversed, face boundaries reversed."""
        outer = None if self.outer_face is None else tuple(reversed(self.outer_face))
        return PlaneMap(self.n, tuple(tuple(reversed(r)) for r in self.rotations), outer)


@dataclass
class ValidationReport:
    violations: list[str]
    n: int = 0
    m: int = 0
    f: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_map(pm: PlaneMap) -> ValidationReport:
    """Check the rotation-system invariants; violations are returned, not raised."""
    bad: list[str] = []
    n = pm.n
    if len(pm.rotations) != n:
        return ValidationReport([f"{len(pm.rotations)} rotations for {n} vertices"], n)
    for v, r in enumerate(pm.rotations):
        if any(not 0 <= u < n for u in r):
            bad.append(f"vertex {v}: neighbor id out of range")
        elif v in r:
            bad.append(f"vertex {v}: self-loop")
        elif len(set(r)) != len(r):
            bad.append(f"vertex {v}: duplicate neighbor")
    if bad:
        return ValidationReport(bad, n)
    sets = [set(r) for r in pm.rotations]
    for v in range(n):
        for u in pm.rotations[v]:
            if v not in sets[u]:
                bad.append(f"asymmetric adjacency: {u} in rotation of {v} but not conversely")
    if bad:
        return ValidationReport(bad, n)
    g = pm.graph
    if n == 0 or not is_connected(g):
        bad.append("underlying graph is not connected")
    fs = pm._faces
    m, f = g.m, len(fs)
    if n - m + f != 2:
        bad.append(f"Euler characteristic n - m + f = {n - m + f}, expected 2")
    if pm.outer_face is not None:
        try:
            pm.outer_face_index()
        except KeyError:
            bad.append(f"outer face {list(pm.outer_face)} is not a face boundary")
    return ValidationReport(bad, n, m, f)


def require_valid(pm: PlaneMap) -> None:
    report = validate_map(pm)
    if not report.ok:
        raise InvalidMap("; ".join(report.violations))


def faces(pm: PlaneMap) -> list[Face]:
    require_valid(pm)
    return list(pm._faces)


def _all_faces_are_cycles_of(pm: PlaneMap, k: int) -> bool:
    return all(f.length == k and f.is_cycle() for f in faces(pm))


def is_pentagulation(pm: PlaneMap) -> bool:
    return _all_faces_are_cycles_of(pm, 5)


def is_triangulation(pm: PlaneMap) -> bool:
    return _all_faces_are_cycles_of(pm, 3)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cycles as sorted triples, lexicographic order."""
    out = []
    for a in range(g.n):
        na = g.neighbor_sets[a]
        for b in g.adjacency[a]:
            if b <= a:
                continue
            for c in g.adjacency[b]:
                if c > b and c in na:
                    out.append((a, b, c))
    return out


def separating_triangles(pm: PlaneMap) -> list[tuple[int, int, int]]:
    """3-cycles that do not bound a face.

    On a 2-connected plane map a 3-cycle that is not a face boundary has
    vertices on both sides, so it separates.
    """
    face_keys = {f.key() for f in faces(pm) if f.length == 3}
    return [t for t in triangles(pm.graph) if frozenset(t) not in face_keys]


def face_chords(pm: PlaneMap) -> list[tuple[int, tuple[int, int]]]:
    """``(face id, chord)`` for every edge joining non-consecutive boundary vertices."""
    g = pm.graph
    out = []
    for i, f in enumerate(faces(pm)):
        b = f.boundary
        k = len(b)
        consecutive = {frozenset((b[j], b[(j + 1) % k])) for j in range(k)}
        for u, v in combinations(sorted(set(b)), 2):
            if g.has_edge(u, v) and frozenset((u, v)) not in consecutive:
                out.append((i, (u, v)))
    return out


def face_chords_absent(pm: PlaneMap, kappa: int | None = None) -> bool:
    """True iff no face boundary of a 3-connected map has a chord.

    Args:
        kappa: precomputed vertex connectivity, to skip recomputing it.
    """
    require_valid(pm)
    if kappa is None:
        kappa = vertex_connectivity(pm.graph)
    if kappa < 3:
        raise NotThreeConnected(f"vertex connectivity is {kappa}")
    return not face_chords(pm)


def dart_faces(pm: PlaneMap) -> dict[tuple[int, int], int]:
    """Face id of every dart ``(u, v)``."""
    out = {}
    for i, f in enumerate(faces(pm)):
        b = f.boundary
        for j in range(len(b)):
            out[(b[j], b[(j + 1) % len(b)])] = i
    return out


def insert_face_vertices(pm: PlaneMap, face_ids: Sequence[int]) -> PlaneMap:
    """Insert one new vertex inside each listed face, joined to its boundary.

    New vertices get ids ``n, n+1, ...`` in the order of ``face_ids``. Every
    listed face must be bounded by a cycle.
    """
    fs = faces(pm)
    darts = dart_faces(pm)
    new_id = {fid: pm.n + i for i, fid in enumerate(face_ids)}
    rotations: list[list[int]] = []
    for v, r in enumerate(pm.rotations):
        row = []
        for a in r:
            row.append(a)
            # the corner after a at v belongs to the face of dart a -> v
            fid = darts[(a, v)]
            if fid in new_id:
                row.append(new_id[fid])
        rotations.append(row)
    for fid in face_ids:
        f = fs[fid]
        if not f.is_cycle():
            raise InvalidMap(f"face {fid} boundary {list(f.boundary)} is not a cycle")
        rotations.append(list(reversed(f.boundary)))
    return PlaneMap.from_rotations(rotations)
