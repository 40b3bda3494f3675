"""Op-drawings: a 3-connected pentagulation with a pentagram in every face.

For a face traversed ``v0..v4`` the chords are ``c_i = (v_i, v_{i+2})`` and
chord ``c_i`` crosses exactly ``c_{i-1}`` and ``c_{i+1}``; the crossing of
``c_i`` and ``c_{i+1}`` is called ``X_i``. No geometry is computed; this is
the crossing pattern of a pentagram drawn inside a convex pentagon.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateEdge, NotPentagulation, NotThreeConnected
from .graph import Graph, build_graph, vertex_connectivity
from .planemap import PlaneMap, dart_faces, faces, is_pentagulation


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Pentagram:
    face: int
    boundary: tuple[int, int, int, int, int]

    @property
    def chords(self) -> list[tuple[int, int]]:
        b = self.boundary
        return [(b[i], b[(i + 2) % 5]) for i in range(5)]

    @property
    def crossings(self) -> list[tuple[int, int]]:
        """Index pairs ``(i, i+1 mod 5)`` of crossing chords."""
        return [(i, (i + 1) % 5) for i in range(5)]


@dataclass(frozen=True)
class OpDrawing:
    skeleton: PlaneMap
    pentagrams: tuple[Pentagram, ...]

    def chord_edges(self) -> list[tuple[int, int]]:
        return [_edge(u, v) for p in self.pentagrams for u, v in p.chords]


def insert_pentagrams(pm: PlaneMap, kappa: int | None = None) -> OpDrawing:
    if not is_pentagulation(pm):
        raise NotPentagulation("every face must be bounded by a 5-cycle")
    if kappa is None:
        kappa = vertex_connectivity(pm.graph)
    if kappa < 3:
        raise NotThreeConnected(f"pentagulation has vertex connectivity {kappa}")
    return OpDrawing(
        pm, tuple(Pentagram(i, f.boundary) for i, f in enumerate(faces(pm)))  # type: ignore[arg-type]
    )


def planar_skeleton(d: OpDrawing) -> PlaneMap:
    return d.skeleton


def abstract_graph(d: OpDrawing) -> Graph:
    """Skeleton edges plus all chords; a repeated edge is an input error."""
    seen = {_edge(u, v) for u, v in d.skeleton.graph.edges()}
    for u, v in d.chord_edges():
        e = _edge(u, v)
        if e in seen:
            raise DuplicateEdge(f"chord {e} repeats an existing edge")
        seen.add(e)
    return build_graph(d.skeleton.n, seen)


def check_optimal_edge_count(g: Graph) -> bool:
    return g.m == 5 * g.n - 10


def crossings_per_edge(d: OpDrawing) -> dict[tuple[int, int], int]:
    counts = {e: 0 for e in d.skeleton.graph.edges()}
    for p in d.pentagrams:
        chords = p.chords
        for i, j in p.crossings:
            for e in (_edge(*chords[i]), _edge(*chords[j])):
                counts[e] = counts.get(e, 0) + 1
    return counts


def crossing_vertex(d: OpDrawing, face: int, i: int) -> int:
    """Id of the crossing of chords ``c_i`` and ``c_{i+1}`` in ``planarize``."""
    return d.skeleton.n + 5 * face + i


def planarize(d: OpDrawing) -> PlaneMap:
    """Replace every crossing by a degree-4 vertex.

    Chord ``c_i`` of face ``f`` becomes the path ``v_i, X_{i-1}, X_i, v_{i+2}``.
    At ``v_i`` the face corner between ``v_{i-1}`` and ``v_{i+1}`` receives
    ``X_{i-2}, X_{i-1}``; ``X_j`` has rotation ``v_{j+2}, v_{j+1}, X_{j-1}, X_{j+1}``.
    """
    pm = d.skeleton
    darts = dart_faces(pm)
    by_face = {p.face: p for p in d.pentagrams}
    rotations: list[list[int]] = []
    for v, rot in enumerate(pm.rotations):
        row = []
        for a in rot:
            row.append(a)
            fid = darts[(a, v)]
            b = by_face[fid].boundary
            i = b.index(v)
            row += [crossing_vertex(d, fid, (i - 2) % 5), crossing_vertex(d, fid, (i - 1) % 5)]
        rotations.append(row)
    for p in sorted(d.pentagrams, key=lambda p: p.face):
        b = p.boundary
        for j in range(5):
            rotations.append([
                b[(j + 2) % 5],
                b[(j + 1) % 5],
                crossing_vertex(d, p.face, (j - 1) % 5),
                crossing_vertex(d, p.face, (j + 1) % 5),
            ])
    return PlaneMap.from_rotations(rotations)
