"""Built-in plane maps and the gadget-planting construction.

The dodecahedron and the two gadgets are transcribed from straight-line
drawings: literal coordinates plus literal edge lists, with the rotation
system read off by sorting neighbors clockwise. Numbering conventions:

* dodecahedron: drawing node ``k`` (1-based) is vertex ``k - 1``.
* gadget H: ``0, 1, 2`` are the outer corners ``x, y, z``; ``3..5`` the
  second ring ``y1..y3`` (``y1`` under ``z``, ``y2`` under ``x``, ``y3``
  under ``y``); ``6..14`` the nonagon ``z1..z9``; ``15..20`` the hexagon
  ``u1..u6``; ``21..23`` the spokes ``v1..v3``; ``24`` the center.
* gadget F: drawing node ``k`` is vertex ``k``; corners ``x, y, z`` are
  ``27, 24, 25``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadGadget, InvalidMap, TooSmall
from .planemap import (
    PlaneMap,
    dart_faces,
    faces,
    insert_face_vertices,
    validate_map,
)

# ---------------------------------------------------------------------------
# literal transcriptions
# ---------------------------------------------------------------------------

DODECAHEDRON_COORDS = [
    (6.27737, 2.03974), (-4.59854, -1.4923), (0, 6.60178), (3.88078, -5.34063),
    (-6.27737, 2.03974), (-3.88078, -5.34063), (0, 10), (5.87591, -8.09002),
    (1.22466, 1.68694), (1.98297, -0.644769), (-9.50933, 3.09002), (-5.87997, -8.09002),
    (-1.98297, -0.644769), (2.83861, 3.91322), (4.59448, -1.49635), (9.50933, 3.09002),
    (-1.22466, 1.68694), (0, -2.08435), (-2.83861, 3.91322), (0, -4.83374),
]

# 1-based, as drawn
DODECAHEDRON_EDGES_1 = [
    (1, 14), (1, 15), (1, 16), (2, 5), (2, 6), (2, 13), (3, 7), (3, 14), (3, 19),
    (4, 8), (4, 15), (4, 20), (5, 11), (5, 19), (6, 12), (6, 20), (7, 11), (7, 16),
    (8, 12), (8, 16), (9, 10), (9, 14), (9, 17), (10, 15), (10, 18), (11, 12),
    (13, 17), (13, 18), (17, 19), (18, 20),
]

# crossed edges of the same drawing (1-based); used to cross-check pentagrams
FIGURE1_CROSSED_EDGES_1 = [
    (19, 14), (14, 17), (17, 3), (3, 9), (9, 19), (19, 13), (13, 5), (5, 17),
    (17, 2), (2, 20), (18, 6), (6, 13), (20, 13), (2, 18), (13, 9), (9, 18),
    (18, 17), (17, 10), (10, 13), (9, 1), (1, 10), (10, 14), (14, 15), (15, 9),
    (18, 4), (4, 10), (10, 20), (20, 15), (15, 18), (12, 20), (20, 8), (8, 6),
    (6, 4), (4, 12), (12, 5), (5, 6), (2, 12), (6, 11), (11, 2), (11, 3),
    (7, 19), (19, 11), (5, 7), (7, 1), (1, 3), (3, 16), (16, 14), (14, 7),
    (1, 8), (8, 15), (4, 16), (16, 15), (1, 4), (7, 12), (12, 16), (8, 11),
    (8, 7), (11, 16), (19, 2), (5, 3),
]

# (angle in degrees, radius as a fraction of the outer radius)
GADGET_H_POLAR = (
    [(210, 1.0), (330, 1.0), (90, 1.0)]  # x, y, z
    + [(-30 + 120 * i, 0.8) for i in (1, 2, 3)]  # y1..y3
    + [(-50 + 40 * i, 0.35) for i in range(1, 10)]  # z1..z9
    + [(-60 + 60 * i, 0.2) for i in range(1, 7)]  # u1..u6
    + [(-30 + 120 * i, 0.1) for i in (1, 2, 3)]  # v1..v3
    + [(0, 0.0)]  # center
)


def _h(name: str) -> int:
    """Vertex id of a gadget-H label such as ``"z4"``."""
    if name in ("x", "y", "z"):
        return "xyz".index(name)
    if name == "c":
        return 24
    ring, i = name[0], int(name[1:])
    return {"Y": 2, "z": 5, "u": 14, "v": 20}[ring] + i


GADGET_H_EDGES = [
    (_h(a), _h(b))
    for a, b in [
        ("x", "y"), ("y", "z"), ("z", "x"),
        ("z", "Y1"), ("x", "Y2"), ("y", "Y3"),
        ("z1", "z2"), ("z2", "z3"), ("z3", "z4"), ("z4", "z5"), ("z5", "z6"),
        ("z6", "z7"), ("z7", "z8"), ("z8", "z9"), ("z9", "z1"),
        ("Y1", "z2"), ("Y2", "z5"), ("Y3", "z8"),
        ("Y1", "z5"), ("Y2", "z8"), ("Y3", "z2"),
        ("u1", "z1"), ("u2", "z3"), ("u3", "z4"), ("u4", "z6"), ("u5", "z7"), ("u6", "z9"),
        ("u1", "u2"), ("u3", "u4"), ("u5", "u6"),
        ("v1", "u2"), ("v1", "u3"), ("v2", "u4"), ("v2", "u5"), ("v3", "u6"), ("v3", "u1"),
        ("c", "v1"), ("c", "v2"), ("c", "v3"),
    ]
]

GADGET_F_COORDS = [
    (0.40493, 1.34303), (0.73566, -0.027607), (1.12538, -0.678476), (1.90671, 0.08604),
    (0.94289, 2.3653), (-0.040971, 3.91205), (-1.09817, 2.05653), (-0.538761, 1.3414),
    (-0.773038, -0.025374), (-0.023328, -0.672376), (-0.032605, -1.71415), (1.00876, -1.44386),
    (0.858506, -2.53896), (2.15186, -1.4037), (3.01538, -2.08319), (3.0509, 2.94508),
    (-0.005578, 5.20314), (-2.96763, 2.91433), (-2.26418, -1.21295), (-1.81479, 0.816147),
    (-1.13203, -1.07014), (-0.933245, -1.7512), (-0.835106, -2.56931), (-0.0015094, -3.99915),
    (8.66025, -5), (0, 10), (-2.9848, -2.01994), (-8.66025, -5),
]

GADGET_F_EDGES = [
    (0, 1), (0, 4), (0, 7), (1, 2), (1, 9), (2, 3), (2, 11), (3, 4), (3, 13), (4, 5),
    (4, 15), (5, 6), (5, 17), (6, 7), (6, 19), (7, 8), (8, 9), (8, 20), (9, 10),
    (10, 11), (10, 21), (11, 12), (12, 13), (12, 22), (13, 14), (14, 15), (14, 23),
    (14, 24), (15, 16), (16, 17), (16, 25), (17, 18), (17, 26), (18, 19), (18, 22),
    (19, 20), (20, 21), (21, 22), (22, 23), (23, 26), (26, 27), (27, 24), (24, 25),
    (25, 27),
]
GADGET_F_CORNERS = (27, 24, 25)


# ---------------------------------------------------------------------------
# gadgets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Gadget:
    map: PlaneMap
    outer_triangle: tuple[int, int, int]
    name: str = ""

    @property
    def interior(self) -> list[int]:
        corners = set(self.outer_triangle)
        return [v for v in range(self.map.n) if v not in corners]


def check_gadget(gadget: Gadget) -> None:
    """Raise :class:`BadGadget` unless the gadget can be planted.

    Requirements: a valid map whose designated outer face is the triangle
    ``x, y, z`` traversed as ``x, z, y`` (so that planting ``x, y, z`` onto
    a host face traversed ``a, b, c`` glues interiors consistently), and
    every other face bounded by a 5-cycle.
    """
    pm = gadget.map
    report = validate_map(pm)
    if not report.ok:
        raise BadGadget("; ".join(report.violations))
    x, y, z = gadget.outer_triangle
    g = pm.graph
    if not (g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(z, x)):
        raise BadGadget("outer triangle vertices are not pairwise adjacent")
    if pm.outer_face is None:
        raise BadGadget("gadget has no designated outer face")
    try:
        outer = pm.face_index((x, z, y))
    except KeyError:
        raise BadGadget("outer face is not traversed as x, z, y") from None
    if outer != pm.outer_face_index():
        raise BadGadget("designated outer face differs from the x, y, z triangle")
    for i, f in enumerate(faces(pm)):
        if i != outer and not (f.length == 5 and f.is_cycle()):
            raise BadGadget(f"inner face {list(f.boundary)} is not a pentagon")


def _polar_coords(polar: list[tuple[float, float]]) -> list[tuple[float, float]]:
    return [
        (r * math.cos(math.radians(a)), r * math.sin(math.radians(a))) for a, r in polar
    ]


def gadget_H() -> Gadget:
    """The 25-vertex gadget whose inner faces are all pentagons."""
    pm = PlaneMap.from_coordinates(
        _polar_coords(GADGET_H_POLAR), GADGET_H_EDGES, outer_face=(0, 2, 1)
    )
    gadget = Gadget(pm, (0, 1, 2), "H")
    check_gadget(gadget)
    return gadget


def gadget_F() -> Gadget:
    """The 28-vertex gadget with an odd number (25) of interior vertices."""
    x, y, z = GADGET_F_CORNERS
    pm = PlaneMap.from_coordinates(GADGET_F_COORDS, GADGET_F_EDGES, outer_face=(x, z, y))
    gadget = Gadget(pm, GADGET_F_CORNERS, "F")
    check_gadget(gadget)
    return gadget


GADGETS = {"h": gadget_H, "f": gadget_F}


# ---------------------------------------------------------------------------
# plane maps
# ---------------------------------------------------------------------------


def dodecahedron() -> PlaneMap:
    edges = [(u - 1, v - 1) for u, v in DODECAHEDRON_EDGES_1]
    return PlaneMap.from_coordinates(DODECAHEDRON_COORDS, edges)


def _circle(k: int, radius: float = 1.0) -> list[tuple[float, float]]:
    return [
        (radius * math.cos(math.pi / 2 + 2 * math.pi * i / k),
         radius * math.sin(math.pi / 2 + 2 * math.pi * i / k))
        for i in range(k)
    ]


def cycle_map(k: int) -> PlaneMap:
    """Plane k-cycle: two faces, both bounded by the cycle."""
    if k < 3:
        raise TooSmall(f"cycle length must be at least 3, got {k}")
    return PlaneMap.from_coordinates(_circle(k), [(i, (i + 1) % k) for i in range(k)])


def k4() -> PlaneMap:
    return PlaneMap.from_coordinates(
        _circle(3) + [(0.0, 0.0)], [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]
    )


def prism(s: int) -> PlaneMap:
    """Two concentric s-cycles joined by spokes; ``prism(4)`` is the cube."""
    if s < 3:
        raise TooSmall(f"prism needs s >= 3, got {s}")
    edges = []
    for i in range(s):
        j = (i + 1) % s
        edges += [(i, j), (s + i, s + j), (i, s + i)]
    return PlaneMap.from_coordinates(_circle(s, 2.0) + _circle(s, 1.0), edges)


def cube() -> PlaneMap:
    return prism(4)


def stacked_triangulation(ell: int) -> PlaneMap:
    """Grow K4 by repeatedly stellating the face with the smallest face id."""
    if ell < 4:
        raise TooSmall(f"stacked triangulation needs at least 4 vertices, got {ell}")
    pm = k4()
    while pm.n < ell:
        pm = insert_face_vertices(pm, [0])
    return pm


def theorem2_pentagulation(ell: int, gadget: Gadget) -> PlaneMap:
    """Plant a gadget copy in every face of ``stacked_triangulation(ell)``.

    Host vertices keep ids ``0..ell-1``; the interior vertices of the copy
    planted in host face ``i`` get ids ``ell + i * k + j`` where ``j`` is the
    position of the vertex in ``gadget.interior`` and ``k`` its length. For a
    host face traversed ``a, b, c`` the gadget corners ``x, y, z`` go to
    ``a, b, c`` respectively.
    """
    if ell < 5:
        raise TooSmall(f"construction needs ell >= 5, got {ell}")
    check_gadget(gadget)
    host = stacked_triangulation(ell)
    host_faces = faces(host)
    host_darts = dart_faces(host)
    gm = gadget.map
    interior = gadget.interior
    k = len(interior)
    local = {v: j for j, v in enumerate(interior)}
    x, y, z = gadget.outer_triangle
    corners = {x, y, z}

    def phi(fid: int, v: int) -> int:
        if v in local:
            return ell + fid * k + local[v]
        return host_faces[fid].boundary[(x, y, z).index(v)]

    # at each gadget corner, the interior wedge starts after q and ends before p
    wedge: dict[int, tuple[int, list[int], int]] = {}
    for c in (x, y, z):
        rot = gm.rotations[c]
        p = next(u for u in rot if u in corners and gm.succ(c, u) in corners)
        q = gm.succ(c, p)
        i = rot.index(q)
        walk = list(rot[i + 1:] + rot[:i])
        wedge[c] = (q, walk[: walk.index(p)], p)

    rotations: list[list[int]] = []
    for v, rot in enumerate(host.rotations):
        row = []
        for a in rot:
            row.append(a)
            fid = host_darts[(a, v)]
            c = (x, y, z)[host_faces[fid].boundary.index(v)]
            q, inner, p = wedge[c]
            if phi(fid, q) != a or phi(fid, p) != host.succ(v, a):
                raise BadGadget("gadget corner orientation does not match the host face")
            row.extend(phi(fid, u) for u in inner)
        rotations.append(row)
    for fid in range(len(host_faces)):
        for v in interior:
            rotations.append([phi(fid, u) for u in gm.rotations[v]])
    out = PlaneMap.from_rotations(rotations)
    report = validate_map(out)
    if not report.ok:
        raise InvalidMap("planting produced an invalid map: " + "; ".join(report.violations))
    return out


def host_vertices(ell: int) -> frozenset[int]:
    """Ids of the triangulation vertices inside ``theorem2_pentagulation(ell, .)``."""
    return frozenset(range(ell))


GENERATORS = {
    "dodecahedron": dodecahedron,
    "cube": cube,
    "k4": k4,
}
