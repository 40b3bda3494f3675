"""JSON, edge-list and DOT serialization.

JSON records:

* graph: ``{"n": int, "edges": [[u, v], ...]}``
* plane map: ``{"n": int, "rotations": [[...], ...], "outer_face": [...]}``
  (``outer_face`` optional, a face boundary in traversal order)
* stellated map: a plane map plus ``"initial"``, ``"stellating"`` and
  ``"host_faces"`` (boundary of the host face of each stellating vertex)
* op-drawing: ``{"skeleton": <plane map>, "pentagrams": [{"face": id,
  "boundary": [5 ids], "chords": [[u, v] x 5]}, ...]}``

Rotations are clockwise; see :mod:`penta2p.planemap` for the face rule.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .errors import InvalidMap, UnsupportedFormat
from .graph import Graph, build_graph
from .op2planar import OpDrawing, Pentagram, abstract_graph
from .planemap import PlaneMap, faces
from .stellation import StellatedMap

Serializable = Union[Graph, PlaneMap, StellatedMap, OpDrawing]


def to_record(obj: Serializable) -> dict[str, Any]:
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges()]}
    if isinstance(obj, PlaneMap):
        rec: dict[str, Any] = {"n": obj.n, "rotations": [list(r) for r in obj.rotations]}
        if obj.outer_face is not None:
            rec["outer_face"] = list(obj.outer_face)
        return rec
    if isinstance(obj, StellatedMap):
        rec = to_record(obj.map)
        rec["initial"] = list(obj.initial)
        rec["stellating"] = list(obj.stellating)
        rec["host_faces"] = [list(b) for b in obj.host_face]
        return rec
    if isinstance(obj, OpDrawing):
        return {
            "skeleton": to_record(obj.skeleton),
            "pentagrams": [
                {"face": p.face, "boundary": list(p.boundary), "chords": [list(c) for c in p.chords]}
                for p in obj.pentagrams
            ],
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_record(rec: dict[str, Any]) -> Serializable:
    """Rebuild whichever object the record describes (detected by its keys)."""
    if "skeleton" in rec:
        skeleton = from_record(rec["skeleton"])
        if not isinstance(skeleton, PlaneMap):
            raise InvalidMap("op-drawing skeleton must be a plane map")
        pentagrams = []
        for p in rec["pentagrams"]:
            b = tuple(int(v) for v in p["boundary"])
            if len(b) != 5:
                raise InvalidMap(f"pentagram boundary {list(b)} does not have 5 vertices")
            pg = Pentagram(int(p["face"]), b)  # type: ignore[arg-type]
            if "chords" in p and [list(c) for c in pg.chords] != [list(c) for c in p["chords"]]:
                raise InvalidMap(f"pentagram chords of face {pg.face} do not match its boundary")
            pentagrams.append(pg)
        fs = faces(skeleton)
        for pg in pentagrams:
            if not 0 <= pg.face < len(fs) or skeleton.face_index(pg.boundary) != pg.face:
                raise InvalidMap(f"pentagram {pg.face} does not match a skeleton face")
        if sorted(pg.face for pg in pentagrams) != list(range(len(fs))):
            raise InvalidMap("op-drawing needs exactly one pentagram per skeleton face")
        return OpDrawing(skeleton, tuple(pentagrams))
    if "rotations" in rec:
        pm = PlaneMap.from_rotations(rec["rotations"], rec.get("outer_face"))
        if int(rec.get("n", pm.n)) != pm.n:
            raise InvalidMap(f"n = {rec['n']} but {pm.n} rotations given")
        if "stellating" in rec:
            n_init = len(rec["initial"])
            if list(rec["initial"]) != list(range(n_init)) or list(rec["stellating"]) != list(
                range(n_init, pm.n)
            ):
                raise InvalidMap("initial/stellating ids must be 0..k-1 and k..n-1")
            hosts = tuple(tuple(int(v) for v in b) for b in rec["host_faces"])
            return StellatedMap(pm, n_init, hosts)
        return pm
    if "edges" in rec:
        return build_graph(int(rec["n"]), rec["edges"])
    raise InvalidMap("unrecognized record: expected 'edges', 'rotations' or 'skeleton'")


def dumps(obj: Serializable) -> str:
    return json.dumps(to_record(obj), separators=(",", ":")) + "\n"


def loads(text: str) -> Serializable:
    return from_record(json.loads(text))


def as_graph(obj: Serializable) -> Graph:
    """The abstract graph behind any serializable object."""
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, PlaneMap):
        return obj.graph
    if isinstance(obj, StellatedMap):
        return obj.map.graph
    return abstract_graph(obj)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines)


def from_edgelist(text: str) -> Graph:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def to_dot(obj: Serializable) -> str:
    """Undirected DOT text; chords are dashed blue, stellating vertices boxed red."""
    lines = ["graph G {", "  node [shape=circle];"]
    if isinstance(obj, OpDrawing):
        n = obj.skeleton.n
        lines += [f"  {v};" for v in range(n)]
        lines += [f"  {u} -- {v} [kind=skeleton];" for u, v in obj.skeleton.graph.edges()]
        chords = sorted(tuple(sorted(c)) for c in obj.chord_edges())
        lines += [
            f"  {u} -- {v} [kind=chord, style=dashed, color=blue];" for u, v in chords
        ]
    else:
        stellating: set[int] = set()
        if isinstance(obj, StellatedMap):
            stellating = set(obj.stellating)
        g = as_graph(obj)
        for v in range(g.n):
            if v in stellating:
                lines.append(f"  {v} [kind=stellating, shape=box, color=red];")
            else:
                lines.append(f"  {v};")
        lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(obj: Serializable, fmt: str) -> str:
    if fmt == "json":
        return dumps(obj)
    if fmt == "edgelist":
        return to_edgelist(as_graph(obj)) + "\n"
    if fmt == "dot":
        return to_dot(obj)
    raise UnsupportedFormat(f"unknown export format {fmt!r} (expected dot, edgelist or json)")
