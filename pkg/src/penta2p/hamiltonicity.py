"""Exact Hamiltonian search, the stellate-search-lift pipeline, and cut certificates.

The search is plain depth-first backtracking over int bitmasks. Absence
answers are exact; when the node budget runs out :class:`Indeterminate` is
raised instead of answering "no".
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Literal

from .errors import (
    AdjacentStellating,
    BadCut,
    EndpointStellating,
    GirthTooSmall,
    Indeterminate,
    InvalidWitness,
    MissingEdge,
    OutOfRange,
    SameEndpoints,
    SearchExhausted,
    TheoremViolation,
    TooSmall,
)
from .graph import Graph, components, girth, vertex_connectivity
from .op2planar import OpDrawing, abstract_graph
from .stellation import StellatedMap, stellate

DEFAULT_BUDGET = 20_000_000


def default_budget() -> int:
    return int(os.environ.get("PENTA2P_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class HamWitness:
    vertices: tuple[int, ...]
    kind: Literal["path", "cycle"]

    def verify(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) != g.n or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < g.n for v in vs):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        if self.kind == "cycle":
            return len(vs) >= 3 and g.has_edge(vs[-1], vs[0])
        return True

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _connected(masks: tuple[int, ...], region: int) -> bool:
    if not region:
        return True
    low = region & -region
    reached = low
    frontier = low
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        nxt &= region & ~reached
        reached |= nxt
        frontier = nxt
    return reached == region


class _Search:
    """Backtracking for a Hamiltonian path from ``start``.

    In path mode the walk must end at ``target``; in cycle mode it must end
    next to ``start``. Pruning, applied at every node to the set ``R`` of
    unvisited vertices:

    * every vertex of ``R`` keeps at least two usable neighbors (``R``, the
      current head, and in cycle mode ``start``); the path target needs one;
    * ``R`` induces a connected graph.

    Children are tried by fewest usable neighbors first, then smallest id.
    """

    def __init__(self, g: Graph, budget: int) -> None:
        self.g = g
        self.masks = g.masks
        self.full = (1 << g.n) - 1
        self.budget = budget
        self.nodes = 0

    def run(self, start: int, target: int | None) -> list[int] | None:
        self.start = start
        self.target = target
        self.path = [start]
        return self._extend(start, 1 << start)

    def _extend(self, head: int, visited: int) -> list[int] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise Indeterminate(f"search budget of {self.budget} nodes exhausted")
        masks = self.masks
        rest = self.full & ~visited
        if not rest:
            if self.target is None:
                return list(self.path) if masks[head] >> self.start & 1 else None
            return list(self.path) if head == self.target else None
        target = self.target
        anchor = (1 << head) | (0 if target is not None else 1 << self.start)
        usable = rest | anchor
        scored = []
        for w in _bits(rest):
            deg = (masks[w] & usable).bit_count()
            if deg < (1 if w == target else 2):
                return None
            if masks[head] >> w & 1:
                scored.append((deg, w))
        if not scored or not _connected(masks, rest):
            return None
        scored.sort()
        for _, w in scored:
            if w == target and rest != 1 << w:
                continue
            self.path.append(w)
            found = self._extend(w, visited | 1 << w)
            if found is not None:
                return found
            self.path.pop()
        return None


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise OutOfRange(f"vertex {v} outside [0, {g.n})")


def hamiltonian_path(
    g: Graph, s: int, t: int, budget: int | None = None
) -> HamWitness | None:
    """An s-t Hamiltonian path, or ``None`` when none exists."""
    if s == t:
        raise SameEndpoints(f"endpoints coincide ({s})")
    _check_vertex(g, s)
    _check_vertex(g, t)
    found = _Search(g, default_budget() if budget is None else budget).run(s, t)
    if found is None:
        return None
    w = HamWitness(tuple(found), "path")
    assert w.verify(g)
    return w


def hamiltonian_cycle(g: Graph, budget: int | None = None) -> HamWitness | None:
    """A Hamiltonian cycle starting at the smallest-degree vertex, or ``None``."""
    if g.n < 3:
        raise TooSmall(f"a Hamiltonian cycle needs at least 3 vertices, got {g.n}")
    start = min(range(g.n), key=lambda v: (g.degree(v), v))
    found = _Search(g, default_budget() if budget is None else budget).run(start, None)
    if found is None:
        return None
    w = HamWitness(tuple(found), "cycle")
    assert w.verify(g)
    return w


def _path_job(args: tuple[Graph, int, int, int | None]) -> HamWitness | None:
    g, s, t, budget = args
    return hamiltonian_path(g, s, t, budget)


def is_hamiltonian_connected(
    g: Graph, budget: int | None = None, workers: int = 1
) -> tuple[bool, dict[tuple[int, int], HamWitness | None]]:
    """Search every unordered pair, in lexicographic order.

    Returns:
        The verdict and the per-pair witnesses. When the verdict is false the
        mapping ends at the first failing pair, whose value is ``None``.
    """
    if g.n < 3:
        raise TooSmall(f"need at least 3 vertices, got {g.n}")
    pairs = list(combinations(range(g.n), 2))
    jobs = [(g, s, t, budget) for s, t in pairs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_path_job, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            results = list(results)
    else:
        results = []
        for job in jobs:
            results.append(_path_job(job))
            if results[-1] is None:
                break
    witnesses: dict[tuple[int, int], HamWitness | None] = {}
    for pair, w in zip(pairs, results):
        witnesses[pair] = w
        if w is None:
            return False, witnesses
    return True, witnesses


# ---------------------------------------------------------------------------
# Theorem-1 pipeline
# ---------------------------------------------------------------------------


def lift_path(w: HamWitness, s: StellatedMap, g: Graph) -> HamWitness:
    """Shortcut every stellating vertex ``h`` on the path through the edge ``a b``."""
    vs = w.vertices
    if not vs:
        raise InvalidWitness("empty witness")
    if s.is_stellating(vs[0]) or s.is_stellating(vs[-1]):
        raise EndpointStellating("path endpoints must be initial vertices")
    out = [vs[0]]
    for i in range(1, len(vs) - 1):
        h = vs[i]
        if not s.is_stellating(h):
            out.append(h)
            continue
        a, b = vs[i - 1], vs[i + 1]
        if s.is_stellating(a) or s.is_stellating(b):
            raise AdjacentStellating(f"stellating vertex {h} next to another stellating vertex")
        if not g.has_edge(a, b):
            raise MissingEdge(f"no edge {a}-{b} to replace the detour through {h}")
    out.append(vs[-1])
    lifted = HamWitness(tuple(out), "path")
    if not lifted.verify(g):
        raise InvalidWitness("lifted sequence is not a Hamiltonian path of the target graph")
    return lifted


@dataclass
class Theorem1Pipeline:
    """Stellation and checks done once per op-drawing, then one search per pair."""

    drawing: OpDrawing
    budget: int | None = None
    graph: Graph = field(init=False)
    stellation: StellatedMap = field(init=False)
    kappa: int = field(init=False)

    def __post_init__(self) -> None:
        skeleton = self.drawing.skeleton
        gz = girth(skeleton.graph)
        if gz < 4:
            raise GirthTooSmall(f"planar skeleton has girth {gz}")
        self.graph = abstract_graph(self.drawing)
        self.stellation = stellate(skeleton)
        self.kappa = vertex_connectivity(self.stellation.map.graph)
        if self.kappa < 4:
            raise TheoremViolation(
                f"stellation of a girth-{gz} skeleton has connectivity {self.kappa}"
            )

    def path(self, x: int, y: int) -> HamWitness:
        if x == y:
            raise SameEndpoints(f"endpoints coincide ({x})")
        for v in (x, y):
            if not 0 <= v < self.stellation.n_initial:
                raise OutOfRange(f"{v} is not a skeleton vertex")
        w = hamiltonian_path(self.stellation.map.graph, x, y, self.budget)
        if w is None:
            raise SearchExhausted(f"no Hamiltonian {x}-{y} path in a 4-connected triangulation")
        return lift_path(w, self.stellation, self.graph)


def theorem1_pipeline(
    d: OpDrawing, x: int, y: int, budget: int | None = None
) -> HamWitness:
    if x == y:
        raise SameEndpoints(f"endpoints coincide ({x})")
    return Theorem1Pipeline(d, budget).path(x, y)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


class Verdict(enum.Enum):
    NON_HAMILTONIAN = "NonHamiltonian"
    NO_PERFECT_MATCHING_BOUND = "NoPerfectMatchingBound"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Certificate:
    cut: frozenset[int]
    component_count: int
    odd_component_count: int
    verdict: Verdict
    n: int

    @property
    def deficiency(self) -> int:
        """Lower bound ``odd - |S|`` on the number of vertices any matching misses."""
        return self.odd_component_count - len(self.cut)

    @property
    def verdicts(self) -> list[Verdict]:
        """Every conclusion the cut supports, strongest first."""
        out = []
        if self.component_count > len(self.cut):
            out.append(Verdict.NON_HAMILTONIAN)
        if self.odd_component_count > len(self.cut):
            out.append(Verdict.NO_PERFECT_MATCHING_BOUND)
        return out or [Verdict.INCONCLUSIVE]

    @property
    def matching_bound(self) -> int:
        return (self.n - self.odd_component_count + len(self.cut)) // 2

    def to_json(self) -> dict:
        return {
            "cut": sorted(self.cut),
            "component_count": self.component_count,
            "odd_component_count": self.odd_component_count,
            "verdict": self.verdict.value,
            "verdicts": [v.value for v in self.verdicts],
            "deficiency": self.deficiency,
            "matching_bound": self.matching_bound,
        }


def non_hamiltonian_certificate(g: Graph, s: Iterable[int]) -> Certificate:
    """Count the components left by removing ``s``.

    More components than ``|s|`` rules out a Hamiltonian cycle; more odd
    components than ``|s|`` rules out a perfect matching.
    """
    cut = frozenset(s)
    if not cut or len(cut) >= g.n:
        raise BadCut("cut must be a non-empty proper subset of the vertices")
    if any(not 0 <= v < g.n for v in cut):
        raise BadCut("cut contains an id outside the graph")
    parts = components(g, cut)
    odd = sum(1 for p in parts if len(p) % 2)
    if len(parts) > len(cut):
        verdict = Verdict.NON_HAMILTONIAN
    elif odd > len(cut):
        verdict = Verdict.NO_PERFECT_MATCHING_BOUND
    else:
        verdict = Verdict.INCONCLUSIVE
    return Certificate(cut, len(parts), odd, verdict, g.n)


def matching_from_hamiltonian(
    w: HamWitness, g: Graph | None = None
) -> list[tuple[int, int]]:
    """Every other edge of a Hamiltonian path or cycle.

    Perfect when the order is even; otherwise exactly the last vertex is
    left uncovered.
    """
    vs = w.vertices
    if len(set(vs)) != len(vs) or (g is not None and not w.verify(g)):
        raise InvalidWitness("witness does not verify")
    return [(vs[i], vs[i + 1]) for i in range(0, len(vs) - 1, 2)]
