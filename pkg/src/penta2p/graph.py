"""Abstract simple graphs on dense integer ids.

Vertices are ``0..n-1`` everywhere in the package. A :class:`Graph` is
immutable; derived lookups (neighbor sets, bitmasks) are cached on first use.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import FullRemoval, LoopEdge, NonPositiveK, OutOfRange

VertexSet = frozenset  # frozenset[int]

INF = math.inf


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows, expected {self.n}")
        for v, row in enumerate(self.adjacency):
            for i, u in enumerate(row):
                if not 0 <= u < self.n:
                    raise OutOfRange(f"neighbor {u} of {v} outside [0, {self.n})")
                if u == v:
                    raise LoopEdge(f"self-loop at {v}")
                if i and row[i - 1] >= u:
                    raise ValueError(f"adjacency of {v} not strictly increasing")
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v not in self.neighbor_sets[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an int bitmask."""
        out = []
        for row in self.adjacency:
            m = 0
            for u in row:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def m(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph, silently merging repeated edges."""
    if n < 0:
        raise OutOfRange(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an id outside [0, {n})")
        if u == v:
            raise LoopEdge(f"loop edge ({u}, {u})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def components(g: Graph, removed: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components, ordered by smallest member.

    Vertices in ``removed`` are treated as deleted, which saves building the
    induced subgraph when only counts are needed.
    """
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    parts = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        part = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    queue.append(w)
        parts.append(frozenset(part))
    return parts


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``V(g) - s`` with ids compacted.

    Returns:
        The subgraph and the old-id to new-id mapping of surviving vertices.
    """
    drop = set(s)
    for v in drop:
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} outside [0, {g.n})")
    if g.n and len(drop) == g.n:
        raise FullRemoval("cannot remove every vertex")
    mapping = {}
    for v in range(g.n):
        if v not in drop:
            mapping[v] = len(mapping)
    edges = [(mapping[u], mapping[v]) for u, v in g.edges() if u in mapping and v in mapping]
    return build_graph(len(mapping), edges), mapping


class _SplitFlow:
    """Unit-capacity vertex-split network for local vertex connectivity.

    Vertex ``v`` becomes ``v_in = 2v`` and ``v_out = 2v + 1`` joined by an arc
    of capacity 1; each edge ``uv`` yields arcs ``u_out -> v_in`` and
    ``v_out -> u_in``. Arc ``a`` and ``a ^ 1`` are residual twins.
    """

    def __init__(self, g: Graph) -> None:
        self.size = 2 * g.n
        self.head: list[int] = []
        self.cap0: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(self.size)]
        big = g.n  # larger than any possible flow
        for v in range(g.n):
            self._arc(2 * v, 2 * v + 1, 1)
        self.split_arc = list(range(0, 2 * g.n, 2))
        for u, v in g.edges():
            self._arc(2 * u + 1, 2 * v, big)
            self._arc(2 * v + 1, 2 * u, big)
        self.big = big

    def _arc(self, a: int, b: int, c: int) -> None:
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap0.append(c)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap0.append(0)

    def local(self, s: int, t: int, limit: int) -> int:
        """Internally disjoint s-t paths, counting no further than ``limit``."""
        cap = list(self.cap0)
        cap[self.split_arc[s]] = self.big
        cap[self.split_arc[t]] = self.big
        src, sink = 2 * s + 1, 2 * t
        flow = 0
        while flow < limit:
            pred = [-1] * self.size
            pred[src] = -2
            queue = deque([src])
            while queue and pred[sink] == -1:
                x = queue.popleft()
                for a in self.out[x]:
                    y = self.head[a]
                    if cap[a] > 0 and pred[y] == -1:
                        pred[y] = a
                        queue.append(y)
            if pred[sink] == -1:
                break
            y = sink
            while y != src:
                a = pred[y]
                cap[a] -= 1
                cap[a ^ 1] += 1
                y = self.head[a ^ 1]
            flow += 1
        return flow


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent s, t."""
    if g.has_edge(s, t):
        raise ValueError("local vertex connectivity is defined here for non-adjacent pairs")
    return _SplitFlow(g).local(s, t, g.n)


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity.

    ``K_n`` gives ``n - 1``, a single vertex or a disconnected graph gives 0.
    Otherwise a minimum-degree vertex ``v`` is fixed; every minimum cut either
    separates ``v`` from a non-neighbor or separates two non-adjacent
    neighbors of ``v``, so only those pairs need a flow computation.
    """
    if g.n <= 1:
        return 0
    if g.is_complete():
        return g.n - 1
    if not is_connected(g):
        return 0
    v = min(range(g.n), key=lambda u: (g.degree(u), u))
    best = g.degree(v)
    net = _SplitFlow(g)
    nv = g.neighbor_sets[v]
    for w in range(g.n):
        if w != v and w not in nv:
            best = min(best, net.local(v, w, best))
    for x, y in combinations(g.adjacency[v], 2):
        if not g.has_edge(x, y):
            best = min(best, net.local(x, y, best))
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = INF
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def matching_upper_bound(g: Graph, s: Iterable[int]) -> tuple[int, int]:
    """Tutte-Berge style bound on the matching number from a vertex set.

    Returns:
        ``(odd, bound)`` where ``odd`` counts odd-order components of
        ``g - s`` and ``bound = (n - odd + |s|) // 2``.
    """
    s = set(s)
    odd = sum(1 for part in components(g, s) if len(part) % 2)
    return odd, (g.n - odd + len(s)) // 2


def connectivity_upper_bound(k: float) -> tuple[float, int]:
    """Edge-density coefficient and connectivity ceiling for k-planar graphs.

    From ``|E| <= 3.81 sqrt(k) n`` and ``kappa <= delta <= 2|E|/n``.
    """
    if k < 1:
        raise NonPositiveK(f"crossing budget must be at least 1, got {k}")
    root = math.sqrt(k)
    return 3.81 * root, math.floor(7.62 * root)
