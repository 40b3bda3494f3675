import math

import pytest
from hypothesis import given

from conftest import small_graphs
from oracles import (
    adj_sets,
    connectivity_bruteforce,
    cut_sets_of_size,
    girth_bruteforce,
    max_matching_bruteforce,
)
from penta2p.errors import FullRemoval, LoopEdge, NonPositiveK, OutOfRange
from penta2p.generators import dodecahedron, prism
from penta2p.graph import (
    build_graph,
    complete_graph,
    components,
    connectivity_upper_bound,
    girth,
    local_connectivity,
    matching_upper_bound,
    remove_vertices,
    vertex_connectivity,
)

TRIANGLE = build_graph(3, [(0, 1), (1, 2), (2, 0)])
STAR4 = build_graph(5, [(0, i) for i in range(1, 5)])


def test_build_graph_examples():
    assert build_graph(0, []).m == 0
    assert TRIANGLE.m == 3
    assert TRIANGLE.adjacency == ((1, 2), (0, 2), (0, 1))
    assert build_graph(4, [(0, 1), (0, 1)]).m == 1


@pytest.mark.parametrize("edges, exc", [([(0, 3)], OutOfRange), ([(-1, 0)], OutOfRange), ([(1, 1)], LoopEdge)])
def test_build_graph_errors(edges, exc):
    with pytest.raises(exc):
        build_graph(3, edges)


@given(small_graphs())
def test_graph_invariants(ng):
    n, edges = ng
    g = build_graph(n, edges + edges[::-1])
    assert g.m == len(edges) == sum(len(r) for r in g.adjacency) // 2
    for u in range(n):
        assert u not in g.adjacency[u]
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]


def test_components_examples():
    assert components(TRIANGLE) == [frozenset({0, 1, 2})]
    parts = components(build_graph(5, [(0, 1), (2, 3)]))
    assert parts == [frozenset({0, 1}), frozenset({2, 3}), frozenset({4})]


@given(small_graphs())
def test_components_partition(ng):
    n, edges = ng
    g = build_graph(n, edges)
    parts = components(g)
    assert sorted(v for p in parts for v in p) == list(range(n))
    where = {v: i for i, p in enumerate(parts) for v in p}
    assert all(where[u] == where[v] for u, v in edges)


def test_remove_vertices_examples():
    h, mapping = remove_vertices(TRIANGLE, {2})
    assert (h.n, h.m) == (2, 1) and mapping == {0: 0, 1: 1}
    k4 = complete_graph(4)
    assert remove_vertices(k4, set())[0] == k4
    h, _ = remove_vertices(STAR4, {0})
    assert (h.n, h.m) == (4, 0)
    with pytest.raises(FullRemoval):
        remove_vertices(TRIANGLE, {0, 1, 2})


def test_vertex_connectivity_examples():
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(build_graph(1, [])) == 0
    assert vertex_connectivity(build_graph(4, [(0, 1), (2, 3)])) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_connectivity_complete(n):
    assert vertex_connectivity(complete_graph(n)) == n - 1


def test_dodecahedron_connectivity_matches_subset_oracle():
    g = dodecahedron().graph
    adj = adj_sets(g.n, g.edges())
    # frozen from the subset oracle: no 2-cuts, twenty 3-cuts (vertex neighborhoods)
    assert cut_sets_of_size(adj, 2) == []
    assert len(cut_sets_of_size(adj, 3)) == 20
    assert vertex_connectivity(g) == 3


@given(small_graphs())
def test_connectivity_matches_bruteforce(ng):
    n, edges = ng
    g = build_graph(n, edges)
    assert vertex_connectivity(g) == connectivity_bruteforce(adj_sets(n, edges))


def test_local_connectivity():
    g = prism(4).graph
    assert local_connectivity(g, 0, 6) == 3
    with pytest.raises(ValueError):
        local_connectivity(g, 0, 1)


def test_girth_examples():
    path = build_graph(5, [(i, i + 1) for i in range(4)])
    assert girth(path) == math.inf
    assert girth(dodecahedron().graph) == 5
    assert girth(prism(4).graph) == 4
    assert girth(TRIANGLE) == 3


def test_dodecahedron_girth_oracle():
    g = dodecahedron().graph
    assert girth_bruteforce(adj_sets(g.n, g.edges())) == 5


@given(small_graphs())
def test_girth_matches_bruteforce(ng):
    n, edges = ng
    assert girth(build_graph(n, edges)) == girth_bruteforce(adj_sets(n, edges))


def test_matching_upper_bound_examples():
    assert matching_upper_bound(build_graph(2, [(0, 1)]), set()) == (0, 1)
    assert matching_upper_bound(build_graph(4, [(0, 1), (0, 2), (0, 3)]), {0}) == (3, 1)


@given(small_graphs(max_n=10))
def test_matching_bound_is_an_upper_bound(ng):
    n, edges = ng
    g = build_graph(n, edges)
    truth = max_matching_bruteforce(adj_sets(n, edges))
    for s in (set(), {0}, set(range(0, n, 2)), set(range(n // 2))):
        assert matching_upper_bound(g, s)[1] >= truth


@pytest.mark.parametrize(
    "k, coeff, kappa",
    [(1, 3.81, 7), (2, 3.81 * math.sqrt(2), 10), (4, 7.62, 15)],
)
def test_connectivity_upper_bound(k, coeff, kappa):
    c, kb = connectivity_upper_bound(k)
    assert c == pytest.approx(coeff, abs=1e-12)
    assert kb == kappa


def test_connectivity_upper_bound_k2_value():
    assert connectivity_upper_bound(2)[0] == pytest.approx(5.388, abs=5e-4)


@pytest.mark.parametrize("k", [0, -1, 0.5])
def test_connectivity_upper_bound_rejects(k):
    with pytest.raises(NonPositiveK):
        connectivity_upper_bound(k)
