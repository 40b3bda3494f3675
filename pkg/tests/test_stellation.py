import pytest

from penta2p.errors import NotTwoConnected
from penta2p.generators import (
    cube,
    cycle_map,
    dodecahedron,
    gadget_F,
    gadget_H,
    k4,
    prism,
    theorem2_pentagulation,
)
from penta2p.graph import vertex_connectivity
from penta2p.planemap import PlaneMap, faces, is_triangulation, separating_triangles
from penta2p.stellation import (
    Reason,
    check_consecutive_property,
    check_wheel_property,
    stellate,
    stellating_independent,
    stellation_four_connected,
    with_extra_edge,
)

TRIANGLE = PlaneMap.from_rotations([[1, 2], [2, 0], [0, 1]])

THREE_CONNECTED = {
    "dodecahedron": dodecahedron,
    "k4": k4,
    "prism3": lambda: prism(3),
    "cube": cube,
    "prism5": lambda: prism(5),
    "prism8": lambda: prism(8),
    "gadget_h": lambda: gadget_H().map,
    "gadget_f": lambda: gadget_F().map,
}


@pytest.mark.parametrize("pm, n2, m2", [(TRIANGLE, 5, 9), (cube(), 14, 36), (dodecahedron(), 32, 90)])
def test_stellate_counts(pm, n2, m2):
    s = stellate(pm)
    assert (s.map.n, s.map.m) == (n2, m2)
    assert s.map.m == 3 * pm.m
    assert s.map.n == pm.n + len(faces(pm))
    assert is_triangulation(s.map)


def test_stellate_ids_follow_face_order():
    pm = dodecahedron()
    s = stellate(pm)
    for i, f in enumerate(faces(pm)):
        h = pm.n + i
        assert s.host_of(h) == f.boundary
        assert set(s.map.graph.adjacency[h]) == set(f.boundary)


def test_stellate_rejects_cut_vertex():
    # two triangles sharing vertex 0
    bowtie = PlaneMap.from_rotations([[1, 2, 3, 4], [2, 0], [0, 1], [4, 0], [0, 3]])
    with pytest.raises(NotTwoConnected):
        stellate(bowtie)


@pytest.mark.parametrize("name", sorted(THREE_CONNECTED))
def test_lemma_suite(name):
    pm = THREE_CONNECTED[name]()
    assert vertex_connectivity(pm.graph) >= 3
    s = stellate(pm)
    assert is_triangulation(s.map)
    assert stellating_independent(s)
    assert check_wheel_property(s)
    assert check_consecutive_property(s)


def test_wheel_mutation():
    s = stellate(dodecahedron())
    rim = s.host_of(s.n_initial)
    g = with_extra_edge(s.map.graph, rim[0], rim[2])
    assert not check_wheel_property(s, g)


def test_consecutive_mutation():
    s = stellate(prism(5))
    rim = s.host_of(s.n_initial + 2)
    g = with_extra_edge(s.map.graph, rim[0], rim[2])
    assert not check_consecutive_property(s, g)


def test_independence_mutation():
    s = stellate(cube())
    g = with_extra_edge(s.map.graph, s.n_initial, s.n_initial + 1)
    assert not stellating_independent(s, g)


@pytest.mark.parametrize("pm", [dodecahedron(), cube()] + [prism(s) for s in range(4, 9)],
                         ids=lambda p: f"n{p.n}")
def test_four_connected_when_girth_at_least_4(pm):
    assert stellation_four_connected(pm) == (True, Reason.OK)
    s = stellate(pm)
    assert separating_triangles(s.map) == []
    assert vertex_connectivity(s.map.graph) >= 4


def test_cube_stellation_kappa_is_exactly_4():
    assert vertex_connectivity(stellate(cube()).map.graph) == 4


def test_four_connected_hypothesis_failures():
    assert stellation_four_connected(prism(3)) == (False, Reason.GIRTH_TOO_SMALL)
    assert stellation_four_connected(cycle_map(5)) == (False, Reason.NOT_THREE_CONNECTED)
    assert stellation_four_connected(theorem2_pentagulation(5, gadget_H()))[1] is Reason.GIRTH_TOO_SMALL


@pytest.mark.parametrize("pm", [prism(3), k4(), gadget_H().map, theorem2_pentagulation(5, gadget_H())],
                         ids=["prism3", "k4", "gadget_h", "thm2"])
def test_separating_triangles_use_only_initial_vertices(pm):
    s = stellate(pm)
    for tri in separating_triangles(s.map):
        assert all(v < s.n_initial for v in tri)


def test_prism3_stellation_has_separating_triangle():
    s = stellate(prism(3))
    assert separating_triangles(s.map)
    assert vertex_connectivity(s.map.graph) == 3
