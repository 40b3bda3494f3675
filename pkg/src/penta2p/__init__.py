"""Optimal 2-planar graphs built from 3-connected pentagulations.

Constructions (pentagram insertion, face-stellation, gadget planting),
structural checks, exact Hamiltonian search with path lifting, and
cut certificates for non-Hamiltonicity and matching bounds.
"""

from .graph import (
    Graph,
    build_graph,
    complete_graph,
    components,
    connectivity_upper_bound,
    girth,
    matching_upper_bound,
    remove_vertices,
    vertex_connectivity,
)
from .planemap import (
    Face,
    PlaneMap,
    face_chords_absent,
    faces,
    is_pentagulation,
    is_triangulation,
    separating_triangles,
    validate_map,
)
from .generators import (
    Gadget,
    cube,
    dodecahedron,
    gadget_F,
    gadget_H,
    prism,
    stacked_triangulation,
    theorem2_pentagulation,
)
from .stellation import (
    StellatedMap,
    check_consecutive_property,
    check_wheel_property,
    stellate,
    stellation_four_connected,
)
from .op2planar import (
    OpDrawing,
    abstract_graph,
    check_optimal_edge_count,
    crossings_per_edge,
    insert_pentagrams,
    planar_skeleton,
    planarize,
)
from .hamiltonicity import (
    Certificate,
    HamWitness,
    hamiltonian_cycle,
    hamiltonian_path,
    is_hamiltonian_connected,
    lift_path,
    matching_from_hamiltonian,
    non_hamiltonian_certificate,
    theorem1_pipeline,
)

__version__ = "0.1.0"
