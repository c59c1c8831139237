"""Hamiltonian cycles on polyhedral maps, classified through dual proper graphs."""

__version__ = "0.1.0"

from .dual import (
    CycleSpec,
    DualCorrespondence,
    EdgeSubgraph,
    InvalidCycleError,
    NotAdmissibleError,
    build_dual,
    correspondence_to,
    dual_cycle_of_graph,
    dual_graph_of_cycle,
    read_label_table,
    write_label_table,
)
from .generate import equivelar_tori, generate_equivelar_torus
from .proper import (
    ProperType,
    check_admissible,
    check_proper_tree,
    classify_proper_type,
    complement_components,
    tree_to_type2_graph,
)
from .search import (
    Algorithm,
    HamiltonianResult,
    SearchRequest,
    SearchTooLarge,
    TargetClass,
    construct_proper_tree,
    disk_grow_search,
    enumerate_hamiltonian_cycles,
    find_hamiltonian,
    subset_search,
)
from .surface import (
    MapError,
    MapParseError,
    SurfaceMap,
    check_polyhedral,
    equivelar_type,
    euler_characteristic,
    is_isomorphic,
    load_map,
    parse_map,
    validate_surface,
    vertex_link,
)
from .topology import CycleClass, boundary_cycle, classify_cycle, is_disk, region_euler_characteristic, regions_of_cycle

__all__ = [name for name in dir() if not name.startswith("_")]
