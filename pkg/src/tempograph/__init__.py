"""Temporal graphs: journeys, reachability closures, and setting transforms."""

from .analysis import (ComponentMode, ReductionInstance, SpannerMode,
                       clique_to_component_instance, hamiltonian_path_decomposition,
                       is_spanner, max_clique, max_temporal_component, min_spanner)
from .coloring import TiltScheme, coloring_violations, proper_edge_coloring
from .errors import GuardExceededError, InvalidGraphError, NoContactsError
from .expressivity import (SEPARATIONS, SeparationCase, VertexMapping,
                           compress_snapshots, digraph_isomorphic, enumerate_labelings,
                           induced_reachability_equivalent, reachability_equivalent,
                           realize, sequence_length_bound, support_equivalent,
                           verify_all_separations, verify_separation)
from .fixtures import FIXTURES, Fixture, get_fixture, list_fixtures
from .graphs import (ALL_SETTINGS, Contact, EdgeSlot, SettingClass, StaticGraph,
                     Strictness, TemporalGraph, contacts_count, distinct_times,
                     footprint, induced_subgraph, is_happy, is_proper, is_simple,
                     lifetime, max_degree, snapshot, static_components,
                     static_graph, static_is_connected, temporal_graph, validate)
from .reachability import (Journey, ReachabilityGraph, closure, closure_of_snapshots,
                           enumerate_supports, footprint_distance,
                           is_temporally_connected, journey_violations, reaches,
                           snapshot_sequence)
from .serialize import (closure_dot, closure_from_obj, closure_to_obj, dumps, loads,
                        static_from_obj, static_to_obj, temporal_from_obj,
                        temporal_to_obj)
from .transforms import (TransformReport, dilate, lifetime_blowup_bound, saturate,
                         semaphore)

__version__ = "0.1.0"

__all__ = [
    "ALL_SETTINGS", "ComponentMode", "Contact", "EdgeSlot", "FIXTURES", "Fixture",
    "GuardExceededError", "InvalidGraphError", "Journey", "NoContactsError",
    "ReachabilityGraph", "ReductionInstance", "SEPARATIONS", "SeparationCase",
    "SettingClass", "SpannerMode", "StaticGraph", "Strictness", "TemporalGraph",
    "TiltScheme", "TransformReport", "VertexMapping",
    "clique_to_component_instance", "closure", "closure_dot", "closure_from_obj",
    "closure_of_snapshots", "closure_to_obj", "coloring_violations",
    "compress_snapshots", "contacts_count", "digraph_isomorphic", "dilate",
    "distinct_times", "dumps", "enumerate_labelings", "enumerate_supports",
    "footprint", "footprint_distance", "get_fixture", "hamiltonian_path_decomposition",
    "induced_reachability_equivalent", "induced_subgraph", "is_happy", "is_proper",
    "is_simple", "is_spanner", "is_temporally_connected", "journey_violations",
    "lifetime", "lifetime_blowup_bound", "list_fixtures", "loads", "max_clique",
    "max_degree", "max_temporal_component", "min_spanner", "proper_edge_coloring",
    "reachability_equivalent", "reaches", "realize", "saturate", "semaphore",
    "sequence_length_bound", "snapshot", "snapshot_sequence", "static_components",
    "static_from_obj", "static_graph", "static_is_connected", "static_to_obj",
    "support_equivalent", "temporal_from_obj", "temporal_graph", "temporal_to_obj",
    "validate", "verify_all_separations", "verify_separation",
]
