"""Finite rings as explicit tables, their directed zero-divisor graphs,
and mechanical verification of a catalog of structural claims."""

from .builders import (
    LeftIdentityDecomposition,
    cyclic_ring,
    decompose,
    direct_product,
    first_row_ring,
    full_matrix_ring,
    is_ideal,
    null_ring,
    quotient_ring,
    subring,
)
from .enumeration import (
    AdditiveGroupShape,
    EnumerationTask,
    abelian_group_shapes,
    additive_automorphisms,
    canonical_form,
    count_rings,
    enumerate_order,
    enumerate_rings,
    find_isomorphism,
    fingerprint,
    is_isomorphic,
    opposite_ring,
    ring_classes,
)
from .errors import (
    BadDimensions,
    BadEntry,
    EmptyFactorList,
    InternalInvariantViolation,
    NotAbelianGroup,
    NotAnIdeal,
    NotAssociative,
    NotDistributive,
    NotLeftIdentity,
    NotPrime,
    OrderTooLarge,
    RingLabError,
    RingValidationError,
    VertexNotInGraph,
)
from .rings import (
    ElementSets,
    FiniteRing,
    element_sets,
    is_commutative,
    left_annihilator,
    right_annihilator,
    ring_from_json,
    validate_ring,
)
from .verify import (
    CLAIM_CATALOG,
    TheoremReport,
    has_failures,
    reports_to_jsonl,
    run_suite,
    summarize,
)
from .zdgraph import (
    DistanceMatrix,
    EndpointSets,
    ZdGraph,
    build_graph,
    claimed_edge_count,
    clique_number,
    degree_report,
    distances,
    endpoint_sets,
    graph_to_dot,
    graph_to_json_dict,
    is_network,
    semigroup_closure_check,
    sinks,
    sources,
    strongly_connected,
    strongly_left_invertible,
    strongly_right_invertible,
)

__version__ = "0.1.0"
