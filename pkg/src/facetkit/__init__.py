"""facetkit: exact combinatorics of small simplicial complexes."""

from .complexes import (
    NOT_PURE,
    OTHER,
    PSEUDOMANIFOLD,
    WEAK_PM,
    WEAK_PM_WITH_BOUNDARY,
    Complex,
    FaceProfile,
    FacetGraph,
    build,
    disjoint_union,
    join,
)
from .canonical import (
    IsoCertificate,
    canonical_complex,
    canonical_form,
    is_isomorphic,
    relabel,
    verify_isomorphism,
)
from .complementarity import (
    AmicablePartition,
    AuditReport,
    IntersectionProfile,
    cofacet_histogram,
    find_amicable_partitions,
    forced_profile,
    intersection_profile,
    is_complementary,
    nonexistence_audit,
)
from .collapse import CollapseTrace, collapse_step, free_faces, is_collapsible, replay_trace
from .homology import HomologyProfile, homology, is_acyclic, smith_normal_form
from .atlas import (
    cycle,
    cyclic_complementary_complex,
    is_circle,
    kuehnel_complex,
    projective_plane_6,
    standard_sphere,
)
from .enumeration import (
    AcyclicCollapsibleReport,
    EnumerationReport,
    enumerate_complexes,
    enumerate_weak_pseudomanifolds,
    verify_acyclic_implies_collapsible,
)
from .search import PairLedger, brute_force_complementary, search_complementary
from .formats import load_complex, save_complex

__all__ = [
    "AmicablePartition",
    "AuditReport",
    "AcyclicCollapsibleReport",
    "CollapseTrace",
    "Complex",
    "EnumerationReport",
    "FaceProfile",
    "FacetGraph",
    "HomologyProfile",
    "IntersectionProfile",
    "IsoCertificate",
    "NOT_PURE",
    "OTHER",
    "PSEUDOMANIFOLD",
    "PairLedger",
    "WEAK_PM",
    "WEAK_PM_WITH_BOUNDARY",
    "build",
    "brute_force_complementary",
    "canonical_complex",
    "canonical_form",
    "cofacet_histogram",
    "collapse_step",
    "cycle",
    "cyclic_complementary_complex",
    "disjoint_union",
    "enumerate_complexes",
    "enumerate_weak_pseudomanifolds",
    "find_amicable_partitions",
    "forced_profile",
    "free_faces",
    "homology",
    "intersection_profile",
    "is_acyclic",
    "is_circle",
    "is_collapsible",
    "is_complementary",
    "is_isomorphic",
    "join",
    "kuehnel_complex",
    "load_complex",
    "nonexistence_audit",
    "projective_plane_6",
    "relabel",
    "replay_trace",
    "save_complex",
    "search_complementary",
    "smith_normal_form",
    "standard_sphere",
    "verify_acyclic_implies_collapsible",
    "verify_isomorphism",
]
