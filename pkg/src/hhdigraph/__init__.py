"""Homomorphism-homogeneity of finite digraphs."""
from .canonical import canonical_form, is_isomorphic
from .digraph import (
    EMPTY,
    Digraph,
    EdgeKind,
    Kind,
    ThetaPartition,
    classify_kind,
    disjoint_union,
    induced,
    is_theta_connected,
    k_copies,
    make_complete,
    make_cycle,
    make_loop_vertex,
    make_trivial,
    theta_partition,
)
from .homs import (
    PartialHom,
    Verdict,
    Witness,
    enumerate_homs,
    extend_to_endomorphism,
    is_hh,
    is_homomorphism,
    one_point_extendable,
)
from .recognizer import Family, ScopeError, classify_hh_irreflexive

__all__ = [
    "EMPTY",
    "Digraph",
    "EdgeKind",
    "Family",
    "Kind",
    "PartialHom",
    "ScopeError",
    "ThetaPartition",
    "Verdict",
    "Witness",
    "canonical_form",
    "classify_hh_irreflexive",
    "classify_kind",
    "disjoint_union",
    "enumerate_homs",
    "extend_to_endomorphism",
    "induced",
    "is_hh",
    "is_homomorphism",
    "is_isomorphic",
    "is_theta_connected",
    "k_copies",
    "make_complete",
    "make_cycle",
    "make_loop_vertex",
    "make_trivial",
    "one_point_extendable",
    "theta_partition",
]
