"""matroid-forge: rank oracles for lift/frame matroids of biased graphs,
circuit-hyperplane relaxation and free-basis tightening, the crossed-prism
covering-pair family, and the rank-query distinguishing game built on it."""

__version__ = "0.1.0"

from matroid_forge.adversary import (
    GameOutcome,
    QuerySession,
    QueryTranscript,
    answer_queries,
    find_unqueried_site,
    honest_oracle,
    indistinguishable_alternative,
    required_n_for_budget,
)
from matroid_forge.bias import (
    BiasedGraph,
    check_theta_property,
    is_balanced_component,
)
from matroid_forge.errors import FamilyExhaustedError, InputError, ResourceLimitError
from matroid_forge.family import (
    CoveringPair,
    CrossedPrism,
    CrossingSelection,
    build_crossed_prism,
    covering_pair,
    covering_pair_family,
    iter_covering_pairs,
    iter_selections,
    validate_covering_pair,
)
from matroid_forge.framework import FrameworkReport, is_framework
from matroid_forge.graph import (
    Multigraph,
    components,
    cycles_within,
    induced_subgraph,
    is_chordless,
    is_cycle,
    is_theta,
)
from matroid_forge.matroid import (
    FrameOracle,
    LiftOracle,
    MatroidFacts,
    RankOracle,
    TableOracle,
    check_rank_axioms,
    closure,
    enumerate_facts,
    frame_independent,
    frame_rank,
    full_rank_table,
    is_circuit,
    is_circuit_hyperplane,
    is_free_basis,
    is_independent,
    lift_independent,
    lift_rank,
)
from matroid_forge.surgery import (
    SurgeredOracle,
    relax,
    tighten,
    verify_surgery_inverse,
)

__all__ = [
    "BiasedGraph",
    "CoveringPair",
    "CrossedPrism",
    "CrossingSelection",
    "FamilyExhaustedError",
    "FrameOracle",
    "FrameworkReport",
    "GameOutcome",
    "InputError",
    "LiftOracle",
    "MatroidFacts",
    "Multigraph",
    "QuerySession",
    "QueryTranscript",
    "RankOracle",
    "ResourceLimitError",
    "SurgeredOracle",
    "TableOracle",
    "answer_queries",
    "build_crossed_prism",
    "check_rank_axioms",
    "check_theta_property",
    "closure",
    "components",
    "covering_pair",
    "covering_pair_family",
    "cycles_within",
    "enumerate_facts",
    "find_unqueried_site",
    "frame_independent",
    "frame_rank",
    "full_rank_table",
    "honest_oracle",
    "indistinguishable_alternative",
    "induced_subgraph",
    "is_balanced_component",
    "is_chordless",
    "is_circuit",
    "is_circuit_hyperplane",
    "is_cycle",
    "is_framework",
    "is_free_basis",
    "is_independent",
    "is_theta",
    "iter_covering_pairs",
    "iter_selections",
    "lift_independent",
    "lift_rank",
    "relax",
    "required_n_for_budget",
    "tighten",
    "validate_covering_pair",
    "verify_surgery_inverse",
]
