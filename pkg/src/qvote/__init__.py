"""Quantum Condorcet voting and mechanical checks of the quantum Arrow axioms."""
from .axioms import (AxiomVerdict, check_classical_axioms, check_dictatorship,
                     check_sharp_qiia, check_sharp_unanimity, check_unsharp_qiia,
                     check_unsharp_unanimity, similar)
from .ballots import (Ballot, BasisProfile, PairProjector, ProfileState, basis_ballot,
                      dephase_decompose, encodes, mixed_ballot, mixture_state, pair_projector,
                      pair_weight, profile_state, reduced_ballot)
from .families import ProfileFamily, ProfilePairs, cyclic_profile, similar_profile_pairs
from .linalg import (DensityOperator, conjugate_by_projector, partial_trace, tensor, trace,
                     validate_density)
from .orders import (CandidateSet, condorcet_scores, index_to_order, linear_extensions,
                     order_to_index, pairwise_tally, weak_order_from_scores)
from .qcv import QcvParams, QcvTrace, make_rule, measure_outcome, qcv, qcv_basis
from .reproduce import reproduce_theorems
from .scenario import Scenario, parse_scenario, run_scenario, serialize_scenario

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AxiomVerdict",
    "check_classical_axioms",
    "check_dictatorship",
    "check_sharp_qiia",
    "check_sharp_unanimity",
    "check_unsharp_qiia",
    "check_unsharp_unanimity",
    "similar",
    "Ballot",
    "BasisProfile",
    "PairProjector",
    "ProfileState",
    "basis_ballot",
    "dephase_decompose",
    "encodes",
    "mixed_ballot",
    "mixture_state",
    "pair_projector",
    "pair_weight",
    "profile_state",
    "reduced_ballot",
    "ProfileFamily",
    "ProfilePairs",
    "cyclic_profile",
    "similar_profile_pairs",
    "DensityOperator",
    "conjugate_by_projector",
    "partial_trace",
    "tensor",
    "trace",
    "validate_density",
    "CandidateSet",
    "condorcet_scores",
    "index_to_order",
    "linear_extensions",
    "order_to_index",
    "pairwise_tally",
    "weak_order_from_scores",
    "QcvParams",
    "QcvTrace",
    "make_rule",
    "measure_outcome",
    "qcv",
    "qcv_basis",
    "reproduce_theorems",
    "Scenario",
    "parse_scenario",
    "run_scenario",
    "serialize_scenario",
]
