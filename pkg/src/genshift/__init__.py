"""Proximal, regionally proximal and syndetically proximal relations of
generalized shifts on ``X^Γ``, with brute-force oracles, closed-form
deciders and constructive witnesses."""

from .core import (
    COUNTABLE, Alphabet, AgreementSummary, ComposedMap, Config, ConstantMap,
    DenseConfig, DenseMap, FiniteSupportConfig, FiniteSupportPermutation,
    IndexMap, IndexSet, MatchingExtension, PairingShiftPower, ProceduralConfig,
    SemigroupKind, agreement, all_configs, compose_index_maps, disagreement,
    identity_map, is_homeomorphism, shift_apply,
)
from .literals import format_config, parse_config, parse_index_map
from .relations import (
    RelationKind, Verdict, decide, decide_L_H, decide_P_H, decide_P_S,
    decide_Q, equivalence_harness, extend_alphabet, oracle, oracle_L_H,
    oracle_P, oracle_Q,
)
from .topology import ConvergenceReport, Window, converges_on_window, orbit_pairs
from .witnesses import (
    WitnessTrace, collapse_pair, collapse_trace, witness_L_violation, witness_P_H_blocks,
    witness_P_H_countable, witness_P_S, witness_Q_infinite,
)

__all__ = [
    "COUNTABLE",
    "Alphabet",
    "AgreementSummary",
    "ComposedMap",
    "Config",
    "ConstantMap",
    "DenseConfig",
    "DenseMap",
    "FiniteSupportConfig",
    "FiniteSupportPermutation",
    "IndexMap",
    "IndexSet",
    "MatchingExtension",
    "PairingShiftPower",
    "ProceduralConfig",
    "SemigroupKind",
    "agreement",
    "all_configs",
    "compose_index_maps",
    "disagreement",
    "identity_map",
    "is_homeomorphism",
    "shift_apply",
    "format_config",
    "parse_config",
    "parse_index_map",
    "RelationKind",
    "Verdict",
    "decide",
    "decide_L_H",
    "decide_P_H",
    "decide_P_S",
    "decide_Q",
    "equivalence_harness",
    "extend_alphabet",
    "oracle",
    "oracle_L_H",
    "oracle_P",
    "oracle_Q",
    "ConvergenceReport",
    "Window",
    "converges_on_window",
    "orbit_pairs",
    "WitnessTrace",
    "collapse_pair",
    "collapse_trace",
    "witness_L_violation",
    "witness_P_H_blocks",
    "witness_P_H_countable",
    "witness_P_S",
    "witness_Q_infinite",
]

__version__ = "0.1.0"
