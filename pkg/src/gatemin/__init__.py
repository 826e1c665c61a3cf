"""Exact synthesis of minimal multi-level circuits from two-input gates."""

from .bitvec import (Bitvector, Minterm, TruthSpec, from_minterms, minterms_of,
                     parse_function, parse_hex, representative_bits)
from .baseline import ExpansionKind, expand, subfunctions
from .circuit import Circuit, GatePlacement, VerifyReport, simulate, verify
from .emit import circuit_from_json, emit_dot, emit_gams, emit_json
from .gates import (Gate, eval_gate, eval_gate_bitparallel, gate_cost,
                    parse_gate_set)
from .model import ConstraintModel, ModelStats, encode, model_stats
from .search import (OracleGuardExceeded, SearchConfig, SolveResult,
                     enumerate_oracle, lower_bound, solve, solve_and_check)
from .topology import Architecture, FeedEntity, feed_entities, validate

__version__ = "0.1.0"

__all__ = [
    "Architecture", "Bitvector", "Circuit", "ConstraintModel", "ExpansionKind",
    "FeedEntity", "Gate", "GatePlacement", "Minterm", "ModelStats",
    "OracleGuardExceeded", "SearchConfig", "SolveResult", "TruthSpec",
    "VerifyReport", "circuit_from_json", "emit_dot", "emit_gams", "emit_json",
    "encode", "enumerate_oracle", "eval_gate", "eval_gate_bitparallel",
    "expand", "feed_entities", "from_minterms", "gate_cost", "lower_bound",
    "minterms_of", "model_stats", "parse_function", "parse_gate_set",
    "parse_hex", "representative_bits", "simulate", "solve",
    "solve_and_check", "subfunctions", "validate", "verify",
]
