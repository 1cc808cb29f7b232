"""Unbiased Avoider-Enforcer games on the edges of K_n.

Engine (board, referee, transcripts), the strategy library, exact
small-board solving, and an experiment harness that checks the move-count
guarantees each strategy carries.
"""

from .board import (
    AuditLevel,
    Edge,
    GameState,
    Mode,
    Player,
    apply_move,
    edge_count,
    legal_moves,
    new_game,
)
from .bounds import BoundSpec, catalog as bound_catalog, get_bound
from .errors import (
    CapacityExceededError,
    ConfigError,
    GameError,
    GuaranteeViolatedError,
    IllegalMoveError,
    InvalidEdgeError,
    InvalidParameterError,
    ReplayError,
    TranscriptParseError,
)
from .harness import (
    ExperimentConfig,
    Report,
    export_transcript,
    import_transcript,
    parse_config,
    run_experiment,
    verify_bounds,
)
from .match import AuditRecord, Fault, MatchResult, avoider_loss_round, run_match
from .properties import (
    CONNECTED_SPANNING,
    MIN_DEGREE_ONE,
    NON_BIPARTITE,
    NON_PLANAR,
    PROPERTIES,
    PROPERTY_IDS,
    LosingProperty,
    brute_force_extremal,
    extremal_number,
    extremal_set,
    first_satisfied_round,
    get_property,
    has_min_degree_one,
    is_bipartite,
    is_connected_spanning,
    is_planar,
)
from .registry import resolve_strategy, strategy_ids
from .solver import (
    AuditOutcome,
    ObservationRecord,
    SolverResult,
    exhaustive_strategy_audit,
    solve_tau_e,
    verify_observation1,
)
from .strategy import ScriptedStrategy, Strategy
from .tracking import ComponentTracker, ParityUnionFind
from .transcript import Transcript, format_transcript, parse_transcript

__version__ = "0.1.0"

__all__ = [
    "AuditLevel",
    "AuditOutcome",
    "AuditRecord",
    "BoundSpec",
    "CapacityExceededError",
    "ComponentTracker",
    "ConfigError",
    "CONNECTED_SPANNING",
    "Edge",
    "ExperimentConfig",
    "Fault",
    "GameError",
    "GameState",
    "GuaranteeViolatedError",
    "IllegalMoveError",
    "InvalidEdgeError",
    "InvalidParameterError",
    "LosingProperty",
    "MatchResult",
    "MIN_DEGREE_ONE",
    "Mode",
    "NON_BIPARTITE",
    "NON_PLANAR",
    "ObservationRecord",
    "ParityUnionFind",
    "Player",
    "PROPERTIES",
    "PROPERTY_IDS",
    "Report",
    "ReplayError",
    "ScriptedStrategy",
    "SolverResult",
    "Strategy",
    "Transcript",
    "TranscriptParseError",
    "apply_move",
    "avoider_loss_round",
    "bound_catalog",
    "brute_force_extremal",
    "edge_count",
    "exhaustive_strategy_audit",
    "export_transcript",
    "extremal_number",
    "extremal_set",
    "first_satisfied_round",
    "format_transcript",
    "get_bound",
    "get_property",
    "has_min_degree_one",
    "import_transcript",
    "is_bipartite",
    "is_connected_spanning",
    "is_planar",
    "legal_moves",
    "new_game",
    "parse_config",
    "parse_transcript",
    "resolve_strategy",
    "run_experiment",
    "run_match",
    "solve_tau_e",
    "strategy_ids",
    "verify_bounds",
    "verify_observation1",
]
