"""Towers of Hanoi as a context-free grammar and a deterministic pushdown automaton."""

from ._core import (
    CapExceeded,
    HanoiState,
    HanoigramError,
    IllegalMove,
    InvalidDiscCount,
    StepLimitExceeded,
    ValidationReport,
    apply_move,
    bfs_optimal,
    cli,
    derive_full,
    enumerate_language,
    initial_state,
    is_deterministic,
    is_solved,
    recursive_solve,
    run_pda,
    solve,
    validate_sequence,
)

__all__ = [
    "CapExceeded",
    "HanoiState",
    "HanoigramError",
    "IllegalMove",
    "InvalidDiscCount",
    "StepLimitExceeded",
    "ValidationReport",
    "apply_move",
    "bfs_optimal",
    "cli",
    "derive_full",
    "enumerate_language",
    "initial_state",
    "is_deterministic",
    "is_solved",
    "recursive_solve",
    "run_pda",
    "solve",
    "validate_sequence",
]
