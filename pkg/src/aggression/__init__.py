"""Aggression: a two-player troop-placement game on graphs.

Rules engine, exact solver, strategy library, exhaustive verifier, the
Optimal Response decision problem and its Multi-Colored Clique reduction,
plus a CLI and a small JSON-over-HTTP game service.
"""

from .game import (
    AttackPolicy,
    GameResult,
    GameState,
    IllegalMove,
    MICRO,
    Move,
    MoveKind,
    Outcome,
    Payoff,
    Phase,
    PlayerId,
    RuleConfig,
    RuleError,
    STANDARD,
    apply_move,
    legal_moves,
    new_game,
    outcome,
    play_out,
    score,
    vulnerable_vertices,
)
from .graphs import Graph, GraphError, complete, cycle, generate, matching, parse_family, path, star

__all__ = [
    "AttackPolicy", "GameResult", "GameState", "IllegalMove", "MICRO", "Move",
    "MoveKind", "Outcome", "Payoff", "Phase", "PlayerId", "RuleConfig",
    "RuleError", "STANDARD", "apply_move", "legal_moves", "new_game", "outcome",
    "play_out", "score", "vulnerable_vertices",
    "Graph", "GraphError", "complete", "cycle", "generate", "matching",
    "parse_family", "path", "star",
]
