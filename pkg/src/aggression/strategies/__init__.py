"""Registry of the scripted strategies and the uniform strategy API."""

from __future__ import annotations

from typing import Optional

from ..game import GameState, Move
from ..graphs import Graph
from .base import (
    Guarantee,
    Mode,
    OutOfApplicability,
    Session,
    Strategy,
    StrategyError,
    StrategyMemory,
    UnspecifiedBranch,
    next_move,
    relabel,
    value_meets,
)
from .cycles import CYCLE_STRATEGIES
from .matchings import MATCHING_STRATEGIES
from .micro import MICRO_STRATEGIES

_REGISTRY: dict[str, Strategy] = {
    s.id: s for s in (*MATCHING_STRATEGIES, *CYCLE_STRATEGIES, *MICRO_STRATEGIES)
}

STRATEGY_IDS = tuple(sorted(_REGISTRY))


def get_strategy(strategy_id: str) -> Strategy:
    try:
        return _REGISTRY[strategy_id]
    except KeyError:
        raise KeyError(f"unknown strategy {strategy_id!r}; know {list(STRATEGY_IDS)}") from None


def applicability(strategy_id: str, graph: Graph,
                  budgets: tuple[int, int]) -> Optional[Guarantee]:
    """The declared guarantee when the strategy's hypotheses hold."""
    return get_strategy(strategy_id).applicability(graph, budgets)


__all__ = [
    "Guarantee", "Mode", "OutOfApplicability", "Session", "Strategy",
    "StrategyError", "StrategyMemory", "UnspecifiedBranch", "STRATEGY_IDS",
    "applicability", "get_strategy", "next_move", "relabel", "value_meets",
]
