"""Exhaustive adversarial verification of strategy guarantees.

Plays a scripted strategy against every legal opponent continuation
(collapsed by sound symmetry dedup) and either certifies the declared
guarantee or returns a shortest counterexample line.  Verbatim runs
additionally report unspecified script branches and illegal scripted moves
(strategy bugs, never refutations); repaired runs report every solver
substitution.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .game import (
    GameState,
    IllegalMove,
    Move,
    Outcome,
    Phase,
    PlayerId,
    apply_move,
    new_game,
    outcome,
)
from .graphs import Graph
from .solver import LimitExceeded
from .strategies import (
    Guarantee,
    Mode,
    OutOfApplicability,
    Session,
    StrategyMemory,
    UnspecifiedBranch,
    get_strategy,
    next_move,
    relabel,
)


@dataclass
class VerificationReport:
    strategy: str
    graph: Graph
    budgets: tuple[int, int]
    mode: Mode
    guarantee_claimed: Guarantee
    holds: bool
    counterexample: Optional[list[Move]]
    lines_explored: int
    states_deduplicated: int
    repairs: list[str] = field(default_factory=list)
    unspecified: list[str] = field(default_factory=list)
    strategy_errors: list[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        """Full adjudication with a clean script (no bugs, no gaps)."""
        return not self.strategy_errors and not self.unspecified


def outcome_meets(out: Outcome, player: PlayerId, guarantee: Guarantee) -> bool:
    winner = out.winner()
    if guarantee is Guarantee.AT_LEAST_DRAW:
        return winner is not player.opponent
    if guarantee is Guarantee.WIN:
        return winner is player
    return winner is player and abs(out.territories[0] - out.territories[1]) >= 2


@dataclass
class _Limits:
    max_lines: Optional[int] = None
    max_seconds: Optional[float] = None


class _Verifier:
    def __init__(self, strategy_id: str, target: Guarantee, mode: Mode,
                 limits: _Limits):
        self.strategy = get_strategy(strategy_id)
        self.strategy_id = strategy_id
        self.target = target
        self.mode = mode
        self.limits = limits
        self.deadline = (time.monotonic() + limits.max_seconds
                         if limits.max_seconds is not None else None)
        self.lines = 0
        self.dedup_hits = 0
        self.memo: dict = {}
        self.strategy_errors: list[str] = []

    def _tick(self) -> None:
        if self.limits.max_lines is not None and self.lines > self.limits.max_lines:
            raise LimitExceeded(f"verification exceeded {self.limits.max_lines} lines")
        if self.deadline is not None and self.lines % 256 == 0 and \
                time.monotonic() > self.deadline:
            raise LimitExceeded("verification exceeded its time budget")

    def run(self, state: GameState, memory: StrategyMemory
            ) -> tuple[bool, Optional[tuple[Move, ...]]]:
        """(holds, shortest violating line)."""
        if state.phase is Phase.TERMINAL:
            self.lines += 1
            self._tick()
            ok = outcome_meets(outcome(state), self.strategy.player, self.target)
            return ok, None if ok else ()
        key = (state, memory.fingerprint())
        hit = self.memo.get(key)
        if hit is not None:
            self.dedup_hits += 1
            return hit
        if state.to_move is self.strategy.player:
            result = self._strategy_node(state, memory)
        else:
            result = self._opponent_node(state, memory)
        self.memo[key] = result
        return result

    def _strategy_node(self, state, memory):
        try:
            move, memory2 = next_move(self.strategy_id, state, memory)
        except UnspecifiedBranch as gap:
            memory.session.log_unspecified(str(gap))
            self.lines += 1
            self._tick()
            return True, None  # unadjudicated branch, reported separately
        try:
            child = apply_move(state, move)
        except IllegalMove as bug:
            note = f"illegal scripted move {move}: {bug}"
            if note not in self.strategy_errors:
                self.strategy_errors.append(note)
            self.lines += 1
            self._tick()
            return True, None  # a bug, not a refutation
        ok, line = self.run(child, memory2)
        return ok, None if line is None else (move,) + line

    def _opponent_node(self, state, memory):
        holds = True
        best: Optional[tuple[Move, ...]] = None
        for move in self.strategy.opponent_move_representatives(memory, state):
            memory2 = relabel(memory, move, state)
            ok, line = self.run(apply_move(state, move), memory2)
            if not ok:
                holds = False
                candidate = (move,) + (line or ())
                if best is None or len(candidate) < len(best):
                    best = candidate
        return holds, best


def verify_guarantee(strategy_id: str, graph: Graph, budgets: tuple[int, int],
                     mode: Mode = Mode.REPAIRED,
                     max_lines: Optional[int] = None,
                     max_seconds: Optional[float] = None) -> VerificationReport:
    """Check the strategy's declared guarantee against all opponent play."""
    strategy = get_strategy(strategy_id)
    target = strategy.applicability(graph, budgets)
    if target is None:
        raise OutOfApplicability(
            f"{strategy_id} does not apply to this graph/budget pair")
    state = new_game(graph, budgets[0], budgets[1], strategy.game_config())
    session = Session()
    memory = strategy.initial_memory(state, mode=mode, session=session)
    verifier = _Verifier(strategy_id, target, mode, _Limits(max_lines, max_seconds))
    holds, line = verifier.run(state, memory)
    counterexample = list(line) if line is not None else None
    if counterexample is not None:
        _check_refutation(strategy, state, counterexample, target)
    return VerificationReport(
        strategy=strategy_id,
        graph=graph,
        budgets=budgets,
        mode=mode,
        guarantee_claimed=target,
        holds=holds,
        counterexample=counterexample,
        lines_explored=verifier.lines,
        states_deduplicated=verifier.dedup_hits,
        repairs=list(session.repairs),
        unspecified=list(session.unspecified),
        strategy_errors=verifier.strategy_errors,
    )


def _check_refutation(strategy, initial: GameState, line: list[Move],
                      target: Guarantee) -> None:
    """Refutation soundness: the counterexample must replay to a violation."""
    state = initial
    for move in line:
        state = apply_move(state, move)
    assert state.phase is Phase.TERMINAL, "counterexample must reach a terminal state"
    assert not outcome_meets(outcome(state), strategy.player, target), \
        "counterexample must violate the guarantee"


def report_to_doc(report: VerificationReport) -> dict:
    from .codec import graph_to_doc, moves_to_doc

    return {
        "strategy": report.strategy,
        "graph": graph_to_doc(report.graph),
        "budgets": {"lata": report.budgets[0], "raj": report.budgets[1]},
        "mode": report.mode.value,
        "guarantee_claimed": report.guarantee_claimed.value,
        "holds": report.holds,
        "counterexample": (None if report.counterexample is None
                           else moves_to_doc(report.counterexample)),
        "lines_explored": report.lines_explored,
        "states_deduplicated": report.states_deduplicated,
        "repairs": list(report.repairs),
        "unspecified": list(report.unspecified),
        "strategy_errors": list(report.strategy_errors),
    }
