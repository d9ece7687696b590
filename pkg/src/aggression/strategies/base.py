"""Strategy contract, execution modes and the repair machinery.

A strategy is a deterministic move supplier for one side of the game.  Its
*memory* carries the script's private bookkeeping: the
relabeling that discharges the "without loss of generality" assumptions,
case-table selections, and phase counters.

Two execution modes:

* ``VERBATIM`` plays the scripts exactly as given.  Branches the script
  does not cover raise :class:`UnspecifiedBranch`; an illegal scripted move
  is a scripting bug surfaced by the verifier, never silently patched.
* ``REPAIRED`` value-guards every scripted move with a shared exact solver:
  if the declared guarantee is no longer attainable after the scripted move
  (or the script has no move), the solver's best move is played instead and
  the substitution is logged.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Optional

from ..game import (
    GameState,
    IllegalMove,
    Move,
    MoveKind,
    Phase,
    PlayerId,
    RuleConfig,
    apply_move,
    legal_moves,
)
from ..graphs import Graph
from ..solver import Solver, SymmetryGroup


class Guarantee(Enum):
    AT_LEAST_DRAW = "at_least_draw"
    WIN = "win"
    STRONG_WIN = "strong_win"

    @property
    def rank(self) -> int:
        return {"at_least_draw": 0, "win": 1, "strong_win": 2}[self.value]


class Mode(Enum):
    VERBATIM = "verbatim"
    REPAIRED = "repaired"


class StrategyError(RuntimeError):
    """A scripting bug: inconsistent relabeling or a malformed proposal."""


class UnspecifiedBranch(RuntimeError):
    """The script does not say what to do here (verbatim mode only)."""


class OutOfApplicability(ValueError):
    """The strategy's hypotheses do not hold for this graph/budget pair."""


@dataclass
class Session:
    """Mutable per-run context shared by all memory snapshots of one game."""

    solver: Optional[Solver] = None
    repairs: list[str] = field(default_factory=list)
    unspecified: list[str] = field(default_factory=list)

    def log_repair(self, message: str) -> None:
        if message not in self.repairs:
            self.repairs.append(message)

    def log_unspecified(self, message: str) -> None:
        if message not in self.unspecified:
            self.unspecified.append(message)


@dataclass(frozen=True)
class StrategyMemory:
    """Immutable strategy state; ``data`` is the per-strategy payload."""

    strategy_id: str
    mode: Mode
    player: PlayerId
    target: Guarantee
    data: Any
    off_script: bool = False
    session: Session = field(compare=False, repr=False, default_factory=Session)

    def fingerprint(self) -> tuple:
        """Hashable behavioural identity (logs and session excluded)."""
        return (self.strategy_id, self.mode.value, self.player.value,
                self.target.value, self.data, self.off_script)


def value_meets(value: tuple[int, int], player: PlayerId, target: Guarantee) -> bool:
    """Does a Lata-perspective game value satisfy the guarantee for ``player``?"""
    if player is PlayerId.RAJ:
        value = (-value[0], -value[1])
    if target is Guarantee.AT_LEAST_DRAW:
        return value >= (0, 0)
    if target is Guarantee.WIN:
        return value > (0, 0)
    return value[0] >= 2


class Strategy:
    """Base class; a subclass scripts one side's play on one board family."""

    id: str = ""
    player: PlayerId = PlayerId.RAJ

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        raise NotImplementedError

    def game_config(self) -> RuleConfig:
        return RuleConfig()

    def solver_symmetry(self, graph: Graph) -> SymmetryGroup:
        return SymmetryGroup.IDENTITY

    def initial_data(self, state: GameState) -> Any:
        raise NotImplementedError

    def propose(self, memory: StrategyMemory, state: GameState) -> tuple[Move, StrategyMemory]:
        """Scripted move; raises UnspecifiedBranch outside the argument."""
        raise NotImplementedError

    def observe(self, memory: StrategyMemory, move: Move,
                state_before: GameState) -> StrategyMemory:
        """Extend the relabeling with the opponent's actual choice."""
        return memory

    def fallback_move(self, memory: StrategyMemory, state: GameState) -> Move:
        """Deterministic domain rule used once play has left the script."""
        return default_fallback(memory, state)

    def opponent_move_representatives(self, memory: StrategyMemory,
                                      state: GameState) -> list[Move]:
        """One legal opponent move per equivalence class (soundness is the
        subclass's responsibility; the default collapses nothing)."""
        return legal_moves(state)

    # -- lifecycle -----------------------------------------------------------

    def initial_memory(self, state: GameState, mode: Mode = Mode.REPAIRED,
                       target: Optional[Guarantee] = None,
                       session: Optional[Session] = None) -> StrategyMemory:
        declared = self.applicability(state.graph, state.budget_remaining)
        if target is None:
            target = declared
        if target is None:
            raise OutOfApplicability(
                f"{self.id}: hypotheses do not cover graph with "
                f"{state.graph.vertex_count} vertices and budgets {state.budget_remaining}")
        if session is None:
            session = Session()
        if mode is Mode.REPAIRED and session.solver is None:
            session.solver = Solver(symmetry=self.solver_symmetry(state.graph))
        return StrategyMemory(self.id, mode, self.player, target,
                              self.initial_data(state), False, session)


def default_fallback(memory: StrategyMemory, state: GameState) -> Move:
    """Family-agnostic deterministic play: spread placements that cannot be
    immediately overpowered, lowest-id attacks, forced passes."""
    moves = legal_moves(state)
    if len(moves) == 1:
        return moves[0]
    if state.phase is Phase.PLACEMENT:
        me = state.to_move
        budget = state.budget_remaining[me.value]
        empties = [v for v, o in enumerate(state.owner) if o is None]
        safe = []
        for v in empties:
            enemy_adjacent = sum(state.troops[u] for u in state.graph.neighbors[v]
                                 if state.owner[u] is me.opponent)
            safe.append((enemy_adjacent, v))
        safe.sort()
        enemy_adjacent, v = safe[0]
        count = 1 if enemy_adjacent == 0 else min(budget, enemy_adjacent)
        cap = state.config.placement_cap
        if cap is not None:
            count = min(count, cap)
        return Move.place(v, max(count, 1))
    attacks = [m for m in moves if m.kind is MoveKind.ATTACK]
    if attacks:
        return attacks[0]
    return moves[0]


def preferred_attack(memory: StrategyMemory, state: GameState,
                     preferences: tuple[int, ...]) -> Move:
    """First legal attack from ``preferences`` (actual vertex ids), else the
    lowest-id legal attack, else the forced pass."""
    moves = legal_moves(state)
    attacks = {m.vertex: m for m in moves if m.kind is MoveKind.ATTACK}
    for v in preferences:
        if v in attacks:
            return attacks[v]
    if attacks:
        return attacks[min(attacks)]
    pass_moves = [m for m in moves if m.kind is not MoveKind.ATTACK]
    if pass_moves:
        return pass_moves[0]
    return moves[0]


def repair_candidates(memory: StrategyMemory, state: GameState,
                      scripted: Optional[Move]) -> tuple[Move, bool]:
    """Pick the move to play in repaired mode.

    Tries the scripted move, then the domain fallback, then every legal move
    in solver-preference order; plays the first one after which the declared
    guarantee is still attainable.  Returns (move, was_repaired).
    """
    from . import get_strategy  # local import to avoid a cycle

    strat = get_strategy(memory.strategy_id)
    solver = memory.session.solver
    assert solver is not None, "repaired mode requires a solver session"

    def guard(move: Move) -> Optional[tuple[int, int]]:
        try:
            child = apply_move(state, move)
        except IllegalMove:
            return None
        return solver.value(child)

    if scripted is not None:
        v = guard(scripted)
        if v is not None and value_meets(v, memory.player, memory.target):
            return scripted, False
    fallback = strat.fallback_move(memory, state)
    if scripted is None or fallback != scripted:
        v = guard(fallback)
        if v is not None and value_meets(v, memory.player, memory.target):
            return fallback, True
    moves = legal_moves(state)
    values = [(solver.value(apply_move(state, m)), m) for m in moves]
    maximizing = memory.player is PlayerId.LATA
    best = max(v for v, _ in values) if maximizing else min(v for v, _ in values)
    for v, m in values:
        if v == best:
            return m, True
    raise StrategyError("unreachable: no legal move")  # pragma: no cover


def next_move(strategy_id: str, state: GameState,
              memory: StrategyMemory) -> tuple[Move, StrategyMemory]:
    """Uniform entry point: one move plus the updated memory."""
    from . import get_strategy

    strat = get_strategy(strategy_id)
    if state.to_move is not memory.player:
        raise StrategyError(f"{strategy_id} plays {memory.player}, but it is "
                            f"{state.to_move}'s turn")

    scripted: Optional[tuple[Move, StrategyMemory]] = None
    if not memory.off_script:
        try:
            scripted = strat.propose(memory, state)
        except UnspecifiedBranch as gap:
            if memory.mode is Mode.VERBATIM:
                raise
            memory.session.log_unspecified(str(gap))
            memory = replace(memory, off_script=True)

    if memory.mode is Mode.VERBATIM:
        if scripted is None:
            raise UnspecifiedBranch(f"{strategy_id}: play has left the script")
        return scripted

    move, repaired = repair_candidates(
        memory, state, scripted[0] if scripted is not None else None)
    if not repaired and scripted is not None:
        return move, scripted[1]
    if scripted is not None:
        memory.session.log_repair(
            f"{strategy_id}: scripted {scripted[0]} replaced by {move} "
            f"(guarantee {memory.target.value} would be lost)")
    else:
        memory.session.log_repair(f"{strategy_id}: off-script move {move}")
    return move, replace(memory, off_script=True)


def relabel(memory: StrategyMemory, observed_move: Move,
            state: GameState) -> StrategyMemory:
    """Feed an opponent move into the strategy's relabeling."""
    from . import get_strategy

    if memory.off_script:
        return memory
    return get_strategy(memory.strategy_id).observe(memory, observed_move, state)
