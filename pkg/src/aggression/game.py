"""Rules of Aggression as an immutable-state transition system.

The game has two phases.  In the placement phase the players alternate,
Lata first, each placing at least one troop on an empty vertex; a player
with no troops left or no empty vertex available passes (passing is never
voluntary).  When both players pass consecutively the attack phase begins,
led by whoever passed first.  In the attack phase the players alternate
choosing a vulnerable enemy vertex -- one whose adjacent enemy troops
strictly exceed its own -- which is then emptied and becomes neutral.  Two
consecutive attack passes end the game.

Scoring is lexicographic: more surviving territories wins, ties are broken
by surviving troops, and a double tie is a draw.  Winning by two or more
territories is a *strong win*.

All states are immutable values; ``apply_move`` returns a fresh state, so
every operation here is safe to call from many threads at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Optional

from .graphs import Graph


class PlayerId(IntEnum):
    LATA = 0  # first player
    RAJ = 1   # second player

    @property
    def opponent(self) -> "PlayerId":
        return PlayerId(1 - self.value)

    def __str__(self) -> str:
        return "Lata" if self is PlayerId.LATA else "Raj"


class Phase(Enum):
    PLACEMENT = "placement"
    ATTACK = "attack"
    TERMINAL = "terminal"


class AttackPolicy(Enum):
    MANDATORY = "mandatory"  # a player with a legal attack must attack
    OPTIONAL = "optional"    # passing is always allowed in the attack phase


@dataclass(frozen=True, slots=True)
class RuleConfig:
    attack_policy: AttackPolicy = AttackPolicy.MANDATORY
    placement_cap: Optional[int] = None  # 1 for Micro Aggression

    def __post_init__(self) -> None:
        if self.placement_cap is not None and self.placement_cap < 1:
            raise ValueError(f"placement_cap must be >= 1, got {self.placement_cap}")


STANDARD = RuleConfig()
MICRO = RuleConfig(placement_cap=1)


class MoveKind(IntEnum):
    # Numeric order doubles as the deterministic tie-break ordinal.
    PLACE = 0
    PASS_PLACEMENT = 1
    ATTACK = 2
    PASS_ATTACK = 3


@dataclass(frozen=True, slots=True)
class Move:
    kind: MoveKind
    vertex: Optional[int] = None
    count: Optional[int] = None

    @staticmethod
    def place(vertex: int, count: int) -> "Move":
        if count < 1:
            raise IllegalMove("placement count must be >= 1")
        return Move(MoveKind.PLACE, vertex, count)

    @staticmethod
    def pass_placement() -> "Move":
        return _PASS_PLACEMENT

    @staticmethod
    def attack(vertex: int) -> "Move":
        return Move(MoveKind.ATTACK, vertex)

    @staticmethod
    def pass_attack() -> "Move":
        return _PASS_ATTACK

    def ordinal(self) -> tuple[int, int, int]:
        """Total order used for deterministic tie-breaking."""
        return (self.kind.value, self.vertex if self.vertex is not None else -1,
                self.count if self.count is not None else -1)

    def __str__(self) -> str:
        if self.kind is MoveKind.PLACE:
            return f"place({self.vertex},{self.count})"
        if self.kind is MoveKind.ATTACK:
            return f"attack({self.vertex})"
        return "pass" if self.kind is MoveKind.PASS_PLACEMENT else "pass-attack"


_PASS_PLACEMENT = Move(MoveKind.PASS_PLACEMENT)
_PASS_ATTACK = Move(MoveKind.PASS_ATTACK)


class IllegalMove(ValueError):
    """Raised when a move violates a rule; the message names the rule."""


class RuleError(ValueError):
    """Raised when an operation is applied to a state in the wrong phase."""


@dataclass(frozen=True, slots=True)
class GameState:
    graph: Graph
    owner: tuple[Optional[PlayerId], ...]
    troops: tuple[int, ...]
    budget_remaining: tuple[int, int]  # indexed by PlayerId
    phase: Phase
    to_move: PlayerId
    first_passer: Optional[PlayerId]
    consecutive_passes: int  # passes in a row within the current phase
    config: RuleConfig

    def budget(self, p: PlayerId) -> int:
        return self.budget_remaining[p.value]

    def territories(self, p: PlayerId) -> int:
        return sum(1 for o in self.owner if o is p)

    def surviving_troops(self, p: PlayerId) -> int:
        return sum(t for o, t in zip(self.owner, self.troops) if o is p)


@dataclass(frozen=True, slots=True)
class Payoff:
    """Lexicographic (territory, troop) differences, Lata minus Raj."""

    territory_diff: int
    troop_diff: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.territory_diff, self.troop_diff)

    def __neg__(self) -> "Payoff":
        return Payoff(-self.territory_diff, -self.troop_diff)


class GameResult(Enum):
    LATA_WIN = "LataWin"
    RAJ_WIN = "RajWin"
    DRAW = "Draw"


@dataclass(frozen=True, slots=True)
class Outcome:
    territories: tuple[int, int]
    surviving_troops: tuple[int, int]
    result: GameResult
    strong_win: bool

    @property
    def payoff(self) -> Payoff:
        return Payoff(self.territories[0] - self.territories[1],
                      self.surviving_troops[0] - self.surviving_troops[1])

    def winner(self) -> Optional[PlayerId]:
        if self.result is GameResult.LATA_WIN:
            return PlayerId.LATA
        if self.result is GameResult.RAJ_WIN:
            return PlayerId.RAJ
        return None


def new_game(graph: Graph, budget_lata: int, budget_raj: int,
             config: RuleConfig = STANDARD) -> GameState:
    """Fresh placement-phase state with an empty board, Lata to move."""
    if budget_lata < 0 or budget_raj < 0:
        raise ValueError("budgets must be non-negative")
    n = graph.vertex_count
    return GameState(
        graph=graph,
        owner=(None,) * n,
        troops=(0,) * n,
        budget_remaining=(budget_lata, budget_raj),
        phase=Phase.PLACEMENT,
        to_move=PlayerId.LATA,
        first_passer=None,
        consecutive_passes=0,
        config=config,
    )


def vulnerable_vertices(state: GameState, victim: PlayerId) -> set[int]:
    """Victim-owned vertices whose adjacent enemy troops strictly exceed their own."""
    attacker = victim.opponent
    owner, troops, neighbors = state.owner, state.troops, state.graph.neighbors
    out: set[int] = set()
    for v, o in enumerate(owner):
        if o is victim:
            strength = 0
            for u in neighbors[v]:
                if owner[u] is attacker:
                    strength += troops[u]
            if strength > troops[v]:
                out.add(v)
    return out


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves for the player to move, sorted by the tie-break ordinal."""
    if state.phase is Phase.TERMINAL:
        raise RuleError("terminal state has no legal moves")
    mover = state.to_move
    if state.phase is Phase.PLACEMENT:
        budget = state.budget_remaining[mover.value]
        cap = state.config.placement_cap
        max_count = budget if cap is None else min(budget, cap)
        if max_count >= 1:
            moves = [Move(MoveKind.PLACE, v, c)
                     for v, o in enumerate(state.owner) if o is None
                     for c in range(1, max_count + 1)]
            if moves:
                return moves
        return [Move.pass_placement()]
    # attack phase
    attacks = [Move(MoveKind.ATTACK, v)
               for v in sorted(vulnerable_vertices(state, mover.opponent))]
    if state.config.attack_policy is AttackPolicy.OPTIONAL:
        return attacks + [Move.pass_attack()]
    return attacks if attacks else [Move.pass_attack()]


def _check_legal(state: GameState, move: Move) -> None:
    mover = state.to_move
    kind = move.kind
    if state.phase is Phase.PLACEMENT:
        if kind is MoveKind.ATTACK or kind is MoveKind.PASS_ATTACK:
            raise IllegalMove("attack-phase move played during placement")
        if kind is MoveKind.PLACE:
            v, c = move.vertex, move.count
            if v is None or c is None or not (0 <= v < state.graph.vertex_count):
                raise IllegalMove(f"placement vertex out of range: {v}")
            if state.owner[v] is not None:
                raise IllegalMove(f"vertex {v} is not empty")
            if c < 1:
                raise IllegalMove("placement count must be >= 1")
            if c > state.budget_remaining[mover.value]:
                raise IllegalMove(f"placing {c} exceeds remaining budget "
                                  f"{state.budget_remaining[mover.value]}")
            cap = state.config.placement_cap
            if cap is not None and c > cap:
                raise IllegalMove(f"placing {c} exceeds the placement cap {cap}")
        else:  # pass_placement: only legal when no placement is possible
            budget = state.budget_remaining[mover.value]
            if budget >= 1 and any(o is None for o in state.owner):
                raise IllegalMove("cannot pass while troops remain and an empty vertex exists")
    elif state.phase is Phase.ATTACK:
        if kind is MoveKind.PLACE or kind is MoveKind.PASS_PLACEMENT:
            raise IllegalMove("placement-phase move played during the attack phase")
        if kind is MoveKind.ATTACK:
            v = move.vertex
            if v is None or not (0 <= v < state.graph.vertex_count):
                raise IllegalMove(f"attack vertex out of range: {v}")
            if state.owner[v] is not mover.opponent:
                raise IllegalMove(f"vertex {v} is not an enemy territory")
            strength = sum(state.troops[u] for u in state.graph.neighbors[v]
                           if state.owner[u] is mover)
            if strength <= state.troops[v]:
                raise IllegalMove(f"vertex {v} is not vulnerable "
                                  f"({strength} adjacent vs {state.troops[v]} defending)")
        else:  # pass_attack
            if state.config.attack_policy is AttackPolicy.MANDATORY and \
                    vulnerable_vertices(state, mover.opponent):
                raise IllegalMove("an attack is available and attacking is mandatory")
    else:
        raise RuleError("terminal state has no legal moves")


def apply_move(state: GameState, move: Move) -> GameState:
    """Successor state; raises IllegalMove naming the violated rule."""
    _check_legal(state, move)
    mover = state.to_move
    kind = move.kind

    if kind is MoveKind.PLACE:
        v, c = move.vertex, move.count
        owner = state.owner[:v] + (mover,) + state.owner[v + 1:]
        troops = state.troops[:v] + (c,) + state.troops[v + 1:]
        budgets = list(state.budget_remaining)
        budgets[mover.value] -= c
        return GameState(state.graph, owner, troops, tuple(budgets), Phase.PLACEMENT,
                         mover.opponent, state.first_passer, 0, state.config)

    if kind is MoveKind.PASS_PLACEMENT:
        first_passer = state.first_passer if state.first_passer is not None else mover
        passes = state.consecutive_passes + 1
        if passes >= 2:
            # Both players passed back to back: the attack phase opens with
            # the first player ever to have passed.
            return GameState(state.graph, state.owner, state.troops,
                             state.budget_remaining, Phase.ATTACK, first_passer,
                             first_passer, 0, state.config)
        return GameState(state.graph, state.owner, state.troops,
                         state.budget_remaining, Phase.PLACEMENT, mover.opponent,
                         first_passer, passes, state.config)

    if kind is MoveKind.ATTACK:
        v = move.vertex
        owner = state.owner[:v] + (None,) + state.owner[v + 1:]
        troops = state.troops[:v] + (0,) + state.troops[v + 1:]
        return GameState(state.graph, owner, troops, state.budget_remaining,
                         Phase.ATTACK, mover.opponent, state.first_passer, 0,
                         state.config)

    # pass_attack
    passes = state.consecutive_passes + 1
    phase = Phase.TERMINAL if passes >= 2 else Phase.ATTACK
    return GameState(state.graph, state.owner, state.troops, state.budget_remaining,
                     phase, mover.opponent, state.first_passer, passes, state.config)


def score(state: GameState) -> Outcome:
    """Outcome of a board position (used on terminal states and static boards)."""
    tl = state.territories(PlayerId.LATA)
    tr = state.territories(PlayerId.RAJ)
    sl = state.surviving_troops(PlayerId.LATA)
    sr = state.surviving_troops(PlayerId.RAJ)
    if (tl, sl) > (tr, sr):
        result = GameResult.LATA_WIN
    elif (tl, sl) < (tr, sr):
        result = GameResult.RAJ_WIN
    else:
        result = GameResult.DRAW
    strong = abs(tl - tr) >= 2 and result is not GameResult.DRAW
    return Outcome((tl, tr), (sl, sr), result, strong)


def outcome(state: GameState) -> Outcome:
    if state.phase is not Phase.TERMINAL:
        raise RuleError("outcome is only defined for terminal states")
    return score(state)


def play_out(state: GameState, moves: list[Move]) -> GameState:
    """Apply a sequence of moves, failing loudly on the first illegal one."""
    for m in moves:
        state = apply_move(state, m)
    return state
