"""Mirror strategies for the one-troop-per-move variant.

Both keep the same two observations in memory: the opponent's last
placement and last attack, answered on the reflection.  "Arbitrary" always
means the lowest-id legal choice.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from ..game import GameState, Move, MoveKind, Phase, PlayerId, RuleConfig, legal_moves
from ..graphs import Graph
from ..solver import SymmetryGroup
from .base import Guarantee, Strategy, StrategyMemory, preferred_attack
from .cycles import is_standard_cycle

_OWNER_CODE = {None: 0, PlayerId.LATA: 1, PlayerId.RAJ: 2}


def is_standard_path(graph: Graph) -> bool:
    n = graph.vertex_count
    return n >= 1 and graph.edges == tuple((i, i + 1) for i in range(n - 1))


@dataclass(frozen=True)
class MirrorData:
    opp_place: Optional[int] = None
    opp_attack: Optional[int] = None
    center: Optional[int] = None  # odd-cycle mirror only


class _MicroMirror(Strategy):
    def game_config(self) -> RuleConfig:
        return RuleConfig(placement_cap=1)

    def initial_data(self, state: GameState) -> MirrorData:
        return MirrorData()

    def observe(self, memory: StrategyMemory, move: Move,
                state_before: GameState) -> StrategyMemory:
        data: MirrorData = memory.data
        if move.kind is MoveKind.PLACE:
            if data.center is None and self.binds_center(state_before):
                data = replace(data, center=move.vertex)
            return replace(memory, data=replace(data, opp_place=move.vertex))
        if move.kind is MoveKind.ATTACK:
            return replace(memory, data=replace(data, opp_attack=move.vertex))
        return memory

    def binds_center(self, state_before: GameState) -> bool:
        return False

    def reflect(self, memory: StrategyMemory, state: GameState, v: int) -> int:
        raise NotImplementedError

    def mirror_placement(self, memory: StrategyMemory, state: GameState,
                         first: Optional[Move]) -> tuple[Move, StrategyMemory]:
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        data: MirrorData = memory.data
        if first is not None and all(o is None for o in state.owner):
            return first, memory
        if data.opp_place is not None:
            target = self.reflect(memory, state, data.opp_place)
            if state.owner[target] is None:
                return Move.place(target, 1), memory
        for v, o in enumerate(state.owner):  # arbitrary = lowest free vertex
            if o is None:
                return Move.place(v, 1), memory
        return moves[0], memory  # unreachable: a placement was legal

    def mimic_attack(self, memory: StrategyMemory, state: GameState,
                     opening_prefs: tuple[int, ...]) -> Move:
        data: MirrorData = memory.data
        prefs: tuple[int, ...] = ()
        if data.opp_attack is not None:
            prefs = (self.reflect(memory, state, data.opp_attack),)
        return preferred_attack(memory, state, prefs + opening_prefs)


class MicroFirstPathMirror(_MicroMirror):
    """First player: centre (or any) opening, then reflect everything."""

    id = "micro_first_path_mirror"
    player = PlayerId.LATA

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if is_standard_path(graph) and budgets[0] == budgets[1] >= 1:
            return Guarantee.AT_LEAST_DRAW
        return None

    def reflect(self, memory: StrategyMemory, state: GameState, v: int) -> int:
        return state.graph.vertex_count - 1 - v

    def propose(self, memory: StrategyMemory, state: GameState):
        n = state.graph.vertex_count
        if state.phase is Phase.ATTACK:
            # Even paths: open across the central edge when possible.
            prefs = (n // 2 - 1, n // 2) if n % 2 == 0 and n >= 2 else ()
            return self.mimic_attack(memory, state, prefs), memory
        first = Move.place((n - 1) // 2, 1) if n % 2 == 1 else Move.place(0, 1)
        return self.mirror_placement(memory, state, first)

    def opponent_move_representatives(self, memory: StrategyMemory,
                                      state: GameState) -> list[Move]:
        n = state.graph.vertex_count
        data: MirrorData = memory.data
        anchored = [v for v in (data.opp_place, data.opp_attack) if v is not None]
        board = [(_OWNER_CODE[state.owner[i]], state.troops[i]) for i in range(n)]
        flip_ok = all(board[n - 1 - i] == board[i] for i in range(n)) and \
            all(n - 1 - a == a for a in anchored)
        moves = legal_moves(state)
        if not flip_ok:
            return moves
        seen: set = set()
        reps: list[Move] = []
        for m in moves:
            key = (m.kind.value, m.count,
                   min(m.vertex, n - 1 - m.vertex) if m.vertex is not None else None)
            if key not in seen:
                seen.add(key)
                reps.append(m)
        return reps


class MicroSecondOddCycleMirror(_MicroMirror):
    """Second player: fix her opening vertex as the centre, reflect across it."""

    id = "micro_second_oddcycle_mirror"
    player = PlayerId.RAJ

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        n = graph.vertex_count
        if is_standard_cycle(graph) and n >= 5 and n % 2 == 1 and \
                budgets[0] == budgets[1] >= 1:
            return Guarantee.AT_LEAST_DRAW
        return None

    def solver_symmetry(self, graph: Graph) -> SymmetryGroup:
        return SymmetryGroup.CYCLE_DIHEDRAL

    def binds_center(self, state_before: GameState) -> bool:
        return all(o is None for o in state_before.owner)

    def reflect(self, memory: StrategyMemory, state: GameState, v: int) -> int:
        center = memory.data.center
        n = state.graph.vertex_count
        return (2 * center - v) % n

    def propose(self, memory: StrategyMemory, state: GameState):
        data: MirrorData = memory.data
        n = state.graph.vertex_count
        if state.phase is Phase.ATTACK:
            prefs: tuple[int, ...] = ()
            if data.center is not None:
                # The edge opposite the centre is the one the mirror crosses.
                prefs = ((data.center + (n - 1) // 2) % n,
                         (data.center + (n + 1) // 2) % n)
            return self.mimic_attack(memory, state, prefs), memory
        if data.center is not None and data.opp_place == data.center:
            # She opened on the centre itself: answer anywhere.
            moves = legal_moves(state)
            if moves[0].kind is MoveKind.PASS_PLACEMENT:
                return moves[0], memory
            for v, o in enumerate(state.owner):
                if o is None:
                    return Move.place(v, 1), memory
        return self.mirror_placement(memory, state, None)

    def opponent_move_representatives(self, memory: StrategyMemory,
                                      state: GameState) -> list[Move]:
        from .cycles import cycle_representatives

        data: MirrorData = memory.data
        anchored = tuple(v for v in (data.center, data.opp_place, data.opp_attack)
                         if v is not None)
        return cycle_representatives(state, anchored)


MICRO_STRATEGIES = (MicroFirstPathMirror(), MicroSecondOddCycleMirror())
