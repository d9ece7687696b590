"""Scripted play on short cycles (triangle, 4-cycle, 5-cycle).

The 5-cycle scripts carry an orientation binding: canonical names v1..v5
run around the cycle relative to the first placement, folding the two
mirror-image responses into one case.  ``anchor`` is the actual vertex the
canonical v1 maps to and ``direction`` (+1/-1) fixes which neighbour plays
the role of v2.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from ..game import GameState, Move, MoveKind, Phase, PlayerId, legal_moves
from ..graphs import Graph
from ..solver import SymmetryGroup
from .base import Guarantee, Strategy, StrategyMemory, UnspecifiedBranch, preferred_attack

_OWNER_CODE = {None: 0, PlayerId.LATA: 1, PlayerId.RAJ: 2}


def is_standard_cycle(graph: Graph, n: Optional[int] = None) -> bool:
    count = graph.vertex_count
    if n is not None and count != n:
        return False
    if count < 3:
        return False
    expected = {tuple(sorted((i, (i + 1) % count))) for i in range(count)}
    return set(graph.edges) == expected


def total_budget(state: GameState, player: PlayerId) -> int:
    placed = sum(t for o, t in zip(state.owner, state.troops) if o is player)
    return placed + state.budget_remaining[player.value]


def cycle_representatives(state: GameState, anchored: tuple[int, ...]) -> list[Move]:
    """One opponent move per orbit of the dihedral transforms that fix both
    the board and every anchored vertex."""
    n = state.graph.vertex_count
    board = [(_OWNER_CODE[state.owner[i]], state.troops[i]) for i in range(n)]
    stabilizer = []
    for shift in range(n):
        for d in (1, -1):
            mapping = [(shift + d * i) % n for i in range(n)]
            if all(board[mapping[i]] == board[i] for i in range(n)) and \
                    all(mapping[a] == a for a in anchored):
                stabilizer.append(mapping)
    moves = legal_moves(state)
    seen: set = set()
    reps: list[Move] = []
    for m in moves:
        if m.vertex is None:
            sig: tuple = (m.kind.value,)
        else:
            orbit = min(mapping[m.vertex] for mapping in stabilizer)
            sig = (m.kind.value, m.count, orbit)
        if sig not in seen:
            seen.add(sig)
            reps.append(m)
    return reps


class CycleStrategy(Strategy):
    def solver_symmetry(self, graph: Graph) -> SymmetryGroup:
        return SymmetryGroup.CYCLE_DIHEDRAL

    def anchored(self, memory: StrategyMemory) -> tuple[int, ...]:
        return ()

    def opponent_move_representatives(self, memory: StrategyMemory,
                                      state: GameState) -> list[Move]:
        return cycle_representatives(state, self.anchored(memory))


class LataTriangle(CycleStrategy):
    """Stack everything on any free vertex; nothing of hers can fall."""

    id = "lata_triangle"
    player = PlayerId.LATA

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if is_standard_cycle(graph, 3) and budgets[0] == budgets[1] >= 1:
            return Guarantee.AT_LEAST_DRAW
        return None

    def initial_data(self, state: GameState):
        return ()

    def propose(self, memory: StrategyMemory, state: GameState):
        if state.phase is Phase.ATTACK:
            return preferred_attack(memory, state, ()), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        budget = state.budget_remaining[self.player.value]
        empties = [v for v, o in enumerate(state.owner) if o is None]
        return Move.place(empties[0], budget), memory


class LataC4(CycleStrategy):
    """Split her force across two adjacent vertices."""

    id = "lata_c4"
    player = PlayerId.LATA

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if is_standard_cycle(graph, 4) and budgets[0] == budgets[1] >= 2:
            return Guarantee.AT_LEAST_DRAW
        return None

    def initial_data(self, state: GameState):
        return ()

    def propose(self, memory: StrategyMemory, state: GameState):
        if state.phase is Phase.ATTACK:
            return preferred_attack(memory, state, ()), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        total = total_budget(state, self.player)
        mine = [v for v, o in enumerate(state.owner) if o is self.player]
        if not mine:
            return Move.place(0, (total + 1) // 2), memory
        if len(mine) == 1:
            for nb in state.graph.neighbors[mine[0]]:
                if state.owner[nb] is None:
                    return Move.place(nb, total // 2), memory
            raise UnspecifiedBranch("c4: both neighbours of her stack are taken")
        raise UnspecifiedBranch("c4: script spent but placement is forced")


@dataclass(frozen=True)
class RajC4Data:
    anchor: Optional[int] = None


class RajC4(CycleStrategy):
    """Answer on the opposite vertex, then take whatever remains."""

    id = "raj_c4"
    player = PlayerId.RAJ

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if is_standard_cycle(graph, 4) and budgets[0] == budgets[1] >= 2:
            return Guarantee.AT_LEAST_DRAW
        return None

    def initial_data(self, state: GameState) -> RajC4Data:
        return RajC4Data()

    def anchored(self, memory: StrategyMemory) -> tuple[int, ...]:
        return () if memory.data.anchor is None else (memory.data.anchor,)

    def observe(self, memory: StrategyMemory, move: Move,
                state_before: GameState) -> StrategyMemory:
        if move.kind is MoveKind.PLACE and memory.data.anchor is None and \
                all(o is None for o in state_before.owner):
            return replace(memory, data=RajC4Data(anchor=move.vertex))
        return memory

    def propose(self, memory: StrategyMemory, state: GameState):
        if state.phase is Phase.ATTACK:
            return preferred_attack(memory, state, ()), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        anchor = memory.data.anchor
        if anchor is None:
            raise UnspecifiedBranch("c4: asked to move before her opening")
        total = total_budget(state, self.player)
        opposite = (anchor + 2) % 4
        if state.owner[opposite] is None and not any(
                o is self.player for o in state.owner):
            a = state.troops[anchor]
            count = total if a == total else (total + 1) // 2
            return Move.place(opposite, count), memory
        empties = [v for v, o in enumerate(state.owner) if o is None]
        if len(empties) == 1:
            budget = state.budget_remaining[self.player.value]
            return Move.place(empties[0], min(budget, total // 2)), memory
        raise UnspecifiedBranch("c4: board shape left the script")


@dataclass(frozen=True)
class LataC5Data:
    direction: int = 0  # 0 until his reply orients the cycle
    case: str = ""
    prefs: tuple[int, ...] = ()  # canonical indices (1..5) to attack first


class LataC5(CycleStrategy):
    """Her half-split drawing script on the 5-cycle (all bullets encoded,
    including the outright-winning branches)."""

    id = "lata_c5"
    player = PlayerId.LATA
    ANCHOR = 0  # she opens on vertex 0; the canonical v1

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if is_standard_cycle(graph, 5) and budgets[0] == budgets[1] >= 2:
            return Guarantee.AT_LEAST_DRAW
        return None

    def initial_data(self, state: GameState) -> LataC5Data:
        return LataC5Data()

    def anchored(self, memory: StrategyMemory) -> tuple[int, ...]:
        mine = (self.ANCHOR,)
        if memory.data.direction:
            mine += ((self.ANCHOR + memory.data.direction) % 5,)
        return mine

    def canonical(self, memory: StrategyMemory, k: int) -> int:
        """Actual vertex of the canonical v_k."""
        d = memory.data.direction or 1
        return (self.ANCHOR + d * (k - 1)) % 5

    def observe(self, memory: StrategyMemory, move: Move,
                state_before: GameState) -> StrategyMemory:
        data: LataC5Data = memory.data
        if move.kind is not MoveKind.PLACE or data.direction:
            return memory
        occupied = [v for v, o in enumerate(state_before.owner) if o is not None]
        if occupied != [self.ANCHOR]:
            return memory
        offset = (move.vertex - self.ANCHOR) % 5
        total = total_budget(state_before, self.player)
        a = move.count
        if offset in (1, 4):
            direction = 1 if offset == 1 else -1
            case = "adj_allin" if a == total else "adj"
            prefs = () if a == total else (2,)
        else:
            direction = 1 if offset == 2 else -1
            half_up = (total + 1) // 2
            if a == total:
                case, prefs = "far_allin", ()
            elif a < half_up:
                case, prefs = "far_light", (3,)
            elif a == half_up:
                case, prefs = "far_exact", (5, 3)
            else:
                case, prefs = "far_heavy", ()
        return replace(memory, data=LataC5Data(direction, case, prefs))

    def propose(self, memory: StrategyMemory, state: GameState):
        data: LataC5Data = memory.data
        if state.phase is Phase.ATTACK:
            prefs = tuple(self.canonical(memory, k) for k in data.prefs)
            if data.case == "far_heavy":
                # Attack whatever he placed on his second move: his vertices
                # other than the canonical v3, nearest first.
                v3 = self.canonical(memory, 3)
                his = tuple(v for v, o in enumerate(state.owner)
                            if o is PlayerId.RAJ and v != v3)
                prefs = his + prefs
            return preferred_attack(memory, state, prefs), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        total = total_budget(state, self.player)
        budget = state.budget_remaining[self.player.value]
        if all(o is None for o in state.owner):
            return Move.place(self.ANCHOR, total // 2), memory
        if not data.case:
            raise UnspecifiedBranch("c5: asked to place again before his reply")
        if data.case == "adj_allin":
            v5, v4 = self.canonical(memory, 5), self.canonical(memory, 4)
            if state.owner[v5] is None:
                return Move.place(v5, 1), memory
            if state.owner[v4] is None:
                return Move.place(v4, budget), memory
            raise UnspecifiedBranch("c5: adj_allin squares already taken")
        if data.case == "adj":
            v3 = self.canonical(memory, 3)
            if state.owner[v3] is None:
                return Move.place(v3, (total + 1) // 2), memory
            raise UnspecifiedBranch("c5: v3 taken in the adjacent case")
        if data.case == "far_allin":
            v5 = self.canonical(memory, 5)
            if state.owner[v5] is None:
                return Move.place(v5, budget), memory
            raise UnspecifiedBranch("c5: v5 taken in the all-in case")
        target = 5 if data.case == "far_heavy" else 2
        v = self.canonical(memory, target)
        if state.owner[v] is None:
            return Move.place(v, (total + 1) // 2), memory
        raise UnspecifiedBranch("c5: scripted square already occupied")


@dataclass(frozen=True)
class RajC5Data:
    anchor: Optional[int] = None
    case: str = ""
    prefs: tuple[int, ...] = ()


class RajC5(CycleStrategy):
    """His half-split drawing script on the 5-cycle."""

    id = "raj_c5"
    player = PlayerId.RAJ

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if is_standard_cycle(graph, 5) and budgets[0] == budgets[1] >= 2:
            return Guarantee.AT_LEAST_DRAW
        return None

    def initial_data(self, state: GameState) -> RajC5Data:
        return RajC5Data()

    def anchored(self, memory: StrategyMemory) -> tuple[int, ...]:
        a = memory.data.anchor
        return () if a is None else (a, (a + 1) % 5)

    def canonical(self, memory: StrategyMemory, k: int) -> int:
        return (memory.data.anchor + (k - 1)) % 5

    def observe(self, memory: StrategyMemory, move: Move,
                state_before: GameState) -> StrategyMemory:
        data: RajC5Data = memory.data
        if move.kind is not MoveKind.PLACE:
            return memory
        if data.anchor is None:
            if all(o is None for o in state_before.owner):
                return replace(memory, data=RajC5Data(anchor=move.vertex))
            return memory
        if data.case:
            return memory
        mine = sum(1 for o in state_before.owner if o is PlayerId.RAJ)
        if mine != 1:
            return memory  # the all-in line never sets a case
        # Her second move: classify by canonical position and weight.
        pos = (move.vertex - data.anchor) % 5
        if pos not in (1, 2, 3):
            return memory
        total = total_budget(state_before, self.player)
        x = state_before.troops[data.anchor]
        y = move.count
        half_up = (total + 1) // 2
        if y == total - x:
            case, prefs = {1: "a2", 2: "a3", 3: "a4"}[pos], ()
        elif y >= half_up:
            case, prefs = {1: ("b2", ()), 2: ("b3", (1, 4)), 3: ("b4", (1, 3))}[pos]
        else:
            case, prefs = {1: ("c2", (2, 4)), 2: ("c3", (1, 3)), 3: ("c4", (1,))}[pos]
        return replace(memory, data=replace(data, case=case, prefs=prefs))

    def propose(self, memory: StrategyMemory, state: GameState):
        data: RajC5Data = memory.data
        if state.phase is Phase.ATTACK:
            prefs = tuple(self.canonical(memory, k) for k in data.prefs)
            return preferred_attack(memory, state, prefs), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        if data.anchor is None:
            raise UnspecifiedBranch("c5: asked to move before her opening")
        total = total_budget(state, self.player)
        budget = state.budget_remaining[self.player.value]
        mine = [v for v, o in enumerate(state.owner) if o is PlayerId.RAJ]
        x = state.troops[data.anchor]
        if not mine:
            if x == total:
                # She went all-in: take v3 with one troop, then load v4.
                return Move.place(self.canonical(memory, 3), 1), memory
            return Move.place(self.canonical(memory, 5), total // 2), memory
        if len(mine) == 1 and state.owner[self.canonical(memory, 3)] is PlayerId.RAJ \
                and x == total:
            v4 = self.canonical(memory, 4)
            if state.owner[v4] is None:
                return Move.place(v4, budget), memory
            raise UnspecifiedBranch("c5: v4 taken in the all-in winning line")
        if data.case:
            target = {"a2": 3, "a3": 4, "a4": 2,
                      "b2": 4, "b3": 2, "b4": 2,
                      "c2": 3, "c3": 2, "c4": 2}[data.case]
            v = self.canonical(memory, target)
            if state.owner[v] is None:
                return Move.place(v, min((total + 1) // 2, budget)), memory
            raise UnspecifiedBranch("c5: scripted square already occupied")
        raise UnspecifiedBranch("c5: her second move escaped the case list")


CYCLE_STRATEGIES = (LataTriangle(), LataC4(), RajC4(), LataC5(), RajC5())
