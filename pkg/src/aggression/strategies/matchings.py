"""Scripted play on disjoint unions of edges.

All of these keep the same private bookkeeping: *bindings*, the list of
(edge, her-vertex) pairs in the order the first player touched fresh edges.
Binding order fixes the canonical edge names (first edge = (w,p),
then (x,q), (y,r), (z,s)); the responder always answers on the partner
endpoint, so at his turn the pending slot is simply the first bound edge
whose partner is still empty.

Everything an individual script needs beyond the bindings is re-derived
from the board (opening counts, scary/triumphant mode, table block), which
keeps the memories small and the verifier's transposition sharing strong.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from ..game import (
    GameState,
    Move,
    MoveKind,
    Phase,
    PlayerId,
    legal_moves,
)
from ..graphs import Graph
from ..solver import SymmetryGroup
from .base import Guarantee, Strategy, StrategyMemory, UnspecifiedBranch
from . import tables

Bindings = tuple[tuple[int, int], ...]  # (edge index, her vertex) per slot

_OWNER_CODE = {None: 0, PlayerId.LATA: 1, PlayerId.RAJ: 2}


def _edge_of_vertex(graph: Graph) -> dict[int, int]:
    return {v: i for i, (a, b) in enumerate(graph.edges) for v in (a, b)}


def _partner(graph: Graph, v: int) -> int:
    a, b = graph.edges[_edge_of_vertex(graph)[v]]
    return a + b - v


def bind_lata_placement(bindings: Bindings, state_before: GameState,
                        move: Move) -> Bindings:
    """Extend the canonical naming when she opens a fresh edge."""
    if move.kind is not MoveKind.PLACE:
        return bindings
    graph = state_before.graph
    edge = _edge_of_vertex(graph).get(move.vertex)
    if edge is None:
        return bindings
    a, b = graph.edges[edge]
    if state_before.owner[a] is None and state_before.owner[b] is None and \
            all(e != edge for e, _ in bindings):
        return bindings + ((edge, move.vertex),)
    return bindings


def pending_slot(state: GameState, bindings: Bindings,
                 base: int = 0) -> Optional[tuple[int, int, int, int]]:
    """First slot >= base awaiting the partner reply.

    Returns (slot, her_vertex, partner_vertex, her_count) or None.
    """
    graph = state.graph
    for slot in range(base, len(bindings)):
        edge, hers = bindings[slot]
        a, b = graph.edges[edge]
        partner = a + b - hers
        if state.owner[hers] is PlayerId.LATA and state.owner[partner] is None:
            return slot, hers, partner, state.troops[hers]
    return None


def fresh_edge_count(state: GameState) -> int:
    return sum(1 for a, b in state.graph.edges
               if state.owner[a] is None and state.owner[b] is None)


def lowest_fresh_edge(state: GameState) -> Optional[int]:
    for i, (a, b) in enumerate(state.graph.edges):
        if state.owner[a] is None and state.owner[b] is None:
            return i
    return None


def matching_attack(state: GameState, bindings: Bindings) -> Move:
    """Attack on the lowest canonical slot first, then by vertex id."""
    moves = legal_moves(state)
    attacks = [m for m in moves if m.kind is MoveKind.ATTACK]
    if not attacks:
        return moves[0]
    slot_of_edge = {edge: slot for slot, (edge, _) in enumerate(bindings)}
    edge_of = _edge_of_vertex(state.graph)
    return min(attacks, key=lambda m: (slot_of_edge.get(edge_of[m.vertex], 10 ** 9),
                                       m.vertex))


def matching_representatives(state: GameState, bindings: Bindings) -> list[Move]:
    """One opponent move per structural class.

    Two moves collapse when they touch edges with identical occupancy and
    identical binding status; such edges are swapped by an automorphism that
    fixes the rest of the position and the canonical naming, and every
    scripted choice here picks within structurally defined candidate sets,
    so the continuations are isomorphic.
    """
    moves = legal_moves(state)
    slot_of_edge = {edge: slot for slot, (edge, _) in enumerate(bindings)}
    lata_vertex = {edge: hers for edge, hers in bindings}
    edge_of = _edge_of_vertex(state.graph)
    seen: set = set()
    reps: list[Move] = []
    for m in moves:
        if m.vertex is None:
            sig: tuple = (m.kind.value,)
        else:
            e = edge_of.get(m.vertex)
            if e is None:  # isolated vertex: identity by vertex
                sig = (m.kind.value, m.count, None, m.vertex)
            else:
                a, b = state.graph.edges[e]
                partner = a + b - m.vertex
                sig = (
                    m.kind.value, m.count,
                    slot_of_edge.get(e, -1),
                    m.vertex == lata_vertex.get(e, -1),
                    _OWNER_CODE[state.owner[m.vertex]], state.troops[m.vertex],
                    _OWNER_CODE[state.owner[partner]], state.troops[partner],
                )
        if sig not in seen:
            seen.add(sig)
            reps.append(m)
    return reps


def _lata_total_budget(state: GameState) -> int:
    placed = sum(t for o, t in zip(state.owner, state.troops) if o is PlayerId.LATA)
    return placed + state.budget_remaining[PlayerId.LATA.value]


class MatchingStrategy(Strategy):
    """Shared plumbing: bindings in the payload, matching-aware dedup."""

    def solver_symmetry(self, graph: Graph) -> SymmetryGroup:
        return SymmetryGroup.MATCHING_EDGES

    def bindings_of(self, memory: StrategyMemory) -> Bindings:
        return memory.data

    def with_bindings(self, memory: StrategyMemory, bindings: Bindings) -> StrategyMemory:
        return replace(memory, data=bindings)

    def initial_data(self, state: GameState):
        return ()

    def observe(self, memory: StrategyMemory, move: Move,
                state_before: GameState) -> StrategyMemory:
        bound = bind_lata_placement(self.bindings_of(memory), state_before, move)
        if bound is not self.bindings_of(memory):
            return self.with_bindings(memory, bound)
        return memory

    def opponent_move_representatives(self, memory: StrategyMemory,
                                      state: GameState) -> list[Move]:
        return matching_representatives(state, self.bindings_of(memory))


class RajMirrorMatching(MatchingStrategy):
    """Copy her count onto the partner endpoint; never attackable."""

    id = "raj_mirror_matching"
    player = PlayerId.RAJ

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if graph.is_matching() and graph.edges and budgets[0] == budgets[1]:
            return Guarantee.AT_LEAST_DRAW
        return None

    def propose(self, memory: StrategyMemory, state: GameState):
        bindings = self.bindings_of(memory)
        if state.phase is Phase.ATTACK:
            return matching_attack(state, bindings), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        pending = pending_slot(state, bindings)
        if pending is None:
            raise UnspecifiedBranch("mirror: no half-open edge to answer")
        _, _, partner, count = pending
        if count > state.budget_remaining[PlayerId.RAJ.value]:
            raise UnspecifiedBranch("mirror: cannot afford to copy her count")
        return Move.place(partner, count), memory


class LataSparseMatching(MatchingStrategy):
    """One troop on the lowest fresh edge each turn; spread at the end."""

    id = "lata_sparse_matching"
    player = PlayerId.LATA

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if graph.is_matching() and budgets[0] == budgets[1] >= 1 and \
                len(graph.edges) >= 2 * budgets[0]:
            return Guarantee.AT_LEAST_DRAW
        return None

    def propose(self, memory: StrategyMemory, state: GameState):
        bindings = self.bindings_of(memory)
        if state.phase is Phase.ATTACK:
            return matching_attack(state, bindings), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        if state.budget_remaining[PlayerId.RAJ.value] > 0:
            edge = lowest_fresh_edge(state)
            if edge is None:
                raise UnspecifiedBranch("sparse: no untouched edge while he still places")
            return Move.place(state.graph.edges[edge][0], 1), memory
        # Endgame spread: 1 per empty vertex whose edge carries none of his.
        for v, o in enumerate(state.owner):
            if o is not None:
                continue
            partner = _partner(state.graph, v)
            if state.owner[partner] is not PlayerId.RAJ:
                return Move.place(v, 1), memory
        raise UnspecifiedBranch("sparse: only enemy-flanked vertices left to fill")


class LataTwoEdges(MatchingStrategy):
    """Halved stacks on one or two edges (the small-board observation)."""

    id = "lata_two_edges"
    player = PlayerId.LATA

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if graph.is_matching() and len(graph.edges) in (1, 2) and \
                budgets[0] == budgets[1] >= 1:
            return Guarantee.AT_LEAST_DRAW
        return None

    def propose(self, memory: StrategyMemory, state: GameState):
        bindings = self.bindings_of(memory)
        if state.phase is Phase.ATTACK:
            return matching_attack(state, bindings), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        total = _lata_total_budget(state)
        m = len(state.graph.edges)
        if all(o is None for o in state.owner):
            count = total if m == 1 else (total + 1) // 2
            return Move.place(0, count), memory
        if m == 2 and state.budget_remaining[PlayerId.LATA.value] == total - (total + 1) // 2:
            # Her second move: vertex 1 if he went to the other edge, else x.
            count = total // 2
            if state.owner[1] is None:
                return Move.place(1, count), memory
            if state.owner[2] is None:
                return Move.place(2, count), memory
            return Move.place(3, count), memory
        raise UnspecifiedBranch("two-edges: script spent; still asked to place")


def _table_mode(state: GameState, bindings: Bindings, base: int,
                strong: bool) -> Optional[str]:
    """How the opening was answered: 'scary', 'giveup', 'triumphant', or
    None when the reply is not yet on the board."""
    edge, hers = bindings[base]
    a, b = state.graph.edges[edge]
    partner = a + b - hers
    if state.owner[partner] is not PlayerId.RAJ:
        return None
    w = state.troops[hers]
    p = state.troops[partner]
    if p == 1 and w >= tables.SCARY_THRESHOLD:
        return "scary"
    if p == 1 and strong:
        return "giveup"
    if p == w + 1:
        return "triumphant"
    return "offtable"


def table_propose(state: GameState, bindings: Bindings, base: int,
                  edges_in_block: int, strong: bool) -> Move:
    """Placement proposal for the 3/4-edge endgame scripts."""
    pending = pending_slot(state, bindings, base)
    if pending is None:
        raise UnspecifiedBranch("table: placement forced but no slot awaits a reply")
    slot, hers, partner, her_count = pending
    sub = slot - base
    raj_budget = state.budget_remaining[PlayerId.RAJ.value]

    def place(count: int, reason: str) -> Move:
        if count < 1:
            raise UnspecifiedBranch(f"table: {reason} gives no placement")
        if count > raj_budget:
            raise UnspecifiedBranch(f"table: {reason} exceeds the remaining budget")
        return Move.place(partner, count)

    if sub == 0:
        w = her_count
        lata_after_w = state.budget_remaining[PlayerId.LATA.value]
        if w >= tables.SCARY_THRESHOLD:
            return place(1, "scary reply")
        if strong and lata_after_w <= 5:
            return place(1, "give up the first edge")
        return place(w + 1, "triumphant reply")

    mode = _table_mode(state, bindings, base, strong)
    if mode in ("scary", "giveup"):
        return place(her_count + 1, "overtop reply")
    if mode != "triumphant":
        raise UnspecifiedBranch("table: opening reply is off the script")

    graph = state.graph
    counts = []
    for s in range(base, base + edges_in_block):
        if s >= len(bindings):
            break
        e, hv = bindings[s]
        counts.append(state.troops[hv])
    x = counts[1]
    # Her remaining budget right after the opening move of this block.
    block = state.budget_remaining[PlayerId.LATA.value] + sum(counts[1:])

    def played_reply(slot_index: int) -> int:
        e, hv = bindings[base + slot_index]
        a, b = graph.edges[e]
        return state.troops[a + b - hv]

    if edges_in_block == 3:
        if sub == 1:
            q = tables.three_edge_q(block, x)
            if q is None:
                raise UnspecifiedBranch(f"3-edge table: no row for block {block}, x={x}")
            return place(q, "table q")
        y = counts[2]
        row = tables.three_edge_row(block, x, y)
        if row is None:
            raise UnspecifiedBranch(f"3-edge table: no row for block {block}, ({x},{y})")
        if played_reply(1) != row[0]:
            raise UnspecifiedBranch("3-edge table: her counts left the predicted row")
        return place(row[1], "table r")

    lookup = tables.strong_adjusted_row if strong else tables.four_edge_row
    if sub == 1:
        q = tables.four_edge_q(block, x)
        if q is None:
            raise UnspecifiedBranch(f"4-edge table: no consistent q for block {block}, x={x}")
        return place(q, "table q")
    if sub == 2:
        y = counts[2]
        z_pred = state.budget_remaining[PlayerId.LATA.value]
        row = lookup(block, x, y, z_pred)
        if row is None:
            raise UnspecifiedBranch(
                f"4-edge table: no row for block {block}, ({x},{y},{z_pred})")
        if played_reply(1) != row[0]:
            raise UnspecifiedBranch("4-edge table: her counts left the predicted row")
        return place(row[1], "table r")
    y, z = counts[2], counts[3]
    row = lookup(block, x, y, z)
    if row is None:
        raise UnspecifiedBranch(f"4-edge table: no row for block {block}, ({x},{y},{z})")
    if played_reply(1) != row[0] or played_reply(2) != row[1]:
        raise UnspecifiedBranch("4-edge table: her counts left the predicted row")
    return place(row[2], "table s")


class _TableStrategy(MatchingStrategy):
    edges_required = 3
    strong = False

    def propose(self, memory: StrategyMemory, state: GameState):
        bindings = self.bindings_of(memory)
        if state.phase is Phase.ATTACK:
            return matching_attack(state, bindings), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        move = table_propose(state, bindings, 0, self.edges_required, self.strong)
        return move, memory


class RajThreeEdges(_TableStrategy):
    id = "raj_three_edges"
    player = PlayerId.RAJ
    edges_required = 3

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if graph.is_matching() and len(graph.edges) == 3 and \
                budgets[0] == budgets[1] >= 9:
            return Guarantee.WIN
        return None


class RajFourEdges(_TableStrategy):
    id = "raj_four_edges"
    player = PlayerId.RAJ
    edges_required = 4

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if graph.is_matching() and len(graph.edges) == 4 and \
                budgets[0] == budgets[1] >= 10:
            return Guarantee.WIN
        return None


class RajFourEdgesStrong(_TableStrategy):
    id = "raj_four_edges_strong"
    player = PlayerId.RAJ
    edges_required = 4
    strong = True

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if graph.is_matching() and len(graph.edges) == 4 and \
                budgets[1] >= 10 and budgets[0] <= 9:
            return Guarantee.STRONG_WIN
        return None


@dataclass(frozen=True)
class InductionData:
    bindings: Bindings = ()
    cliff_base: Optional[int] = None
    cliff_strong: bool = False


class RajMatchingInduction(MatchingStrategy):
    """Mirror normal moves; hand dangerous and cliffhanger moves to the
    endgame scripts, classified from the live budgets."""

    id = "raj_matching_induction"
    player = PlayerId.RAJ

    def applicability(self, graph: Graph, budgets: tuple[int, int]) -> Optional[Guarantee]:
        if not graph.is_matching():
            return None
        n = len(graph.edges)
        if n < 4:
            return None
        t_l, t_r = budgets
        if t_l == t_r >= n + 6:
            return Guarantee.WIN
        if t_r >= n + 6 and t_l < t_r:
            return Guarantee.STRONG_WIN
        return None

    def initial_data(self, state: GameState) -> InductionData:
        return InductionData()

    def bindings_of(self, memory: StrategyMemory) -> Bindings:
        return memory.data.bindings

    def with_bindings(self, memory: StrategyMemory, bindings: Bindings) -> StrategyMemory:
        return replace(memory, data=replace(memory.data, bindings=bindings))

    def propose(self, memory: StrategyMemory, state: GameState):
        data: InductionData = memory.data
        bindings = data.bindings
        if state.phase is Phase.ATTACK:
            return matching_attack(state, bindings), memory
        moves = legal_moves(state)
        if moves[0].kind is MoveKind.PASS_PLACEMENT:
            return moves[0], memory
        if data.cliff_base is not None:
            move = table_propose(state, bindings, data.cliff_base, 4, data.cliff_strong)
            return move, memory
        pending = pending_slot(state, bindings)
        if pending is None:
            raise UnspecifiedBranch("induction: placement forced with no slot to answer")
        slot, hers, partner, t = pending
        fresh_after = fresh_edge_count(state)
        lata_rem = state.budget_remaining[PlayerId.LATA.value]
        raj_rem = state.budget_remaining[PlayerId.RAJ.value]
        if fresh_after == 3:
            lata_sub = lata_rem + t
            strong = raj_rem >= 10 and lata_sub <= 9
            data2 = replace(data, cliff_base=slot, cliff_strong=strong)
            memory2 = replace(memory, data=data2)
            move = table_propose(state, bindings, slot, 4, strong)
            return move, memory2
        if lata_rem < fresh_after + 6:
            if raj_rem < 1:
                raise UnspecifiedBranch("induction: no troop left for the dangerous reply")
            return Move.place(partner, 1), memory
        if t > raj_rem:
            raise UnspecifiedBranch("induction: cannot afford to mirror her count")
        return Move.place(partner, t), memory


MATCHING_STRATEGIES = (
    RajMirrorMatching(),
    LataSparseMatching(),
    LataTwoEdges(),
    RajThreeEdges(),
    RajFourEdges(),
    RajFourEdgesStrong(),
    RajMatchingInduction(),
)
