"""Exact perfect-play evaluation by exhaustive adversarial search.

The solver runs a full minimax over the lexicographic (territory, troop)
payoff with a transposition table keyed by a canonical state encoding.
Admitted symmetry groups collapse states that differ only by a board
automorphism:

* ``IDENTITY``        -- no collapsing
* ``MATCHING_EDGES``  -- permute the edges of a matching and swap endpoints
  (canonical form by sorting, no group enumeration needed)
* ``CYCLE_DIHEDRAL``  -- the 2n rotations/reflections of the standard cycle
  labeling

There is no pruning and no heuristic evaluation: every value in the table
is exact.  ``solve_reference`` is the independent oracle: a plain recursion
with no table and no symmetry, usable only on tiny instances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from .game import (
    GameState,
    Move,
    Payoff,
    Phase,
    PlayerId,
    apply_move,
    legal_moves,
    score,
)
from .graphs import Graph

Value = tuple[int, int]  # Lata-perspective (territory_diff, troop_diff)


class SymmetryGroup(Enum):
    IDENTITY = "identity"
    MATCHING_EDGES = "matching_edges"
    CYCLE_DIHEDRAL = "cycle_dihedral"


class UnsoundSymmetry(ValueError):
    """The requested group is not an automorphism group of the supplied graph."""


class LimitExceeded(RuntimeError):
    """Search exceeded its node or time budget (distinct from rule errors)."""


@dataclass(frozen=True, slots=True)
class SolveLimits:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None


@dataclass(slots=True)
class SolveResult:
    value: Payoff
    best_move: Optional[Move]
    principal_line: list[Move]
    nodes_expanded: int
    table_hits: int


def _check_sound(graph: Graph, symmetry: SymmetryGroup) -> None:
    if symmetry is SymmetryGroup.IDENTITY:
        return
    if symmetry is SymmetryGroup.MATCHING_EDGES:
        if not graph.is_matching():
            raise UnsoundSymmetry("matching_edges requires a disjoint union of edges")
        return
    n = graph.vertex_count
    expected = {tuple(sorted((i, (i + 1) % n))) for i in range(n)} if n >= 3 else set()
    if n < 3 or set(graph.edges) != expected:
        raise UnsoundSymmetry("cycle_dihedral requires the standard cycle labeling")


_OWNER_CODE = {None: 0, PlayerId.LATA: 1, PlayerId.RAJ: 2}


def _board_signature(state: GameState, symmetry: SymmetryGroup) -> tuple:
    owner, troops = state.owner, state.troops
    if symmetry is SymmetryGroup.MATCHING_EDGES:
        cells = []
        on_edge = set()
        for u, v in state.graph.edges:
            on_edge.add(u)
            on_edge.add(v)
            a = (_OWNER_CODE[owner[u]], troops[u])
            b = (_OWNER_CODE[owner[v]], troops[v])
            cells.append((a, b) if a <= b else (b, a))
        cells.sort()
        isolated = sorted((_OWNER_CODE[owner[v]], troops[v])
                          for v in range(state.graph.vertex_count) if v not in on_edge)
        return (tuple(cells), tuple(isolated))
    if symmetry is SymmetryGroup.CYCLE_DIHEDRAL:
        n = state.graph.vertex_count
        seq = [(_OWNER_CODE[owner[i]], troops[i]) for i in range(n)]
        best = None
        for start in range(n):
            for step in (1, -1):
                cand = tuple(seq[(start + step * i) % n] for i in range(n))
                if best is None or cand < best:
                    best = cand
        return (best,)
    return (tuple(_OWNER_CODE[o] for o in owner), troops)


def _state_key(state: GameState, symmetry: SymmetryGroup) -> tuple:
    return (
        _board_signature(state, symmetry),
        state.budget_remaining,
        state.phase.value,
        state.to_move.value,
        -1 if state.first_passer is None else state.first_passer.value,
        state.consecutive_passes,
        state.config.attack_policy.value,
        state.config.placement_cap,
    )


def canonical_key(state: GameState, symmetry: SymmetryGroup = SymmetryGroup.IDENTITY) -> bytes:
    """Opaque byte key identifying the state up to the admitted symmetry."""
    _check_sound(state.graph, symmetry)
    return repr(_state_key(state, symmetry)).encode()


@dataclass
class Solver:
    """Search session with a shared transposition table.

    The table tolerates concurrent insert/lookup (CPython dict semantics,
    last-writer-wins on identical values); root moves may be fanned out over
    threads with results independent of the schedule because tie-breaking
    happens only after all root values are known.
    """

    symmetry: SymmetryGroup = SymmetryGroup.IDENTITY
    table: dict = field(default_factory=dict)
    nodes_expanded: int = 0
    table_hits: int = 0

    def value(self, state: GameState, limits: Optional[SolveLimits] = None) -> Value:
        _check_sound(state.graph, self.symmetry)
        deadline = None
        if limits is not None and limits.max_seconds is not None:
            deadline = time.monotonic() + limits.max_seconds
        budget = limits.max_nodes if limits is not None else None
        return self._search(state, budget, deadline)

    def _search(self, state: GameState, budget: Optional[int],
                deadline: Optional[float]) -> Value:
        key = _state_key(state, self.symmetry)
        hit = self.table.get(key)
        if hit is not None:
            self.table_hits += 1
            return hit
        if state.phase is Phase.TERMINAL:
            out = score(state)
            val = out.payoff.as_tuple()
            self.table[key] = val
            return val
        self.nodes_expanded += 1
        if budget is not None and self.nodes_expanded > budget:
            raise LimitExceeded(f"node budget {budget} exhausted")
        if deadline is not None and self.nodes_expanded % 1024 == 0 and \
                time.monotonic() > deadline:
            raise LimitExceeded("time budget exhausted")
        maximizing = state.to_move is PlayerId.LATA
        best: Optional[Value] = None
        for move in legal_moves(state):
            v = self._search(apply_move(state, move), budget, deadline)
            if best is None or (v > best if maximizing else v < best):
                best = v
        assert best is not None
        self.table[key] = best
        return best

    def best_move(self, state: GameState, limits: Optional[SolveLimits] = None,
                  parallel_root: bool = False) -> tuple[Value, Optional[Move]]:
        """Optimal value plus the lex-lowest optimal move (None at terminals)."""
        if state.phase is Phase.TERMINAL:
            return score(state).payoff.as_tuple(), None
        moves = legal_moves(state)
        children = [apply_move(state, m) for m in moves]
        if parallel_root and len(children) > 1:
            with ThreadPoolExecutor(max_workers=min(8, len(children))) as pool:
                values = list(pool.map(lambda c: self.value(c, limits), children))
        else:
            values = [self.value(c, limits) for c in children]
        maximizing = state.to_move is PlayerId.LATA
        best = max(values) if maximizing else min(values)
        move = moves[values.index(best)]  # first occurrence = lowest ordinal
        return best, move

    def principal_line(self, state: GameState,
                       limits: Optional[SolveLimits] = None) -> list[Move]:
        line: list[Move] = []
        while state.phase is not Phase.TERMINAL:
            _, move = self.best_move(state, limits)
            assert move is not None
            line.append(move)
            state = apply_move(state, move)
        return line


def solve(state: GameState, symmetry: SymmetryGroup = SymmetryGroup.IDENTITY,
          limits: Optional[SolveLimits] = None, solver: Optional[Solver] = None,
          parallel_root: bool = False) -> SolveResult:
    """Minimax-optimal Payoff (Lata maximizes), best move and principal line."""
    if solver is None:
        solver = Solver(symmetry=symmetry)
    elif solver.symmetry is not symmetry:
        raise ValueError("solver session was built for a different symmetry group")
    value, move = solver.best_move(state, limits, parallel_root=parallel_root)
    line = solver.principal_line(state, limits)
    replayed = state
    for m in line:
        replayed = apply_move(replayed, m)
    assert score(replayed).payoff.as_tuple() == value, "principal line must reach the value"
    return SolveResult(Payoff(*value), move, line, solver.nodes_expanded, solver.table_hits)


_REFERENCE_MAX_VERTICES = 6
_REFERENCE_MAX_BUDGET = 3


def solve_reference(state: GameState) -> Payoff:
    """Independent oracle: plain recursive minimax, no table, no symmetry.

    Only usable on tiny instances (<= 6 vertices, budgets <= 3); used to
    validate ``solve`` and nothing else.
    """
    if state.graph.vertex_count > _REFERENCE_MAX_VERTICES:
        raise ValueError(f"reference solver is limited to {_REFERENCE_MAX_VERTICES} vertices")
    if max(state.budget_remaining) > _REFERENCE_MAX_BUDGET:
        raise ValueError(f"reference solver is limited to budgets <= {_REFERENCE_MAX_BUDGET}")

    def rec(s: GameState) -> Value:
        if s.phase is Phase.TERMINAL:
            return score(s).payoff.as_tuple()
        values = (rec(apply_move(s, m)) for m in legal_moves(s))
        return max(values) if s.to_move is PlayerId.LATA else min(values)

    return Payoff(*rec(state))


def hint_move(state: GameState, symmetry: SymmetryGroup = SymmetryGroup.IDENTITY,
              node_budget: int = 200_000) -> Move:
    """Best move for interactive play within a node budget.

    Tries the exact solver first.  If the budget blows up, re-solves under a
    coarse placement palette (counts restricted to 1, the two half-budget
    counts and all-in); attacks are never restricted.  Ties in the fallback
    break toward counts nearest half the remaining budget, then by move
    ordinal.  The fallback is for hints only; ``solve`` never prunes.
    """
    try:
        solver = Solver(symmetry=symmetry)
        _, move = solver.best_move(state, SolveLimits(max_nodes=node_budget))
        assert move is not None
        return move
    except LimitExceeded:
        pass

    table: dict = {}

    def palette_moves(s: GameState) -> list[Move]:
        moves = legal_moves(s)
        if s.phase is not Phase.PLACEMENT or moves[0].kind is not moves[0].kind.PLACE:
            return moves
        rem = s.budget_remaining[s.to_move.value]
        cap = s.config.placement_cap
        counts = {c for c in (1, rem // 2, (rem + 1) // 2, rem) if c >= 1}
        if cap is not None:
            counts = {min(c, cap) for c in counts}
        return [m for m in moves if m.kind is not m.kind.PLACE or m.count in counts]

    def rec(s: GameState) -> Value:
        key = _state_key(s, symmetry)
        hit = table.get(key)
        if hit is not None:
            return hit
        if s.phase is Phase.TERMINAL:
            val = score(s).payoff.as_tuple()
        else:
            vals = (rec(apply_move(s, m)) for m in palette_moves(s))
            val = max(vals) if s.to_move is PlayerId.LATA else min(vals)
        table[key] = val
        return val

    moves = palette_moves(state)
    values = [rec(apply_move(state, m)) for m in moves]
    best = max(values) if state.to_move is PlayerId.LATA else min(values)
    rem = state.budget_remaining[state.to_move.value]

    def preference(m: Move) -> tuple:
        half_distance = abs(m.count - rem / 2) if m.count is not None else 0.0
        return (half_distance, m.ordinal())

    return min((m for m, v in zip(moves, values) if v == best), key=preference)
