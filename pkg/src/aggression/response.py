"""The Optimal Response decision problem.

An instance fixes the board, both troop placements and the second player's
planned attack sequence sigma.  The question: does the first player have a
reply sequence tau that wins the game when, in every round, she attacks her
tau entry first and he then attacks his sigma entry?  Entries that are not
legal attacks at their turn (including explicit skips) are no-ops that
consume the round; the replay ends when both scripts are exhausted, with no
free play afterwards.

``decide_optimal_response`` answers exactly by depth-first search over the
first player's legal attacks (plus skip) with memoization on the board; the
problem is NP-complete in general (see ``reduction``), so this is for desk
scale only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .game import GameResult, GameState, Outcome, Phase, PlayerId, RuleConfig, score
from .graphs import Graph
from .solver import LimitExceeded

#: An entry in a reply sequence: a vertex id, or None for an explicit skip.
TauEntry = Optional[int]

SKIP: TauEntry = None


class InstanceError(ValueError):
    """Malformed Optimal Response instance or reply sequence."""


@dataclass(frozen=True)
class ORInstance:
    graph: Graph
    lata_placement: dict[int, int]  # f1
    raj_placement: dict[int, int]   # f2
    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.graph.vertex_count
        for name, placement in (("f1", self.lata_placement), ("f2", self.raj_placement)):
            for v, c in placement.items():
                if not (0 <= v < n):
                    raise InstanceError(f"{name}: vertex {v} out of range")
                if c < 1:
                    raise InstanceError(f"{name}: troops on {v} must be >= 1")
        overlap = set(self.lata_placement) & set(self.raj_placement)
        if overlap:
            raise InstanceError(f"placements overlap on vertices {sorted(overlap)}")
        for i in self.sigma:
            if not (0 <= i < n):
                raise InstanceError(f"sigma entry {i} out of range")
        object.__setattr__(self, "sigma", tuple(self.sigma))

    @property
    def budgets(self) -> tuple[int, int]:
        return (sum(self.lata_placement.values()), sum(self.raj_placement.values()))

    def initial_state(self) -> GameState:
        """The placed board as an attack-phase game state (Lata to act)."""
        owner: list[Optional[PlayerId]] = [None] * self.graph.vertex_count
        troops = [0] * self.graph.vertex_count
        for v, c in self.lata_placement.items():
            owner[v], troops[v] = PlayerId.LATA, c
        for v, c in self.raj_placement.items():
            owner[v], troops[v] = PlayerId.RAJ, c
        return GameState(self.graph, tuple(owner), tuple(troops), (0, 0),
                         Phase.ATTACK, PlayerId.LATA, PlayerId.LATA, 0, RuleConfig())


@dataclass(frozen=True)
class ORAnswer:
    decision: bool
    witness_tau: Optional[tuple[TauEntry, ...]] = None


def _attack_strength(owner, troops, neighbors, attacker: PlayerId, v: int) -> int:
    return sum(troops[u] for u in neighbors[v] if owner[u] is attacker)


def _valid_attack(owner, troops, neighbors, attacker: PlayerId, v: Optional[int]) -> bool:
    if v is None:
        return False
    if owner[v] is not attacker.opponent:
        return False
    return _attack_strength(owner, troops, neighbors, attacker, v) > troops[v]


def simulate_response(instance: ORInstance, tau: Iterable[TauEntry]) -> Outcome:
    """Deterministic replay of tau against sigma; scores the final board."""
    tau = tuple(tau)
    n = instance.graph.vertex_count
    for j in tau:
        if j is not None and not (0 <= j < n):
            raise InstanceError(f"tau entry {j} out of range")
    owner: list[Optional[PlayerId]] = [None] * n
    troops = [0] * n
    for v, c in instance.lata_placement.items():
        owner[v], troops[v] = PlayerId.LATA, c
    for v, c in instance.raj_placement.items():
        owner[v], troops[v] = PlayerId.RAJ, c
    neighbors = instance.graph.neighbors
    rounds = max(len(tau), len(instance.sigma))
    for r in range(rounds):
        j = tau[r] if r < len(tau) else SKIP
        if _valid_attack(owner, troops, neighbors, PlayerId.LATA, j):
            owner[j], troops[j] = None, 0
        i = instance.sigma[r] if r < len(instance.sigma) else SKIP
        if _valid_attack(owner, troops, neighbors, PlayerId.RAJ, i):
            owner[i], troops[i] = None, 0
    board = GameState(instance.graph, tuple(owner), tuple(troops), (0, 0),
                      Phase.TERMINAL, PlayerId.LATA, None, 0, RuleConfig())
    return score(board)


@dataclass
class _Search:
    instance: ORInstance
    memo: dict = field(default_factory=dict)
    nodes: int = 0
    max_nodes: int = 5_000_000

    def lata_attacks(self, owner, troops) -> list[int]:
        neighbors = self.instance.graph.neighbors
        return [
            v for v in range(len(owner))
            if owner[v] is PlayerId.RAJ and
            _attack_strength(owner, troops, neighbors, PlayerId.LATA, v) > troops[v]
        ]

    def lata_wins_now(self, owner, troops) -> bool:
        board = GameState(self.instance.graph, tuple(owner), tuple(troops), (0, 0),
                          Phase.TERMINAL, PlayerId.LATA, None, 0, RuleConfig())
        return score(board).result is GameResult.LATA_WIN

    def decide(self, owner, troops, r: int) -> bool:
        sigma = self.instance.sigma
        p = len(sigma)
        key = (tuple(owner), tuple(troops), min(r, p))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise LimitExceeded(f"optimal-response search exceeded {self.max_nodes} nodes")
        neighbors = self.instance.graph.neighbors
        if r >= p:
            # Sigma is spent: Lata may stop now or keep attacking; skipping
            # without stopping would change nothing.
            result = self.lata_wins_now(owner, troops)
            if not result:
                for j in self.lata_attacks(owner, troops):
                    o2, t2 = list(owner), list(troops)
                    o2[j], t2[j] = None, 0
                    if self.decide(o2, t2, r + 1):
                        result = True
                        break
        else:
            result = False
            options: list[TauEntry] = self.lata_attacks(owner, troops) + [SKIP]
            for j in options:
                o2, t2 = list(owner), list(troops)
                if j is not None:
                    o2[j], t2[j] = None, 0
                i = sigma[r]
                if _valid_attack(o2, t2, neighbors, PlayerId.RAJ, i):
                    o2[i], t2[i] = None, 0
                if self.decide(o2, t2, r + 1):
                    result = True
                    break
        self.memo[key] = result
        return result


def decide_optimal_response(instance: ORInstance, max_nodes: int = 5_000_000) -> ORAnswer:
    """Exact decision with a replayable witness on Yes."""
    state = instance.initial_state()
    owner, troops = list(state.owner), list(state.troops)
    search = _Search(instance, max_nodes=max_nodes)
    if not search.decide(owner, troops, 0):
        return ORAnswer(False, None)

    # Reconstruct a winning tau by walking the memoized search greedily.
    tau: list[TauEntry] = []
    r = 0
    p = len(instance.sigma)
    neighbors = instance.graph.neighbors
    while True:
        if r >= p and search.lata_wins_now(owner, troops):
            break  # stopping here already wins
        if r >= p:
            options: list[TauEntry] = search.lata_attacks(owner, troops)
        else:
            options = search.lata_attacks(owner, troops) + [SKIP]
        found = False
        for j in options:
            o2, t2 = list(owner), list(troops)
            if j is not None:
                o2[j], t2[j] = None, 0
            if r < p:
                i = instance.sigma[r]
                if _valid_attack(o2, t2, neighbors, PlayerId.RAJ, i):
                    o2[i], t2[i] = None, 0
            if search.decide(o2, t2, r + 1):
                found, owner, troops = True, o2, t2
                tau.append(j)
                break
        assert found, "memoized win must be replayable"
        r += 1
    while tau and tau[-1] is SKIP:
        tau.pop()
    answer = ORAnswer(True, tuple(tau))
    assert simulate_response(instance, answer.witness_tau).result is GameResult.LATA_WIN
    return answer


def brute_force_decide(instance: ORInstance, rounds: Optional[int] = None) -> bool:
    """Independent oracle: try every tau over (vertices + skip) sequences.

    Exponential; only for cross-checking on instances with a handful of
    vertices.
    """
    from itertools import product

    n = instance.graph.vertex_count
    if rounds is None:
        # Lata can win with at most one successful attack per enemy vertex,
        # placed anywhere among the sigma rounds or after them.
        rounds = len(instance.sigma) + len(instance.raj_placement)
    alphabet: list[TauEntry] = [SKIP] + list(range(n))
    for tau in product(alphabet, repeat=rounds):
        if simulate_response(instance, tau).result is GameResult.LATA_WIN:
            return True
    return False
