"""JSON-over-HTTP game service for interactive play.

Sessions are in-memory (optional append-only JSONL log for crash replay);
requests to one session are serialized by a per-session lock, distinct
sessions proceed concurrently.  Solver hints run on a small bounded worker
pool with a hard node budget.

Endpoints (all under /v1):

* ``POST /games``               create a session, returns the first snapshot
* ``GET /games/{id}``           snapshot with legal moves and vulnerability sets
* ``POST /games/{id}/moves``    apply the human move, then the opponent's reply
* ``GET /games/{id}/hint``      solver-recommended move within a node budget
* ``DELETE /games/{id}``        drop the session
"""

from __future__ import annotations

import json
import os
import secrets
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .codec import (
    CodecError,
    graph_from_doc,
    graph_to_doc,
    move_from_doc,
    move_to_doc,
    moves_to_doc,
    outcome_to_doc,
    player_from_name,
    player_name,
)
from .game import (
    AttackPolicy,
    GameState,
    IllegalMove,
    Move,
    Phase,
    PlayerId,
    RuleConfig,
    apply_move,
    legal_moves,
    new_game,
    outcome,
    vulnerable_vertices,
)
from .graphs import Graph, GraphError, parse_family
from .solver import SymmetryGroup, hint_move
from .strategies import Mode, STRATEGY_IDS, get_strategy, next_move, relabel


def _auto_symmetry(graph: Graph) -> SymmetryGroup:
    if graph.is_matching():
        return SymmetryGroup.MATCHING_EDGES
    n = graph.vertex_count
    if n >= 3 and set(graph.edges) == {tuple(sorted((i, (i + 1) % n))) for i in range(n)}:
        return SymmetryGroup.CYCLE_DIHEDRAL
    return SymmetryGroup.IDENTITY


@dataclass
class Session:
    id: str
    initial: GameState
    state: GameState
    human: PlayerId
    opponent: str  # strategy id, "solver", or "none"
    move_log: list[Move] = field(default_factory=list)
    memory: Any = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def snapshot(self) -> dict:
        state = self.state
        doc = {
            "id": self.id,
            "human": player_name(self.human),
            "opponent": self.opponent,
            "graph": graph_to_doc(state.graph),
            "config": {
                "attack_policy": state.config.attack_policy.value,
                "placement_cap": state.config.placement_cap,
            },
            "phase": state.phase.value,
            "to_move": player_name(state.to_move),
            "first_passer": (None if state.first_passer is None
                             else player_name(state.first_passer)),
            "owners": {str(v): player_name(o) for v, o in enumerate(state.owner)
                       if o is not None},
            "troops": {str(v): t for v, t in enumerate(state.troops) if t > 0},
            "budgets": {"lata": state.budget_remaining[0],
                        "raj": state.budget_remaining[1]},
            "vulnerable": {
                "lata": sorted(vulnerable_vertices(state, PlayerId.LATA)),
                "raj": sorted(vulnerable_vertices(state, PlayerId.RAJ)),
            },
            "legal_moves": (moves_to_doc(legal_moves(state))
                            if state.phase is not Phase.TERMINAL else []),
            "move_log": moves_to_doc(self.move_log),
            "outcome": (outcome_to_doc(outcome(state))
                        if state.phase is Phase.TERMINAL else None),
        }
        return doc


class SessionStore:
    def __init__(self, session_log: Optional[str] = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._log_path = session_log
        self._log_lock = threading.Lock()

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Optional[Session]:
        with self._lock:
            return self._sessions.get(session_id)

    def remove(self, session_id: str) -> bool:
        with self._lock:
            return self._sessions.pop(session_id, None) is not None

    def log(self, record: dict) -> None:
        if self._log_path is None:
            return
        with self._log_lock:
            with open(self._log_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record, sort_keys=True) + "\n")


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


def _parse_create(body: Any) -> tuple[Graph, tuple[int, int], RuleConfig, PlayerId, str]:
    if not isinstance(body, dict):
        raise ApiError(422, "request body must be a JSON object")
    try:
        if "family" in body:
            graph = parse_family(body["family"])
        elif "graph" in body:
            graph = graph_from_doc(body["graph"])
        else:
            raise ApiError(422, "a board is required: 'family' or 'graph'")
    except (GraphError, CodecError) as exc:
        raise ApiError(422, str(exc)) from exc
    if "troops" in body:
        troops = body["troops"]
        if not isinstance(troops, int) or troops < 0:
            raise ApiError(422, "'troops' must be a non-negative integer")
        budgets = (troops, troops)
    elif "budgets" in body and isinstance(body["budgets"], dict):
        raw = body["budgets"]
        try:
            budgets = (int(raw["lata"]), int(raw["raj"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ApiError(422, "'budgets' needs integer 'lata' and 'raj'") from exc
        if min(budgets) < 0:
            raise ApiError(422, "budgets must be non-negative")
    else:
        raise ApiError(422, "budgets are required: 'troops' or 'budgets'")
    config_doc = body.get("config", {})
    if not isinstance(config_doc, dict):
        raise ApiError(422, "'config' must be an object")
    try:
        policy = AttackPolicy(config_doc.get("attack_policy", "mandatory"))
    except ValueError as exc:
        raise ApiError(422, f"unknown attack policy: {exc}") from exc
    cap = config_doc.get("placement_cap")
    if cap is not None and (not isinstance(cap, int) or cap < 1):
        raise ApiError(422, "'placement_cap' must be a positive integer or null")
    try:
        human = player_from_name(body.get("human", "lata"))
    except CodecError as exc:
        raise ApiError(422, str(exc)) from exc
    opponent = body.get("opponent", "solver")
    if opponent not in ("solver", "none") and opponent not in STRATEGY_IDS:
        raise ApiError(422, f"unknown opponent {opponent!r}")
    return graph, budgets, RuleConfig(policy, cap), human, opponent


def create_app(session_log: Optional[str] = None,
               hint_node_budget: Optional[int] = None) -> FastAPI:
    app = FastAPI(title="aggression", docs_url=None, redoc_url=None)
    store = SessionStore(session_log)
    hint_pool = ThreadPoolExecutor(max_workers=2, thread_name_prefix="hint")
    if hint_node_budget is None:
        hint_node_budget = int(os.environ.get("AGGRESSION_NODE_LIMIT", "200000"))

    @app.exception_handler(ApiError)
    async def api_error_handler(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content={"error": exc.message})

    def _session_or_404(session_id: str) -> Session:
        session = store.get(session_id)
        if session is None:
            raise ApiError(404, f"unknown session {session_id!r}")
        return session

    def _opponent_reply(session: Session) -> None:
        """Advance the opponent while it is due (possibly across a phase flip)."""
        while session.state.phase is not Phase.TERMINAL and \
                session.state.to_move is session.human.opponent and \
                session.opponent != "none":
            if session.opponent == "solver":
                move = hint_move(session.state, _auto_symmetry(session.state.graph),
                                 node_budget=hint_node_budget)
            else:
                move, session.memory = next_move(session.opponent, session.state,
                                                 session.memory)
            session.state = apply_move(session.state, move)
            session.move_log.append(move)
            store.log({"session": session.id, "event": "move",
                       "by": "opponent", "move": move_to_doc(move)})

    @app.post("/v1/games")
    def create_game(body: dict) -> JSONResponse:
        graph, budgets, config, human, opponent = _parse_create(body)
        state = new_game(graph, budgets[0], budgets[1], config)
        memory = None
        if opponent not in ("solver", "none"):
            strategy = get_strategy(opponent)
            if strategy.player is human:
                raise ApiError(422, f"{opponent} plays {player_name(strategy.player)}; "
                                    "take the other side")
            if strategy.game_config() != config:
                state = new_game(graph, budgets[0], budgets[1], strategy.game_config())
            memory = strategy.initial_memory(state, mode=Mode.REPAIRED)
        session = Session(
            id=secrets.token_hex(8),
            initial=state,
            state=state,
            human=human,
            opponent=opponent,
            memory=memory,
        )
        store.add(session)
        store.log({"session": session.id, "event": "create", "body": body})
        with session.lock:
            _opponent_reply(session)
            return JSONResponse(status_code=201, content=session.snapshot())

    @app.get("/v1/games/{session_id}")
    def get_game(session_id: str) -> dict:
        session = _session_or_404(session_id)
        with session.lock:
            return session.snapshot()

    @app.post("/v1/games/{session_id}/moves")
    def post_move(session_id: str, body: dict) -> dict:
        session = _session_or_404(session_id)
        try:
            move = move_from_doc(body)
        except CodecError as exc:
            raise ApiError(422, str(exc)) from exc
        with session.lock:
            state = session.state
            if state.phase is Phase.TERMINAL:
                raise ApiError(409, "the game is over")
            if state.to_move is not session.human and session.opponent != "none":
                raise ApiError(409, "it is not your turn")
            if session.memory is not None and state.to_move is session.human:
                session.memory = relabel(session.memory, move, state)
            try:
                session.state = apply_move(state, move)
            except IllegalMove as exc:
                raise ApiError(409, str(exc)) from exc
            session.move_log.append(move)
            store.log({"session": session.id, "event": "move",
                       "by": "human", "move": move_to_doc(move)})
            _opponent_reply(session)
            return session.snapshot()

    @app.get("/v1/games/{session_id}/hint")
    def get_hint(session_id: str) -> dict:
        session = _session_or_404(session_id)
        with session.lock:
            if session.state.phase is Phase.TERMINAL:
                raise ApiError(409, "the game is over")
            state = session.state
        future = hint_pool.submit(hint_move, state, _auto_symmetry(state.graph),
                                  hint_node_budget)
        move = future.result()
        return {"move": move_to_doc(move)}

    @app.delete("/v1/games/{session_id}")
    def delete_game(session_id: str) -> dict:
        if not store.remove(session_id):
            raise ApiError(404, f"unknown session {session_id!r}")
        store.log({"session": session_id, "event": "delete"})
        return {"deleted": session_id}

    return app
